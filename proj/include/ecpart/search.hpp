#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>

namespace ecpart {

/// Outcome of a bounded search. `kAbsent` is only reported when the search
/// space was exhausted; running out of budget is `kExhausted`.
enum class SearchStatus { kFound, kAbsent, kExhausted };

constexpr std::string_view status_name(SearchStatus s) noexcept {
  switch (s) {
    case SearchStatus::kFound: return "found";
    case SearchStatus::kAbsent: return "absent";
    case SearchStatus::kExhausted: return "exhausted";
  }
  return "unknown";
}

template <typename T>
struct SearchResult {
  SearchStatus status = SearchStatus::kAbsent;
  std::optional<T> value;
  std::uint64_t steps = 0;

  static SearchResult found(T v, std::uint64_t steps = 0) {
    return {SearchStatus::kFound, std::move(v), steps};
  }
  static SearchResult absent(std::uint64_t steps = 0) {
    return {SearchStatus::kAbsent, std::nullopt, steps};
  }
  static SearchResult exhausted(std::uint64_t steps = 0) {
    return {SearchStatus::kExhausted, std::nullopt, steps};
  }

  bool is_found() const noexcept { return status == SearchStatus::kFound; }
  bool is_absent() const noexcept { return status == SearchStatus::kAbsent; }
  bool is_exhausted() const noexcept {
    return status == SearchStatus::kExhausted;
  }
};

/// Counts expanded states against a limit.
class Budget {
 public:
  explicit Budget(std::uint64_t limit) : limit_(limit) {}

  /// Charges one step; false once the limit is exceeded.
  bool spend() noexcept { return ++used_ <= limit_; }
  bool exceeded() const noexcept { return used_ > limit_; }
  std::uint64_t used() const noexcept { return used_; }

 private:
  std::uint64_t limit_;
  std::uint64_t used_ = 0;
};

inline constexpr std::uint64_t kDefaultBudget = 1'000'000;

}  // namespace ecpart
