#include <algorithm>
#include <cmath>
#include <string>

#include "ecpart/dyadic.hpp"
#include "ecpart/errors.hpp"
#include "ecpart/partition.hpp"

namespace ecpart {

// --- Dyadic ------------------------------------------------------------------

Dyadic::Dyadic(BigInt numerator, unsigned exponent)
    : num_(std::move(numerator)), exp_(exponent) {
  normalize();
}

void Dyadic::normalize() {
  if (num_ == 0) {
    exp_ = 0;
    return;
  }
  const unsigned shift = std::min<unsigned>(
      exp_, static_cast<unsigned>(boost::multiprecision::lsb(abs(num_))));
  num_ >>= shift;
  exp_ -= shift;
}

Dyadic operator+(const Dyadic& a, const Dyadic& b) {
  const unsigned e = std::max(a.exp_, b.exp_);
  return Dyadic((a.num_ << (e - a.exp_)) + (b.num_ << (e - b.exp_)), e);
}

Dyadic operator-(const Dyadic& a, const Dyadic& b) {
  const unsigned e = std::max(a.exp_, b.exp_);
  return Dyadic((a.num_ << (e - a.exp_)) - (b.num_ << (e - b.exp_)), e);
}

Dyadic operator*(const Dyadic& a, const Dyadic& b) {
  return Dyadic(a.num_ * b.num_, a.exp_ + b.exp_);
}

std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b) {
  const unsigned e = std::max(a.exp_, b.exp_);
  const BigInt lhs = a.num_ << (e - a.exp_);
  const BigInt rhs = b.num_ << (e - b.exp_);
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

double Dyadic::to_double() const {
  return std::ldexp(num_.convert_to<double>(), -static_cast<int>(exp_));
}

std::string Dyadic::to_string() const {
  if (exp_ == 0) return num_.str();
  return num_.str() + "/" + denominator().str();
}

// --- presence-count kernel ---------------------------------------------------

bool GoodVector::is_good() const noexcept {
  if (xs.empty()) return false;
  if (std::any_of(xs.begin(), xs.end(), [](std::size_t x) { return x == 0; })) {
    return false;
  }
  return 2 * x0 <= xs.size();
}

std::vector<Dyadic> presence_count_distribution(std::span<const std::size_t> xs) {
  std::vector<Dyadic> dist{Dyadic::one()};
  for (std::size_t x : xs) {
    // All x vertices of this color miss S with probability 2^-x.
    const Dyadic absent = Dyadic::inverse_power_of_two(static_cast<unsigned>(x));
    const Dyadic present = Dyadic::one() - absent;
    std::vector<Dyadic> next(dist.size() + 1);
    for (std::size_t j = 0; j < dist.size(); ++j) {
      next[j] += dist[j] * absent;
      next[j + 1] += dist[j] * present;
    }
    dist = std::move(next);
  }
  return dist;
}

Dyadic presence_lower_tail(std::span<const std::size_t> xs, std::size_t x0) {
  const auto dist = presence_count_distribution(xs);
  Dyadic total;
  for (std::size_t j = 0; j <= x0 && j < dist.size(); ++j) total += dist[j];
  return total;
}

Dyadic p_s_exact(const GoodVector& x) {
  if (!x.is_good()) {
    throw Error(Errc::kNotGood, "vector needs k >= 1, x_i >= 1 and x0 <= k/2");
  }
  return presence_lower_tail(x.xs, x.x0);
}

Dyadic p_s_bound(std::size_t x0, std::size_t k) {
  if (k == 0 || 2 * x0 > k) {
    throw Error(Errc::kNotGood, "bound needs k >= 1 and x0 <= k/2");
  }
  BigInt sum = 0;
  BigInt binom = 1;
  for (std::size_t j = 0; j <= x0; ++j) {
    sum += binom;
    binom = binom * (k - j) / (j + 1);
  }
  return Dyadic(sum, static_cast<unsigned>(k));
}

int g_threshold(int k, const std::map<int, int>& f) {
  if (k < 1) throw Error(Errc::kInvalidArgument, "k must be at least 1");
  int g = 2;
  for (int i = 2; i <= k; ++i) {
    auto it = f.find(i);
    if (it == f.end()) {
      throw Error(Errc::kMissingOracleValue, "f(" + std::to_string(i) + ") is undefined");
    }
    g = std::max(it->second + 1, g + 3);
  }
  return g;
}

}  // namespace ecpart
