#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "ecpart/core.hpp"
#include "ecpart/partition.hpp"

namespace ecpart {

/// "ecg <n>" followed by one "<u> <v> <c>" line per edge. '#' starts a
/// comment; blank lines are ignored. Errors are kParseError with the line.
EdgeColoredGraph parse_ecg(std::string_view text);
/// Canonical form: header, then edges with u < v in lexicographic order.
std::string write_ecg(const EdgeColoredGraph& g);

/// "dg <n>" or "dg <n> oriented" followed by one "<u> <v>" line per arc.
Digraph parse_dg(std::string_view text);
std::string write_dg(const Digraph& d);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, std::string_view text);

inline constexpr std::string_view kHashAlgorithm = "sha256";
inline constexpr std::string_view kCertificateFormat = "ecpart-certificate/1";

std::string sha256_hex(std::string_view bytes);

/// Digest of the canonical .ecg bytes of g.
std::string graph_hash(const EdgeColoredGraph& g);

nlohmann::json certificate_to_json(const PartitionCertificate& cert,
                                   const EdgeColoredGraph& g);
/// Sorted keys, two-space indent, trailing newline.
std::string dump_certificate(const nlohmann::json& doc);

struct VerifyReport {
  bool hash_matches = false;
  bool witnesses_match = false;
  std::vector<Deficiency> deficiencies;
  /// Human-readable reasons for every failed check.
  std::vector<std::string> problems;

  bool ok() const noexcept { return problems.empty(); }
};

/// Recomputes the hash and per-vertex witnesses of `doc` against g. Malformed
/// documents raise kParseError; malformed partitions raise kMalformedPartition.
VerifyReport verify_certificate(const nlohmann::json& doc, const EdgeColoredGraph& g);

}  // namespace ecpart
