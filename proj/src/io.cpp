#include "ecpart/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

#include <openssl/evp.h>

#include "ecpart/errors.hpp"

namespace ecpart {

namespace {

[[noreturn]] void fail_at(std::size_t line, const std::string& reason) {
  throw Error(Errc::kParseError, "line " + std::to_string(line) + ": " + reason);
}

std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::uint64_t number(std::string_view tok, std::size_t line, const char* what) {
  std::uint64_t v = 0;
  const auto [end, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || end != tok.data() + tok.size()) {
    fail_at(line, std::string("expected a non-negative integer ") + what + ", got '" +
                      std::string(tok) + "'");
  }
  return v;
}

// Calls `row(line_no, tokens)` for every non-blank, non-comment line; the
// first such line is passed to `header`.
template <typename Header, typename Row>
void scan(std::string_view text, Header header, Row row) {
  std::size_t line_no = 0;
  bool seen_header = false;
  while (!text.empty() || line_no == 0) {
    const std::size_t nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    const auto toks = tokens(line);
    if (toks.empty()) {
      if (text.empty()) break;
      continue;
    }
    if (!seen_header) {
      header(line_no, toks);
      seen_header = true;
    } else {
      row(line_no, toks);
    }
  }
  if (!seen_header) fail_at(line_no, "missing header");
}

}  // namespace

EdgeColoredGraph parse_ecg(std::string_view text) {
  std::size_t n = 0;
  std::vector<Edge> edges;
  std::set<std::pair<Vertex, Vertex>> pairs;
  scan(
      text,
      [&](std::size_t line, const auto& toks) {
        if (toks.size() != 2 || toks[0] != "ecg") fail_at(line, "expected header 'ecg <n>'");
        n = number(toks[1], line, "vertex count");
      },
      [&](std::size_t line, const auto& toks) {
        if (toks.size() != 3) fail_at(line, "expected '<u> <v> <color>'");
        const auto u = number(toks[0], line, "vertex");
        const auto v = number(toks[1], line, "vertex");
        const auto c = number(toks[2], line, "color");
        if (u >= n || v >= n) fail_at(line, "vertex id out of range");
        if (u == v) fail_at(line, "self-loop");
        if (c > UINT32_MAX) fail_at(line, "color id too large");
        const std::pair<Vertex, Vertex> key{static_cast<Vertex>(std::min(u, v)),
                                            static_cast<Vertex>(std::max(u, v))};
        if (!pairs.insert(key).second) fail_at(line, "duplicate edge");
        edges.push_back({key.first, key.second, static_cast<Color>(c)});
      });
  return EdgeColoredGraph(n, std::move(edges));
}

std::string write_ecg(const EdgeColoredGraph& g) {
  std::ostringstream out;
  out << "ecg " << g.vertex_count() << '\n';
  for (const auto& e : g.edges()) out << e.u << ' ' << e.v << ' ' << e.color << '\n';
  return out.str();
}

Digraph parse_dg(std::string_view text) {
  std::size_t n = 0;
  bool oriented = false;
  std::vector<Digraph::Arc> arcs;
  std::set<Digraph::Arc> seen;
  scan(
      text,
      [&](std::size_t line, const auto& toks) {
        if (toks.empty() || toks[0] != "dg" || toks.size() < 2 || toks.size() > 3 ||
            (toks.size() == 3 && toks[2] != "oriented")) {
          fail_at(line, "expected header 'dg <n> [oriented]'");
        }
        n = number(toks[1], line, "vertex count");
        oriented = toks.size() == 3;
      },
      [&](std::size_t line, const auto& toks) {
        if (toks.size() != 2) fail_at(line, "expected '<u> <v>'");
        const auto u = static_cast<Vertex>(number(toks[0], line, "vertex"));
        const auto v = static_cast<Vertex>(number(toks[1], line, "vertex"));
        if (u >= n || v >= n) fail_at(line, "vertex id out of range");
        if (u == v) fail_at(line, "self-loop");
        if (!seen.insert({u, v}).second) fail_at(line, "duplicate arc");
        if (oriented && seen.count({v, u})) fail_at(line, "2-cycle in an oriented graph");
        arcs.emplace_back(u, v);
      });
  return Digraph(n, std::move(arcs), oriented);
}

std::string write_dg(const Digraph& d) {
  std::ostringstream out;
  out << "dg " << d.vertex_count() << (d.oriented() ? " oriented" : "") << '\n';
  for (const auto& [u, v] : d.arcs()) out << u << ' ' << v << '\n';
  return out.str();
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::kInvalidArgument, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::kInvalidArgument, "cannot write " + path);
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
}

std::string sha256_hex(std::string_view bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
    throw Error(Errc::kInvariantViolation, "sha256 computation failed");
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out += kHex[digest[i] >> 4];
    out += kHex[digest[i] & 15];
  }
  return out;
}

std::string graph_hash(const EdgeColoredGraph& g) { return sha256_hex(write_ecg(g)); }

nlohmann::json certificate_to_json(const PartitionCertificate& cert,
                                   const EdgeColoredGraph& g) {
  nlohmann::json witnesses = nlohmann::json::object();
  for (Vertex v = 0; v < cert.witnesses.size(); ++v) {
    witnesses[std::to_string(v)] = cert.witnesses[v];
  }
  const auto check = check_partition(g, cert.parts, cert.targets);
  return {
      {"format", kCertificateFormat},
      {"targets", std::vector<int>(cert.targets.values().begin(), cert.targets.values().end())},
      {"parts", cert.parts},
      {"witnesses", witnesses},
      {"checked", check.ok()},
      {"graph_hash", graph_hash(g)},
      {"hash_algorithm", kHashAlgorithm},
  };
}

std::string dump_certificate(const nlohmann::json& doc) { return doc.dump(2) + "\n"; }

VerifyReport verify_certificate(const nlohmann::json& doc, const EdgeColoredGraph& g) {
  std::vector<int> targets;
  std::vector<VertexSet> parts;
  std::string hash, algorithm;
  nlohmann::json witnesses;
  try {
    if (doc.at("format").get<std::string>() != kCertificateFormat) {
      throw Error(Errc::kParseError, "unknown certificate format");
    }
    targets = doc.at("targets").get<std::vector<int>>();
    parts = doc.at("parts").get<std::vector<VertexSet>>();
    hash = doc.at("graph_hash").get<std::string>();
    algorithm = doc.at("hash_algorithm").get<std::string>();
    witnesses = doc.at("witnesses");
    if (!witnesses.is_object()) throw Error(Errc::kParseError, "witnesses must be an object");
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::kParseError, std::string("malformed certificate: ") + e.what());
  }
  if (algorithm != kHashAlgorithm) {
    throw Error(Errc::kParseError, "unsupported hash algorithm " + algorithm);
  }

  VerifyReport report;
  report.hash_matches = hash == graph_hash(g);
  if (!report.hash_matches) report.problems.push_back("graph_hash does not match the graph");

  for (auto& p : parts) {
    if (!std::is_sorted(p.begin(), p.end())) std::sort(p.begin(), p.end());
  }
  const auto check = check_partition(g, parts, PartitionTargets(targets));
  report.deficiencies = check.deficiencies;
  for (const auto& d : check.deficiencies) {
    report.problems.push_back("vertex " + std::to_string(d.vertex) + " in part " +
                              std::to_string(d.part) + " sees " +
                              std::to_string(d.color_degree) + " colors, needs " +
                              std::to_string(d.target));
  }

  report.witnesses_match = true;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    std::size_t part = 0;
    while (!std::binary_search(parts[part].begin(), parts[part].end(), v)) ++part;
    const auto actual = colors_into(g, v, membership(parts[part], g.vertex_count()));
    const auto it = witnesses.find(std::to_string(v));
    ColorSet claimed;
    try {
      if (it != witnesses.end()) claimed = it->get<ColorSet>();
    } catch (const nlohmann::json::exception&) {
      throw Error(Errc::kParseError, "witness of vertex " + std::to_string(v) + " is malformed");
    }
    if (it == witnesses.end() || claimed != actual) {
      report.witnesses_match = false;
      report.problems.push_back("witness of vertex " + std::to_string(v) +
                                " does not match its part");
    }
  }
  if (witnesses.size() != g.vertex_count()) {
    report.witnesses_match = false;
    report.problems.push_back("witnesses list unknown vertices");
  }
  return report;
}

}  // namespace ecpart
