#include "kord/io.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "kord/errors.hpp"

namespace kord {

namespace {

// All whitespace-separated tokens with '#' comments stripped.
std::vector<std::string> tokens_of(std::istream& in) {
  std::vector<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string tok;
    while (ls >> tok) out.push_back(tok);
  }
  return out;
}

int parse_int(const std::string& tok, const char* what) {
  std::size_t pos = 0;
  int value = 0;
  try {
    value = std::stoi(tok, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  require_arg(pos == tok.size() && !tok.empty(), std::string(what) +
                                                     " expects an integer, got '" +
                                                     tok + "'");
  return value;
}

}  // namespace

Graph read_edge_list(std::istream& in) {
  auto toks = tokens_of(in);
  require_arg(toks.size() >= 2, "edge list needs an 'n m' header");
  int n = parse_int(toks[0], "vertex count");
  int m = parse_int(toks[1], "edge count");
  require_arg(n >= 0, "vertex count must be non-negative");
  require_arg(m >= 0, "edge count must be non-negative");
  require_arg(static_cast<int>(toks.size()) == 2 + 2 * m,
              "edge list token count does not match the header");

  std::vector<std::pair<int, int>> edges;
  std::set<std::pair<int, int>> dedup;
  for (int i = 0; i < m; ++i) {
    int u = parse_int(toks[2 + 2 * i], "edge endpoint");
    int v = parse_int(toks[3 + 2 * i], "edge endpoint");
    require_arg(u >= 0 && u < n && v >= 0 && v < n,
                "edge endpoint out of range");
    require_arg(u != v, "self-loops are not allowed");
    auto key = std::minmax(u, v);
    require_arg(dedup.insert(key).second, "duplicate edge");
    edges.push_back(key);
  }
  return Graph::from_edges(n, edges);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.n() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

CycleCertificate read_certificate(std::istream& in) {
  std::map<std::string, std::vector<std::string>> fields;
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string key;
    if (!(ls >> key)) continue;
    require_arg(!fields.count(key), "duplicate certificate key '" + key + "'");
    std::string tok;
    while (ls >> tok) fields[key].push_back(tok);
    if (!fields.count(key)) fields[key] = {};
  }
  for (const char* key : {"n", "power", "cycle", "anchors", "construction"})
    require_arg(fields.count(key),
                std::string("certificate misses key '") + key + "'");
  require_arg(fields.size() == 5, "certificate has an unknown key");

  CycleCertificate cert;
  require_arg(fields["n"].size() == 1, "key 'n' expects one value");
  cert.n = parse_int(fields["n"][0], "n");
  require_arg(fields["power"].size() == 1, "key 'power' expects one value");
  cert.power = parse_int(fields["power"][0], "power");
  for (const auto& tok : fields["cycle"])
    cert.cycle.push_back(parse_int(tok, "cycle vertex"));
  for (const auto& tok : fields["anchors"])
    cert.anchors.push_back(parse_int(tok, "anchor"));
  require_arg(fields["construction"].size() == 1,
              "key 'construction' expects one value");
  cert.construction = fields["construction"][0];
  return cert;
}

void write_certificate(std::ostream& out, const CycleCertificate& cert) {
  out << "n " << cert.n << '\n';
  out << "power " << cert.power << '\n';
  out << "cycle";
  for (int v : cert.cycle) out << ' ' << v;
  out << '\n';
  out << "anchors";
  for (int a : cert.anchors) out << ' ' << a;
  out << '\n';
  out << "construction " << cert.construction << '\n';
}

}  // namespace kord
