#include "taulab/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "taulab/errors.hpp"

namespace taulab {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.back() == '\r' || s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  return s;
}

// Parses exactly `count` unsigned decimals separated by single spaces.
template <std::size_t N>
bool parse_fields(std::string_view s, std::uint64_t (&out)[N]) {
  const char* p = s.data();
  const char* end = s.data() + s.size();
  for (std::size_t i = 0; i < N; ++i) {
    if (i > 0) {
      if (p == end || *p != ' ') return false;
      ++p;
    }
    auto [next, ec] = std::from_chars(p, end, out[i]);
    if (ec != std::errc{} || next == p) return false;
    p = next;
  }
  return p == end;
}

}  // namespace

void write_edgelist(std::ostream& out, const Graph& g) {
  out << "n " << g.order() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

void write_edgelist(const std::filesystem::path& path, const Graph& g) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  write_edgelist(out, g);
}

Graph read_edgelist(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  std::uint64_t n = 0;
  bool have_header = false;
  std::vector<Edge> edges;
  std::unordered_set<std::uint64_t> seen;

  while (std::getline(in, line)) {
    ++lineno;
    const std::string_view s = trim(line);
    if (s.empty()) continue;
    if (!have_header) {
      std::uint64_t f[1];
      if (!s.starts_with("n ") || !parse_fields(s.substr(2), f)) {
        throw ParseError(lineno, "expected header 'n <count>'");
      }
      n = f[0];
      if (n > 0xFFFFFFFFULL) throw ParseError(lineno, "vertex count too large");
      have_header = true;
      continue;
    }
    std::uint64_t f[2];
    if (!parse_fields(s, f)) throw ParseError(lineno, "expected 'u v'");
    if (f[0] == f[1]) throw ParseError(lineno, "self-loop at vertex " + std::to_string(f[0]));
    if (f[0] >= n || f[1] >= n) {
      throw ParseError(lineno, "vertex index out of range for n=" + std::to_string(n));
    }
    if (f[0] > f[1]) throw ParseError(lineno, "expected u < v");
    const Edge e{static_cast<Vertex>(f[0]), static_cast<Vertex>(f[1])};
    if (!seen.insert(edge_key(e)).second) {
      throw ParseError(lineno, "duplicate edge " + std::to_string(e.u) + " " + std::to_string(e.v));
    }
    edges.push_back(e);
  }
  if (!have_header) throw ParseError(lineno, "missing header 'n <count>'");
  return Graph(n, std::move(edges));
}

Graph read_edgelist(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return read_edgelist(in);
}

}  // namespace taulab
