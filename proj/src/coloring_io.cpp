#include "taulab/coloring_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "taulab/errors.hpp"

namespace taulab {

void write_coloring(std::ostream& out, const Coloring& c) {
  out << "taulab-coloring " << kColoringFormatVersion << '\n';
  out << "n " << c.host.order() << " classes " << c.classes.size() << '\n';
  for (std::size_t i = 0; i < c.classes.size(); ++i) {
    out << "class " << i << ' ' << c.classes[i].size() << ' ' << label_text(c.labels[i]) << '\n';
    for (const Edge& e : c.classes[i]) {
      const Edge f = make_edge(e.u, e.v);
      out << f.u << ' ' << f.v << '\n';
    }
  }
}

void write_coloring(const std::filesystem::path& path, const Coloring& c) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  write_coloring(out, c);
}

namespace {

class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  std::string next(const char* what) {
    std::string line;
    if (!std::getline(in_, line)) throw ParseError(lineno_ + 1, std::string("unexpected end of input, expected ") + what);
    ++lineno_;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return line;
  }
  [[nodiscard]] std::size_t lineno() const noexcept { return lineno_; }

 private:
  std::istream& in_;
  std::size_t lineno_ = 0;
};

}  // namespace

Coloring read_coloring(std::istream& in) {
  LineReader r(in);
  {
    std::istringstream head(r.next("format line"));
    std::string tag;
    int version = 0;
    std::string extra;
    if (!(head >> tag >> version) || tag != "taulab-coloring" || (head >> extra)) {
      throw ParseError(r.lineno(), "expected 'taulab-coloring <version>'");
    }
    if (version != kColoringFormatVersion) throw ParseError(r.lineno(), "unsupported version " + std::to_string(version));
  }
  std::size_t n = 0;
  std::size_t count = 0;
  {
    std::istringstream head(r.next("size line"));
    std::string a, b, extra;
    if (!(head >> a >> n >> b >> count) || a != "n" || b != "classes" || (head >> extra)) {
      throw ParseError(r.lineno(), "expected 'n <vertices> classes <count>'");
    }
  }
  std::vector<std::vector<Edge>> classes;
  std::vector<ClassLabel> labels;
  std::vector<Edge> all;
  for (std::size_t i = 0; i < count; ++i) {
    const std::string line = r.next("class line");
    std::istringstream head(line);
    std::string tag;
    std::size_t index = 0;
    std::size_t size = 0;
    if (!(head >> tag >> index >> size) || tag != "class" || index != i) {
      throw ParseError(r.lineno(), "expected 'class " + std::to_string(i) + " <edges> <label>'");
    }
    std::string label;
    std::getline(head >> std::ws, label);
    try {
      labels.push_back(parse_label(label));
    } catch (const std::invalid_argument& e) {
      throw ParseError(r.lineno(), e.what());
    }
    std::vector<Edge> cls;
    for (std::size_t j = 0; j < size; ++j) {
      std::istringstream row(r.next("edge line"));
      std::uint64_t u = 0, v = 0;
      std::string extra;
      if (!(row >> u >> v) || (row >> extra)) throw ParseError(r.lineno(), "expected 'u v'");
      if (u >= v) throw ParseError(r.lineno(), "edge must satisfy u < v");
      if (v >= n) throw ParseError(r.lineno(), "vertex out of range");
      cls.push_back(Edge{static_cast<Vertex>(u), static_cast<Vertex>(v)});
    }
    all.insert(all.end(), cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  std::string rest;
  while (std::getline(in, rest)) {
    if (rest.find_first_not_of(" \t\r") != std::string::npos) throw ParseError(r.lineno() + 1, "trailing content");
  }
  Graph host;
  try {
    host = Graph(n, std::move(all));
  } catch (const std::invalid_argument& e) {
    throw ParseError(r.lineno(), e.what());
  }
  return Coloring{std::move(host), std::move(classes), std::move(labels)};
}

Coloring read_coloring(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return read_coloring(in);
}

}  // namespace taulab
