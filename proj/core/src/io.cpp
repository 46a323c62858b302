#include "minorforge/io.hpp"

#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

namespace minorforge {

ParseError::ParseError(const std::string& name, int line, const std::string& message)
    : std::runtime_error(name + ":" + std::to_string(line) + ": " + message), line_(line) {}

namespace {

// Yields (line number, content) with comments stripped and blanks dropped.
class LineReader {
 public:
  LineReader(std::istream& in, std::string name) : in_(in), name_(std::move(name)) {}

  bool next(std::string& out) {
    std::string raw;
    while (std::getline(in_, raw)) {
      ++line_;
      if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
      if (raw.find_first_not_of(" \t\r") == std::string::npos) continue;
      out = raw;
      return true;
    }
    return false;
  }

  int line() const { return line_; }
  const std::string& name() const { return name_; }

  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(name_, line_, message);
  }

 private:
  std::istream& in_;
  std::string name_;
  int line_ = 0;
};

long long parse_ll(LineReader& r, std::istringstream& in, const char* what) {
  long long value;
  if (!(in >> value)) r.fail(std::string("expected ") + what);
  return value;
}

}  // namespace

Graph read_graph(std::istream& in, const std::string& name) {
  LineReader reader(in, name);
  std::string line;
  if (!reader.next(line)) throw ParseError(name, 1, "missing header line \"n m\"");

  std::istringstream header(line);
  long long n = parse_ll(reader, header, "vertex count");
  long long m = parse_ll(reader, header, "edge count");
  std::string extra;
  if (header >> extra) reader.fail("trailing tokens after header");
  if (n < 0 || n > UINT32_MAX) reader.fail("vertex count out of range");
  if (m < 0 || m > (long long)n * (n - 1) / 2) reader.fail("edge count out of range");

  Graph g(static_cast<uint32_t>(n));
  for (long long i = 0; i < m; ++i) {
    if (!reader.next(line))
      throw ParseError(name, reader.line() + 1,
                       "expected " + std::to_string(m) + " edges, got " + std::to_string(i));
    std::istringstream edge(line);
    long long u = parse_ll(reader, edge, "edge endpoint");
    long long v = parse_ll(reader, edge, "edge endpoint");
    if (edge >> extra) reader.fail("trailing tokens after edge");
    if (u < 0 || u >= n || v < 0 || v >= n) reader.fail("edge endpoint out of range");
    if (u == v) reader.fail("self-loop");
    if (!g.add_edge(static_cast<uint32_t>(u), static_cast<uint32_t>(v)))
      reader.fail("duplicate edge");
  }
  if (reader.next(line)) reader.fail("unexpected content after edge list");
  return g;
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_graph(in, path);
}

void write_graph(std::ostream& out, const Graph& g) {
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

void write_graph_file(const std::string& path, const Graph& g) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  write_graph(out, g);
}

std::vector<std::vector<uint32_t>> read_branch_sets(std::istream& in, const std::string& name) {
  LineReader reader(in, name);
  std::string line;
  std::map<long long, std::vector<uint32_t>> by_index;
  while (reader.next(line)) {
    auto colon = line.find(':');
    if (colon == std::string::npos) reader.fail("expected \"i: v1 v2 ...\"");
    std::istringstream head(line.substr(0, colon));
    long long index;
    std::string extra;
    if (!(head >> index) || (head >> extra)) reader.fail("malformed branch index");
    if (index < 0) reader.fail("negative branch index");
    if (by_index.count(index)) reader.fail("branch " + std::to_string(index) + " repeated");

    std::istringstream body(line.substr(colon + 1));
    std::vector<uint32_t> verts;
    long long v;
    while (body >> v) {
      if (v < 0 || v > UINT32_MAX) reader.fail("branch vertex out of range");
      verts.push_back(static_cast<uint32_t>(v));
    }
    if (!body.eof()) reader.fail("malformed branch vertex");
    by_index[index] = std::move(verts);
  }
  std::vector<std::vector<uint32_t>> sets(by_index.size());
  for (auto& [index, verts] : by_index) {
    if (index >= static_cast<long long>(sets.size()))
      throw ParseError(name, reader.line(),
                       "branch indices must cover 0.." + std::to_string(sets.size() - 1) +
                           " (got " + std::to_string(index) + ")");
    sets[index] = std::move(verts);
  }
  return sets;
}

std::vector<std::vector<uint32_t>> read_branch_sets_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_branch_sets(in, path);
}

void write_branch_sets(std::ostream& out, const std::vector<std::vector<uint32_t>>& sets) {
  for (size_t i = 0; i < sets.size(); ++i) {
    out << i << ':';
    for (uint32_t v : sets[i]) out << ' ' << v;
    out << '\n';
  }
}

}  // namespace minorforge
