#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "minorforge/graph.hpp"

namespace minorforge {

// Parse failure with a 1-based line number; what() reads "name:line: message".
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& name, int line, const std::string& message);
  int line() const { return line_; }

 private:
  int line_;
};

// Edge-list format. First data line "n m", then m lines "u v" with 0-based
// endpoints. Blank lines are skipped and '#' starts a comment anywhere on a
// line. `name` only labels error messages.
Graph read_graph(std::istream& in, const std::string& name = "<stream>");
Graph read_graph_file(const std::string& path);
void write_graph(std::ostream& out, const Graph& g);
void write_graph_file(const std::string& path, const Graph& g);

// Branch-set format: one line per pattern vertex, "i: v1 v2 v3". Every index
// 0..t-1 must appear exactly once; t is inferred from the lines present.
// Validation against concrete graphs happens elsewhere.
std::vector<std::vector<uint32_t>> read_branch_sets(std::istream& in,
                                                    const std::string& name = "<stream>");
std::vector<std::vector<uint32_t>> read_branch_sets_file(const std::string& path);
void write_branch_sets(std::ostream& out, const std::vector<std::vector<uint32_t>>& sets);

}  // namespace minorforge
