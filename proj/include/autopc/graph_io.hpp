#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "autopc/graph.hpp"

namespace autopc {

/// Parse or serialization failure with the 1-based line it occurred on
/// (line 0 when no line applies).
class ParseError : public std::runtime_error {
public:
    ParseError(std::string message, int line)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + std::move(message)
                                      : std::move(message)),
          line_(line) {}
    int line() const { return line_; }

private:
    int line_ = 0;
};

/// Graph plus vertex names, the unit the text format round-trips.
struct NamedGraph {
    std::vector<std::string> names;
    MixedGraph graph;
};

/// Text format:
///   vertices: name1,name2,...
///   A -> B
///   A -- B
/// Blank lines and lines starting with '#' are ignored. Names are matched
/// exactly after trimming surrounding whitespace.
NamedGraph parse_graph_text(std::istream& in);
NamedGraph read_graph_file(const std::string& path);

/// Serialization emits one edge per line ordered by (first name, second name)
/// so equal graphs produce byte-identical text. Undirected edges put the
/// lexicographically smaller name first.
std::string graph_to_text(const NamedGraph& g);
void write_graph_file(const std::string& path, const NamedGraph& g);

/// Reindex `g` onto the vertex order of `names`. Both must carry exactly the
/// same name set; throws ParseError naming the difference otherwise.
NamedGraph align_to_names(const NamedGraph& g, const std::vector<std::string>& names);

/// Default names X1..Xd used by the simulator.
std::vector<std::string> default_names(int d);

}  // namespace autopc
