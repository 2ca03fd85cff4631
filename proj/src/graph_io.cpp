#include "autopc/graph_io.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <sstream>
#include <unordered_map>

namespace autopc {

namespace {

std::string trim(const std::string& s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) return "";
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

bool valid_name(const std::string& name) {
    if (name.empty()) return false;
    for (char c : name) {
        if (c == ',' || c == '#' || c == ' ' || c == '\t' || c == '\r' || c == '\n') return false;
    }
    return true;
}

}  // namespace

NamedGraph parse_graph_text(std::istream& in) {
    std::string line;
    int line_no = 0;
    bool header_seen = false;
    std::vector<std::string> names;
    std::unordered_map<std::string, int> index;
    MixedGraph graph(0);

    while (std::getline(in, line)) {
        ++line_no;
        const std::string body = trim(line);
        if (body.empty() || body[0] == '#') continue;

        if (!header_seen) {
            const std::string prefix = "vertices:";
            if (body.rfind(prefix, 0) != 0)
                throw ParseError("expected 'vertices:' header before edges", line_no);
            std::stringstream list(body.substr(prefix.size()));
            std::string item;
            while (std::getline(list, item, ',')) {
                const std::string name = trim(item);
                if (!valid_name(name))
                    throw ParseError("invalid vertex name '" + name + "'", line_no);
                if (!index.emplace(name, static_cast<int>(names.size())).second)
                    throw ParseError("duplicate vertex name '" + name + "'", line_no);
                names.push_back(name);
            }
            if (names.empty()) throw ParseError("vertex list is empty", line_no);
            graph = MixedGraph(static_cast<int>(names.size()));
            header_seen = true;
            continue;
        }

        std::istringstream tokens(body);
        std::string lhs, op, rhs, extra;
        if (!(tokens >> lhs >> op >> rhs) || (tokens >> extra))
            throw ParseError("expected '<name> -> <name>' or '<name> -- <name>'", line_no);
        if (op != "->" && op != "--")
            throw ParseError("unknown edge operator '" + op + "'", line_no);
        const auto a = index.find(lhs);
        if (a == index.end()) throw ParseError("unknown vertex '" + lhs + "'", line_no);
        const auto b = index.find(rhs);
        if (b == index.end()) throw ParseError("unknown vertex '" + rhs + "'", line_no);
        if (a->second == b->second)
            throw ParseError("self loop on '" + lhs + "'", line_no);
        if (graph.has_edge(a->second, b->second))
            throw ParseError("duplicate edge between '" + lhs + "' and '" + rhs + "'", line_no);
        if (op == "->")
            graph.set_directed(a->second, b->second);
        else
            graph.set_undirected(a->second, b->second);
    }

    if (!header_seen) throw ParseError("missing 'vertices:' header", 0);
    return NamedGraph{std::move(names), std::move(graph)};
}

NamedGraph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open graph file '" + path + "'", 0);
    return parse_graph_text(in);
}

std::string graph_to_text(const NamedGraph& g) {
    const int d = g.graph.num_vertices();
    if (static_cast<int>(g.names.size()) != d)
        throw ParseError("name count does not match vertex count", 0);

    std::string out = "vertices: ";
    for (int i = 0; i < d; ++i) {
        if (i > 0) out += ",";
        out += g.names[i];
    }
    out += "\n";

    std::vector<std::string> lines;
    for (const auto& e : g.graph.edges()) {
        if (e.directed) {
            lines.push_back(g.names[e.a] + " -> " + g.names[e.b]);
        } else {
            const std::string& x = g.names[e.a];
            const std::string& y = g.names[e.b];
            lines.push_back(x <= y ? x + " -- " + y : y + " -- " + x);
        }
    }
    std::sort(lines.begin(), lines.end());
    for (const auto& l : lines) {
        out += l;
        out += "\n";
    }
    return out;
}

void write_graph_file(const std::string& path, const NamedGraph& g) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot open '" + path + "' for writing", 0);
    out << graph_to_text(g);
    if (!out) throw ParseError("failed writing '" + path + "'", 0);
}

NamedGraph align_to_names(const NamedGraph& g, const std::vector<std::string>& names) {
    if (g.names.size() != names.size())
        throw ParseError("graphs have different vertex counts (" +
                             std::to_string(g.names.size()) + " vs " +
                             std::to_string(names.size()) + ")",
                         0);
    std::unordered_map<std::string, int> target;
    for (int i = 0; i < static_cast<int>(names.size()); ++i) target.emplace(names[i], i);

    std::vector<int> perm(g.names.size());
    for (int i = 0; i < static_cast<int>(g.names.size()); ++i) {
        const auto it = target.find(g.names[i]);
        if (it == target.end())
            throw ParseError("vertex '" + g.names[i] + "' missing from reference graph", 0);
        perm[i] = it->second;
    }

    MixedGraph out(static_cast<int>(names.size()));
    for (const auto& e : g.graph.edges()) {
        if (e.directed)
            out.set_directed(perm[e.a], perm[e.b]);
        else
            out.set_undirected(perm[e.a], perm[e.b]);
    }
    return NamedGraph{names, std::move(out)};
}

std::vector<std::string> default_names(int d) {
    std::vector<std::string> names;
    names.reserve(static_cast<size_t>(d));
    for (int i = 1; i <= d; ++i) names.push_back("X" + std::to_string(i));
    return names;
}

}  // namespace autopc
