#include <doctest.h>

#include <cstdio>
#include <sstream>

#include "autopc/graph_io.hpp"

using autopc::MixedGraph;
using autopc::NamedGraph;
using autopc::ParseError;

TEST_CASE("graph text round-trips byte for byte") {
    MixedGraph g(3);
    g.set_directed(2, 0);
    g.set_undirected(1, 2);
    const NamedGraph named{{"alpha", "beta", "gamma"}, g};

    const std::string text = autopc::graph_to_text(named);
    CHECK(text ==
          "vertices: alpha,beta,gamma\n"
          "beta -- gamma\n"
          "gamma -> alpha\n");

    std::istringstream in(text);
    const NamedGraph back = autopc::parse_graph_text(in);
    CHECK(back.names == named.names);
    CHECK(back.graph == named.graph);
    CHECK(autopc::graph_to_text(back) == text);
}

TEST_CASE("comments, blank lines, and whitespace are tolerated") {
    std::istringstream in(
        "# a comment\n"
        "\n"
        "vertices:  a , b , c \n"
        "  a -> b  \n"
        "# another\n"
        "b -- c\n");
    const NamedGraph g = autopc::parse_graph_text(in);
    CHECK(g.names == std::vector<std::string>{"a", "b", "c"});
    CHECK(g.graph.has_directed(0, 1));
    CHECK(g.graph.has_undirected(1, 2));
    CHECK(g.graph.num_edges() == 2);
}

TEST_CASE("parse errors carry line numbers") {
    const auto line_of = [](const std::string& text) {
        std::istringstream in(text);
        try {
            autopc::parse_graph_text(in);
        } catch (const ParseError& e) {
            return e.line();
        }
        return -1;
    };

    CHECK(line_of("a -> b\n") == 1);                            // edge before header
    CHECK(line_of("vertices: a,b\n\nc -> b\n") == 3);           // unknown vertex
    CHECK(line_of("vertices: a,a\n") == 1);                     // duplicate name
    CHECK(line_of("vertices: a,b\na => b\n") == 2);             // bad operator
    CHECK(line_of("vertices: a,b\na -> a\n") == 2);             // self loop
    CHECK(line_of("vertices: a,b\na -> b\na -- b\n") == 3);     // duplicate edge
    CHECK(line_of("vertices: a,b\na -> b extra\n") == 2);       // trailing token
    CHECK(line_of("vertices:\n") == 1);                         // empty list
    CHECK(line_of("# nothing\n") == 0);                         // missing header
}

TEST_CASE("serialization orders edges lexicographically by name") {
    MixedGraph g(4);
    g.set_undirected(3, 0);
    g.set_directed(2, 1);
    const NamedGraph named{{"d", "c", "b", "a"}, g};
    CHECK(autopc::graph_to_text(named) ==
          "vertices: d,c,b,a\n"
          "a -- d\n"
          "b -> c\n");
}

TEST_CASE("alignment permutes a graph onto reference names") {
    MixedGraph g(3);
    g.set_directed(0, 1);  // x -> y
    const NamedGraph est{{"x", "y", "z"}, g};
    const NamedGraph aligned = autopc::align_to_names(est, {"z", "x", "y"});
    CHECK(aligned.names == std::vector<std::string>{"z", "x", "y"});
    CHECK(aligned.graph.has_directed(1, 2));
    CHECK(aligned.graph.num_edges() == 1);

    CHECK_THROWS_AS(autopc::align_to_names(est, {"x", "y"}), ParseError);
    CHECK_THROWS_AS(autopc::align_to_names(est, {"x", "y", "w"}), ParseError);
}

TEST_CASE("file round trip and open failures") {
    MixedGraph g(2);
    g.set_directed(0, 1);
    const NamedGraph named{{"u", "v"}, g};
    const std::string path = "io_roundtrip_test.graph";
    autopc::write_graph_file(path, named);
    const NamedGraph back = autopc::read_graph_file(path);
    CHECK(back.graph == named.graph);
    std::remove(path.c_str());

    CHECK_THROWS_AS(autopc::read_graph_file("definitely/not/here.graph"), ParseError);
}

TEST_CASE("default names run X1..Xd") {
    CHECK(autopc::default_names(3) == std::vector<std::string>{"X1", "X2", "X3"});
}
