#include <doctest.h>

#include "ddp/canonical.hpp"
#include "ddp/constructions.hpp"
#include "ddp/io.hpp"

using namespace ddp;

TEST_CASE("edge-list round trip with comments and blank lines") {
    std::string text = "# a path\n4\n0 1\n\n1 2\n2 3 # tail\n";
    Graph g = parse_graph(text, GraphFormat::EdgeList);
    CHECK(g == path_graph(4));
    Graph again = parse_graph(serialize_graph(g, GraphFormat::EdgeList), GraphFormat::EdgeList);
    CHECK(again == g);
}

TEST_CASE("edge-list parse errors carry positions") {
    CHECK_THROWS_AS(parse_graph("", GraphFormat::EdgeList), ParseError);
    CHECK_THROWS_AS(parse_graph("x\n", GraphFormat::EdgeList), ParseError);
    CHECK_THROWS_AS(parse_graph("3\n0 5\n", GraphFormat::EdgeList), ParseError);
    CHECK_THROWS_AS(parse_graph("3\n0 1\n0 1\n", GraphFormat::EdgeList), ParseError);
    CHECK_THROWS_AS(parse_graph("3\n0 0\n", GraphFormat::EdgeList), ParseError);
    CHECK_THROWS_AS(parse_graph("3\n0 1 2\n", GraphFormat::EdgeList), ParseError);
    try {
        parse_graph("3\n0 1\nbroken\n", GraphFormat::EdgeList);
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(e.line == 3);
    }
}

TEST_CASE("graph6 matches the published encoding on anchor graphs") {
    // K_2 is "A_" and K_4 is "C~" in the standard encoding.
    CHECK(serialize_graph(path_graph(2), GraphFormat::Graph6) == "A_");
    CHECK(serialize_graph(complete_graph(4), GraphFormat::Graph6) == "C~");
    CHECK(parse_graph("A_", GraphFormat::Graph6) == path_graph(2));
    CHECK(parse_graph("C~", GraphFormat::Graph6) == complete_graph(4));
}

TEST_CASE("graph6 round trips preserve structure up to equality") {
    for (const Graph& g : {path_graph(7), cycle_graph(9), star_graph(5),
                           complete_bipartite_graph(3, 4), Graph(1)}) {
        Graph back = parse_graph(serialize_graph(g, GraphFormat::Graph6), GraphFormat::Graph6);
        CHECK(back == g);
    }
}

TEST_CASE("graph6 rejects malformed input") {
    CHECK_THROWS_AS(parse_graph("", GraphFormat::Graph6), ParseError);
    CHECK_THROWS_AS(parse_graph("\x01zzz", GraphFormat::Graph6), ParseError);
    // Truncated body: K_4 needs one body character.
    CHECK_THROWS_AS(parse_graph("C", GraphFormat::Graph6), ParseError);
}

TEST_CASE("format detection: leading integer means edge list") {
    CHECK(detect_format("4\n0 1\n") == GraphFormat::EdgeList);
    CHECK(detect_format("  # comment\n3\n") == GraphFormat::EdgeList);
    CHECK(detect_format("C~") == GraphFormat::Graph6);
    CHECK(detect_format("A_") == GraphFormat::Graph6);
}
