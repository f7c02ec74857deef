#include <doctest.h>

#include <matchparity/io.hpp>

#include "fixtures.hpp"

using namespace mpar;

TEST_CASE("graph json round trip") {
    Graph g = parse_graph_json(R"({"vertices": ["a", "b", 3], "colors": {"a": "B", "b": "W", "3": "W"},
                                   "edges": [["a", "b", 2], ["a", 3]]})");
    CHECK(g.vertex_count() == 3);
    CHECK(g.multiplicity(0, 1) == 2);
    CHECK(g.multiplicity(0, 2) == 1);
    CHECK(g.color_of(2) == Color::White);
    CHECK(g.label(0) == "a");
    Graph again = parse_graph_json(to_json(g));
    CHECK(again.edge_count() == g.edge_count());
}

TEST_CASE("graph json errors") {
    CHECK_THROWS_AS(parse_graph_json("{"), ParseError);
    CHECK_THROWS_AS(parse_graph_json(R"({"edges": []})"), ParseError);
    CHECK_THROWS_AS(parse_graph_json(R"({"vertices": [1, 1]})"), ParseError);
    CHECK_THROWS_AS(parse_graph_json(R"({"vertices": [1, 2], "edges": [[1, 3]]})"), ParseError);
    CHECK_THROWS_AS(parse_graph_json(R"({"vertices": [1], "edges": [[1, 1]]})"), ParseError);
    CHECK_THROWS_AS(
        parse_graph_json(R"({"vertices": [1, 2], "colors": {"1": "B", "2": "B"}, "edges": [[1, 2]]})"),
        ParseError);
    try {
        parse_graph_json("{\n  \"vertices\": [1,,]\n}");
        FAIL("no error");
    } catch (const ParseError& e) {
        CHECK(e.line == 2);
    }
}

TEST_CASE("trace json replays") {
    ReductionTrace t = reduce(fixtures::six_vertex_example());
    std::string js = to_json(t);
    CHECK(js.find("\"kind\"") != std::string::npos);
    auto moves = parse_trace_json(js);
    CHECK(moves == t.moves);
    CHECK(replay(t.initial, moves) == t.terminal);
    CHECK(to_json(t) == js);
}

TEST_CASE("report json uses decimal strings") {
    std::string js = to_json(divisibility_report(GridRegion::rectangle(4, 9)));
    CHECK(js.find("\"exact_count\": \"6336\"") != std::string::npos);
    CHECK(js.find("\"dim_C_B\": \"2\"") != std::string::npos);
    CHECK(js.find("\"status\": \"proven\"") != std::string::npos);
    std::string zero = to_json(divisibility_report(GridRegion::rectangle(1, 1)));
    CHECK(zero.find("\"guaranteed_exponent\": \"infinity\"") != std::string::npos);
}

TEST_CASE("channel basis json") {
    std::string js = to_json(black_channel_space(GridRegion::rectangle(4, 9).graph()));
    CHECK(js.find("\"dimension\": \"2\"") != std::string::npos);
    CHECK(js.find("\"color_restriction\"") != std::string::npos);
}

TEST_CASE("billiards svg") {
    GridRegion r = fixtures::notched_block();
    BilliardHost h = BilliardHost::from_region(r);
    std::string svg = billiards_svg(r, path_basis(h), h);
    CHECK(svg.rfind("<svg", 0) == 0);
    CHECK(svg.find("polyline") != std::string::npos);
    CHECK(svg.find("#1f77b4") != std::string::npos);
}
