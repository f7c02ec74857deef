#include <doctest.h>

#include <matchparity/faces.hpp>
#include <matchparity/graph.hpp>
#include <matchparity/region.hpp>

#include "fixtures.hpp"

using namespace mpar;

TEST_CASE("graph stores multiplicities and rejects loops") {
    Graph g(3);
    g.add_edge(0, 1);
    g.add_edge(1, 0, 2);
    CHECK(g.multiplicity(0, 1) == 3);
    CHECK(g.edge_count() == 3);
    CHECK(g.degree(1) == 3);
    CHECK_THROWS_AS(g.add_edge(2, 2), PreconditionError);
    g.remove_edge(0, 1, 3);
    CHECK(g.edge_count() == 0);
    CHECK(g.neighbors(0).empty());
}

TEST_CASE("colored graph rejects monochromatic edges") {
    Graph g;
    int a = g.add_vertex(Color::Black), b = g.add_vertex(Color::Black);
    CHECK_THROWS(g.add_edge(a, b));
    CHECK_NOTHROW(check_coloring(complete_bipartite(2, 3)));
}

TEST_CASE("stable ids survive removal") {
    Graph g = path_graph(4);
    g.remove_vertex(1);
    CHECK(g.vertices() == std::vector<int>{0, 2, 3});
    CHECK(g.add_vertex() == 4);
    CHECK(components(g).size() == 3);
}

TEST_CASE("region file parsing") {
    GridRegion sq = from_region_file("##\n##");
    CHECK(sq.size() == 4);
    CHECK(sq.edge_count() == 4);

    GridRegion apart = from_region_file("#.#");
    CHECK(apart.size() == 2);
    CHECK(apart.edge_count() == 0);

    std::string rows;
    for (int i = 0; i < 4; ++i) rows += std::string(9, '#') + "\n";
    GridRegion r = from_region_file(rows);
    CHECK(r.size() == 36);
    CHECK(r.edge_count() == 59);
    CHECK(r == GridRegion::rectangle(4, 9));

    GridRegion top = from_region_file("#.\n##");
    CHECK(top.contains({0, 1}));
    CHECK(!top.contains({1, 1}));
    CHECK(top.contains({1, 0}));
}

TEST_CASE("region file errors carry a position") {
    try {
        from_region_file("##\n#x");
        FAIL("no error");
    } catch (const ParseError& e) {
        CHECK(e.line == 2);
        CHECK(e.column == 2);
    }
    CHECK_THROWS_AS(from_region_file("..\n.."), ParseError);
    CHECK_THROWS_AS(from_region_file(""), ParseError);
}

TEST_CASE("region file round trip") {
    GridRegion r = fixtures::l_shape();
    CHECK(from_region_file(to_region_file(r)) == r.normalized());
    CHECK(to_region_file(GridRegion::rectangle(2, 2)) == "##\n##");
}

TEST_CASE("internal faces are unit squares in lower-left order") {
    CHECK(GridRegion::rectangle(2, 2).cells().size() == 1);
    CHECK(GridRegion::rectangle(4, 9).cells().size() == 24);
    auto cells = fixtures::notched_block().cells();
    CHECK(cells.size() == 15);
    CHECK(std::is_sorted(cells.begin(), cells.end(), [](Point a, Point b) {
        return a.x != b.x ? a.x < b.x : a.y < b.y;
    }));
}

TEST_CASE("vertex classification") {
    auto c = classify_vertices(GridRegion::rectangle(3, 3));
    REQUIRE(c.internal.size() == 1);
    CHECK(c.internal[0] == Point{1, 1});
    CHECK(c.external.size() == 8);
    CHECK(classify_vertices(GridRegion::rectangle(2, 7)).internal.empty());
    CHECK(classify_vertices(GridRegion::rectangle(4, 9)).internal.size() == 14);
    CHECK_THROWS_AS(classify_vertices(from_region_file("#.#")), PreconditionError);
}

TEST_CASE("inner subgraph") {
    CHECK(inner_region(GridRegion::rectangle(5, 10)).normalized() == GridRegion::rectangle(3, 8));
    CHECK(inner_region(GridRegion::rectangle(2, 2)).size() == 0);
    GridRegion inner = inner_region(fixtures::notched_block());
    CHECK(inner.size() == 8);
    CHECK(inner.normalized() ==
          fixtures::merge(fixtures::box(0, 1, 0, 2), fixtures::box(2, 2, 1, 2)).normalized());
}

TEST_CASE("outer subgraph cycle test") {
    CHECK(outer_subgraph_is_simple_cycle(GridRegion::rectangle(3, 3)));
    CHECK(outer_subgraph_is_simple_cycle(GridRegion::rectangle(4, 9)));
    CHECK_FALSE(outer_subgraph_is_simple_cycle(GridRegion::rectangle(2, 5)));
    CHECK(outer_subgraph_is_simple_cycle(fixtures::l_shape()));
}

TEST_CASE("face traversal partitions darts") {
    for (const GridRegion& r : {GridRegion::rectangle(3, 4), fixtures::l_shape(),
                                fixtures::notched_block(), aztec_diamond(3)}) {
        GridFaces gf = grid_faces(r);
        std::size_t total = 0;
        for (const auto& f : gf.faces.faces) total += f.size();
        CHECK(total == 2 * r.edge_count());
        CHECK(gf.faces.faces.size() == r.cells().size() + 1);
        long euler = static_cast<long>(r.size()) - static_cast<long>(r.edge_count()) +
                     static_cast<long>(gf.faces.faces.size());
        CHECK(euler == 2);
    }
}

TEST_CASE("rotation from coordinates matches the lattice rotation") {
    GridRegion r = fixtures::l_shape();
    std::map<int, std::pair<double, double>> pos;
    for (std::size_t i = 0; i < r.size(); ++i) {
        Point p = r.point(static_cast<int>(i));
        pos[static_cast<int>(i)] = {p.x, p.y};
    }
    FaceSet a = trace_faces(r.graph(), rotation_from_positions(r.graph(), pos));
    FaceSet b = grid_faces(r).faces;
    CHECK(a.faces.size() == b.faces.size());
    CHECK(a.external_vertices() == b.external_vertices());
}

TEST_CASE("rotation systems reject parallel edges") {
    Graph g(2);
    g.add_edge(0, 1, 2);
    RotationSystem rot;
    rot.order[0] = {1};
    rot.order[1] = {0};
    rot.outer = Dart{0, 1};
    CHECK_THROWS_AS(trace_faces(g, rot), UnsupportedInput);
}

TEST_CASE("aztec diamond shape") {
    CHECK(aztec_diamond(1).size() == 4);
    CHECK(aztec_diamond(2).size() == 12);
    CHECK(aztec_diamond(3).size() == 24);
}
