#include <doctest.h>

#include <matchparity/billiards.hpp>
#include <matchparity/channels.hpp>
#include <matchparity/generators.hpp>

#include <numeric>

#include "fixtures.hpp"

using namespace mpar;

namespace {

std::size_t inner_dim(const GridRegion& r) {
    return black_channel_dimension(inner_region(r).graph());
}

}  // namespace

TEST_CASE("fast path basis on named regions") {
    CHECK(fast_path_basis(fixtures::notched_block()).components == 2);
    CHECK(fast_path_basis(GridRegion::rectangle(5, 4)).components == 1);
    CHECK(fast_path_basis(GridRegion::rectangle(5, 8)).components == 1);
    auto l = fast_path_basis(fixtures::l_shape());
    CHECK(l.components == 2);
    std::size_t ext = 0;
    for (const auto& c : l.classes) ext += c.size();
    CHECK(ext == 10);
    CHECK(inner_dim(fixtures::l_shape()) == 1);
}

TEST_CASE("fast path basis matches the channel count") {
    for (int m = 2; m <= 9; ++m)
        for (int n = 2; n <= 9; ++n) {
            GridRegion r = GridRegion::rectangle(m, n);
            std::size_t d = fast_path_basis(r).components;
            CHECK(d == inner_dim(r) + 1);
            CHECK(fast_path_basis_outer(r) == black_channel_dimension(r.graph()) + 1);
        }
}

TEST_CASE("face-level path basis agrees with the sweep") {
    Rng rng(21);
    for (int t = 0; t < 40; ++t) {
        GridRegion r = random_lattice_disk(rng, 4 + static_cast<int>(rng() % 30));
        BilliardHost h = BilliardHost::from_region(r);
        CHECK(path_basis(h).size() == fast_path_basis(r).components);
        CHECK(bounce_check(h));
    }
}

TEST_CASE("sweep preconditions name the defect") {
    GridRegion holed = fixtures::box(0, 3, 0, 3);
    std::vector<Point> pts;
    for (Point p : holed.points())
        if (!(p.x >= 1 && p.x <= 2 && p.y >= 1 && p.y <= 2)) pts.push_back(p);
    CHECK_THROWS_AS(fast_path_basis(GridRegion(pts)), PreconditionError);
    GridRegion pinch = fixtures::merge(fixtures::box(0, 1, 0, 1), fixtures::box(1, 2, 1, 2));
    CHECK_THROWS_WITH_AS(fast_path_basis(pinch), doctest::Contains("pinched"), PreconditionError);
    CHECK_THROWS_AS(fast_path_basis(from_region_file("###")), PreconditionError);
}

TEST_CASE("nests and channels") {
    GridRegion r = GridRegion::rectangle(6, 6);
    BilliardHost h = BilliardHost::from_region(r);
    auto basis = path_basis(h);
    CHECK(basis.size() == 3);
    Graph inner = h.inner();
    std::size_t nonempty = 0;
    for (const auto& p : basis.paths) {
        CHECK(validate_nest(h, p));
        Channel c = nest_to_channel(h, p);
        CHECK(is_channel(inner, c.vertices));
        nonempty += !c.empty();
    }
    CHECK(nonempty >= 2);
    CHECK_FALSE(validate_nest(h, {basis.paths[0].front()}));
}

TEST_CASE("outer completion of the dumbbell") {
    auto d = fixtures::dumbbell();
    RotationSystem rot = rotation_from_positions(d.g, d.pos);
    FaceSet fs = trace_faces(d.g, rot);
    CHECK(fs.faces[static_cast<std::size_t>(fs.external)].size() == 14);
    Completion c = outer_completion(d.g, rot);
    BilliardHost h = BilliardHost::from_graph(c.g, c.rot);
    CHECK(h.inner() == d.g);
    CHECK(is_inner_semi_eulerian(h));
    CHECK_THROWS(bounce_check(h));
}

TEST_CASE("outer completion edge cases") {
    Graph one;
    one.add_vertex(Color::Black);
    RotationSystem r1;
    r1.order[0] = {};
    Completion c1 = outer_completion(one, r1);
    CHECK(c1.cycle.size() == 4);

    Graph k2 = path_graph(2);
    std::map<int, std::pair<double, double>> pos{{0, {0, 0}}, {1, {1, 0}}};
    Completion c2 = outer_completion(k2, rotation_from_positions(k2, pos));
    BilliardHost h2 = BilliardHost::from_graph(c2.g, c2.rot);
    CHECK(h2.inner() == k2);
    CHECK(bounce_check(h2));
}

TEST_CASE("rectangle closed forms") {
    for (int m = 1; m <= 12; ++m)
        for (int n = 1; n <= 12; ++n) {
            auto f = rectangle_formulas(m, n);
            CHECK((f.parity == Parity::Odd) == (std::gcd(m, n) == 1));
            if (f.path_basis_size) {
                BilliardHost h = BilliardHost::from_region(GridRegion::rectangle(m + 1, n + 1));
                CHECK(path_basis(h).size() == static_cast<std::size_t>(*f.path_basis_size));
            }
            if (f.black_channel_dim)
                CHECK(black_channel_dimension(GridRegion::rectangle(m - 1, n - 1).graph()) ==
                      static_cast<std::size_t>(*f.black_channel_dim));
        }
}
