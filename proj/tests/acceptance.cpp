// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <matchparity/billiards.hpp>
#include <matchparity/channels.hpp>
#include <matchparity/divisibility.hpp>
#include <matchparity/generators.hpp>
#include <matchparity/matching.hpp>
#include <matchparity/moves.hpp>
#include <matchparity/region.hpp>
#include <matchparity/routing.hpp>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace mpar;

namespace {

struct Failure {
    std::string what;
};

void expect(bool ok, const std::string& what) {
    if (!ok) throw Failure{what};
}

template <class... A>
std::string str(const A&... a) {
    std::ostringstream os;
    (os << ... << a);
    return os.str();
}

std::string dec(const BigInt& x) { return to_decimal(x); }

// Time limits in seconds; 0 means none.
constexpr double kRectParityLimit = 60;
constexpr double kRectDimLimit = 10;
constexpr double kBounceLimit = 120;
constexpr double kStepDiagonalLimit = 120;

constexpr std::size_t kBounceRegions = 300;
constexpr std::size_t kBounceMaxBoundary = 400;
constexpr std::size_t kMoveGraphs = 500;
constexpr std::size_t kMatrices = 200;

// 1 --------------------------------------------------------------------------------

void rectangle_parity_law() {
    for (int m = 1; m <= 8; ++m)
        for (int n = 1; n <= 8; ++n) {
            GridRegion r = GridRegion::rectangle(m, n);
            BigInt count = m * n <= 36 ? count_matchings(r.graph()) : count_matchings_kasteleyn(r);
            bool odd = std::gcd(m + 1, n + 1) == 1;
            Parity p = matching_parity(r.graph());
            expect((p == Parity::Odd) == odd, str("parity of R_", m, "x", n));
            expect((count % 2 != 0) == odd, str("count parity of R_", m, "x", n, " = ", dec(count)));
        }
}

// 2 --------------------------------------------------------------------------------

void rectangle_dimension_formula() {
    for (int m = 2; m <= 13; ++m)
        for (int n = 2; n <= 13; ++n) {
            if ((m - 1) * (n - 1) % 2) continue;
            std::size_t d = black_channel_dimension(GridRegion::rectangle(m - 1, n - 1).graph());
            std::size_t want = static_cast<std::size_t>((std::gcd(m, n) - 1) / 2);
            expect(d == want, str("dim C_B(R_", m - 1, "x", n - 1, ") = ", d, ", want ", want));
        }
}

// 3 --------------------------------------------------------------------------------

void pinned_constant() {
    GridRegion r = GridRegion::rectangle(4, 9);
    BigInt count = count_matchings(r.graph());
    expect(count == 6336, "count " + dec(count));
    expect(count_matchings_kasteleyn(r) == 6336, "kasteleyn count");
    expect(two_adic_valuation(count) == 6u, "valuation");
    std::size_t d = black_channel_dimension(r.graph());
    expect(d == 2, str("dim C_B = ", d));
    auto rep = divisibility_report(r);
    expect(rep.guaranteed_exponent == 2u && rep.status == GuaranteeStatus::Proven, "report");
    expect(count % 4 == 0, "4 does not divide the count");
}

// 4 --------------------------------------------------------------------------------

void bounce_on_random_disks() {
    Rng rng(20240601);
    std::size_t done = 0, biggest = 0;
    while (done < kBounceRegions) {
        int cells = 4 + static_cast<int>(rng() % 260);
        int side = 6 + static_cast<int>(rng() % 20);
        GridRegion r = random_lattice_disk(rng, cells, side);
        std::size_t boundary = classify_vertices(r).external.size();
        if (boundary > kBounceMaxBoundary) continue;
        biggest = std::max(biggest, boundary);
        std::size_t d = fast_path_basis(r).components;
        std::size_t want = black_channel_dimension(inner_region(r).graph()) + 1;
        expect(d == want, str("region ", done, ": d = ", d, ", dim C_B(G') + 1 = ", want, "\n",
                              r.to_text()));
        ++done;
    }
    expect(biggest >= 40, str("largest boundary only ", biggest));
}

// 5 --------------------------------------------------------------------------------

void l_shape_sweep() {
    GridRegion a = GridRegion::rectangle(6, 4);  // x 0..3, y 0..5
    std::vector<Point> pts = a.points();
    for (int x = 4; x <= 5; ++x)
        for (int y = 0; y <= 3; ++y) pts.push_back({x, y});
    GridRegion r(pts);
    FastPathResult res = fast_path_basis(r);
    expect(res.components == 2, str("components = ", res.components));
    ChannelBasis inner = black_channel_space(inner_region(r).graph());
    expect(inner.dimension() == 1, str("inner dim C_B = ", inner.dimension()));
}

// 6 --------------------------------------------------------------------------------

void aztec_diamonds() {
    for (int n = 1; n <= 5; ++n) {
        GridRegion az = aztec_diamond(n);
        std::size_t d = channel_space(az.graph()).dimension();
        expect(d == static_cast<std::size_t>(2 * n), str("n = ", n, ": dim C = ", d));
        BigInt want = BigInt(1) << static_cast<unsigned>(n * (n + 1) / 2);
        BigInt got = count_matchings_kasteleyn(az);
        expect(got == want, str("n = ", n, ": kasteleyn ", dec(got)));
        if (n <= 3) expect(count_matchings(az.graph()) == want, str("n = ", n, ": oracle"));
    }
}

// 7 --------------------------------------------------------------------------------

// Lattice signing with some edges zeroed; deletion keeps the signing valid.
BigInt signed_count_without(const GridRegion& r, const std::vector<std::pair<Point, Point>>& gone) {
    IntMatrix h = kasteleyn_sign_grid(r);
    std::map<int, std::size_t> row, col;
    for (std::size_t i = 0; i < r.size(); ++i) {
        int id = static_cast<int>(i);
        auto& idx = GridRegion::color(r.point(id)) == Color::White ? row : col;
        std::size_t k = idx.size();
        idx[id] = k;
    }
    for (auto [p, q] : gone) {
        int a = r.index(p), b = r.index(q);
        int w = row.count(a) ? a : b;
        int k = w == a ? b : a;
        h(row.at(w), col.at(k)) = 0;
    }
    return abs(determinant(h));
}

void step_diagonal() {
    for (int r = 1; r <= 3; ++r) {
        StepDiagonal sd = step_diagonal_channels(r);
        expect(sd.channels.size() == static_cast<std::size_t>(r), "channel count");
        for (unsigned mask = 0; mask < (1u << r); ++mask) {
            Graph g = sd.host.graph();
            std::vector<std::pair<Point, Point>> gone;
            for (int j = 0; j < r; ++j)
                if (mask >> j & 1) {
                    gone.push_back(sd.edges[static_cast<std::size_t>(j)]);
                    g.remove_edge(sd.host.index(gone.back().first),
                                  sd.host.index(gone.back().second));
                }
            int k = static_cast<int>(gone.size());
            BigInt m = signed_count_without(sd.host, gone);
            expect(m == count_matchings(g), str("r = ", r, " mask ", mask, ": signed count ", dec(m)));
            auto v = two_adic_valuation(m);
            expect(!v || static_cast<int>(*v) >= r - k,
                   str("r = ", r, " mask ", mask, ": v2(", dec(m), ") < ", r - k));
            int alive = 0;
            for (const auto& ch : sd.channels) {
                std::vector<int> ids;
                for (Point p : ch) ids.push_back(sd.host.index(p));
                std::sort(ids.begin(), ids.end());
                alive += is_channel(g, ids);
            }
            expect(alive == r - k, str("r = ", r, " mask ", mask, ": ", alive, " channels survive"));
        }
    }
}

// 8 --------------------------------------------------------------------------------

struct Dims {
    std::size_t all, black, white;
    bool operator==(const Dims&) const = default;
};

Dims dims(const Graph& g) {
    if (!g.colored()) return {channel_dimension(g), 0, 0};
    return {channel_dimension(g), black_channel_dimension(g), white_channel_dimension(g)};
}

bool inner_eulerian(const GridRegion& r) {
    for (Point p : classify_vertices(r).internal)
        if (r.degree(p) % 2) return false;
    return true;
}

void move_invariance() {
    Rng rng(77);
    std::size_t moves = 0;
    for (std::size_t t = 0; t < kMoveGraphs; ++t) {
        int n = 2 + static_cast<int>(rng() % 13);
        Graph g = random_multigraph(rng, n, static_cast<int>(rng() % (2 * n + 2)), t % 3 != 0);
        Dims before = dims(g);
        auto check = [&](const Graph& h, const std::string& what) {
            expect(dims(h) == before, str("graph ", t, ": ", what, " changed a dimension"));
            ++moves;
        };
        for (int v : g.vertices()) {
            if (g.degree(v) == 2 && g.neighbors(v).size() == 2) check(apply_vc(g, v), str("VC ", v));
            if (g.degree(v) == 1) check(apply_fv(g, v, g.neighbors(v).begin()->first), str("FV ", v));
        }
        for (const auto& e : g.edges())
            if (e.mult >= 2) check(apply_ed(g, e.u, e.v), str("ED ", e.u, "-", e.v));
    }
    expect(moves >= kMoveGraphs, str("only ", moves, " moves applied"));

    std::vector<GridRegion> planar;
    Rng disks(78);
    for (int t = 0; t < 120; ++t)
        planar.push_back(random_lattice_disk(disks, 2 + static_cast<int>(disks() % 40), 7));
    for (int n = 1; n <= 4; ++n) planar.push_back(aztec_diamond(n));
    for (int m = 1; m <= 6; ++m)
        for (int k = 1; k <= 6; ++k) planar.push_back(GridRegion::rectangle(m, k));
    for (std::size_t i = 0; i < planar.size(); ++i) {
        expect(inner_eulerian(planar[i]), str("instance ", i, " is not inner Eulerian"));
        Graph g = planar[i].graph();
        ReductionTrace t = reduce(g);
        expect(t.fully_reduced(), str("instance ", i, " did not fully reduce\n", planar[i].to_text()));
        expect(t.dimension() == channel_dimension(g),
               str("instance ", i, ": ", t.terminal.vertex_count(), " isolated, dim C ",
                   channel_dimension(g)));
    }
}

// 9 --------------------------------------------------------------------------------

std::size_t flips = 0;

void check_flips(const Graph& g, const std::string& tag) {
    ChannelBasis basis = channel_space(g);
    if (basis.dimension() == 0) return;
    auto ms = enumerate_matchings(g);
    if (ms.empty()) return;
    std::set<Matching> all(ms.begin(), ms.end());
    for (const auto& c : basis.basis) {
        for (int v0 : {c.vertices.front(), c.vertices.back()}) {
            PairingFunction pf = canonical_pairing(g, c);
            for (const auto& mu : ms) {
                CycleFlip a = cycle_flip(g, mu, c, v0, &pf);
                expect(a.flipped != mu, tag + ": fixed point");
                expect(all.count(a.flipped) != 0, tag + ": image outside the matching set");
                CycleFlip b = cycle_flip(g, a.flipped, c, v0, &pf);
                expect(b.flipped == mu, tag + ": not an involution");
                std::set<MatchedEdge> s1(a.cycle.begin(), a.cycle.end()),
                    s2(b.cycle.begin(), b.cycle.end());
                expect(s1 == s2, tag + ": cycle changed under the flip");
                ++flips;
            }
        }
    }
}

void cycle_flip_suite() {
    flips = 0;
    // Every simple bipartite graph with k + k vertices, k <= 4.
    for (int k = 1; k <= 4; ++k) {
        int pairs = k * k;
        for (unsigned long mask = 0; mask < (1ul << pairs); ++mask) {
            Graph g;
            for (int i = 0; i < k; ++i) g.add_vertex(Color::Black);
            for (int i = 0; i < k; ++i) g.add_vertex(Color::White);
            for (int p = 0; p < pairs; ++p)
                if (mask >> p & 1) g.add_edge(p / k, k + p % k);
            check_flips(g, str("K", k, " mask ", mask));
        }
    }
    Rng rng(99);
    for (int t = 0; t < 3000; ++t) check_flips(random_bipartite(rng, 5, 5, 0.45), str("random ", t));
    for (int t = 0; t < 1000; ++t) {
        int n = 2 * (1 + static_cast<int>(rng() % 5));
        check_flips(random_multigraph(rng, n, static_cast<int>(rng() % 16), true), str("multi ", t));
    }
    for (int n = 1; n <= 5; ++n) check_flips(GridRegion::rectangle(2, n).graph(), str("R_2x", n));
    expect(flips > 1000, str("only ", flips, " flips checked"));
}

// 10 -------------------------------------------------------------------------------

void parity_example() {
    GridRegion r = GridRegion::rectangle(3, 6);
    ParityRecord p = parity_theorem(r, {{1, 0}, {2, 0}, {3, 0}, {4, 0}});
    expect(p.m_G == 41, "m_G = " + dec(p.m_G));
    expect(p.m_Ge_prime == 11, "m_Ge' = " + dec(p.m_Ge_prime));
    expect(count_matchings(r.graph()) == 41, "oracle m_G");
    expect(count_matchings(p.ge.result.g) == 11, "oracle m_Ge'");
    expect(p.split_holds, "m_G != m_Ge + m_Gv");
    expect(p.congruence_holds, "congruence fails");
    expect((p.m_G - p.m_Ge_prime) % 2 == 0, "41 and 11 differ in parity");
}

// 11 -------------------------------------------------------------------------------

void two_nullity_divides() {
    Rng rng(2026);
    for (std::size_t t = 0; t < kMatrices; ++t) {
        std::size_t n = 1 + rng() % 10;
        IntMatrix a = random_int_matrix(rng, n, n, -9, 9);
        std::size_t k = two_nullity(a);
        BigInt det = abs(determinant(a));
        BigInt pow = BigInt(1) << static_cast<unsigned>(k);
        expect(det % pow == 0, str("matrix ", t, ": 2^", k, " does not divide ", dec(det)));
        SmithDecomposition snf = smith_normal_form(a);
        expect(snf.S * snf.D * snf.T == a && is_smith_form(snf.D), str("matrix ", t, ": bad SNF"));
        std::size_t even = 0;
        for (std::size_t i = 0; i < n; ++i) even += snf.D(i, i) % 2 == 0;
        expect(even == k, str("matrix ", t, ": nullity ", k, ", even diagonal entries ", even));
    }
}

// 12 -------------------------------------------------------------------------------

void nonplanar_caveat() {
    DivisibilityReport rep = divisibility_report(complete_bipartite(3, 3));
    expect(rep.dim_C_B == 2u, "dim C_B");
    expect(rep.exact_count && *rep.exact_count == 6, "count");
    expect(*rep.exact_count % 4 != 0, "4 divides 6");
    expect(rep.caveat.find("Kasteleyn signing") != std::string::npos, "caveat: " + rep.caveat);
    expect(rep.status == GuaranteeStatus::Invalid, str("status ", status_name(rep.status)));
}

}  // namespace

int main() {
    struct Criterion {
        const char* name;
        double limit;
        std::function<void()> run;
    };
    const std::vector<Criterion> all{
        {"rectangle parity law, m,n <= 8", kRectParityLimit, rectangle_parity_law},
        {"rectangle channel dimension formula", kRectDimLimit, rectangle_dimension_formula},
        {"R_4x9: 6336 matchings, v2 = 6, dim C_B = 2", 0, pinned_constant},
        {"sweep components = dim C_B(G') + 1 on random disks", kBounceLimit, bounce_on_random_disks},
        {"L-shaped sweep example", 0, l_shape_sweep},
        {"Aztec diamonds n <= 5", 0, aztec_diamonds},
        {"step diagonal edge deletions", kStepDiagonalLimit, step_diagonal},
        {"move invariance and full reduction", 0, move_invariance},
        {"cycle flip is a fixed-point-free involution", 0, cycle_flip_suite},
        {"parity split on the 3 x 6 block", 0, parity_example},
        {"2-nullity divides the determinant", 0, two_nullity_divides},
        {"K_3,3 caveat", 0, nonplanar_caveat},
    };
    int failed = 0;
    for (std::size_t i = 0; i < all.size(); ++i) {
        const auto& c = all[i];
        std::string why;
        auto t0 = std::chrono::steady_clock::now();
        try {
            c.run();
        } catch (const Failure& f) {
            why = f.what;
        } catch (const std::exception& e) {
            why = std::string("exception: ") + e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (why.empty() && c.limit > 0 && secs > c.limit)
            why = str("took ", secs, " s, limit ", c.limit, " s");
        std::printf("%s %2zu  %-52s %8.2fs%s%s\n", why.empty() ? "PASS" : "FAIL", i + 1, c.name,
                    secs, why.empty() ? "" : "\n      ", why.c_str());
        std::fflush(stdout);
        failed += !why.empty();
    }
    std::printf("%d of %zu criteria failed\n", failed, all.size());
    return failed ? 1 : 0;
}
