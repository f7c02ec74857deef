#include "verify.hpp"

#include <matchparity/billiards.hpp>
#include <matchparity/channels.hpp>
#include <matchparity/divisibility.hpp>
#include <matchparity/generators.hpp>
#include <matchparity/io.hpp>
#include <matchparity/matching.hpp>
#include <matchparity/moves.hpp>
#include <matchparity/routing.hpp>

#include <functional>
#include <iomanip>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace mpar::cli {

namespace {

using Check = std::function<std::optional<std::string>(Rng&)>;

struct Suite {
    const char* name;
    Check one;
};

std::string region_repro(const GridRegion& r) { return "region:\n" + to_region_file(r); }

BigInt kasteleyn_count(const GridRegion& r, bool flip) {
    if (!flip) return count_matchings_kasteleyn(r);
    std::size_t blacks = 0;
    for (Point p : r.points()) blacks += GridRegion::color(p) == Color::Black;
    if (2 * blacks != r.size()) return 0;
    IntMatrix h = kasteleyn_sign_grid(r);
    for (std::size_t i = 0; i < h.rows(); ++i)
        for (std::size_t j = 0; j < h.cols(); ++j)
            if (h(i, j) != 0) {
                h(i, j) = -h(i, j);
                return abs(determinant(h));
            }
    return abs(determinant(h));
}

GridRegion small_disk(Rng& rng) { return random_lattice_disk(rng, 1 + static_cast<int>(rng() % 20), 6); }

std::optional<std::string> oracle_vs_gf2(Rng& rng) {
    int n = 2 + static_cast<int>(rng() % 11);
    Graph g = random_multigraph(rng, n, static_cast<int>(rng() % 24), rng() % 2 == 0);
    bool even = count_matchings(g) % 2 == 0;
    std::size_t d = channel_dimension(g);
    if (even != (d > 0) || (g.colored() && !dimension_identity_check(g)))
        return "graph:\n" + to_json(g);
    return std::nullopt;
}

std::optional<std::string> twos(Rng& rng) {
    GridRegion r = small_disk(rng);
    BigInt m = count_matchings_kasteleyn(r);
    if (m == 0) return std::nullopt;
    std::size_t d = black_channel_dimension(r.graph());
    if (*two_adic_valuation(m) < d) return region_repro(r);
    return std::nullopt;
}

std::optional<std::string> billiards(Rng& rng) {
    GridRegion r = random_lattice_disk(rng, 2 + static_cast<int>(rng() % 60), 10);
    std::size_t d = fast_path_basis(r).components;
    std::size_t want = black_channel_dimension(inner_region(r).graph()) + 1;
    BilliardHost h = BilliardHost::from_region(r);
    if (d != want || path_basis(h).size() != d || !bounce_check(h)) return region_repro(r);
    return std::nullopt;
}

std::optional<std::string> moves(Rng& rng) {
    int n = 2 + static_cast<int>(rng() % 12);
    Graph g = random_multigraph(rng, n, static_cast<int>(rng() % (2 * n + 2)), true);
    auto dims = [](const Graph& h) {
        return std::tuple{channel_dimension(h), black_channel_dimension(h), white_channel_dimension(h)};
    };
    auto before = dims(g);
    for (int v : g.vertices()) {
        if (g.degree(v) == 2 && g.neighbors(v).size() == 2 && dims(apply_vc(g, v)) != before)
            return "VC at " + std::to_string(v) + " on graph:\n" + to_json(g);
        if (g.degree(v) == 1 && dims(apply_fv(g, v, g.neighbors(v).begin()->first)) != before)
            return "FV at " + std::to_string(v) + " on graph:\n" + to_json(g);
    }
    for (const auto& e : g.edges())
        if (e.mult >= 2 && dims(apply_ed(g, e.u, e.v)) != before)
            return "ED on graph:\n" + to_json(g);
    GridRegion r = small_disk(rng);
    ReductionTrace t = reduce(r.graph());
    if (!t.fully_reduced() || t.dimension() != channel_dimension(r.graph()))
        return "reduction of " + region_repro(r);
    return std::nullopt;
}

std::optional<std::string> smith(Rng& rng) {
    std::size_t n = 1 + rng() % 8;
    IntMatrix a = random_int_matrix(rng, n, n, -9, 9);
    std::size_t k = two_nullity(a);
    BigInt det = abs(determinant(a));
    if (k != two_nullity_snf(a) || det % (BigInt(1) << static_cast<unsigned>(k)) != 0) {
        std::string s = "matrix:\n";
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) s += " " + to_decimal(a(i, j));
            s += "\n";
        }
        return s;
    }
    return std::nullopt;
}

std::optional<std::string> flips(Rng& rng) {
    Graph g = random_bipartite(rng, 4, 4, 0.55);
    ChannelBasis cb = channel_space(g);
    if (cb.dimension() == 0) return std::nullopt;
    auto ms = enumerate_matchings(g);
    for (const auto& c : cb.basis)
        for (const auto& mu : ms) {
            CycleFlip a = cycle_flip(g, mu, c);
            if (a.flipped == mu || cycle_flip(g, a.flipped, c).flipped != mu)
                return "graph:\n" + to_json(g);
        }
    return std::nullopt;
}

}  // namespace

int run_verify(const VerifyOptions& opt, std::ostream& out) {
    const bool flip = opt.flip_kasteleyn_sign;
    const std::vector<Suite> suites{
        {"oracle-vs-gf2", oracle_vs_gf2},
        {"kasteleyn-vs-oracle",
         [flip](Rng& rng) -> std::optional<std::string> {
             GridRegion r = small_disk(rng);
             BigInt k = kasteleyn_count(r, flip), m = count_matchings(r.graph());
             if (k != m)
                 return "kasteleyn " + to_decimal(k) + " vs oracle " + to_decimal(m) + "\n" +
                        region_repro(r);
             return std::nullopt;
         }},
        {"twos-divides-count", twos},
        {"billiards-vs-gf2", billiards},
        {"moves-preserve-channels", moves},
        {"smith-vs-2-nullity", smith},
        {"cycle-flip-involution", flips},
    };

    int failed = 0;
    out << std::left << std::setw(26) << "suite" << std::setw(8) << "cases" << "result\n";
    for (std::size_t s = 0; s < suites.size(); ++s) {
        Rng rng(opt.seed * 1000003u + s);
        std::optional<std::string> bad;
        int ran = 0;
        for (; ran < opt.sizes && !bad; ++ran) {
            try {
                bad = suites[s].one(rng);
            } catch (const std::exception& e) {
                bad = std::string("exception: ") + e.what();
            }
            if (bad) *bad = "case " + std::to_string(ran) + ": " + *bad;
        }
        out << std::setw(26) << suites[s].name << std::setw(8) << ran << (bad ? "FAIL" : "pass")
            << "\n";
        if (bad) {
            ++failed;
            out << "  counterexample (seed " << opt.seed << ") " << *bad;
            if (bad->back() != '\n') out << "\n";
        }
    }
    out << (failed ? "verify: FAILED (" + std::to_string(failed) + " suites)\n" : "verify: ok\n");
    return failed;
}

}  // namespace mpar::cli
