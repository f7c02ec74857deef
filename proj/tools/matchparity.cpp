#include <CLI11.hpp>
#include <json.hpp>

#include <matchparity/billiards.hpp>
#include <matchparity/channels.hpp>
#include <matchparity/divisibility.hpp>
#include <matchparity/io.hpp>
#include <matchparity/matching.hpp>
#include <matchparity/moves.hpp>
#include <matchparity/region.hpp>

#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <variant>

#include "verify.hpp"

using namespace mpar;
using Json = nlohmann::ordered_json;

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kBadInput = 2;

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError(path + ": cannot open");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

bool looks_like_json(const std::string& text) {
    auto i = text.find_first_not_of(" \t\r\n");
    return i != std::string::npos && text[i] == '{';
}

using Input = std::variant<GridRegion, Graph>;

Input load(const std::string& path, bool allow_graph) {
    std::string text = slurp(path);
    if (text.find_first_not_of(" \t\r\n") == std::string::npos) throw InputError(path + ": empty input");
    try {
        if (looks_like_json(text)) {
            if (!allow_graph) throw InputError(path + ": expected a region file");
            return parse_graph_json(text);
        }
        return from_region_file(text);
    } catch (const ParseError& e) {
        throw InputError(path + ": " + e.what());
    }
}

Json embed(const std::string& js) { return Json::parse(js); }

std::string opt_dec(const std::optional<std::size_t>& v, const char* none) {
    return v ? std::to_string(*v) : none;
}

// analyze -------------------------------------------------------------------------

struct AnalyzeArgs {
    std::string file;
    bool json = false;
    std::optional<std::size_t> max_count;
};

int analyze(const AnalyzeArgs& a) {
    auto t0 = std::chrono::steady_clock::now();
    Input in = load(a.file, true);
    ReportOptions ro;
    ro.count_cap = a.max_count;

    const GridRegion* r = std::get_if<GridRegion>(&in);
    Graph g = r ? r->graph() : std::get<Graph>(in);
    DivisibilityReport rep = r ? divisibility_report(*r, ro) : divisibility_report(g, ro);
    Parity parity = matching_parity(g);

    std::optional<std::size_t> d;
    std::string d_note;
    if (r) {
        try {
            d = fast_path_basis(*r).components;
        } catch (const std::invalid_argument& e) {
            d_note = e.what();
        }
    } else {
        d_note = "not a grid region";
    }
    ReductionTrace trace = reduce(g);
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    if (a.json) {
        Json j;
        j["command"] = "analyze";
        j["input"] = {{"kind", r ? "region" : "graph"},
                      {"vertices", std::to_string(g.vertex_count())},
                      {"edges", std::to_string(g.edge_count())}};
        if (r) j["input"]["cells"] = std::to_string(r->cells().size());
        j["parity"] = parity_name(parity);
        j["report"] = embed(to_json(rep));
        j["billiards"] = d ? Json{{"components", std::to_string(*d)}}
                           : Json{{"components", nullptr}, {"reason", d_note}};
        j["reduction"] = {{"fully_reduced", trace.fully_reduced()},
                          {"isolated", std::to_string(trace.terminal.vertex_count())},
                          {"moves", std::to_string(trace.moves.size())}};
        std::cout << j.dump(2) << "\n";
        return kOk;
    }

    std::cout << (r ? "region: " : "graph: ") << g.vertex_count() << " vertices, "
              << g.edge_count() << " edges";
    if (r) std::cout << ", " << r->cells().size() << " cells";
    std::cout << "\nparity: " << parity_name(parity) << "\n";
    std::cout << "dim C: " << rep.dim_C;
    if (rep.dim_C_B) std::cout << "  dim C_B: " << *rep.dim_C_B << "  dim C_W: " << *rep.dim_C_W;
    std::cout << "\nguarantee: 2^" << opt_dec(rep.guaranteed_exponent, "inf") << " divides "
              << rep.target << " [" << status_name(rep.status) << "]\n";
    if (!rep.caveat.empty()) std::cout << "caveat: " << rep.caveat << "\n";
    if (rep.exact_count)
        std::cout << "count: " << to_decimal(*rep.exact_count) << " (" << rep.count_method
                  << ", v2 = " << opt_dec(rep.exact_valuation, "inf") << ")\n";
    else
        std::cout << "count: not computed (over the vertex cap of "
                  << a.max_count.value_or(vertex_cap()) << ")\n";
    if (d)
        std::cout << "billiard components: " << *d << "\n";
    else
        std::cout << "billiard components: n/a (" << d_note << ")\n";
    std::cout << "reduction: "
              << (trace.fully_reduced() ? "fully reduced, " + std::to_string(trace.terminal.vertex_count()) +
                                              " isolated"
                                        : std::string("irreducible"))
              << "\n";
    std::cout << "time: " << std::fixed << std::setprecision(3) << secs << " s\n";
    return kOk;
}

// billiards -----------------------------------------------------------------------

int billiards(const std::string& file, const std::string& svg, bool outer) {
    Input in = load(file, false);
    const GridRegion& r = std::get<GridRegion>(in);
    if (outer) {
        std::cout << "d (outer completion): " << fast_path_basis_outer(r) << "\n";
        return kOk;
    }
    FastPathResult fast = fast_path_basis(r);
    BilliardHost h = BilliardHost::from_region(r);
    BilliardPathBasis basis = path_basis(h);
    std::cout << "d: " << fast.components << "\n";
    for (std::size_t i = 0; i < basis.size(); ++i)
        std::cout << "path " << i << ": " << basis.paths[i].size() << " faces\n";
    if (!svg.empty()) {
        std::ofstream out(svg, std::ios::binary);
        if (!out) throw InputError(svg + ": cannot write");
        out << billiards_svg(r, basis, h);
        std::cout << "svg: " << svg << "\n";
    }
    return kOk;
}

// reduce --------------------------------------------------------------------------

int reduce_cmd(const std::string& file, bool show_trace, bool json) {
    Input in = load(file, true);
    Graph g = std::holds_alternative<GridRegion>(in) ? std::get<GridRegion>(in).graph()
                                                      : std::get<Graph>(in);
    ReductionTrace t = reduce(g);
    if (json) {
        std::cout << to_json(t) << "\n";
        return kOk;
    }
    if (show_trace)
        for (const auto& m : t.moves) {
            std::cout << move_name(m.kind);
            for (int x : m.args) std::cout << " " << g.name(x);
            std::cout << "\n";
        }
    if (t.fully_reduced())
        std::cout << "fully reduced: " << t.terminal.vertex_count() << " isolated (dim C = "
                  << *t.dimension() << ")\n";
    else
        std::cout << "irreducible: " << t.terminal.vertex_count() << " vertices, "
                  << t.terminal.edge_count() << " edges remain\n";
    return kOk;
}

// rect ----------------------------------------------------------------------------

int rect(int m, int n) {
    RectangleFormulas f = rectangle_formulas(m + 1, n + 1);
    std::cout << "R_" << m << "x" << n << "\n";
    std::cout << "parity: " << parity_name(f.parity) << "\n";
    if (static_cast<long>(m) * n % 2)
        std::cout << "count: 0 (odd number of vertices)\n";
    else
        std::cout << "guaranteed valuation: >= " << *f.guaranteed_valuation << "\n";
    if (f.path_basis_size) std::cout << "outer path basis size: " << *f.path_basis_size << "\n";
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Parity and 2-divisibility of perfect matching counts"};
    app.require_subcommand(1);

    AnalyzeArgs aa;
    std::size_t max_count = 0;
    auto* an = app.add_subcommand("analyze", "Channel dimensions, guarantee and exact count");
    an->add_option("file", aa.file, "Region file or graph JSON")->required();
    an->add_flag("--json", aa.json, "Emit one JSON document");
    auto* cap = an->add_option("--max-count-vertices", max_count, "Oracle vertex cap");

    std::string bfile, svg;
    bool outer = false;
    auto* bi = app.add_subcommand("billiards", "Billiard path basis of a lattice disk");
    bi->add_option("file", bfile, "Region file")->required();
    bi->add_option("--svg", svg, "Write the path basis as SVG");
    bi->add_flag("--outer", outer, "Count components of an outer completion");

    std::string rfile;
    bool trace = false, rjson = false;
    auto* re = app.add_subcommand("reduce", "Apply channel-preserving moves until stuck");
    re->add_option("file", rfile, "Region file or graph JSON")->required();
    re->add_flag("--trace", trace, "Print every move");
    re->add_flag("--json", rjson, "Emit the replayable trace as JSON");

    int m = 0, n = 0;
    auto* rc = app.add_subcommand("rect", "Closed forms for the m x n grid");
    rc->add_option("m", m)->required()->check(CLI::PositiveNumber);
    rc->add_option("n", n)->required()->check(CLI::PositiveNumber);

    cli::VerifyOptions vo;
    auto* ve = app.add_subcommand("verify", "Randomized cross-checks");
    ve->add_option("--seed", vo.seed, "RNG seed");
    ve->add_option("--sizes", vo.sizes, "Cases per suite")->check(CLI::NonNegativeNumber);
    ve->add_flag("--inject-kasteleyn-fault", vo.flip_kasteleyn_sign,
                 "Flip one sign of the lattice signing (self-test)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kBadInput;
    }
    if (*cap) aa.max_count = max_count;

    try {
        if (*an) return analyze(aa);
        if (*bi) return billiards(bfile, svg, outer);
        if (*re) return reduce_cmd(rfile, trace, rjson);
        if (*rc) return rect(m, n);
        if (*ve) return cli::run_verify(vo, std::cout) ? kFailed : kOk;
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kBadInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kFailed;
    }
    return kOk;
}
