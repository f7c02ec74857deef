#include "matchparity/io.hpp"

#include <cmath>
#include <iomanip>
#include <map>
#include <sstream>

#include "json.hpp"

namespace mpar {

using Json = nlohmann::ordered_json;

namespace {

std::string dec(std::size_t v) { return std::to_string(v); }
std::string dec(int v) { return std::to_string(v); }

std::string hex(std::uint64_t h) {
    std::ostringstream os;
    os << std::hex << std::setw(16) << std::setfill('0') << h;
    return os.str();
}

Json ids(const std::vector<int>& vs) {
    Json a = Json::array();
    for (int v : vs) a.push_back(dec(v));
    return a;
}

Json graph_json(const Graph& g) {
    Json vs = Json::array(), colors = Json::object(), labels = Json::object(),
         es = Json::array();
    for (int v : g.vertices()) {
        vs.push_back(dec(v));
        if (auto c = g.color(v)) colors[dec(v)] = *c == Color::Black ? "B" : "W";
        if (!g.label(v).empty()) labels[dec(v)] = g.label(v);
    }
    for (const auto& e : g.edges()) es.push_back({dec(e.u), dec(e.v), dec(e.mult)});
    Json j;
    j["vertices"] = vs;
    if (g.colored()) j["colors"] = colors;
    if (!labels.empty()) j["labels"] = labels;
    j["edges"] = es;
    return j;
}

[[noreturn]] void fail(const std::string& what, std::string_view text, std::size_t byte) {
    int line = 1, col = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    throw ParseError(what, line, col);
}

Json parse(std::string_view text) {
    try {
        return Json::parse(text.begin(), text.end());
    } catch (const nlohmann::json::parse_error& e) {
        fail("malformed JSON", text, e.byte > 0 ? e.byte - 1 : 0);
    }
}

std::string key_of(const Json& j) {
    if (j.is_string()) return j.get<std::string>();
    if (j.is_number_integer()) return std::to_string(j.get<long long>());
    throw ParseError("vertex ids must be strings or integers", 0, 0);
}

int int_of(const Json& j, const char* what) {
    try {
        if (j.is_number_integer()) return j.get<int>();
        if (j.is_string()) {
            std::size_t used = 0;
            std::string s = j.get<std::string>();
            int v = std::stoi(s, &used);
            if (used == s.size()) return v;
        }
    } catch (const std::exception&) {
    }
    throw ParseError(std::string("expected an integer for ") + what, 0, 0);
}

}  // namespace

std::string to_json(const ChannelBasis& b) {
    Json j;
    j["host"] = hex(b.host);
    j["color_restriction"] = restriction_name(b.restriction);
    j["dimension"] = dec(b.dimension());
    Json a = Json::array();
    for (const auto& c : b.basis) a.push_back(ids(c.vertices));
    j["basis"] = a;
    return j.dump(2);
}

std::string to_json(const DivisibilityReport& r) {
    Json j;
    j["graph_id"] = r.graph_id;
    j["dim_C"] = dec(r.dim_C);
    j["dim_C_B"] = r.dim_C_B ? Json(dec(*r.dim_C_B)) : Json(nullptr);
    j["dim_C_W"] = r.dim_C_W ? Json(dec(*r.dim_C_W)) : Json(nullptr);
    j["guaranteed_exponent"] =
        r.guaranteed_exponent ? Json(dec(*r.guaranteed_exponent)) : Json("infinity");
    j["target"] = r.target;
    j["status"] = status_name(r.status);
    j["caveat"] = r.caveat;
    j["exact_count"] = r.exact_count ? Json(to_decimal(*r.exact_count)) : Json(nullptr);
    j["exact_valuation"] = r.exact_valuation ? Json(dec(*r.exact_valuation)) : Json(nullptr);
    j["count_method"] = r.count_method;
    return j.dump(2);
}

std::string to_json(const ReductionTrace& t) {
    Json j;
    Json moves = Json::array();
    for (const auto& m : t.moves) {
        Json mj;
        mj["kind"] = move_name(m.kind);
        mj["args"] = ids(m.args);
        mj["vertex_delta"] = dec(m.vertex_delta);
        mj["edge_delta"] = dec(m.edge_delta);
        moves.push_back(mj);
    }
    j["initial"] = graph_json(t.initial);
    j["moves"] = moves;
    j["terminal"] = graph_json(t.terminal);
    j["fully_reduced"] = t.fully_reduced();
    j["isolated"] = dec(t.terminal.vertex_count());
    auto d = t.dimension();
    j["dim_C"] = d ? Json(dec(*d)) : Json(nullptr);
    return j.dump(2);
}

std::string to_json(const Graph& g) { return graph_json(g).dump(2); }

Graph parse_graph_json(std::string_view text) {
    Json j = parse(text);
    if (!j.is_object() || !j.contains("vertices") || !j["vertices"].is_array())
        throw ParseError("graph JSON needs a \"vertices\" array", 1, 1);
    Graph g;
    std::map<std::string, int> id;
    const Json* colors = j.contains("colors") ? &j["colors"] : nullptr;
    if (colors && !colors->is_object()) throw ParseError("\"colors\" must be an object", 1, 1);
    for (const auto& v : j["vertices"]) {
        std::string k = key_of(v);
        if (id.count(k)) throw ParseError("duplicate vertex id " + k, 1, 1);
        std::optional<Color> c;
        if (colors) {
            if (!colors->contains(k)) throw ParseError("vertex " + k + " has no color", 1, 1);
            const Json& cj = (*colors)[k];
            std::string s = cj.is_string() ? cj.get<std::string>() : "";
            if (s == "B") c = Color::Black;
            else if (s == "W") c = Color::White;
            else throw ParseError("color of " + k + " must be \"B\" or \"W\"", 1, 1);
        }
        id[k] = g.add_vertex(c, k);
    }
    if (j.contains("edges")) {
        if (!j["edges"].is_array()) throw ParseError("\"edges\" must be an array", 1, 1);
        for (const auto& e : j["edges"]) {
            if (!e.is_array() || e.size() < 2 || e.size() > 3)
                throw ParseError("edge must be [id, id] or [id, id, multiplicity]", 1, 1);
            std::string a = key_of(e[0]), b = key_of(e[1]);
            if (!id.count(a) || !id.count(b))
                throw ParseError("edge refers to unknown vertex " + (id.count(a) ? b : a), 1, 1);
            int mult = e.size() == 3 ? int_of(e[2], "multiplicity") : 1;
            if (mult < 1) throw ParseError("multiplicity must be positive", 1, 1);
            try {
                g.add_edge(id[a], id[b], mult);
            } catch (const std::invalid_argument& ex) {
                throw ParseError(ex.what(), 1, 1);
            }
        }
    }
    return g;
}

std::vector<Move> parse_trace_json(std::string_view text) {
    Json j = parse(text);
    const Json& ms = j.is_object() && j.contains("moves") ? j["moves"] : j;
    if (!ms.is_array()) throw ParseError("trace JSON needs a \"moves\" array", 1, 1);
    std::vector<Move> out;
    for (const auto& mj : ms) {
        if (!mj.is_object() || !mj.contains("kind") || !mj.contains("args"))
            throw ParseError("move needs \"kind\" and \"args\"", 1, 1);
        Move m;
        std::string k = mj["kind"].is_string() ? mj["kind"].get<std::string>() : "";
        if (k == "VC") m.kind = MoveKind::VC;
        else if (k == "ED") m.kind = MoveKind::ED;
        else if (k == "FV") m.kind = MoveKind::FV;
        else if (k == "IsolatedRemoval") m.kind = MoveKind::IsolatedRemoval;
        else if (k == "DiagonalContraction") m.kind = MoveKind::DiagonalContraction;
        else throw ParseError("unknown move kind " + k, 1, 1);
        for (const auto& a : mj["args"]) m.args.push_back(int_of(a, "move argument"));
        if (mj.contains("vertex_delta")) m.vertex_delta = int_of(mj["vertex_delta"], "delta");
        if (mj.contains("edge_delta")) m.edge_delta = int_of(mj["edge_delta"], "delta");
        out.push_back(std::move(m));
    }
    return out;
}

std::string billiards_svg(const GridRegion& r, const BilliardPathBasis& basis,
                          const BilliardHost& host) {
    static const char* palette[] = {"#d62728", "#1f77b4", "#2ca02c", "#9467bd",
                                    "#ff7f0e", "#8c564b", "#e377c2", "#17becf"};
    if (r.size() == 0) throw PreconditionError("empty region");
    int x0 = r.point(0).x, x1 = x0, y0 = r.point(0).y, y1 = y0;
    for (Point p : r.points()) {
        x0 = std::min(x0, p.x);
        x1 = std::max(x1, p.x);
        y0 = std::min(y0, p.y);
        y1 = std::max(y1, p.y);
    }
    const double s = 40, pad = 20;
    auto X = [&](double x) { return pad + (x - x0) * s; };
    auto Y = [&](double y) { return pad + (y1 - y) * s; };
    std::ostringstream os;
    os << std::fixed << std::setprecision(1);
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << 2 * pad + (x1 - x0) * s
       << "\" height=\"" << 2 * pad + (y1 - y0) * s << "\">\n";
    os << "<g stroke=\"#888\" stroke-width=\"1.5\">\n";
    for (auto [a, b] : r.edges()) {
        Point p = r.point(a), q = r.point(b);
        os << "<line x1=\"" << X(p.x) << "\" y1=\"" << Y(p.y) << "\" x2=\"" << X(q.x)
           << "\" y2=\"" << Y(q.y) << "\"/>\n";
    }
    os << "</g>\n";

    std::map<int, std::size_t> path_of;
    for (std::size_t i = 0; i < basis.paths.size(); ++i)
        for (int f : basis.paths[i]) path_of[f] = i;
    auto center = [&](int f) -> std::optional<std::pair<double, double>> {
        if (f < 0 || static_cast<std::size_t>(f) >= host.cell.size() ||
            !host.cell[static_cast<std::size_t>(f)])
            return std::nullopt;
        Point ll = *host.cell[static_cast<std::size_t>(f)];
        return std::pair{ll.x + 0.5, ll.y + 0.5};
    };
    for (std::size_t i = 0; i < basis.paths.size(); ++i) {
        const char* col = palette[i % (sizeof palette / sizeof *palette)];
        os << "<g stroke=\"" << col << "\" stroke-width=\"3\" fill=\"" << col << "\">\n";
        for (auto [a, b] : basis.links) {
            if (path_of.at(a) != i) continue;
            auto ca = center(a), cb = center(b);
            if (!ca || !cb) continue;
            os << "<polyline fill=\"none\" points=\"" << X(ca->first) << "," << Y(ca->second);
            double dx = cb->first - ca->first, dy = cb->second - ca->second;
            if (std::abs(dx) + std::abs(dy) == 1) {
                // Side-adjacent faces: bounce off the shared black corner.
                double mx = (ca->first + cb->first) / 2, my = (ca->second + cb->second) / 2;
                Point p1{static_cast<int>(std::floor(mx + (dy != 0 ? 0.5 : 0))),
                         static_cast<int>(std::floor(my + (dx != 0 ? 0.5 : 0)))};
                Point p2{static_cast<int>(std::floor(mx - (dy != 0 ? 0.5 : 0))),
                         static_cast<int>(std::floor(my - (dx != 0 ? 0.5 : 0)))};
                Point b = GridRegion::color(p1) == Color::Black ? p1 : p2;
                os << " " << X(b.x) << "," << Y(b.y);
            }
            os << " " << X(cb->first) << "," << Y(cb->second) << "\"/>\n";
        }
        for (int f : basis.paths[i])
            if (auto c = center(f))
                os << "<circle cx=\"" << X(c->first) << "\" cy=\"" << Y(c->second)
                   << "\" r=\"2.5\"/>\n";
        os << "</g>\n";
    }
    os << "<g stroke=\"black\" stroke-width=\"1.5\">\n";
    for (Point p : r.points())
        os << "<circle cx=\"" << X(p.x) << "\" cy=\"" << Y(p.y) << "\" r=\"5\" fill=\""
           << (GridRegion::color(p) == Color::Black ? "black" : "white") << "\"/>\n";
    os << "</g>\n</svg>\n";
    return os.str();
}

}  // namespace mpar
