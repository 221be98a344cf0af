#include "ccs/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

#include "ccs/hull3d.hpp"

namespace ccs::io {

namespace {

std::string num(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

double get_number(const json& j, const char* what) {
    if (!j.is_number()) throw InvalidInput(std::string("expected a number for ") + what);
    return j.get<double>();
}

IdealPoint ideal_from_json(const json& j) {
    if (j.is_string()) {
        const auto s = j.get<std::string>();
        if (s == "inf" || s == "infinity") return IdealPoint::from_vector(1.0, 0.0);
        throw InvalidInput("leaf end must be a number or \"inf\", got \"" + s + "\"");
    }
    return IdealPoint::from_real(get_number(j, "leaf end"));
}

json ideal_to_json(const IdealPoint& p) {
    if (std::fabs(p.q()) < 1e-15) return "inf";
    return p.p() / p.q();
}

std::string generator_name(int k) { return format_word(Word{k}); }

}  // namespace

std::string read_text(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InvalidInput("cannot open " + path.string());
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_text(const std::filesystem::path& path, const std::string& text) {
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InvalidInput("cannot write " + path.string());
    out << text;
}

json parse_json(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw InvalidInput(std::string("malformed JSON: ") + e.what());
    }
}

// ---------------------------------------------------------------------------

Representation representation_from_json(const json& j, double relator_tol) {
    if (!j.is_object() || !j.contains("genus") || !j.contains("generators"))
        throw InvalidInput("representation JSON needs \"genus\" and \"generators\"");
    const auto& jg = j.at("genus");
    if (!jg.is_number_integer()) throw InvalidInput("genus must be an integer");
    const int genus = jg.get<int>();
    const auto& gens = j.at("generators");
    if (!gens.is_array()) throw InvalidInput("generators must be an array");
    std::vector<Mat2> mats;
    for (const auto& m : gens) {
        if (!m.is_array() || m.size() != 2 || !m[0].is_array() || !m[1].is_array() || m[0].size() != 2 ||
            m[1].size() != 2)
            throw InvalidInput("each generator must be a 2x2 array");
        mats.push_back(Mat2::unimodular(get_number(m[0][0], "entry"), get_number(m[0][1], "entry"),
                                        get_number(m[1][0], "entry"), get_number(m[1][1], "entry")));
    }
    return Representation::create(genus, std::move(mats), relator_tol);
}

json to_json(const Mat2& m) { return json::array({json::array({m.a, m.b}), json::array({m.c, m.d})}); }

json to_json(const Representation& rep) {
    json j;
    j["schema"] = "ccs.representation/1";
    j["genus"] = rep.genus();
    j["generators"] = json::array();
    for (const auto& g : rep.generators()) j["generators"].push_back(to_json(g));
    return j;
}

WeightedMulticurve multicurve_from_json(const json& j, int genus) {
    if (!j.is_object() || !j.contains("curves") || !j.at("curves").is_array())
        throw InvalidInput("multicurve JSON needs a \"curves\" array");
    WeightedMulticurve mc;
    for (const auto& c : j.at("curves")) {
        if (!c.is_object() || !c.contains("word") || !c.contains("weight") || !c.at("word").is_string())
            throw InvalidInput("each curve needs \"word\" (string) and \"weight\"");
        mc.curves.push_back({parse_word(c.at("word").get<std::string>(), genus), get_number(c.at("weight"), "weight")});
    }
    mc.validate();
    return mc;
}

json to_json(const WeightedMulticurve& mc) {
    json j;
    j["schema"] = "ccs.multicurve/1";
    j["curves"] = json::array();
    for (const auto& c : mc.curves) j["curves"].push_back({{"word", format_word(c.word)}, {"weight", c.weight}});
    return j;
}

FiniteLaminationH2 lamination_from_json(const json& j) {
    if (!j.is_object() || !j.contains("leaves") || !j.at("leaves").is_array())
        throw InvalidInput("lamination JSON needs a \"leaves\" array");
    std::vector<WeightedLeaf> leaves;
    for (const auto& l : j.at("leaves")) {
        if (!l.is_object() || !l.contains("ends") || !l.at("ends").is_array() || l.at("ends").size() != 2 ||
            !l.contains("weight"))
            throw InvalidInput("each leaf needs \"ends\" [z1, z2] and \"weight\"");
        leaves.push_back({GeodesicH2(ideal_from_json(l.at("ends")[0]), ideal_from_json(l.at("ends")[1])),
                          get_number(l.at("weight"), "weight")});
    }
    HyperbolicPoint base;
    if (j.contains("base")) {
        const auto& b = j.at("base");
        if (!b.is_array() || b.size() != 2) throw InvalidInput("base must be [x, y]");
        const double y = get_number(b[1], "base");
        if (!(y > 0.0)) throw InvalidInput("base must lie in the upper half plane");
        base = HyperbolicPoint::from_upper_half_plane({get_number(b[0], "base"), y});
    }
    return FiniteLaminationH2(std::move(leaves), base);
}

json to_json(const FiniteLaminationH2& lam) {
    json j;
    j["schema"] = "ccs.lamination/1";
    const auto z = lam.base().to_upper_half_plane();
    j["base"] = json::array({z.real(), z.imag()});
    j["leaves"] = json::array();
    for (const auto& l : lam.leaves())
        j["leaves"].push_back({{"ends", json::array({ideal_to_json(l.geodesic.first()), ideal_to_json(l.geodesic.second())})},
                               {"weight", l.weight}});
    return j;
}

json to_json(const MinkowskiVector& v) { return json::array({v.x, v.y, v.t}); }

json to_json(const TranslationCocycle& coc, int genus) {
    json j;
    j["schema"] = "ccs.cocycle/1";
    j["genus"] = genus;
    json gens = json::object();
    for (std::size_t k = 0; k < coc.generators().size(); ++k)
        gens[generator_name(static_cast<int>(k) + 1)] = to_json(coc.generators()[k]);
    j["generators"] = gens;
    return j;
}

TranslationCocycle cocycle_from_json(const json& j) {
    if (!j.is_object() || !j.contains("genus") || !j.contains("generators") || !j.at("generators").is_object())
        throw InvalidInput("cocycle JSON needs \"genus\" and a \"generators\" object");
    const int genus = j.at("genus").get<int>();
    std::vector<MinkowskiVector> gens(2 * genus);
    for (int k = 1; k <= 2 * genus; ++k) {
        const auto name = generator_name(k);
        if (!j.at("generators").contains(name)) throw InvalidInput("cocycle JSON misses generator " + name);
        const auto& v = j.at("generators").at(name);
        if (!v.is_array() || v.size() != 3) throw InvalidInput("cocycle value must be [x, y, t]");
        gens[k - 1] = {get_number(v[0], "x"), get_number(v[1], "y"), get_number(v[2], "t")};
    }
    return TranslationCocycle(std::move(gens));
}

std::vector<HyperbolicPoint> points_from_json(const json& j) {
    const json& arr = j.is_object() && j.contains("points") ? j.at("points") : j;
    if (!arr.is_array()) throw InvalidInput("points JSON must be an array of [x, y]");
    std::vector<HyperbolicPoint> out;
    for (const auto& p : arr) {
        if (!p.is_array() || p.size() != 2) throw InvalidInput("each point must be [x, y]");
        const double y = get_number(p[1], "y");
        if (!(y > 0.0)) throw InvalidInput("points must lie in the upper half plane");
        out.push_back(HyperbolicPoint::from_upper_half_plane({get_number(p[0], "x"), y}));
    }
    return out;
}

// ---------------------------------------------------------------------------
// meshes and tables

std::vector<std::array<std::size_t, 3>> hyperbolic_delaunay(const std::vector<HyperbolicPoint>& pts) {
    std::vector<hull::Point3> p3;
    for (const auto& p : pts) p3.push_back({p.vec().x, p.vec().y, p.vec().t});
    const hull::Hull3 h = hull::convex_hull(p3, 1e-12);
    std::vector<std::array<std::size_t, 3>> out;
    const hull::Point3 origin{0.0, 0.0, 0.0};
    for (const auto& t : h.triangles)
        if (hull::orient3d(p3[t[0]], p3[t[1]], p3[t[2]], origin) > 0) out.push_back({t[0], t[2], t[1]});
    return out;
}

std::string patch_obj(const DevelopedSurfacePatch& patch) {
    std::vector<HyperbolicPoint> ps;
    for (const auto& s : patch.samples) ps.push_back(s.p);
    std::ostringstream os;
    os << "# developed surface, vertices f(p) = p + x(p) in (x, y, t)\n";
    for (const auto& s : patch.samples) os << "v " << num(s.f.x) << ' ' << num(s.f.y) << ' ' << num(s.f.t) << '\n';
    for (const auto& t : hyperbolic_delaunay(ps)) os << "f " << t[0] + 1 << ' ' << t[1] + 1 << ' ' << t[2] + 1 << '\n';
    return os.str();
}

std::string patch_csv(const DevelopedSurfacePatch& patch) {
    std::ostringstream os;
    os << "px,py,pt,xx,xy,xt,fx,fy,ft\n";
    for (const auto& s : patch.samples)
        os << num(s.p.vec().x) << ',' << num(s.p.vec().y) << ',' << num(s.p.vec().t) << ',' << num(s.x.x) << ','
           << num(s.x.y) << ',' << num(s.x.t) << ',' << num(s.f.x) << ',' << num(s.f.y) << ',' << num(s.f.t) << '\n';
    return os.str();
}

std::string circle_map_csv(const CircleMap& m) {
    std::ostringstream os;
    os << "theta_in,theta_out\n";
    for (const auto& [a, b] : m.samples) os << num(a) << ',' << num(b) << '\n';
    return os.str();
}

std::string graph_csv(const CircleGraph& g) {
    std::ostringstream os;
    os << "theta_left,theta_right\n";
    for (const auto& s : g.samples()) os << num(s.left) << ',' << num(s.right) << '\n';
    return os.str();
}

std::vector<std::pair<double, double>> pairs_from_csv(const std::string& text) {
    std::vector<std::pair<double, double>> out;
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        const auto comma = line.find(',');
        if (comma == std::string::npos) throw InvalidInput("CSV line " + std::to_string(lineno) + " has no comma");
        try {
            std::size_t used = 0;
            const double a = std::stod(line.substr(0, comma), &used);
            const double b = std::stod(line.substr(comma + 1));
            out.emplace_back(a, b);
        } catch (const std::logic_error&) {
            if (out.empty() && lineno == 1) continue;  // header
            throw InvalidInput("CSV line " + std::to_string(lineno) + " is not numeric");
        }
    }
    return out;
}

std::string hull_obj(const HullComplex& h) {
    std::ostringstream os;
    const auto& p = h.chart.plane;
    os << "# convex hull in the affine chart of the plane (" << num(p.e) << ' ' << num(p.f) << ' ' << num(p.g) << ' '
       << num(p.h) << ")\n";
    for (const auto& v : h.chart_points) os << "v " << num(v[0]) << ' ' << num(v[1]) << ' ' << num(v[2]) << '\n';
    if (h.flat) {
        os << "g flat\nf";
        for (auto v : h.faces.front().vertices) os << ' ' << v + 1;
        os << '\n';
        return os.str();
    }
    for (const bool future : {true, false}) {
        os << (future ? "g future\n" : "g past\n");
        for (std::size_t t = 0; t < h.triangles.size(); ++t) {
            if (h.faces[h.triangle_face[t]].future != future) continue;
            const auto& tri = h.triangles[t];
            os << "f " << tri[0] + 1 << ' ' << tri[1] + 1 << ' ' << tri[2] + 1 << '\n';
        }
    }
    return os.str();
}

json to_json(const R22Vector& v) { return json::array({v.a, v.b, v.c, v.d}); }
json to_json(const ProjectivePlane& p) { return json::array({p.e, p.f, p.g, p.h}); }

json hull_json(const HullComplex& h, const std::vector<BendingDatum>& bending) {
    json j;
    j["schema"] = "ccs.hull/1";
    j["flat"] = h.flat;
    j["chart_plane"] = to_json(h.chart.plane);
    j["vertex_count"] = h.vertices.size();
    j["faces"] = json::array();
    for (const auto& f : h.faces) {
        j["faces"].push_back({{"plane", to_json(f.plane)},
                              {"dual_point", to_json(dual_point(f.plane))},
                              {"class", to_string(f.kind)},
                              {"future", f.future},
                              {"vertices", f.vertices}});
    }
    j["bending"] = json::array();
    for (const auto& b : bending)
        j["bending"].push_back({{"vertices", json::array({b.a, b.b})},
                                {"start", to_json(b.start)},
                                {"end", to_json(b.end)},
                                {"faces", json::array({b.f0, b.f1})},
                                {"weight", b.weight}});
    return j;
}

}  // namespace ccs::io
