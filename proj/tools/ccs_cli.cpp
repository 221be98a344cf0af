// Command-line front end: euler, flat build/check, quake, ads hull/between.
// Reports are JSON on stdout (and report.json under --out); the exit status is
// 0 when every check passes, 1 when a check fails and 2 on invalid input.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <boost/crc.hpp>

#include "CLI11.hpp"
#include "ccs/ads.hpp"
#include "ccs/earthquake.hpp"
#include "ccs/flat.hpp"
#include "ccs/io.hpp"
#include "ccs/kernels.hpp"

namespace fs = std::filesystem;
using namespace ccs;
using io::json;

namespace {

struct RunConfig {
    double tol = 1e-8;
    int ball = 3;
    int density = 400;
    std::uint64_t seed = 1;
    std::string out;
    bool timings = false;
};

constexpr int kBallCap = 8;

class Report {
public:
    Report(std::string command, const std::vector<std::string>& args) {
        j_["schema"] = "ccs.report/1";
        j_["command"] = std::move(command);
        j_["args"] = args;
        j_["inputs"] = json::object();
        j_["values"] = json::object();
        j_["checks"] = json::array();
        j_["artifacts"] = json::array();
    }

    std::string input(const std::string& name, const std::string& path) {
        std::string text = io::read_text(path);
        boost::crc_32_type crc;
        crc.process_bytes(text.data(), text.size());
        char buf[16];
        std::snprintf(buf, sizeof buf, "%08x", crc.checksum());
        j_["inputs"][name] = {{"path", path}, {"crc32", buf}};
        return text;
    }

    json& values() { return j_["values"]; }

    void check(const std::string& name, bool pass, double residual, const std::string& relation, double bound) {
        j_["checks"].push_back(
            {{"name", name}, {"pass", pass}, {"residual", residual}, {"relation", relation}, {"bound", bound}});
        ok_ = ok_ && pass;
    }
    void at_most(const std::string& name, double residual, double bound) {
        check(name, residual <= bound, residual, "<=", bound);
    }
    void at_least(const std::string& name, double residual, double bound) {
        check(name, residual >= bound, residual, ">=", bound);
    }

    void artifact(const RunConfig& cfg, const std::string& file, const std::string& text) {
        if (cfg.out.empty()) return;
        io::write_text(fs::path(cfg.out) / file, text);
        j_["artifacts"].push_back(file);
    }

    int finish(const RunConfig& cfg, double seconds) {
        j_["pass"] = ok_;
        if (cfg.timings) j_["seconds"] = seconds;
        const std::string text = j_.dump(2) + "\n";
        if (!cfg.out.empty()) io::write_text(fs::path(cfg.out) / "report.json", text);
        std::cout << text;
        return ok_ ? 0 : 1;
    }

private:
    json j_;
    bool ok_ = true;
};

void validate(const RunConfig& cfg) {
    if (!(cfg.tol > 0.0)) throw InvalidInput("--tol must be positive");
    if (cfg.ball < 1 || cfg.ball > kBallCap) throw InvalidInput("--ball must lie in [1, " + std::to_string(kBallCap) + "]");
    if (cfg.density < 4) throw InvalidInput("--density must be at least 4");
}

Representation load_rep(Report& r, const std::string& name, const std::string& path) {
    return io::representation_from_json(io::parse_json(r.input(name, path)));
}

double circle_gap(double a, double b) {
    double d = std::fabs(a - b);
    d -= std::floor(d);
    return std::min(d, 1.0 - d);
}

// ---------------------------------------------------------------------------

int cmd_euler(const RunConfig& cfg, const std::string& rep_path, Report& r) {
    const Representation rep = load_rep(r, "representation", rep_path);
    const double real = euler_class_real(rep);
    const int e = euler_class(rep, 1e-6);
    const int bound = 2 * rep.genus() - 2;
    r.values()["genus"] = rep.genus();
    r.values()["euler_class"] = e;
    r.values()["euler_class_real"] = real;
    r.values()["relator_residual"] = rep.relator_residual();
    r.values()["milnor_wood"] = std::abs(e) < bound ? "strict" : (std::abs(e) == bound ? "maximal" : "violated");
    r.at_most("integrality", std::fabs(real - e), 1e-6);
    r.at_most("milnor_wood", std::abs(e), bound);
    r.at_most("relator", rep.relator_residual(), std::max(cfg.tol, 1e-8));
    return 0;
}

double ball_cocycle_residual(const Representation& rep, const TranslationCocycle& coc, int radius) {
    const GroupBall ball = enumerate_ball(rep, radius);
    double worst = 0.0;
    for (const auto& a : ball.elements)
        for (const auto& b : ball.elements) worst = std::max(worst, cocycle_residual(rep, coc, a.word, b.word));
    return worst;
}

int cmd_flat_build(const RunConfig& cfg, const std::string& rep_path, const std::string& mc_path, double radius,
                   Report& r) {
    const Representation rep = load_rep(r, "representation", rep_path);
    const WeightedMulticurve mc = io::multicurve_from_json(io::parse_json(r.input("multicurve", mc_path)), rep.genus());
    if (!disjointness_check(rep, mc, cfg.ball)) throw InvalidInput("multicurve lifts cross: not a lamination");

    const TranslationCocycle coc = cocycle_from_lamination(rep, mc);
    DevelopOptions opt;
    opt.radius = radius;
    opt.density = cfg.density;
    opt.seed = cfg.seed;
    const DevelopedSurfacePatch patch = develop_surface(rep, mc, opt);
    const InjectivityReport inj = injectivity_gap(patch);
    const double slope = graph_slope_check(patch);
    const auto planes = support_planes(patch, 64);

    double worst_x = 0.0;  // most timelike x(p): max of -<x,x> over nonzero x
    for (const auto& s : patch.samples)
        if (sup_norm(s.x) > cfg.tol) worst_x = std::max(worst_x, -minkowski_inner(s.x, s.x) / std::max(1.0, sup_norm(s.x) * sup_norm(s.x)));
    double min_slack = std::numeric_limits<double>::infinity();
    for (const auto& pl : planes)
        for (const auto& s : patch.samples) min_slack = std::min(min_slack, pl.slack(s.f));

    r.values()["cocycle"] = io::to_json(coc, rep.genus())["generators"];
    r.values()["samples"] = patch.samples.size();
    r.values()["leaves"] = patch.leaves ? patch.leaves->leaves().size() : 0;
    r.values()["injectivity_pairs"] = inj.pairs;
    r.values()["injectivity_crossing_pairs"] = inj.crossing_pairs;
    r.values()["min_injectivity_gap"] = inj.min_gap;
    r.values()["graph_slope"] = slope;
    r.values()["min_support_slack"] = min_slack;
    r.values()["simd"] = std::string(kernels::isa_name(kernels::active_isa()));

    r.at_most("relator", relator_residual(rep, coc), cfg.tol);
    r.at_most("cocycle_identity_ball", ball_cocycle_residual(rep, coc, std::min(cfg.ball, 3)), cfg.tol);
    r.at_least("injectivity_gap", inj.min_gap, -cfg.tol);
    r.check("graph_slope", slope < 1.0, slope, "<", 1.0);
    r.at_most("x_spacelike_or_zero", worst_x, cfg.tol);
    r.at_least("support_planes", min_slack, -cfg.tol);

    r.artifact(cfg, "cocycle.json", io::to_json(coc, rep.genus()).dump(2) + "\n");
    r.artifact(cfg, "surface.obj", io::patch_obj(patch));
    r.artifact(cfg, "surface.csv", io::patch_csv(patch));
    json pj = json::array();
    for (const auto& pl : planes)
        pj.push_back({{"normal", io::to_json(pl.normal)}, {"offset", pl.offset}, {"ideal", io::to_json(pl.ideal_direction)}});
    r.artifact(cfg, "support_planes.json", json{{"schema", "ccs.support_planes/1"}, {"planes", pj}}.dump(2) + "\n");
    return 0;
}

int cmd_flat_check(const RunConfig& cfg, const std::string& rep_path, const std::string& coc_path,
                   const std::string& mc_path, Report& r) {
    const Representation rep = load_rep(r, "representation", rep_path);
    const TranslationCocycle coc = io::cocycle_from_json(io::parse_json(r.input("cocycle", coc_path)));
    if (static_cast<int>(coc.generators().size()) != 2 * rep.genus())
        throw InvalidInput("cocycle genus does not match the representation");
    r.at_most("relator", relator_residual(rep, coc), cfg.tol);
    r.at_most("cocycle_identity_ball", ball_cocycle_residual(rep, coc, std::min(cfg.ball, 3)), cfg.tol);
    if (!mc_path.empty()) {
        const WeightedMulticurve mc =
            io::multicurve_from_json(io::parse_json(r.input("multicurve", mc_path)), rep.genus());
        const TranslationCocycle ref = cocycle_from_lamination(rep, mc);
        const double diff = coc.max_abs_diff(ref);
        r.values()["difference_from_lamination"] = diff;
        r.at_most("matches_lamination", diff, cfg.tol);
    }
    return 0;
}

int cmd_quake(const RunConfig& cfg, const std::string& lam_path, double scale, const std::string& points_path,
              const std::string& rep_path, const std::string& side, Report& r) {
    const json lj = io::parse_json(r.input("lamination", lam_path));
    const QuakeSide qs = side == "right" ? QuakeSide::Right : QuakeSide::Left;
    std::vector<HyperbolicPoint> pts;
    if (!points_path.empty()) pts = io::points_from_json(io::parse_json(r.input("points", points_path)));

    FiniteLaminationH2 lam;
    if (lj.contains("curves")) {
        if (rep_path.empty()) throw InvalidInput("a multicurve lamination needs --rep");
        const Representation rep = load_rep(r, "representation", rep_path);
        const WeightedMulticurve mc = io::multicurve_from_json(lj, rep.genus());
        double window = 2.0;
        for (const auto& p : pts) window = std::max(window, h2_distance(HyperbolicPoint::apex(), p, 1e-6) + 0.5);
        const LeafSet leaves = LeafSet::build(rep, mc, window);
        lam = FiniteLaminationH2::from_leaf_set(leaves, default_basepoint(leaves));
    } else {
        lam = io::lamination_from_json(lj);
    }
    const EarthquakeMap quake(lam, qs, scale);

    std::string images = "x,y,image_x,image_y,status\n";
    std::size_t flagged = 0;
    for (const auto& p : pts) {
        const auto z = p.to_upper_half_plane();
        char buf[160];
        try {
            const auto w = quake.apply(p).to_upper_half_plane();
            std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g,ok\n", z.real(), z.imag(), w.real(), w.imag());
        } catch (const LeafAmbiguity&) {
            ++flagged;
            std::snprintf(buf, sizeof buf, "%.17g,%.17g,,,on_leaf\n", z.real(), z.imag());
        }
        images += buf;
    }
    const CircleMap boundary = boundary_value(quake, cfg.density);
    r.values()["leaves"] = lam.leaves().size();
    r.values()["points"] = pts.size();
    r.values()["points_on_leaves"] = flagged;
    r.values()["boundary_samples"] = boundary.samples.size();
    const bool mono = boundary.cyclically_monotone(1e-12);
    r.values()["monotone"] = mono;
    r.at_most("boundary_monotone", mono ? 0.0 : 1.0, 0.0);
    r.artifact(cfg, "images.csv", images);
    r.artifact(cfg, "boundary.csv", io::circle_map_csv(boundary));
    return 0;
}

void hull_pipeline(const RunConfig& cfg, const CircleGraph& g, Report& r, const std::vector<std::pair<double, double>>& held_out) {
    const HullComplex h = convex_hull(g);
    std::size_t lorentzian = 0;
    for (const auto& f : h.faces) lorentzian += f.kind == PlaneClass::Lorentzian;
    r.values()["samples"] = g.size();
    r.values()["flat"] = h.flat;
    if (h.flat) r.values()["notice"] = "flat hull: the graph is a plane section, the earthquake is a Moebius map";
    r.values()["faces"] = h.faces.size();
    r.values()["future_faces"] = h.future_faces().size();
    r.at_most("lorentzian_faces", static_cast<double>(lorentzian), 0.0);
    r.at_most("vertices_on_quadric", h.quadric_residual(), 1e-9);
    r.at_most("convexity", h.convexity_violation(), 1e-9);

    const auto bending = bending_data(h);
    const ExtractedEarthquake ex = extract_left_earthquake(h);
    json bj = json::array();
    for (const auto& b : bending) bj.push_back(b.weight);
    r.values()["bending_weights"] = bj;
    json sj = json::array();
    for (const auto& s : ex.shears) sj.push_back(s.shear);
    r.values()["shears"] = sj;
    r.values()["total_shear"] = ex.total_shear();

    double spacing = 0.0;
    const auto& s = g.samples();
    for (std::size_t i = 0; i < s.size(); ++i)
        spacing = std::max(spacing, (i + 1 < s.size() ? s[i + 1].left : s[0].left + 1.0) - s[i].left);
    double err = 0.0;
    for (const auto& [a, b] : g.pairs()) err = std::max(err, circle_gap(ex.boundary(a), b));
    for (const auto& [a, b] : held_out) err = std::max(err, circle_gap(ex.boundary(a), b));
    r.values()["sample_spacing"] = spacing;
    r.values()["held_out"] = held_out.size();
    r.at_most("roundtrip_boundary", err, 10.0 * spacing);

    r.artifact(cfg, "hull.obj", io::hull_obj(h));
    r.artifact(cfg, "hull.json", io::hull_json(h, bending).dump(2) + "\n");
    r.artifact(cfg, "boundary.csv", io::circle_map_csv(ex.boundary));
    r.artifact(cfg, "graph.csv", io::graph_csv(g));
}

int cmd_ads_hull(const RunConfig& cfg, const std::string& graph_path, std::optional<double> shear, Report& r) {
    CircleGraph g;
    if (shear) {
        g = shear_graph(*shear, cfg.density);
        r.values()["shear_parameter"] = *shear;
    } else if (!graph_path.empty()) {
        g = CircleGraph::from_pairs(io::pairs_from_csv(r.input("graph", graph_path)));
    } else {
        throw InvalidInput("ads hull needs a graph CSV or --shear");
    }
    hull_pipeline(cfg, g, r, {});
    return 0;
}

int cmd_ads_between(const RunConfig& cfg, const std::string& left_path, const std::string& right_path,
                    std::size_t max_samples, Report& r) {
    const Representation left = load_rep(r, "left", left_path);
    const Representation right = load_rep(r, "right", right_path);
    const int el = euler_class(left), er = euler_class(right);
    r.values()["euler_left"] = el;
    r.values()["euler_right"] = er;
    r.at_most("euler_pairing", std::abs(el - (2 - 2 * left.genus())) + std::abs(er - (2 - 2 * left.genus())), 0.0);
    ConjugacyOptions opt;
    opt.max_samples = max_samples;
    const CircleGraph g = sample_conjugacy(left, right, cfg.ball, opt);
    // held out: attracting fixed points one word length further out
    std::vector<std::pair<double, double>> held;
    if (cfg.ball < kBallCap) {
        const GroupBall ball = enumerate_ball(left, cfg.ball + 1);
        std::size_t k = 0;
        for (const auto& el2 : ball.elements) {
            if (static_cast<int>(el2.word.size()) <= cfg.ball || k++ % 7 != 0) continue;
            held.emplace_back(axis(el2.matrix).attracting.theta(), axis(evaluate(right, el2.word)).attracting.theta());
        }
    }
    hull_pipeline(cfg, g, r, held);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Constant-curvature spacetime constructions"};
    app.require_subcommand(1);
    app.fallthrough();
    RunConfig cfg;
    app.add_option("--tol", cfg.tol, "tolerance for residual checks")->capture_default_str();
    app.add_option("--ball", cfg.ball, "word-ball radius")->capture_default_str();
    app.add_option("--density", cfg.density, "sample count")->capture_default_str();
    app.add_option("--seed", cfg.seed, "random seed")->capture_default_str();
    app.add_option("--out", cfg.out, "output directory for artifacts and report.json");
    app.add_flag("--timings", cfg.timings, "include wall-clock seconds in the report");
    std::string simd;
    app.add_option("--simd", simd, "force kernel variant: scalar, avx2, neon");

    std::string rep_path, mc_path, coc_path, lam_path, points_path, graph_path, left_path, right_path, side = "left";
    double radius = 2.0, scale = 1.0, shear_value = 0.0;
    std::size_t max_samples = 3000;

    auto* euler = app.add_subcommand("euler", "Euler class of a representation");
    euler->add_option("rep", rep_path, "representation JSON")->required();

    auto* flat = app.add_subcommand("flat", "flat spacetimes from measured multicurves");
    flat->require_subcommand(1);
    flat->fallthrough();
    auto* flat_build = flat->add_subcommand("build", "cocycle, developed surface and checks");
    flat_build->add_option("rep", rep_path, "representation JSON")->required();
    flat_build->add_option("multicurve", mc_path, "multicurve JSON")->required();
    flat_build->add_option("--radius", radius, "sampling disc radius")->capture_default_str();
    auto* flat_check = flat->add_subcommand("check", "verify a cocycle against a representation");
    flat_check->add_option("rep", rep_path, "representation JSON")->required();
    flat_check->add_option("cocycle", coc_path, "cocycle JSON")->required();
    flat_check->add_option("--multicurve", mc_path, "compare with the lamination cocycle");

    auto* quake = app.add_subcommand("quake", "earthquake along a finite lamination");
    quake->add_option("lamination", lam_path, "lamination or multicurve JSON")->required();
    quake->add_option("--scale", scale, "weight multiplier")->capture_default_str();
    quake->add_option("--points", points_path, "points JSON");
    quake->add_option("--rep", rep_path, "representation for a multicurve lamination");
    quake->add_option("--side", side, "left or right")->check(CLI::IsMember({"left", "right"}));

    auto* ads = app.add_subcommand("ads", "anti-de Sitter convex hulls");
    ads->require_subcommand(1);
    ads->fallthrough();
    auto* ads_hull = ads->add_subcommand("hull", "hull of a circle-map graph");
    ads_hull->add_option("graph", graph_path, "graph CSV of (theta_left, theta_right)");
    auto* shear_opt = ads_hull->add_option("--shear", shear_value, "use the single-leaf map with parameter s");
    auto* ads_between = ads->add_subcommand("between", "hull of the conjugacy between two representations");
    ads_between->add_option("left", left_path, "left representation JSON")->required();
    ads_between->add_option("right", right_path, "right representation JSON")->required();
    ads_between->add_option("--max-samples", max_samples, "sample cap")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    std::vector<std::string> args(argv + 1, argv + argc);
    const auto t0 = std::chrono::steady_clock::now();
    std::string name;
    if (euler->parsed()) name = "euler";
    else if (flat_build->parsed()) name = "flat build";
    else if (flat_check->parsed()) name = "flat check";
    else if (quake->parsed()) name = "quake";
    else if (ads_hull->parsed()) name = "ads hull";
    else name = "ads between";
    Report report(name, args);
    try {
        validate(cfg);
        if (!simd.empty()) {
            if (simd == "scalar") kernels::force_isa(kernels::Isa::Scalar);
            else if (simd == "avx2") kernels::force_isa(kernels::Isa::Avx2);
            else if (simd == "neon") kernels::force_isa(kernels::Isa::Neon);
            else throw InvalidInput("--simd must be scalar, avx2 or neon");
        }
        if (euler->parsed()) cmd_euler(cfg, rep_path, report);
        else if (flat_build->parsed()) cmd_flat_build(cfg, rep_path, mc_path, radius, report);
        else if (flat_check->parsed()) cmd_flat_check(cfg, rep_path, coc_path, mc_path, report);
        else if (quake->parsed()) cmd_quake(cfg, lam_path, scale, points_path, rep_path, side, report);
        else if (ads_hull->parsed())
            cmd_ads_hull(cfg, graph_path, shear_opt->count() ? std::optional<double>(shear_value) : std::nullopt, report);
        else cmd_ads_between(cfg, left_path, right_path, max_samples, report);
    } catch (const Error& e) {
        json err{{"schema", "ccs.error/1"}, {"command", name}, {"error", e.what()}};
        std::cerr << err.dump(2) << "\n";
        return 2;
    } catch (const std::exception& e) {
        json err{{"schema", "ccs.error/1"}, {"command", name}, {"error", e.what()}};
        std::cerr << err.dump(2) << "\n";
        return 2;
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return report.finish(cfg, secs);
}
