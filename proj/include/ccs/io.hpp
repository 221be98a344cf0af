#pragma once

// File formats.  Representations, multicurves, laminations and cocycles are
// JSON; circle maps and graphs are CSV of angle pairs; meshes are OBJ.
// Angles are the RP^1 coordinate in [0, 1): theta = atan2(q, p) / pi for the
// ideal point z = p / q.

#include <array>
#include <filesystem>
#include <string>
#include <vector>

#include "json.hpp"

#include "ccs/ads.hpp"
#include "ccs/earthquake.hpp"
#include "ccs/flat.hpp"

namespace ccs::io {

using json = nlohmann::json;

std::string read_text(const std::filesystem::path& path);
void write_text(const std::filesystem::path& path, const std::string& text);
/// Parses JSON text; InvalidInput with the parser message on failure.
json parse_json(const std::string& text);

/// {"genus": g, "generators": [[[a, b], [c, d]], ...]}
Representation representation_from_json(const json& j, double relator_tol = 1e-8);
json to_json(const Representation& rep);

/// {"curves": [{"word": "a1 b1 A1", "weight": 0.5}, ...]}
WeightedMulticurve multicurve_from_json(const json& j, int genus);
json to_json(const WeightedMulticurve& mc);

/// {"base": [x, y], "leaves": [{"ends": [z1, z2], "weight": w}, ...]}; an end is
/// a real number or "inf", the base a point of the upper half plane.
FiniteLaminationH2 lamination_from_json(const json& j);
json to_json(const FiniteLaminationH2& lam);

/// {"genus": g, "generators": {"a1": [x, y, t], ...}}
json to_json(const TranslationCocycle& coc, int genus);
TranslationCocycle cocycle_from_json(const json& j);

/// [[x, y], ...] upper half plane points, or {"points": [...]}.
std::vector<HyperbolicPoint> points_from_json(const json& j);

/// Triangles of the hyperbolic Delaunay triangulation of hyperboloid points
/// (faces of their convex hull seen from the origin).
std::vector<std::array<std::size_t, 3>> hyperbolic_delaunay(const std::vector<HyperbolicPoint>& pts);

/// OBJ of the developed points f(p) over the Delaunay triangulation of the p.
std::string patch_obj(const DevelopedSurfacePatch& patch);
/// Rows p, x(p), f(p).
std::string patch_csv(const DevelopedSurfacePatch& patch);

std::string circle_map_csv(const CircleMap& m);
std::string graph_csv(const CircleGraph& g);
/// Two numeric columns per row; a non-numeric first line is taken as a header.
std::vector<std::pair<double, double>> pairs_from_csv(const std::string& text);

/// OBJ in chart coordinates, future and past triangles in separate groups.
std::string hull_obj(const HullComplex& h);
json hull_json(const HullComplex& h, const std::vector<BendingDatum>& bending);

json to_json(const R22Vector& v);
json to_json(const ProjectivePlane& p);
json to_json(const MinkowskiVector& v);
json to_json(const Mat2& m);

}  // namespace ccs::io
