#pragma once

// Flat spacetimes: translation cocycles of affine deformations, the deformed
// development p -> p + x(p) of a measured multicurve, its boundary data, and
// the standard torus spacetimes.

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "ccs/lamination.hpp"

namespace ccs {

/// gamma -> t_gamma on generators, extended to words by t_{ab} = t_a + f(a) t_b
/// where f is the linear holonomy adjoint(rho).
class TranslationCocycle {
public:
    TranslationCocycle() = default;
    explicit TranslationCocycle(std::vector<MinkowskiVector> generators) : gens_(std::move(generators)) {}
    static TranslationCocycle zero(int genus) { return TranslationCocycle(std::vector<MinkowskiVector>(2 * genus)); }

    const std::vector<MinkowskiVector>& generators() const { return gens_; }
    std::vector<MinkowskiVector>& generators() { return gens_; }

    MinkowskiVector evaluate(const Representation& rep, const Word& w) const;
    /// The affine holonomy x -> f(w) x + t_w.
    LorentzIsometry isometry(const Representation& rep, const Word& w) const;

    TranslationCocycle operator+(const TranslationCocycle& o) const;
    TranslationCocycle operator*(double s) const;
    double max_abs_diff(const TranslationCocycle& o) const;

private:
    std::vector<MinkowskiVector> gens_;
};

/// t_gamma = v - f(gamma) v.
TranslationCocycle coboundary(const Representation& rep, const MinkowskiVector& v);

/// t_a = transverse_vector(b, rho(a) b) for each generator a; basepoint b
/// defaults to the apex moved off the leaves.
TranslationCocycle cocycle_from_lamination(const Representation& rep, const WeightedMulticurve& mc,
                                           std::optional<HyperbolicPoint> basepoint = std::nullopt,
                                           const LeafOptions& opt = {});

/// |t_{ab} - t_a - f(a) t_b|_inf.
double cocycle_residual(const Representation& rep, const TranslationCocycle& coc, const Word& a, const Word& b);

/// |t_relator|_inf.
double relator_residual(const Representation& rep, const TranslationCocycle& coc);

struct SurfaceSample {
    HyperbolicPoint p;
    MinkowskiVector x;  // translation of the region containing p
    MinkowskiVector f;  // p + x
    bool perturbed = false;  // moved off a leaf
};

/// Samples of the deformed development over a disc about the apex.  The leaf
/// set is kept so that x can be evaluated at further points of the disc.
struct DevelopedSurfacePatch {
    std::vector<SurfaceSample> samples;
    HyperbolicPoint basepoint;
    MinkowskiVector offset;  // x(basepoint)
    double radius = 0.0;
    std::shared_ptr<const LeafSet> leaves;

    /// x(p) for p in the disc (p off the leaves).
    MinkowskiVector field(const HyperbolicPoint& p) const;
    /// Limit of x(p) as p tends to the ideal point in the direction of a null vector.
    MinkowskiVector field_at_ideal(const MinkowskiVector& null_dir) const;
    /// Development extended to the future cone, constant along rays: y + x(y/|y|).
    MinkowskiVector develop_cone(const MinkowskiVector& y) const;
};

struct DevelopOptions {
    double radius = 2.0;
    int density = 400;  // number of samples
    std::uint64_t seed = 1;
    std::optional<HyperbolicPoint> basepoint;
    MinkowskiVector offset;
    LeafOptions leaf;
};

/// Hyperbolic-area-uniform samples of the disc of the given radius about the apex.
DevelopedSurfacePatch develop_surface(const Representation& rep, const WeightedMulticurve& mc,
                                      const DevelopOptions& opt = {});

/// Cocycle read off a patch: t_a = x(a b) - f(a) x(b); needs rho(a) b inside the disc.
TranslationCocycle cocycle_of_patch(const Representation& rep, const DevelopedSurfacePatch& patch);

struct InjectivityReport {
    double min_gap = 0.0;           // over all null pairs
    double min_crossing_gap = 0.0;  // over pairs separated by a leaf (+inf if none)
    std::size_t pairs = 0;
    std::size_t crossing_pairs = 0;
};

/// For sample pairs (p, q) scaled along their rays so that p - q is null,
/// the value <F(p) - F(q), F(p) - F(q)> of the cone development F.
InjectivityReport injectivity_gap(const DevelopedSurfacePatch& patch, std::size_t max_pairs = 0);

/// max |dt| / |(dx, dy)| over pairs of developed sample points.
double graph_slope_check(const DevelopedSurfacePatch& patch);

/// Half-space {y : <normal, y> >= offset} with a past-pointing null normal.
struct NullSupportPlane {
    MinkowskiVector normal;
    double offset = 0.0;
    MinkowskiVector ideal_direction;  // future null direction the plane is attached to

    double slack(const MinkowskiVector& y) const { return minkowski_inner(normal, y) - offset; }
};

/// One support plane per sampled ideal direction (count evenly spaced angles).
std::vector<NullSupportPlane> support_planes(const DevelopedSurfacePatch& patch, int count = 64);

struct CyclicSingularitySegment {
    MinkowskiVector r, q;
    double length() const;
};

/// Initial singularity of the spacetime of the cyclic group generated by the
/// boost T(lambda) with its axis carrying the given weight.
CyclicSingularitySegment cyclic_initial_singularity(double lambda, double weight);

/// The genus-1 representation (T(lambda), T(mu)) as diagonal matrices.
Representation torus_rep(double lambda, double mu);

/// Cocycle of the torus group weighted along the closed curve of class
/// (c1, c2) in the basis (A, B): t_g = weight * i(C, g) * (0, 1, 0).
TranslationCocycle torus_cocycle(double weight, int c1, int c2);

struct StandardTorusSpacetime {
    double lambda = 0.0, e = 0.0, mu = 0.0, f = 0.0;
    LorentzIsometry a, b;

    /// The region t^2 > x^2, t > 0.
    static bool contains(const MinkowskiVector& y) { return y.t > 0.0 && y.t * y.t > y.x * y.x; }
};

/// A = T(lambda) + (0, e, 0), B = T(mu) + (0, f, 0); throws when (lambda, e), (mu, f) are dependent.
StandardTorusSpacetime standard_torus(double lambda, double e, double mu, double f, double eps = kDefaultEps);

}  // namespace ccs
