#pragma once

// Left and right earthquakes along finite laminations of H^2, their boundary
// circle maps, and the Fenchel-Nielsen twisted representations.
//
// Orientation: crossing a leaf from the base side, the far side is translated
// along the leaf toward the endpoint xi with det3(c, d, tau) > 0, where c is
// the crossing point, d the tangent of travel and tau the tangent toward xi
// (left rule).  For the leaf from 0 to infinity with base region Re z < 0 this
// moves Re z > 0 by z -> e^w z.

#include <optional>
#include <utility>
#include <vector>

#include "ccs/lamination.hpp"

namespace ccs {

enum class QuakeSide { Left, Right };

struct WeightedLeaf {
    GeodesicH2 geodesic;
    double weight = 0.0;
};

class FiniteLaminationH2 {
public:
    FiniteLaminationH2() = default;
    /// Validates weights and pairwise disjointness; base must avoid the leaves.
    FiniteLaminationH2(std::vector<WeightedLeaf> leaves, const HyperbolicPoint& base, double eps = kDefaultEps);

    /// Lamination of the lifts in a leaf set, based at the given point.
    static FiniteLaminationH2 from_leaf_set(const LeafSet& set, const HyperbolicPoint& base);

    const std::vector<WeightedLeaf>& leaves() const { return leaves_; }
    const HyperbolicPoint& base() const { return base_; }
    double eps() const { return eps_; }

    FiniteLaminationH2 transformed(const Mat2& g) const;

private:
    std::vector<WeightedLeaf> leaves_;
    HyperbolicPoint base_;
    double eps_ = kDefaultEps;
};

/// Sampled monotone degree-one circle map; angles are the RP^1 coordinate in [0, 1).
struct CircleMap {
    struct Piece {
        double from = 0.0, to = 0.0;  // arc [from, to) of the source, cyclic
        Mat2 map;
    };

    std::vector<std::pair<double, double>> samples;
    std::vector<Piece> pieces;  // optional piecewise-Moebius description

    /// Sorted by source angle, the targets wind once around the circle in order.
    bool cyclically_monotone(double eps = 1e-12) const;
    /// Evaluates through the pieces; throws InvalidInput if none cover theta.
    double operator()(double theta) const;
};

class EarthquakeMap {
public:
    EarthquakeMap(FiniteLaminationH2 lam, QuakeSide side, double scale);

    const FiniteLaminationH2& lamination() const { return lam_; }
    QuakeSide side() const { return side_; }
    double scale() const { return scale_; }

    /// Isometry of the region containing p (throws LeafAmbiguity on a leaf).
    Mat2 region_isometry(const HyperbolicPoint& p) const;
    /// Isometry of the region whose closure contains the ideal point.
    Mat2 region_isometry(const IdealPoint& xi) const;

    HyperbolicPoint apply(const HyperbolicPoint& p) const;
    /// Both one-sided values; equal off the leaves.
    std::pair<HyperbolicPoint, HyperbolicPoint> apply_one_sided(const HyperbolicPoint& p) const;
    IdealPoint apply(const IdealPoint& xi) const;

    /// Translation by scale * weight along leaf i in the direction of this side.
    Mat2 shear(std::size_t leaf, const HyperbolicPoint& crossing, const MinkowskiVector& travel) const;

private:
    // Leaves separating the base from a target, ordered outward, with crossing data.
    struct Step {
        std::size_t leaf;
        HyperbolicPoint crossing;
        MinkowskiVector travel;
        double order;
    };
    std::vector<Step> path_to(const MinkowskiVector& target, bool ideal, std::optional<std::size_t>* on_leaf) const;
    Mat2 compose(const std::vector<Step>& steps) const;

    FiniteLaminationH2 lam_;
    QuakeSide side_;
    double scale_;
};

EarthquakeMap earthquake_along(const FiniteLaminationH2& lam, QuakeSide side, double scale);

/// Boundary map sampled at n equally spaced angles, with its Moebius pieces.
CircleMap boundary_value(const EarthquakeMap& e, int n = 256);

struct QuadricActionExample {
    Mat2 start;          // [[1, 1], [1, 1]]
    Mat2 after_right;    // start * diag(s, 1)
    Mat2 after_left;     // diag(s, 1) * after_right
    Mat2 half_measure;   // diag(sqrt s, 1) after_right diag(sqrt s, 1)^{-1}
};

/// The two ruling moves of the single-leaf example on the quadric and the
/// half-measure conjugation image.  Entries are raw projective representatives.
QuadricActionExample quadric_action_example(double s);

/// rho'(gamma) = E(region of gamma b) rho(gamma) for the equivariant left
/// earthquake along the lifts of the multicurve (scaled weights).
Representation rep_after_earthquake(const Representation& rep, const WeightedMulticurve& mc, double scale,
                                    QuakeSide side = QuakeSide::Left, const LeafOptions& opt = {});

/// The single leaf from 0 to infinity with weight w, based in Re z < 0.
FiniteLaminationH2 single_leaf_lamination(double weight);

}  // namespace ccs
