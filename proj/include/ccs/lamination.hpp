#pragma once

// Finite measured laminations given as weighted multicurves, their lifts to
// the hyperbolic plane, and the transverse-measure integral along segments.
//
// Sign convention: for a segment from p to q, the normal attached to a leaf
// it crosses points away from p (<e, p> < 0 < <e, q>).  With the start point
// fixed at the basepoint this is the "points away from the base region" rule,
// and it makes transverse_vector additive along broken paths.

#include <cstddef>
#include <optional>
#include <vector>

#include "ccs/fuchsian.hpp"

namespace ccs {

/// Complete geodesic of H^2 given by its ideal endpoints.
class GeodesicH2 {
public:
    GeodesicH2() = default;
    GeodesicH2(const IdealPoint& e1, const IdealPoint& e2, double eps = kDefaultEps);

    const IdealPoint& first() const { return e1_; }
    const IdealPoint& second() const { return e2_; }
    /// Unit spacelike normal of the plane through the origin containing the geodesic.
    const MinkowskiVector& normal() const { return n_; }

    GeodesicH2 transformed(const Mat2& m) const;

    /// Endpoint pairs interleave on the circle (the geodesics cross).
    bool links(const GeodesicH2& o) const;
    /// Same unordered endpoint pair within eps.
    bool same_as(const GeodesicH2& o, double eps = kDefaultEps) const;
    /// Hyperbolic distance from p; 0 on the geodesic.
    double distance_to(const HyperbolicPoint& p) const;

private:
    IdealPoint e1_, e2_;
    MinkowskiVector n_;
};

struct WeightedCurve {
    Word word;
    double weight = 0.0;
};

struct WeightedMulticurve {
    std::vector<WeightedCurve> curves;

    /// Throws InvalidInput on non-positive weights or empty words.
    void validate() const;
    WeightedMulticurve scaled(double factor) const;
};

/// Union of two multicurves (weights of repeated words add).
WeightedMulticurve join(const WeightedMulticurve& a, const WeightedMulticurve& b);

/// Axis of rho(w); throws NotHyperbolic.
GeodesicH2 closed_geodesic_of(const Representation& rep, const Word& w);

/// No two lifts (conjugates by ball-L elements) of the curves have linked
/// endpoints, including distinct lifts of one class.
bool disjointness_check(const Representation& rep, const WeightedMulticurve& mc, int radius);

struct CrossingRecord {
    GeodesicH2 leaf;
    double s = 0.0;           // crossing parameter on the segment, in (0, 1)
    MinkowskiVector normal;   // points away from the segment start
    double weight = 0.0;
    std::size_t curve = 0;    // index into the multicurve
};

struct LeafOptions {
    int start_radius = 2;
    int cap = 8;  // hard cap on the word length of conjugators
    double eps = kDefaultEps;
};

/// Lifts of a multicurve meeting the disc of a given radius about the apex.
/// Conjugators are enumerated by word length, pruned to elements that can
/// carry a lift into the disc; the radius grows until two consecutive
/// increments add no lift, and EnumerationCapExceeded is raised past the cap.
class LeafSet {
public:
    struct Leaf {
        GeodesicH2 geodesic;
        double weight = 0.0;
        std::size_t curve = 0;
        Word conjugator;
    };

    static LeafSet build(const Representation& rep, const WeightedMulticurve& mc, double window_radius,
                         const LeafOptions& opt = {});

    const std::vector<Leaf>& leaves() const { return leaves_; }
    double window_radius() const { return window_; }
    int radius_used() const { return radius_used_; }
    double eps() const { return eps_; }

    /// The leaf nearest to p if within eps, else nullopt.
    std::optional<std::size_t> leaf_at(const HyperbolicPoint& p) const;

    /// Crossings of the geodesic segment pq, sorted by parameter.
    /// Throws LeafAmbiguity if p or q lies on a leaf, InvalidInput if outside the window.
    std::vector<CrossingRecord> crossings(const HyperbolicPoint& p, const HyperbolicPoint& q) const;

    /// Sum of weight * normal over crossings of pq.
    MinkowskiVector transverse(const HyperbolicPoint& p, const HyperbolicPoint& q) const;

    /// Transverse vector from p to any future vector v (timelike or null),
    /// counting the leaves whose planes separate p from v.  v is not window-checked.
    MinkowskiVector transverse_to(const HyperbolicPoint& p, const MinkowskiVector& v) const;

    /// Batched transverse(p, q_i) for many endpoints sharing the start p.
    std::vector<MinkowskiVector> transverse_from(const HyperbolicPoint& p,
                                                 const std::vector<HyperbolicPoint>& qs) const;

private:
    void check_point(const HyperbolicPoint& p) const;

    std::vector<Leaf> leaves_;
    std::vector<double> nx_, ny_, nt_;  // leaf normals, structure of arrays
    double window_ = 0.0;
    int radius_used_ = 0;
    double eps_ = kDefaultEps;
};

/// The apex, moved off every leaf of the set if necessary (deterministic).
HyperbolicPoint default_basepoint(const LeafSet& leaves);

/// Window radius needed to contain the given points with a margin.
double window_for(std::initializer_list<HyperbolicPoint> pts, double margin = 0.5);

std::vector<CrossingRecord> crossings(const Representation& rep, const WeightedMulticurve& mc,
                                      const HyperbolicPoint& p, const HyperbolicPoint& q,
                                      const LeafOptions& opt = {});

MinkowskiVector transverse_vector(const Representation& rep, const WeightedMulticurve& mc,
                                  const HyperbolicPoint& p, const HyperbolicPoint& q,
                                  const LeafOptions& opt = {});

}  // namespace ccs
