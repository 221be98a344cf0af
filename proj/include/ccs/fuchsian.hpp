#pragma once

// Surface groups, their representations into PSL(2,R), word balls, axes and
// the Euler class.
//
// Generators are numbered 1..2g.  A word is a sequence of signed indices,
// -k standing for the inverse of generator k.  In text form generator 2i-1 is
// written "a<i>" and generator 2i is "b<i>"; upper case denotes the inverse,
// so "a1 b1 A1 B1" is the commutator [a_1, b_1].

#include <functional>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "ccs/minkowski.hpp"

namespace ccs {

using Word = std::vector<int>;

/// Cancels adjacent inverse pairs.
Word reduce_word(const Word& w);
Word inverse_word(const Word& w);
Word concat(const Word& u, const Word& v);

Word parse_word(std::string_view text, int genus);
std::string format_word(const Word& w);

struct SurfacePresentation {
    int genus = 2;

    int generator_count() const { return 2 * genus; }
    /// prod_{i=1..g} [a_{2i-1}, a_{2i}].
    Word relator() const;
};

class Representation {
public:
    /// Validates generator count, unimodularity and the relator within
    /// relator_tol (relative to the largest partial product).
    static Representation create(int genus, std::vector<Mat2> generators, double relator_tol = 1e-8);

    /// The trivial representation: every generator maps to the identity.
    static Representation trivial(int genus);

    int genus() const { return presentation_.genus; }
    const SurfacePresentation& presentation() const { return presentation_; }
    const std::vector<Mat2>& generators() const { return generators_; }
    Mat2 generator(int index) const;  // signed 1-based, inverse for negatives

    /// max entry distance in PSL between evaluate(relator) and the identity.
    double relator_residual() const;

    /// g rho g^{-1}.
    Representation conjugated(const Mat2& g) const;

private:
    Representation(int genus, std::vector<Mat2> gens) : presentation_{genus}, generators_(std::move(gens)) {}
    SurfacePresentation presentation_;
    std::vector<Mat2> generators_;
};

/// Product of generator matrices (inverses for negative letters), canonicalized.
Mat2 evaluate(const Representation& rep, const Word& w);

/// Standard Fuchsian representation from the side pairing of the regular
/// 4g-gon with angle sum 2 pi.  a_i maps side 4i+3 onto side 4i (reversed),
/// b_i is the inverse of the pairing of side 4i+4 onto side 4i+1 (0-based sides).
Representation regular_polygon_rep(int genus);

/// Euler class of the flat circle bundle.  Each generator gamma gets the lift
/// of rho(gamma)^{-1} to R with 0 <= lift(0) < 1 (circle coordinate = direction
/// angle / pi); the relator, composed left to right, moves 0 to -e.
/// Under this convention the standard polygon representation has e = 2 - 2g.
/// Throws TrackingError when the lifted relator is not within tol of an integer.
int euler_class(const Representation& rep, double tol = 1e-6);

/// Same, returning the unrounded translation -lift(relator)(0).
double euler_class_real(const Representation& rep);

struct BallElement {
    Word word;
    Mat2 matrix;
};

struct GroupBall {
    int radius = 0;
    std::vector<BallElement> elements;  // ordered by word length, identity first

    std::size_t size() const { return elements.size(); }
};

/// All reduced words of length <= radius, keeping the first (shortest) word
/// for each distinct PSL element (entries compared within eps).
GroupBall enumerate_ball(const Representation& rep, int radius, double eps = kDefaultEps);

/// Layer-by-layer ball enumeration.  An optional filter drops elements (and
/// their extensions) from the enumeration.
class BallBuilder {
public:
    using Filter = std::function<bool(const Mat2&)>;

    BallBuilder(const Representation& rep, double eps = kDefaultEps, Filter keep = {});
    ~BallBuilder();
    BallBuilder(const BallBuilder&) = delete;
    BallBuilder& operator=(const BallBuilder&) = delete;

    /// Adds words of the next length; returns the number of new elements.
    std::size_t grow();

    const GroupBall& ball() const { return ball_; }
    /// Index range [begin, end) of the elements added by the last grow().
    std::size_t layer_begin() const { return layer_begin_; }
    std::size_t layer_end() const { return ball_.elements.size(); }

private:
    struct Index;
    bool try_insert(Word w, const Mat2& raw);

    const Representation& rep_;
    double eps_;
    Filter keep_;
    GroupBall ball_;
    std::size_t layer_begin_ = 0;
    std::unique_ptr<Index> index_;
};

struct Axis {
    IdealPoint attracting;
    IdealPoint repelling;
    double translation_length = 0.0;
};

/// Fixed points and translation length 2 arccosh(|tr|/2) of a hyperbolic element.
Axis axis(const Mat2& m, double eps = kDefaultEps);

/// Translation-length preserving one-parameter subgroup along an axis:
/// P diag(e^{d/2}, e^{-d/2}) P^{-1} with P = (attracting | repelling).
Mat2 translation_along(const IdealPoint& attracting, const IdealPoint& repelling, double distance);

}  // namespace ccs
