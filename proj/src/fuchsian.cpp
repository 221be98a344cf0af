#include "ccs/fuchsian.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <complex>
#include <numbers>
#include <sstream>
#include <unordered_map>

namespace ccs {

// ---------------------------------------------------------------------------
// Words

Word reduce_word(const Word& w) {
    Word out;
    out.reserve(w.size());
    for (int x : w) {
        if (x == 0) throw InvalidInput("word letter 0 is not a generator");
        if (!out.empty() && out.back() == -x)
            out.pop_back();
        else
            out.push_back(x);
    }
    return out;
}

Word inverse_word(const Word& w) {
    Word out(w.rbegin(), w.rend());
    for (int& x : out) x = -x;
    return out;
}

Word concat(const Word& u, const Word& v) {
    Word w = u;
    w.insert(w.end(), v.begin(), v.end());
    return reduce_word(w);
}

Word parse_word(std::string_view text, int genus) {
    Word w;
    std::size_t i = 0;
    while (i < text.size()) {
        const char ch = text[i];
        if (std::isspace(static_cast<unsigned char>(ch)) || ch == '*' || ch == '.') {
            ++i;
            continue;
        }
        const char lower = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
        if (lower != 'a' && lower != 'b') throw InvalidInput("bad word letter '" + std::string(1, ch) + "'");
        const bool inv = std::isupper(static_cast<unsigned char>(ch));
        ++i;
        std::size_t start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (start == i) throw InvalidInput("word letter without index in '" + std::string(text) + "'");
        const int handle = std::stoi(std::string(text.substr(start, i - start)));
        if (handle < 1 || handle > genus) throw InvalidInput("generator index out of range in '" + std::string(text) + "'");
        const int gen = lower == 'a' ? 2 * handle - 1 : 2 * handle;
        w.push_back(inv ? -gen : gen);
    }
    return reduce_word(w);
}

std::string format_word(const Word& w) {
    std::ostringstream os;
    for (std::size_t i = 0; i < w.size(); ++i) {
        const int g = std::abs(w[i]);
        const int handle = (g + 1) / 2;
        char letter = g % 2 == 1 ? 'a' : 'b';
        if (w[i] < 0) letter = static_cast<char>(std::toupper(letter));
        if (i) os << ' ';
        os << letter << handle;
    }
    return os.str();
}

Word SurfacePresentation::relator() const {
    Word w;
    for (int i = 1; i <= genus; ++i) {
        const int a = 2 * i - 1, b = 2 * i;
        w.insert(w.end(), {a, b, -a, -b});
    }
    return w;
}

// ---------------------------------------------------------------------------
// Representation

namespace {

double psl_identity_residual(const Mat2& m) { return m.psl_distance(Mat2::identity()); }

}  // namespace

Representation Representation::create(int genus, std::vector<Mat2> generators, double relator_tol) {
    if (genus < 1) throw InvalidInput("genus must be >= 1");
    if (static_cast<int>(generators.size()) != 2 * genus) {
        std::ostringstream os;
        os << "genus " << genus << " needs " << 2 * genus << " generators, got " << generators.size();
        throw InvalidInput(os.str());
    }
    for (auto& g : generators) g = Mat2::unimodular(g.a, g.b, g.c, g.d, 1e-9);
    Representation rep(genus, std::move(generators));
    double scale = 1.0;
    Mat2 acc;
    for (int x : rep.presentation().relator()) {
        acc = acc * rep.generator(x);
        scale = std::max(scale, acc.max_abs());
    }
    const double res = rep.relator_residual();
    if (res > relator_tol * scale) {
        std::ostringstream os;
        os << "representation does not satisfy the surface relator (residual " << res << ")";
        throw InvalidInput(os.str());
    }
    return rep;
}

Representation Representation::trivial(int genus) {
    if (genus < 1) throw InvalidInput("genus must be >= 1");
    return Representation(genus, std::vector<Mat2>(2 * genus, Mat2::identity()));
}

Mat2 Representation::generator(int index) const {
    const int k = std::abs(index);
    if (k < 1 || k > 2 * genus()) throw InvalidInput("generator index out of range");
    return index > 0 ? generators_[k - 1] : generators_[k - 1].inverse();
}

double Representation::relator_residual() const { return psl_identity_residual(evaluate(*this, presentation_.relator())); }

Representation Representation::conjugated(const Mat2& g) const {
    const Mat2 gi = Mat2::normalized(g.a, g.b, g.c, g.d);
    const Mat2 ginv = gi.inverse();
    std::vector<Mat2> gens;
    gens.reserve(generators_.size());
    for (const auto& m : generators_) gens.push_back((gi * m * ginv).canonical());
    return Representation(genus(), std::move(gens));
}

Mat2 evaluate(const Representation& rep, const Word& w) {
    Mat2 acc;
    for (int x : w) {
        const int k = std::abs(x);
        if (k < 1 || k > 2 * rep.genus()) throw InvalidInput("word letter out of range");
        const Mat2& g = rep.generators()[k - 1];
        acc = acc * (x > 0 ? g : g.inverse());
    }
    return acc.canonical();
}

// ---------------------------------------------------------------------------
// Regular polygon

namespace {

using cplx = std::complex<double>;

cplx mobius(const Mat2& m, cplx z) { return (m.a * z + m.b) / (m.c * z + m.d); }

// Isometry sending z to i and w onto the imaginary axis above i.
Mat2 frame_at(cplx z, cplx w) {
    const double s = std::sqrt(z.imag());
    const Mat2 to_i{1.0 / s, -z.real() / s, 0.0, s};
    const cplx ww = mobius(to_i, w);
    const double ang = std::arg((ww - cplx(0, 1)) / (ww + cplx(0, 1)));
    const double t = (std::numbers::pi / 2.0 - ang) / 2.0;
    const Mat2 rot{std::cos(t), std::sin(t), -std::sin(t), std::cos(t)};
    return rot * to_i;
}

// Orientation-preserving isometry with p0 -> q0 and p1 -> q1 (equal lengths).
Mat2 segment_map(cplx p0, cplx p1, cplx q0, cplx q1) {
    const Mat2 m = frame_at(q0, q1).inverse() * frame_at(p0, p1);
    if (std::abs(mobius(m, p0) - q0) > 1e-9 || std::abs(mobius(m, p1) - q1) > 1e-9)
        throw DegenerateGeometry("polygon side pairing failed");
    return m.canonical();
}

}  // namespace

Representation regular_polygon_rep(int genus) {
    if (genus < 2) throw InvalidInput("regular_polygon_rep needs genus >= 2");
    const int n = 4 * genus;
    const double pi = std::numbers::pi;
    const double interior = pi / (2.0 * genus);
    const double r = std::acosh(1.0 / (std::tan(pi / n) * std::tan(interior / 2.0)));
    const double rho = std::tanh(r / 2.0);
    std::vector<cplx> v(n);
    for (int k = 0; k < n; ++k) {
        const cplx w = std::polar(rho, 2.0 * pi * k / n + pi / n);
        v[k] = cplx(0, 1) * (1.0 + w) / (1.0 - w);
    }
    auto pairing = [&](int j) { return segment_map(v[(j + 3) % n], v[(j + 2) % n], v[j], v[(j + 1) % n]); };
    std::vector<Mat2> gens;
    for (int i = 0; i < genus; ++i) {
        gens.push_back(pairing(4 * i));
        gens.push_back(pairing(4 * i + 1).inverse().canonical());
    }
    return Representation::create(genus, std::move(gens), 1e-8);
}

// ---------------------------------------------------------------------------
// Euler class

namespace {

// Monotone lift of the projective action of m on RP^1 = R/Z (angle / pi),
// pinned by F(x0) = y0.  Exact inverse: swap the pins and invert m.
struct CircleLift {
    Mat2 m;
    double x0 = 0.0;
    double y0 = 0.0;

    double operator()(double x) const {
        const double d = x - x0;
        const double n = std::floor(d);
        const double r = d - n;
        const double pi = std::numbers::pi;
        const double u0 = std::cos(pi * x0), v0 = std::sin(pi * x0);
        const double u1 = std::cos(pi * (x0 + r)), v1 = std::sin(pi * (x0 + r));
        const double a0 = m.a * u0 + m.b * v0, b0 = m.c * u0 + m.d * v0;
        const double a1 = m.a * u1 + m.b * v1, b1 = m.c * u1 + m.d * v1;
        // The image cross product equals det(m) sin(pi r) >= 0, so the image
        // turns through an angle in [0, pi] and needs no unwrapping.
        const double cross = m.det() * std::sin(pi * r);
        const double dot = a0 * a1 + b0 * b1;
        return y0 + n + std::atan2(cross, dot) / pi;
    }

    CircleLift inverse() const { return {m.inverse(), y0, x0}; }
};

double direction_angle(const Mat2& m, double x) {
    const double pi = std::numbers::pi;
    const double a = m.a * std::cos(pi * x) + m.b * std::sin(pi * x);
    const double b = m.c * std::cos(pi * x) + m.d * std::sin(pi * x);
    double th = std::atan2(b, a) / pi;
    th -= std::floor(th);
    return th >= 1.0 ? 0.0 : th;
}

CircleLift normalized_lift(const Mat2& m) { return {m, 0.0, direction_angle(m, 0.0)}; }

}  // namespace

double euler_class_real(const Representation& rep) {
    std::vector<CircleLift> lifts;
    for (const auto& g : rep.generators()) {
        if (!std::isfinite(g.a) || !std::isfinite(g.b) || !std::isfinite(g.c) || !std::isfinite(g.d))
            throw InvalidInput("non-finite generator");
        lifts.push_back(normalized_lift(g.inverse()));
    }
    double x = 0.0;
    for (int letter : rep.presentation().relator()) {
        const CircleLift& f = lifts[std::abs(letter) - 1];
        x = letter > 0 ? f(x) : f.inverse()(x);
    }
    return -x;
}

int euler_class(const Representation& rep, double tol) {
    const double e = euler_class_real(rep);
    const double k = std::round(e);
    if (!(std::fabs(e - k) <= tol)) {
        std::ostringstream os;
        os << "lifted relator translation " << e << " is not an integer within " << tol;
        throw TrackingError(os.str());
    }
    return static_cast<int>(k);
}

// ---------------------------------------------------------------------------
// Balls

namespace {

struct QuantKey {
    long long k[4];
    bool operator==(const QuantKey& o) const {
        return k[0] == o.k[0] && k[1] == o.k[1] && k[2] == o.k[2] && k[3] == o.k[3];
    }
};

struct QuantHash {
    std::size_t operator()(const QuantKey& q) const {
        std::size_t h = 1469598103934665603ull;
        for (long long v : q.k) h = (h ^ static_cast<std::size_t>(v)) * 1099511628211ull;
        return h;
    }
};

}  // namespace

struct BallBuilder::Index {
    std::unordered_map<QuantKey, std::vector<std::size_t>, QuantHash> buckets;
};

namespace {

// Buckets of width h >> eps; a near-duplicate differs by at most one bucket
// per coordinate, so lookups also probe the neighbour of values close to a
// bucket edge.
constexpr double kBucket = 1e-6;

std::vector<QuantKey> key_variants(const Mat2& m) {
    const double vals[4] = {m.a, m.b, m.c, m.d};
    std::vector<QuantKey> keys(1);
    for (int i = 0; i < 4; ++i) {
        const double s = vals[i] / kBucket;
        const long long base = std::llround(s);
        const double frac = s - static_cast<double>(base);
        const std::size_t count = keys.size();
        for (std::size_t j = 0; j < count; ++j) keys[j].k[i] = base;
        if (std::fabs(std::fabs(frac) - 0.5) < 0.05) {
            for (std::size_t j = 0; j < count; ++j) {
                QuantKey alt = keys[j];
                alt.k[i] = base + (frac > 0 ? 1 : -1);
                keys.push_back(alt);
            }
        }
    }
    return keys;
}

}  // namespace

BallBuilder::BallBuilder(const Representation& rep, double eps, Filter keep)
    : rep_(rep), eps_(eps), keep_(std::move(keep)), index_(std::make_unique<Index>()) {
    try_insert({}, Mat2::identity());
}

BallBuilder::~BallBuilder() = default;

bool BallBuilder::try_insert(Word w, const Mat2& raw) {
    const Mat2 m = raw.canonical();
    const auto keys = key_variants(m);
    const double tol = eps_ * std::max(1.0, m.max_abs());
    for (const auto& k : keys) {
        auto it = index_->buckets.find(k);
        if (it == index_->buckets.end()) continue;
        for (std::size_t id : it->second)
            if (ball_.elements[id].matrix.psl_distance(m) <= tol) return false;
    }
    if (keep_ && !w.empty() && !keep_(m)) return false;
    index_->buckets[keys.front()].push_back(ball_.elements.size());
    ball_.elements.push_back({std::move(w), m});
    return true;
}

std::size_t BallBuilder::grow() {
    const std::size_t begin = layer_begin_, end = ball_.elements.size();
    layer_begin_ = end;
    const int ngen = 2 * rep_.genus();
    for (std::size_t i = begin; i < end; ++i) {
        for (int g = 1; g <= ngen; ++g)
            for (int sign : {1, -1}) {
                const int letter = sign * g;
                if (!ball_.elements[i].word.empty() && ball_.elements[i].word.back() == -letter) continue;
                Word w = ball_.elements[i].word;
                w.push_back(letter);
                const Mat2 gm = sign > 0 ? rep_.generators()[g - 1] : rep_.generators()[g - 1].inverse();
                try_insert(std::move(w), ball_.elements[i].matrix * gm);
            }
    }
    ++ball_.radius;
    return ball_.elements.size() - end;
}

GroupBall enumerate_ball(const Representation& rep, int radius, double eps) {
    if (radius < 0) throw InvalidInput("ball radius must be >= 0");
    BallBuilder b(rep, eps);
    for (int len = 1; len <= radius; ++len) b.grow();
    return b.ball();
}

// ---------------------------------------------------------------------------
// Axes

Axis axis(const Mat2& raw, double eps) {
    if (!raw.is_hyperbolic(eps)) {
        std::ostringstream os;
        os << "element with trace " << raw.trace() << " is not hyperbolic";
        throw NotHyperbolic(os.str());
    }
    const Mat2 m = raw.trace() < 0 ? Mat2{-raw.a, -raw.b, -raw.c, -raw.d} : raw;
    const double tr = m.trace();
    const double disc = std::sqrt((tr - 2.0) * (tr + 2.0));
    const double big = (tr + disc) / 2.0;
    const double small = 1.0 / big;
    auto eigvec = [&](double lam) {
        // Rows of (m - lam I) annihilate the eigenvector; take the better row.
        const double r1 = std::hypot(m.b, lam - m.a), r2 = std::hypot(lam - m.d, m.c);
        return r1 >= r2 ? IdealPoint::from_vector(m.b, lam - m.a) : IdealPoint::from_vector(lam - m.d, m.c);
    };
    return {eigvec(big), eigvec(small), 2.0 * std::acosh(tr / 2.0)};
}

Mat2 translation_along(const IdealPoint& attracting, const IdealPoint& repelling, double distance) {
    const double pa = attracting.p(), qa = attracting.q();
    const double pr = repelling.p(), qr = repelling.q();
    const double det = pa * qr - pr * qa;
    if (std::fabs(det) < 1e-14) throw DegenerateGeometry("translation_along: coincident endpoints");
    const double l = std::exp(distance / 2.0), li = 1.0 / l;
    // P diag(l, 1/l) P^{-1}, P = [[pa, pr], [qa, qr]].
    const double a = (l * pa * qr - li * pr * qa) / det;
    const double b = (-l * pa * pr + li * pr * pa) / det;
    const double c = (l * qa * qr - li * qr * qa) / det;
    const double d = (-l * qa * pr + li * qr * pa) / det;
    return Mat2{a, b, c, d}.canonical();
}

}  // namespace ccs
