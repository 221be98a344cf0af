#include "ccs/kernels.hpp"

#include <atomic>
#include <cassert>

namespace ccs::kernels {

namespace {

struct Table {
    Isa isa;
    void (*dot)(const double*, const double*, const double*, std::size_t, double, double, double,
                double*);
    void (*norm)(const double*, const double*, const double*, std::size_t, double*);
    void (*inc)(const double*, const double*, const double*, const double*, std::size_t, double,
                double, double, double, double*);
    void (*slope)(const double*, const double*, const double*, std::size_t, double*);
};

constexpr Table kScalar{Isa::Scalar, scalar::minkowski_dot, scalar::minkowski_norm,
                        scalar::incidence, scalar::chord_slope};
constexpr Table kAvx2{Isa::Avx2, avx2::minkowski_dot, avx2::minkowski_norm, avx2::incidence,
                      avx2::chord_slope};
constexpr Table kNeon{Isa::Neon, neon::minkowski_dot, neon::minkowski_norm, neon::incidence,
                      neon::chord_slope};

bool supported(Isa isa) {
    switch (isa) {
        case Isa::Scalar:
            return true;
        case Isa::Avx2:
#if defined(__x86_64__) || defined(_M_X64)
            return avx2::compiled() && __builtin_cpu_supports("avx2");
#else
            return false;
#endif
        case Isa::Neon:
            return neon::compiled();
    }
    return false;
}

const Table* table_for(Isa isa) {
    switch (isa) {
        case Isa::Avx2:
            return &kAvx2;
        case Isa::Neon:
            return &kNeon;
        default:
            return &kScalar;
    }
}

std::atomic<const Table*>& current() {
    static std::atomic<const Table*> t{table_for(detected_isa())};
    return t;
}

}  // namespace

std::string_view isa_name(Isa isa) {
    switch (isa) {
        case Isa::Scalar:
            return "scalar";
        case Isa::Avx2:
            return "avx2";
        case Isa::Neon:
            return "neon";
    }
    return "unknown";
}

Isa detected_isa() {
    if (supported(Isa::Avx2)) return Isa::Avx2;
    if (supported(Isa::Neon)) return Isa::Neon;
    return Isa::Scalar;
}

Isa active_isa() { return current().load()->isa; }

Isa force_isa(Isa isa) {
    const Table* t = supported(isa) ? table_for(isa) : &kScalar;
    current().store(t);
    return t->isa;
}

void minkowski_dot(const Vec3Soa& v, double px, double py, double pt, std::span<double> out) {
    assert(out.size() >= v.size());
    current().load()->dot(v.x.data(), v.y.data(), v.t.data(), v.size(), px, py, pt, out.data());
}

void minkowski_norm(const Vec3Soa& v, std::span<double> out) {
    assert(out.size() >= v.size());
    current().load()->norm(v.x.data(), v.y.data(), v.t.data(), v.size(), out.data());
}

void incidence(const Vec4Soa& v, double e, double f, double g, double h, std::span<double> out) {
    assert(out.size() >= v.size());
    current().load()->inc(v.a.data(), v.b.data(), v.c.data(), v.d.data(), v.size(), e, f, g, h,
                          out.data());
}

void chord_slope(const Vec3Soa& v, std::span<double> out) {
    assert(out.size() >= v.size());
    current().load()->slope(v.x.data(), v.y.data(), v.t.data(), v.size(), out.data());
}

}  // namespace ccs::kernels
