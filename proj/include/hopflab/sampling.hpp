#pragma once

#include <cstdint>

#include "lazy.hpp"

namespace hopflab {

/// Deterministic splitmix64 generator for reproducible property tests.
struct Rng {
    std::uint64_t state;
    explicit Rng(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    long uniform(long lo, long hi) { // inclusive bounds
        return lo + long(next() % std::uint64_t(hi - lo + 1));
    }
};

inline Scalar random_scalar(Rng& rng, const FieldSpec& F) {
    switch (F.kind) {
        case field_kind::rational: return Scalar::rational(rng.uniform(-3, 3), rng.uniform(1, 3));
        case field_kind::prime: return Scalar::fp(F.param, rng.uniform(0, F.param - 1));
        case field_kind::cyclotomic: {
            Scalar acc = Scalar::of_long(F, rng.uniform(-2, 2));
            Scalar z = Scalar::zeta(F.param);
            Scalar zp = z;
            long deg = long(Scalar::zero(F).cyclo_coeffs().size());
            for (long k = 1; k < deg && k < 3; ++k) {
                acc = acc + Scalar::of_long(F, rng.uniform(-2, 2)) * zp;
                zp = zp * z;
            }
            return acc;
        }
    }
    return Scalar::zero(F);
}

inline Scalar random_nonzero_scalar(Rng& rng, const FieldSpec& F) {
    for (int tries = 0; tries < 64; ++tries) {
        Scalar s = random_scalar(rng, F);
        if (!s.is_zero()) return s;
    }
    return Scalar::one(F);
}

inline LinForm random_linform(Rng& rng, const HopfAlgebra& H) {
    LinForm f{zero_vec(H.dim, H.field)};
    for (auto& v : f.v) v = random_scalar(rng, H.field);
    return f;
}

/// Random element of Reg^1: mu(1) = 1 and convolution invertible.
inline LinForm random_reg1(Rng& rng, const HopfAlgebra& H) {
    for (int tries = 0; tries < 256; ++tries) {
        LinForm f = random_linform(rng, H);
        Scalar at_one = eval(f, H.unit);
        if (at_one.is_zero()) continue;
        Scalar c = at_one.inverse();
        for (auto& v : f.v) v = c * v;
        if (is_conv_invertible(H, f)) return f;
    }
    return conv_unit(H);
}

/// Random element of Reg^1_L (lazy, normalized, invertible).
inline LinForm random_lazy_reg1(Rng& rng, const HopfAlgebra& H, const AffineSpace& sp) {
    for (int tries = 0; tries < 256; ++tries) {
        Vec v = sp.base;
        for (const auto& dir : sp.directions)
            v = vec_add(v, vec_scale(random_scalar(rng, H.field), dir));
        LinForm f{v};
        if (is_conv_invertible(H, f)) return f;
    }
    return conv_unit(H);
}

/// Random element of Reg^2_L (lazy, normalized, invertible bi-form).
inline BiForm random_lazy_reg2(Rng& rng, const HopfAlgebra& H, const AffineSpace& sp) {
    for (int tries = 0; tries < 256; ++tries) {
        Vec v = sp.base;
        for (const auto& dir : sp.directions)
            v = vec_add(v, vec_scale(random_scalar(rng, H.field), dir));
        BiForm f{Mat(H.dim, H.dim, H.field)};
        f.m.a = v;
        if (is_conv_invertible(H, f)) return f;
    }
    return conv_unit2(H);
}

inline Mat random_symmetric(Rng& rng, const FieldSpec& F, int n) {
    Mat r(n, n, F);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            Scalar s = random_scalar(rng, F);
            r.at(i, j) = s;
            r.at(j, i) = s;
        }
    return r;
}

} // namespace hopflab
