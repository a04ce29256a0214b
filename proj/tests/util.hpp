#pragma once

#include <doctest.h>

#include "mtx/serialize.hpp"

namespace mtx::test {

inline Mat2Q M(long a, long b, long c, long d) { return {Q(a), Q(b), Q(c), Q(d)}; }

inline real dist(cplx x, cplx y) { return std::abs(x - y); }

inline cplx root8c(long k) { return std::polar(1.0L, kPi * k / 4); }

inline Mat2Q random_theta(long M, long bound, Rng& rng) {
    for (;;) {
        Mat2Q g = random_gamma0(M, bound, rng);
        if (is_member(g, {SubgroupId::Tag::GammaTheta, 1})) return g;
    }
}

} // namespace mtx::test
