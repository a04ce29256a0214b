#include "util.hpp"

using namespace mtx;
using mtx::test::dist;
using mtx::test::M;
using mtx::test::root8c;

namespace {

const Mat2Q P = Mat2Q(2, 3, 0, Q(1, 2));
const Mat2Q minusI = M(-1, 0, 0, -1);

Mat2Q random_gl2(Rng& rng) {
    std::uniform_int_distribution<int> pick(0, 5);
    static const Q scales[] = {Q(1), Q(-1), Q(2), Q(-1, 2), Q(3), Q(-3)};
    return mul(mul(random_gamma0(1, 20, rng), diag(1, scales[pick(rng)])), random_gamma0(1, 20, rng));
}

} // namespace

TEST_CASE("x sign and the Weil constant") {
    CHECK(x_sign(omega()) == 1);
    CHECK(x_sign(minusI) == -1);
    CHECK(x_sign(u(5)) == 1);
    CHECK(m_weil(omega()) == Unit::root8(-1));
    CHECK(m_weil(minusI) == Unit::i_pow(1));
    CHECK(m_weil(u(7)) == Unit());
}

TEST_CASE("bar and tilde cocycles") {
    Rng rng(5);
    Mat2Q g = random_gamma0(1, 40, rng);
    CHECK(c_bar(P, g) == Unit());
    CHECK(c_bar(g, P) == Unit());
    CHECK(c_bar(omega(), omega()) == Unit::from_sign(-1));
    CHECK(c_bar(identity(), g) == Unit());
    CHECK(c_tilde(omega(), omega()) == Unit());
    CHECK(c_tilde(P, g) == Unit());
    CHECK(c_tilde(g, P) == Unit());
    CHECK(c_tilde(u_minus(1), u_minus(1)) == Unit::root8(1));
    for (int k = 0; k < 300; ++k) {
        Mat2Q a = random_gamma0(1, 50, rng), b = random_gamma0(1, 50, rng), c = random_gamma0(1, 50, rng);
        CHECK(c_bar(a, b) * c_bar(mul(a, b), c) == c_bar(a, mul(b, c)) * c_bar(b, c));
        CHECK(c_tilde(a, b) * c_tilde(mul(a, b), c) == c_tilde(a, mul(b, c)) * c_tilde(b, c));
        CHECK(c_bar(a, b) == m_weil(mul(a, b)).inv() * m_weil(a) * m_weil(b) * c_tilde(a, b));
        Q e = c_bar(a, b).exponent();
        CHECK((e == 0 || e == 1));
    }
}

TEST_CASE("s bar, s tilde and the hat cocycle") {
    CHECK(dist(s_bar(omega()), root8c(1)) < 1e-15L);
    CHECK(dist(s_bar(minusI), root8c(-2)) < 1e-15L);
    CHECK(dist(s_bar(P), 1) < 1e-15L);
    CHECK(dist(s_tilde(omega()), 1) < 1e-15L);
    CHECK(dist(s_tilde(P), 1) < 1e-15L);
    CHECK(dist(s_tilde(minusI), 1) < 1e-15L);

    Mat2R w = omega().to_real();
    cplx z(0.3L, 0.7L), z2(-1.1L, 2.5L);
    CHECK(dist(epsilon_factor(w, z, z), 1) < 1e-15L);
    CHECK(dist(epsilon_factor(w, z, z2) * epsilon_factor(w, z2, z), 1) < 1e-15L);
    CHECK(dist(epsilon_factor(w, kZ0, cplx(0, 2)), 1) < 1e-15L);
    CHECK_THROWS_AS(epsilon_factor(w, cplx(0, -1), z), Error);

    Rng rng(9);
    CHECK(dist(c_hat(omega(), omega()), 1) < 1e-15L);
    for (int k = 0; k < 100; ++k) {
        Mat2Q g = random_gamma0(1, 50, rng);
        CHECK(dist(c_hat(P, g), 1) < 1e-14L);
        CHECK(dist(c_hat(g.to_real(), rotation(0.37L * k - 5)), 1) < 1e-13L);
        CHECK(std::fabs(std::abs(c_hat(g, random_gamma0(1, 50, rng))) - 1) < 1e-15L);
    }
}

TEST_CASE("trivializations") {
    using BK = BetaKind;
    using BF = BetaFamily;
    CHECK(beta_tilde(u(2)) == Unit());
    CHECK(beta_tilde(u_minus(2)) == Unit::root8(-1));
    CHECK(beta_tilde(omega()) == Unit());
    CHECK_THROWS_AS(beta_tilde(u(1)), Error);
    CHECK(*beta_family(omega(), BK::Tilde, BF::Asai).exact == Unit());
    CHECK(*beta_family(u_minus(2), BK::Tilde, BF::Asai).exact == Unit(Q(-1, 12)));
    CHECK(*beta_family(u(2), BK::Tilde, BF::Asai).exact == Unit(Q(-1, 6)));
    CHECK(dist(beta_family(u(2), BK::Hat, BF::GammaTheta).value, 1) < 1e-15L);
    CHECK(dist(beta_family(u(4), BK::Hat, BF::Asai).value, beta_family(u(4), BK::Hat, BF::Asai).value) < 1e-15L);

    Rng rng(21);
    for (int k = 0; k < 200; ++k) {
        Mat2Q a = random_gamma0(1, 40, rng), b = random_gamma0(1, 40, rng);
        auto cob = [&](BK kind) {
            return beta_family(a, kind, BF::Asai).exact->inv() * beta_family(b, kind, BF::Asai).exact->inv() *
                   *beta_family(mul(a, b), kind, BF::Asai).exact;
        };
        CHECK(c_bar(a, b) == cob(BK::Bar));
        CHECK(c_tilde(a, b) == cob(BK::Tilde));
    }
}

TEST_CASE("GL2 splitting and scale factors") {
    auto s1 = gl_split(diag(1, 5));
    CHECK(s1.y == 5);
    CHECK(s1.g == identity());
    auto s2 = gl_split(omega());
    CHECK(s2.y == 1);
    CHECK(s2.g == omega());
    auto s3 = gl_split(M(0, 1, -3, 0));
    CHECK(s3.y == 3);
    CHECK(s3.g == M(0, 1, -1, 0));

    CHECK(nu8_scale(-1, omega()) == Unit::i_pow(1));
    CHECK(nu8_scale(3, u(4)) == Unit());
    Rng rng(2);
    for (int k = 0; k < 50; ++k) CHECK(nu8_scale(Q(k % 7 + 1, 3), random_gamma0(1, 30, rng)) == Unit());
    CHECK(nu2_scale(-1, diag(-2, Q(-1, 2))) == Unit::from_sign(-1));
    CHECK(nu2_scale(5, omega()) == Unit());
    CHECK(nu2_scale(-1, minusI) == Unit::from_sign(-1));
    CHECK(nu_conj(omega(), u(1), CocycleKind::Bar) == Unit());
    CHECK(nu_conj(omega(), minusI, CocycleKind::Bar) == Unit());
    CHECK(nu_conj(identity(), u_minus(3), CocycleKind::Tilde) == Unit());
    CHECK_THROWS_AS(nu_conj(omega(), u(1), CocycleKind::Hat), Error);
}

TEST_CASE("GL2 cocycles") {
    Rng rng(13);
    const Mat2Q pp = Mat2Q(3, 1, 0, Q(-1, 3)); // upper triangular, a > 0, det −1
    for (int k = 0; k < 200; ++k) {
        Mat2Q h = random_gl2(rng), h2 = random_gl2(rng), h3 = random_gl2(rng);
        CHECK(big_cocycle_bar(pp, h) == Unit());
        CHECK(dist(big_cocycle_hat(pp, h), 1) < 1e-13L);
        if (h.c != 0) {
            Unit want = Unit::from_sign(hilbert_real(h.c * h.det(), pp.det())) * gamma_half(pp.det()).inv();
            CHECK(big_cocycle_tilde(h, pp) == want);
        }
        CHECK(big_cocycle_bar(h, h2) * big_cocycle_bar(mul(h, h2), h3) ==
              big_cocycle_bar(h, mul(h2, h3)) * big_cocycle_bar(h2, h3));
        CHECK(big_cocycle_tilde(h, h2) * big_cocycle_tilde(mul(h, h2), h3) ==
              big_cocycle_tilde(h, mul(h2, h3)) * big_cocycle_tilde(h2, h3));
        cplx l = big_cocycle_hat(h, h2) * big_cocycle_hat(mul(h, h2), h3);
        cplx r = big_cocycle_hat(h, mul(h2, h3)) * big_cocycle_hat(h2, h3);
        CHECK(dist(l, r) < 1e-12L);
    }
    // the GL₂ cocycles restrict to the SL₂ ones
    for (int k = 0; k < 100; ++k) {
        Mat2Q a = random_gamma0(1, 40, rng), b = random_gamma0(1, 40, rng);
        CHECK(big_cocycle_bar(a, b) == c_bar(a, b));
        CHECK(big_cocycle_tilde(a, b) == c_tilde(a, b));
        CHECK(dist(big_cocycle_hat(a, b), c_hat(a, b)) < 1e-13L);
    }
}

TEST_CASE("branches") {
    CHECK(dist(sqrt_branch(1), 1) < 1e-18L);
    CHECK(dist(sqrt_branch(-1), cplx(0, -1)) < 1e-18L);
    CHECK(dist(sqrt_branch(cplx(0, 1)), root8c(1)) < 1e-18L);
    CHECK(arg_branch(-1) == -kPi);
    CHECK_THROWS_AS(sqrt_branch(0), Error);
    CHECK(parse_kind("tilde") == CocycleKind::Tilde);
    CHECK_THROWS_AS(parse_kind("wide"), Error);
}
