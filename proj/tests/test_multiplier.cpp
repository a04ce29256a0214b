#include "util.hpp"

using namespace mtx;
using mtx::test::M;
using mtx::test::random_theta;

TEST_CASE("lambda closed form") {
    CHECK(lambda_theta(M(3, 4, 2, 3)) == Unit::i_pow(3));
    CHECK(lambda_theta(omega()) == Unit::root8(-1));
    CHECK(lambda_theta(identity()) == Unit());
    CHECK_THROWS_AS(lambda_theta(u(1)), Error);
    Rng rng(3);
    for (int k = 0; k < 2000; ++k) {
        Mat2Q r = random_theta(1, 3000, rng);
        CHECK(lambda_closed(r) == lambda_definitional(r));
    }
    for (int k = 0; k < 1000; ++k) {
        Mat2Q a = random_theta(1, 3000, rng), b = random_theta(1, 3000, rng);
        CHECK(lambda_closed(a) * lambda_closed(b) == lambda_closed(mul(a, b)) * c_bar(a, b));
    }
}

TEST_CASE("lambda on the cover") {
    CHECK(lambda_bar(meta(omega())) == Unit::root8(-1));
    Rng rng(5);
    for (int k = 0; k < 500; ++k) {
        Mat2Q r = random_theta(1, 500, rng);
        CHECK(lambda_bar(meta(r, Unit::from_sign(-1))) == Unit::from_sign(-1) * lambda_theta(r));
        auto x = meta(r, Unit::from_sign(k % 2 ? 1 : -1)), y = meta(random_theta(1, 500, rng));
        CHECK(lambda_bar(meta_mul(x, y)) == lambda_bar(x) * lambda_bar(y));
    }
    CHECK_THROWS_AS(lambda_bar(meta(omega(), {}, CocycleKind::Tilde)), Error);
}

TEST_CASE("lambda twisted by a character") {
    auto l3 = DirichletChar::legendre(3);
    Rng rng(6);
    Mat2Q r = u_minus(18);
    CHECK(lambda_bar_chi(meta(r), l3) == lambda_theta(r));
    for (int k = 0; k < 500; ++k) {
        Mat2Q g = random_theta(1, 500, rng);
        CHECK(lambda_bar_chi(meta(g), DirichletChar::trivial()) == lambda_bar(meta(g)));
        auto x = meta(random_theta(9, 900, rng), Unit::from_sign(k % 2 ? 1 : -1)), y = meta(random_theta(9, 900, rng));
        CHECK(lambda_bar_chi(meta_mul(x, y), l3) == lambda_bar_chi(x, l3) * lambda_bar_chi(y, l3));
    }
    CHECK_THROWS_AS(lambda_bar_chi(meta(u_minus(2)), l3), Error);
}

TEST_CASE("example tables") {
    using T = MultiplierId::Tag;
    CHECK(nu_table({T::NuTheta, 2}, u_minus(4)) == Unit());
    CHECK(nu_table({T::NuThetaF, 1}, u(8)) == Unit());
    // scale 2 reproduces the classical (c/d)ε_d⁻¹ on Γ₀(4)
    Rng rng(12);
    for (int k = 0; k < 2000; ++k) {
        Mat2Q r = random_gamma0(4, 5000, rng);
        Z c = to_int(r.c), d = to_int(r.d);
        CHECK(nu_table({T::NuTheta, 2}, r) == Unit::from_sign(kronecker(c, d)) * eps_d(d).inv());
    }
    CHECK(parse_multiplier("nu_thetaM:3").t == 3);
    CHECK(parse_multiplier("lambda").tag == T::Lambda);
    CHECK_THROWS_AS(parse_multiplier("nu_theta:0"), Error);
    CHECK_THROWS_AS(nu_table({T::NuThetaM, 1}, u(1)), Error);
    CHECK_THROWS_AS(nu_table({T::NuThetaF, 1}, u_minus(1)), Error);
}

TEST_CASE("delta characters") {
    CHECK(delta_char(DeltaKind::M, u(2)) == Unit());
    CHECK(delta_char(DeltaKind::M, M(-1, 0, 0, -1)) == Unit());
    CHECK(delta_char(DeltaKind::M, u_minus(2)) == Unit::i_pow(1));
    CHECK(delta_char(DeltaKind::F, u(2)) == Unit::i_pow(1));
    CHECK_THROWS_AS(delta_char(DeltaKind::M, omega()), Error);
    Rng rng(14);
    auto g2 = [&] {
        for (;;) {
            Mat2Q g = random_gamma0(2, 400, rng);
            if (is_member(g, {SubgroupId::Tag::Gamma2, 1})) return g;
        }
    };
    for (int k = 0; k < 500; ++k) {
        Mat2Q a = g2(), b = g2();
        for (auto w : {DeltaKind::M, DeltaKind::F}) CHECK(delta_char(w, mul(a, b)) == delta_char(w, a) * delta_char(w, b));
    }
}

TEST_CASE("conjugated multipliers") {
    Rng rng(15);
    for (int k = 0; k < 300; ++k) {
        Mat2Q r = random_theta(1, 400, rng);
        auto x = meta(r);
        CHECK(lambda_slash(meta_identity(), x) == lambda_bar(x));
    }
    for (int k = 0; k < 300; ++k) {
        Mat2Q r = random_gamma0(4, 400, rng);
        CHECK(lambda_slash(meta(diag(2, 1)), meta(r)) == nu_table({MultiplierId::Tag::NuTheta, 2}, r));
    }
    // 𝔴 = u(1) on Γ(2): the twist is δ_M⁻¹ (u(1)u₋(2)u(−1) = [[3,−2],[2,−1]] fixes the sign)
    CHECK(mul(mul(u(1), u_minus(2)), u(-1)) == M(3, -2, 2, -1));
    CHECK(lambda_slash(meta(u(1)), meta(u_minus(2))) == lambda_theta(u_minus(2)) * delta_char(DeltaKind::M, u_minus(2)).inv());
    for (int k = 0; k < 300; ++k) {
        Mat2Q r = random_gamma0(2, 400, rng);
        if (!is_member(r, {SubgroupId::Tag::Gamma2, 1})) continue;
        CHECK(lambda_slash(meta(u(1)), meta(r)) == lambda_theta(r) * delta_char(DeltaKind::M, r).inv());
    }
    CHECK_THROWS_AS(lambda_slash(meta(u(1)), meta(omega())), Error);
}
