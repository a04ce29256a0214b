#include "util.hpp"

using namespace mtx;
using mtx::test::M;

TEST_CASE("products and inverses") {
    CHECK(mul(u(1), u_minus(1)) == M(2, 1, 1, 1));
    CHECK(mul(omega(), omega()) == M(-1, 0, 0, -1));
    CHECK(inv(identity()) == identity());
    CHECK(inv(omega()) == M(0, 1, -1, 0));
    CHECK(inv(diag(2, Q(1, 2))) == diag(Q(1, 2), 2));
    Rng rng(7);
    for (int k = 0; k < 200; ++k) {
        Mat2Q g = random_gamma0(1, 1000, rng);
        CHECK(mul(g, inv(g)) == identity());
        CHECK(g.det() == 1);
    }
    CHECK_THROWS_AS(inv(M(1, 2, 2, 4)), Error);
}

TEST_CASE("rational parsing") {
    CHECK(parse_rational("3/6") == Q(1, 2));
    CHECK(parse_rational("-4") == Q(-4));
    CHECK(parse_rational("0.25") == Q(1, 4));
    CHECK(parse_matrix("1,1/2,0,2") == Mat2Q(1, Q(1, 2), 0, 2));
    CHECK_THROWS_AS(parse_matrix("1,2,3"), Error);
    CHECK(to_string(Q(-3, 9)) == "-1/3");
}

TEST_CASE("subgroup membership") {
    using T = SubgroupId::Tag;
    CHECK(is_member(omega(), {T::GammaTheta, 1}));
    CHECK_FALSE(is_member(u(1), {T::GammaTheta, 1}));
    CHECK(is_member(M(1, 0, 4, 1), {T::Gamma0, 4}));
    CHECK_FALSE(is_member(M(1, 0, 2, 1), {T::Gamma0, 4}));
    CHECK(is_member(u(2), {T::Gamma2, 1}));
    CHECK_FALSE(is_member(diag(2, Q(1, 2)), {T::SL2Z, 1}));
    CHECK(in_theta_pm(h_minus1()));
    CHECK(in_theta_pm(mul(h_minus1(), omega())));
    CHECK_FALSE(in_theta_pm(mul(h_minus1(), u(1))));
}

TEST_CASE("iwasawa decomposition") {
    auto close = [](const Mat2R& x, const Mat2R& y) {
        return std::fabs(x.a - y.a) + std::fabs(x.b - y.b) + std::fabs(x.c - y.c) + std::fabs(x.d - y.d) < 1e-15L;
    };
    auto id = iwasawa(identity().to_real());
    CHECK(close(id.p, Mat2R{}));
    CHECK(close(id.k, Mat2R{}));
    auto w = iwasawa(omega().to_real());
    CHECK(close(w.p, Mat2R{}));
    CHECK(close(w.k, omega().to_real()));
    auto h = iwasawa(Mat2R{2, 0, 0, 0.5L});
    CHECK(close(h.p, Mat2R{2, 0, 0, 0.5L}));
    CHECK(close(h.k, Mat2R{}));
    Rng rng(3);
    for (int k = 0; k < 100; ++k) {
        Mat2R g = random_gamma0(1, 100, rng).to_real();
        auto pk = iwasawa(g);
        CHECK(close(pk.p * pk.k, g));
        CHECK(pk.p.c == 0);
        CHECK(std::fabs(pk.k.a * pk.k.a + pk.k.c * pk.k.c - 1) < 1e-15L);
    }
}

TEST_CASE("theta coset representatives") {
    CHECK(theta_coset_reps(1) == std::vector<Mat2Q>{u(1), identity(), u_minus(-1)});
    CHECK(theta_coset_reps(3) == std::vector<Mat2Q>{u(3), identity(), u_minus(-9)});
    CHECK(theta_coset_reps(2) == std::vector<Mat2Q>{u(1), identity()});
    auto a = theta_coset_index(u(3), 3);
    CHECK(a.i == 0);
    CHECK(a.s == identity());
    auto b = theta_coset_index(identity(), 3);
    CHECK(b.i == 1);
    Rng rng(11);
    for (long N : {1L, 2L, 3L, 4L, 5L}) {
        for (int k = 0; k < 100; ++k) {
            Mat2Q g = random_gamma0(N * N, 500, rng);
            auto ci = theta_coset_index(g, N);
            CHECK(mul(ci.s, theta_coset_reps(N)[static_cast<size_t>(ci.i)]) == g);
        }
    }
    CHECK_THROWS_AS(theta_coset_index(u_minus(1), 3), Error);
}

TEST_CASE("egcd") {
    auto e = egcd(240, 46);
    CHECK(e.g == 2);
    CHECK(e.x * 240 + e.y * 46 == 2);
    auto f = egcd(-7, 3);
    CHECK(f.g == 1);
    CHECK(f.x * -7 + f.y * 3 == 1);
}
