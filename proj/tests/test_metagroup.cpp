#include "util.hpp"

using namespace mtx;
using mtx::test::dist;
using mtx::test::M;
using mtx::test::root8c;

namespace {

// Pythagorean rotation with angle in (−π, π]
Mat2Q pyth(long m, long n, int quadrant) {
    Q a(m * m - n * n, m * m + n * n), b(2 * m * n, m * m + n * n);
    Mat2Q k(a, -b, b, a);
    for (int q = 0; q < quadrant; ++q) k = mul(omega(), k);
    return k;
}

real angle(const Mat2Q& k) { return std::atan2(to_real(k.c), to_real(k.a)); }

Mat2Q random_rotation(Rng& rng) {
    std::uniform_int_distribution<long> mn(1, 9);
    long m = mn(rng), n = mn(rng);
    if (m == n) ++m;
    return pyth(m, n, std::uniform_int_distribution<int>(0, 3)(rng));
}

real max_diff(const Mat2C& x, const Mat2C& y) { return max_abs_diff(x, y); }

} // namespace

TEST_CASE("products in the covers") {
    auto w = meta(omega());
    auto w2 = meta_mul(w, w);
    CHECK(w2.g == M(-1, 0, 0, -1));
    CHECK(w2.eps == Unit::from_sign(-1));
    auto x = meta(M(3, 4, 2, 3), Unit::from_sign(-1));
    auto ix = meta_mul(meta_identity(), x);
    CHECK(ix.g == x.g);
    CHECK(ix.eps == x.eps);
    auto h = meta(h_minus1(), Unit::i_pow(1));
    auto h2 = meta_mul(h, h);
    CHECK(h2.g == identity());
    CHECK(h2.eps == Unit::from_sign(-1));
    CHECK_THROWS_AS(meta_mul(meta(omega()), meta(omega(), {}, CocycleKind::Tilde)), Error);
}

TEST_CASE("inverses and associativity") {
    auto i = meta_inv(meta_identity());
    CHECK(i.g == identity());
    CHECK(i.eps == Unit());
    auto wi = meta_inv(meta(omega()));
    CHECK(wi.g == inv(omega()));
    CHECK(wi.eps == c_bar(omega(), inv(omega())).inv());
    Rng rng(4);
    for (auto kind : {CocycleKind::Bar, CocycleKind::Tilde}) {
        for (int k = 0; k < 300; ++k) {
            Mat2Q g = k % 2 ? random_gamma0(1, 60, rng) : mul(random_gamma0(1, 20, rng), diag(1, Q(-2, 3)));
            auto x = meta(g, Unit::root8(k % 8), kind);
            auto e = meta_mul(x, meta_inv(x));
            CHECK(e.g == identity());
            CHECK(e.eps == Unit());
            auto y = meta(random_gamma0(1, 60, rng), {}, kind), z = meta(mul(h_minus1(), random_gamma0(1, 60, rng)), {}, kind);
            CHECK(meta_equal(meta_mul(meta_mul(x, y), z), meta_mul(x, meta_mul(y, z))));
        }
    }
    for (int k = 0; k < 200; ++k) {
        auto x = meta_hat(random_gamma0(1, 60, rng), std::polar(1.0L, 0.1L * k));
        auto y = meta_hat(mul(h_minus1(), random_gamma0(1, 60, rng)), 1);
        auto z = meta_hat(random_gamma0(1, 60, rng), cplx(0, 1));
        CHECK(meta_equal(meta_mul(meta_mul(x, y), z), meta_mul(x, meta_mul(y, z))));
        CHECK(meta_equal(meta_mul(x, meta_inv(x)), meta_identity(CocycleKind::Hat)));
        CHECK(std::fabs(std::abs(meta_mul(x, y).heps) - 1) < 1e-15L);
    }
}

TEST_CASE("conjugation") {
    Rng rng(8);
    for (int k = 0; k < 200; ++k) {
        Mat2Q r = random_gamma0(1, 80, rng);
        auto x = meta(r, Unit::from_sign(k % 2 ? 1 : -1));
        auto c = meta_conj(x, h_minus1());
        CHECK(c.g == mul(mul(h_minus1(), r), h_minus1()));
        CHECK(c.eps == nu2_scale(-1, r) * x.eps);
        auto same = meta_conj(x, identity());
        CHECK(same.g == x.g);
        CHECK(same.eps == x.eps);
    }
    auto t = meta_conj(meta(M(3, 4, 2, 3), {}, CocycleKind::Tilde), h_minus1());
    CHECK(t.g == M(3, -4, -2, 3));
    CHECK(t.eps == Unit::i_pow(1));
    CHECK_THROWS_AS(meta_conj(meta_hat(omega(), 1), h_minus1()), Error);
}

TEST_CASE("trivialization on the rotation group") {
    CHECK(u_prime(0) == 0);
    CHECK(std::fabs(u_prime(kPi / 2) - 2) < 1e-15L);
    for (real t = -7; t < 7; t += 0.37L) CHECK(std::fabs(u_prime(t + kPi) - u_prime(t) - 4) < 1e-12L);
    Rng rng(17);
    for (int k = 0; k < 300; ++k) {
        Mat2Q k1 = random_rotation(rng), k2 = random_rotation(rng), k12 = mul(k1, k2);
        real t1 = angle(k1), t2 = angle(k2), t12 = angle(k12);
        cplx cob = s_tilde_triv(t12) / (s_tilde_triv(t1) * s_tilde_triv(t2));
        CHECK(dist(c_tilde(k1, k2).to_complex(), cob) < 1e-12L);
        cplx bar = s_bar(k12) / (s_bar(k1) * s_bar(k2));
        CHECK(dist(c_bar(k1, k2).to_complex(), bar) < 1e-12L);
        // both trivialize c̃, so they differ by a character of SO₂
        auto rho = [](const Mat2Q& k) { return s_tilde_triv(angle(k)) / s_tilde(k); };
        CHECK(dist(rho(k12), rho(k1) * rho(k2)) < 1e-12L);
    }
}

TEST_CASE("Weil-Deligne embedding") {
    CHECK(max_diff(weil_deligne_embed(meta_identity()), Mat2C{}) < 1e-18L);
    CHECK(max_diff(weil_deligne_embed(meta(omega())), Mat2C{root8c(1), 0, 0, root8c(-1)}) < 1e-15L);
    Mat2C h = weil_deligne_embed(meta(h_minus1(), Unit::i_pow(1)));
    CHECK(max_diff(h * h, Mat2C{-1, 0, 0, -1}) < 1e-15L);
    CHECK(max_diff(h * h, weil_deligne_embed(meta(identity(), Unit::from_sign(-1)))) < 1e-15L);
    CHECK_THROWS_AS(weil_deligne_embed(meta(u(1))), Error);
    // [1, i] is central upstairs but its image does not commute with ω_σ,
    // so the embedding lives on the subgroup generated by [h₋₁, i] and [k, ±1]
    Mat2C ci = weil_deligne_embed(meta(identity(), Unit::i_pow(1)));
    CHECK(max_diff(ci * h, h * ci) > 1);
    Rng rng(23);
    const Mat2Q special[] = {identity(), mul(identity(), Mat2Q(-1, 0, 0, -1)), omega(), Mat2Q(0, 1, -1, 0)};
    for (int k = 0; k < 500; ++k) {
        Mat2Q a = k % 7 == 0 ? special[k % 4] : random_rotation(rng), b = k % 5 == 0 ? special[k % 4] : random_rotation(rng);
        if (k % 2) a = mul(h_minus1(), a);
        if (k % 3 == 0) b = mul(b, h_minus1());
        auto lift = [&](const Mat2Q& g, int s) { return meta(g, g.det() == 1 ? Unit::from_sign(s) : Unit::i_pow(s)); };
        auto x = lift(a, k % 4 < 2 ? 1 : -1), y = lift(b, k % 3 ? 1 : -1);
        CHECK(max_diff(weil_deligne_embed(meta_mul(x, y)), weil_deligne_embed(x) * weil_deligne_embed(y)) < 1e-12L);
    }
}

TEST_CASE("isomorphisms between covers") {
    Rng rng(31);
    for (int k = 0; k < 300; ++k) {
        Mat2Q a = random_gamma0(1, 60, rng), b = random_gamma0(1, 60, rng);
        if (k % 2) a = mul(a, diag(1, Q(-3, 2)));
        if (k % 3 == 0) b = mul(h_minus1(), b);
        auto x = meta(a, Unit::from_sign(k % 4 < 2 ? 1 : -1)), y = meta(b);
        CHECK(meta_equal(iota_bar_to_tilde(meta_mul(x, y)), meta_mul(iota_bar_to_tilde(x), iota_bar_to_tilde(y))));
        CHECK(meta_equal(iota_bar_to_hat(meta_mul(x, y)), meta_mul(iota_bar_to_hat(x), iota_bar_to_hat(y))));
    }
}
