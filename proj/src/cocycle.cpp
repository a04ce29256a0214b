#include "mtx/cocycle.hpp"

#include <cmath>

namespace mtx {

const char* kind_name(CocycleKind k) {
    switch (k) {
    case CocycleKind::Bar: return "bar";
    case CocycleKind::Tilde: return "tilde";
    case CocycleKind::Hat: return "hat";
    }
    return "?";
}

CocycleKind parse_kind(const std::string& s) {
    if (s == "bar") return CocycleKind::Bar;
    if (s == "tilde") return CocycleKind::Tilde;
    if (s == "hat") return CocycleKind::Hat;
    throw Error(ErrorKind::InvalidParams, "unknown cocycle kind '" + s + "' (bar|tilde|hat)");
}

real arg_branch(cplx w) {
    real a = std::atan2(w.imag(), w.real());
    if (a >= kPi) a = -kPi;
    // atan2 gives +π on the negative axis with +0 imaginary part
    if (w.imag() == 0 && w.real() < 0) a = -kPi;
    return a;
}

cplx sqrt_branch(cplx w) {
    if (w == cplx(0)) throw Error(ErrorKind::ZeroInput, "sqrt of zero");
    real r = std::sqrt(std::abs(w));
    real t = arg_branch(w) / 2;
    return {r * std::cos(t), r * std::sin(t)};
}

int x_sign(const Mat2Q& g) { return g.c == 0 ? sgn(g.d) : sgn(g.c); }

Unit m_weil(const Mat2Q& h, PsiSign s) {
    Mat2Q g = h.det() == 1 ? h : gl_split(h).g;
    if (g.c == 0) return Unit(Q(s.s * (1 - sgn(g.d)), 4));
    return Unit(Q(-s.s * sgn(g.c), 4));
}

Unit c_bar(const Mat2Q& g1, const Mat2Q& g2) {
    Mat2Q g3 = mul(g1, g2);
    int x1 = x_sign(g1), x2 = x_sign(g2), x3 = x_sign(g3);
    int v = hilbert_real(Q(x1), Q(x2)) * hilbert_real(Q(-x1 * x2), Q(x3));
    return Unit::from_sign(v);
}

Unit c_tilde(const Mat2Q& g1, const Mat2Q& g2, PsiSign s) {
    Q c3 = g1.c * g2.a + g1.d * g2.c;
    int e = sgn(g1.c) * sgn(g2.c) * sgn(c3);
    return Unit(Q(s.s * e, 4));
}

cplx s_bar(const Mat2R& g) {
    real y = g.det();
    if (y == 0) throw Error(ErrorKind::SingularMatrix, "s_bar of singular matrix");
    cplx w(g.d / y, g.c / y);
    return sqrt_branch(w) / std::sqrt(std::abs(w));
}

cplx s_bar(const Mat2Q& h) {
    // det is exactly 1 after the split, so skip the floating-point determinant
    Mat2R g = (h.det() == 1 ? h : gl_split(h).g).to_real();
    cplx w(g.d, g.c);
    return sqrt_branch(w) / std::sqrt(std::abs(w));
}

cplx s_tilde(const Mat2Q& g, PsiSign s) { return m_weil(g, s).to_complex() * s_bar(g); }

cplx epsilon_factor(const Mat2R& g, cplx zprime, cplx z) {
    if (!(zprime.imag() > 0) || !(z.imag() > 0)) throw Error(ErrorKind::DomainError, "epsilon_factor needs points in H");
    if (g.c == 0) return 1;
    real t = (arg_branch(g.c * zprime + g.d) - arg_branch(g.c * z + g.d)) / 2;
    return {std::cos(t), std::sin(t)};
}

cplx c_hat(const Mat2R& g1, const Mat2R& g2, cplx z) { return epsilon_factor(g1, z, g2.act(z)); }

cplx c_hat(const Mat2Q& g1, const Mat2Q& g2, cplx z) { return c_hat(g1.to_real(), g2.to_real(), z); }

Mat2R p_of_z(cplx z) {
    if (!(z.imag() > 0)) throw Error(ErrorKind::DomainError, "p_z needs z in H");
    real r = std::sqrt(z.imag());
    return {r, z.real() / r, 0, 1 / r};
}

Unit beta_tilde(const Mat2Q& r) {
    if (!is_member(r, {SubgroupId::Tag::GammaTheta, 1})) throw Error(ErrorKind::NotInGroup, r.str() + " not in Gamma_theta");
    if (r.c == 0) return Unit();
    return gauss_sum_closed(to_int(r.d), to_int(r.c));
}

BetaValue beta_family(const Mat2Q& r, BetaKind k, BetaFamily f) {
    Unit bar;
    if (f == BetaFamily::Asai) {
        bar = Unit(-asai_mu(r));
        if (k == BetaKind::Tilde) {
            Unit t = bar * m_weil(r);
            return {t, t.to_complex()};
        }
    } else {
        Unit t = beta_tilde(r);
        if (k == BetaKind::Tilde) return {t, t.to_complex()};
        bar = t * m_weil(r).inv();
    }
    if (k == BetaKind::Bar) return {bar, bar.to_complex()};
    return {std::nullopt, bar.to_complex() / s_bar(r)};
}

GlSplit gl_split(const Mat2Q& h) {
    Q y = h.det();
    if (y == 0) throw Error(ErrorKind::SingularMatrix, "gl_split of " + h.str());
    return {y, Mat2Q(h.a, h.b, h.c / y, h.d / y)};
}

Mat2Q scale_twist(const Mat2Q& g, const Q& y) { return {g.a, g.b * y, g.c / y, g.d}; }

Unit gamma_half(const Q& y, PsiSign s) {
    if (y == 0) throw Error(ErrorKind::ZeroInput, "gamma of zero");
    return y > 0 ? Unit() : Unit(Q(-s.s, 2));
}

Unit nu8_scale(const Q& y, const Mat2Q& g, PsiSign s) {
    if (g.c == 0) return Unit::from_sign(hilbert_real(y, g.a));
    return Unit::from_sign(hilbert_real(g.c, y)) * gamma_half(y, s).inv();
}

Unit nu2_scale(const Q& y, const Mat2Q& g) {
    if (g.c == 0) return Unit::from_sign(hilbert_real(y, g.a));
    return Unit();
}

Unit nu_conj(const Mat2Q& h, const Mat2Q& g, CocycleKind kind, PsiSign s) {
    if (h.det() != 1) throw Error(ErrorKind::InvalidParams, "nu_conj needs h in SL2");
    Mat2Q hi = inv(h), gh = mul(g, h);
    switch (kind) {
    case CocycleKind::Bar: return c_bar(hi, gh) * c_bar(g, h);
    case CocycleKind::Tilde: return c_tilde(hi, gh, s) * c_tilde(g, h, s);
    case CocycleKind::Hat: break;
    }
    throw Error(ErrorKind::HatUnsupported, "conjugation twist is not defined for the Hat kind");
}

Unit big_cocycle_bar(const Mat2Q& h1, const Mat2Q& h2) {
    GlSplit s1 = gl_split(h1), s2 = gl_split(h2);
    return nu2_scale(s2.y, s1.g) * c_bar(scale_twist(s1.g, s2.y), s2.g);
}

Unit big_cocycle_tilde(const Mat2Q& h1, const Mat2Q& h2, PsiSign s) {
    GlSplit s1 = gl_split(h1), s2 = gl_split(h2);
    return nu8_scale(s2.y, s1.g, s) * c_tilde(scale_twist(s1.g, s2.y), s2.g, s);
}

cplx big_cocycle_hat(const Mat2Q& h1, const Mat2Q& h2) {
    cplx v = big_cocycle_bar(h1, h2).to_complex() * s_bar(h1) * s_bar(h2) / s_bar(mul(h1, h2));
    return v / std::abs(v);
}

CocycleValue big_cocycle(const Mat2Q& h1, const Mat2Q& h2, CocycleKind kind, PsiSign s) {
    switch (kind) {
    case CocycleKind::Bar: {
        Unit u = big_cocycle_bar(h1, h2);
        return {kind, u, u.to_complex()};
    }
    case CocycleKind::Tilde: {
        Unit u = big_cocycle_tilde(h1, h2, s);
        return {kind, u, u.to_complex()};
    }
    case CocycleKind::Hat: return {kind, Unit(), big_cocycle_hat(h1, h2)};
    }
    return {};
}

CocycleValue small_cocycle(const Mat2Q& g1, const Mat2Q& g2, CocycleKind kind, cplx z) {
    switch (kind) {
    case CocycleKind::Bar: {
        Unit u = c_bar(g1, g2);
        return {kind, u, u.to_complex()};
    }
    case CocycleKind::Tilde: {
        Unit u = c_tilde(g1, g2);
        return {kind, u, u.to_complex()};
    }
    case CocycleKind::Hat: return {kind, Unit(), c_hat(g1, g2, z)};
    }
    return {};
}

} // namespace mtx
