#include "mtx/metagroup.hpp"

#include <cmath>
#include <sstream>

namespace mtx {

std::string MetaElem::str() const {
    std::ostringstream os;
    os << "[" << g.str() << "; ";
    if (kind == CocycleKind::Hat)
        os << heps.real() << (heps.imag() < 0 ? "" : "+") << heps.imag() << "i";
    else
        os << eps.str();
    os << "]_" << kind_name(kind);
    return os.str();
}

MetaElem meta(const Mat2Q& g, Unit eps, CocycleKind kind) {
    if (g.det() == 0) throw Error(ErrorKind::SingularMatrix, g.str());
    MetaElem x{kind, g, eps, eps.to_complex()};
    if (kind == CocycleKind::Hat) x.eps = Unit();
    return x;
}

MetaElem meta_hat(const Mat2Q& g, cplx eps) {
    if (g.det() == 0) throw Error(ErrorKind::SingularMatrix, g.str());
    return {CocycleKind::Hat, g, Unit(), eps / std::abs(eps)};
}

MetaElem meta_identity(CocycleKind kind) { return {kind, identity(), Unit(), cplx(1)}; }

MetaElem meta_mul(const MetaElem& x, const MetaElem& y, PsiSign s) {
    if (x.kind != y.kind) throw Error(ErrorKind::KindMismatch, std::string(kind_name(x.kind)) + " vs " + kind_name(y.kind));
    MetaElem r{x.kind, mul(x.g, y.g), Unit(), cplx(1)};
    if (x.kind == CocycleKind::Hat) {
        cplx v = big_cocycle_hat(x.g, y.g) * x.heps * y.heps;
        r.heps = v / std::abs(v);
    } else {
        r.eps = big_cocycle(x.g, y.g, x.kind, s).exact * x.eps * y.eps;
        r.heps = r.eps.to_complex();
    }
    return r;
}

MetaElem meta_inv(const MetaElem& x, PsiSign s) {
    Mat2Q gi = inv(x.g);
    MetaElem r{x.kind, gi, Unit(), cplx(1)};
    if (x.kind == CocycleKind::Hat) {
        cplx v = 1.0L / (x.heps * big_cocycle_hat(x.g, gi));
        r.heps = v / std::abs(v);
    } else {
        r.eps = (x.eps * big_cocycle(x.g, gi, x.kind, s).exact).inv();
        r.heps = r.eps.to_complex();
    }
    return r;
}

MetaElem meta_conj(const MetaElem& x, const Mat2Q& h, PsiSign s) {
    if (x.kind == CocycleKind::Hat) throw Error(ErrorKind::HatUnsupported, "conjugation in the Hat cover");
    MetaElem hb = meta(h, Unit(), x.kind);
    return meta_mul(meta_mul(meta_inv(hb, s), x, s), hb, s);
}

bool meta_equal(const MetaElem& x, const MetaElem& y, real tol) {
    if (x.kind != y.kind || !(x.g == y.g)) return false;
    if (x.kind == CocycleKind::Hat) return std::abs(x.heps - y.heps) <= tol;
    return x.eps == y.eps;
}

real u_step(real t) {
    real k = std::floor(t / kPi);
    if (t == k * kPi) return 2 * k;
    return 2 * k + 1;
}

real u_prime(real t) { return u_step(t) + 2 * t / kPi; }

cplx s_tilde_triv(real t, PsiSign s) {
    real a = -kPi * s.s * u_prime(t) / 4;
    return {std::cos(a), std::sin(a)};
}

Mat2R rotation(real t) { return {std::cos(t), -std::sin(t), std::sin(t), std::cos(t)}; }

namespace {

// k = [[a, −b], [b, a]] with a² + b² = 1
Mat2C embed_rotation(const Mat2Q& k, const Unit& eps) {
    cplx w(to_real(k.a), to_real(k.c));
    cplx v = eps.inv().to_complex() * sqrt_branch(w);
    return {v, 0, 0, std::conj(v)};
}

bool is_rotation(const Mat2Q& k) { return k.a == k.d && k.b == -k.c && k.a * k.a + k.c * k.c == 1; }

} // namespace

Mat2C weil_deligne_embed(const MetaElem& x) {
    if (x.kind != CocycleKind::Bar) throw Error(ErrorKind::KindMismatch, "embedding needs the Bar cover");
    if (is_rotation(x.g)) return embed_rotation(x.g, x.eps);
    Mat2Q k = mul(h_minus1(), x.g);
    if (!is_rotation(k)) throw Error(ErrorKind::NotOrthogonal, x.g.str());
    // [h₋₁k, ε] = [h₋₁, i]·[k, ε/(i·C̄(h₋₁, k))]
    Mat2C w{0, -1, 1, 0};
    return w * embed_rotation(k, x.eps * Unit::i_pow(-1) * big_cocycle_bar(h_minus1(), k).inv());
}

MetaElem iota_bar_to_tilde(const MetaElem& x, PsiSign s) {
    if (x.kind != CocycleKind::Bar) throw Error(ErrorKind::KindMismatch, "iota expects a Bar element");
    return meta(x.g, m_weil(x.g, s) * x.eps, CocycleKind::Tilde);
}

MetaElem iota_bar_to_hat(const MetaElem& x) {
    if (x.kind != CocycleKind::Bar) throw Error(ErrorKind::KindMismatch, "iota expects a Bar element");
    return meta_hat(x.g, x.eps.to_complex() / s_bar(x.g));
}

} // namespace mtx
