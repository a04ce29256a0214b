#pragma once

#include "mtx/cocycle.hpp"

namespace mtx {

// [g, ε] in the cover picked by kind. Bar/Tilde keep ε exact; Hat keeps a unit complex.
struct MetaElem {
    CocycleKind kind = CocycleKind::Bar;
    Mat2Q g;
    Unit eps;
    cplx heps{1, 0};

    cplx eps_value() const { return kind == CocycleKind::Hat ? heps : eps.to_complex(); }
    std::string str() const;
};

MetaElem meta(const Mat2Q& g, Unit eps = {}, CocycleKind kind = CocycleKind::Bar);
MetaElem meta_hat(const Mat2Q& g, cplx eps);
MetaElem meta_identity(CocycleKind kind = CocycleKind::Bar);

MetaElem meta_mul(const MetaElem& x, const MetaElem& y, PsiSign s = {});
MetaElem meta_inv(const MetaElem& x, PsiSign s = {});
// [h,1]⁻¹ x [h,1]
MetaElem meta_conj(const MetaElem& x, const Mat2Q& h, PsiSign s = {});
// Exact for Bar/Tilde, |Δε| ≤ tol for Hat.
bool meta_equal(const MetaElem& x, const MetaElem& y, real tol = 1e-10L);

// u(t) = 2k at t = kπ, 2k+1 on (kπ, (k+1)π)
real u_step(real t);
real u_prime(real t);
// s̃ on the rotation e^{it}
cplx s_tilde_triv(real t, PsiSign s = {});

// Rotation k(t) = [[cos t, −sin t], [sin t, cos t]] as a real matrix.
Mat2R rotation(real t);

// μ₈-valued Bar cover of the orthogonal group into U(2).
Mat2C weil_deligne_embed(const MetaElem& x);

// Bar → Tilde: [g, ε] ↦ [g, m(g)ε]
MetaElem iota_bar_to_tilde(const MetaElem& x, PsiSign s = {});
// Bar → Hat: [h, ε] ↦ [h, s̄(h)⁻¹ε]
MetaElem iota_bar_to_hat(const MetaElem& x);

} // namespace mtx
