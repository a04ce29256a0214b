#pragma once

#include <optional>

#include "mtx/numth.hpp"

namespace mtx {

enum class CocycleKind { Bar, Tilde, Hat };

const char* kind_name(CocycleKind k);
CocycleKind parse_kind(const std::string& s);

// ψ = ψ₀^𝔢; only the sign of 𝔢 matters here.
struct PsiSign {
    int s = 1;
};

// Bar/Tilde values are exact; Hat values carry only the complex number.
struct CocycleValue {
    CocycleKind kind = CocycleKind::Bar;
    Unit exact;
    cplx value{1, 0};
};

inline const cplx kZ0{0, 1};

// Arg in [−π, π)
real arg_branch(cplx w);
cplx sqrt_branch(cplx w);

int x_sign(const Mat2Q& g);
Unit m_weil(const Mat2Q& g, PsiSign s = {}); // det ≠ 1 uses the SL₂ part of gl_split
Unit c_bar(const Mat2Q& g1, const Mat2Q& g2);
Unit c_tilde(const Mat2Q& g1, const Mat2Q& g2, PsiSign s = {});

cplx s_bar(const Mat2R& g);
cplx s_bar(const Mat2Q& g);
cplx s_tilde(const Mat2Q& g, PsiSign s = {});

cplx epsilon_factor(const Mat2R& g, cplx zprime, cplx z);
cplx c_hat(const Mat2R& g1, const Mat2R& g2, cplx z = kZ0);
cplx c_hat(const Mat2Q& g1, const Mat2Q& g2, cplx z = kZ0);

// p_z = [[√y, x/√y], [0, 1/√y]] for z = x + iy, so p_z(i) = z
Mat2R p_of_z(cplx z);

Unit beta_tilde(const Mat2Q& r);

enum class BetaKind { Bar, Tilde, Hat };
enum class BetaFamily { GammaTheta, Asai };
struct BetaValue {
    std::optional<Unit> exact;
    cplx value;
};
BetaValue beta_family(const Mat2Q& r, BetaKind k, BetaFamily f);

struct GlSplit {
    Q y;
    Mat2Q g;
};
GlSplit gl_split(const Mat2Q& h);
Mat2Q scale_twist(const Mat2Q& g, const Q& y); // g^y = [[a, by], [c/y, d]]

// γ(y, ψ^{1/2}): 1 for y > 0, e^{−iπ𝔢/2} for y < 0
Unit gamma_half(const Q& y, PsiSign s = {});
Unit nu8_scale(const Q& y, const Mat2Q& g, PsiSign s = {});
Unit nu2_scale(const Q& y, const Mat2Q& g);
// Twist under conjugation g -> h⁻¹gh for h ∈ SL₂.
Unit nu_conj(const Mat2Q& h, const Mat2Q& g, CocycleKind kind, PsiSign s = {});

Unit big_cocycle_bar(const Mat2Q& h1, const Mat2Q& h2);
Unit big_cocycle_tilde(const Mat2Q& h1, const Mat2Q& h2, PsiSign s = {});
cplx big_cocycle_hat(const Mat2Q& h1, const Mat2Q& h2);
CocycleValue big_cocycle(const Mat2Q& h1, const Mat2Q& h2, CocycleKind kind, PsiSign s = {});

// SL₂-level cocycles as CocycleValue (Hat at basepoint z).
CocycleValue small_cocycle(const Mat2Q& g1, const Mat2Q& g2, CocycleKind kind, cplx z = kZ0);

} // namespace mtx
