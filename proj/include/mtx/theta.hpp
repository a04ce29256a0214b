#pragma once

#include <vector>

#include "mtx/metagroup.hpp"

namespace mtx {

enum class ThetaVariant { Plain, Minus, Fermionic };

const char* variant_name(ThetaVariant v);
ThetaVariant parse_variant(const std::string& s);

struct ThetaSpec {
    ThetaVariant variant = ThetaVariant::Plain;
    int kappa = 1;
    DirichletChar chi;
    long t = 1;
};

// Throws InvalidParams unless κ ∈ {1,3} matches the parity of χ (and N is odd for the fermionic series).
void validate_theta_spec(const ThetaSpec& spec);

struct SeriesValue {
    cplx value;
    long terms = 0;
    real tol = 0;
};

inline constexpr real kDefaultTol = 1e-16L;

long theta_truncation(real t_im, real tol);
SeriesValue theta_series(const ThetaSpec& spec, cplx z, real tol = kDefaultTol);
SeriesValue eta(cplx z, real tol = kDefaultTol);

// J_{κ/2}(x̄, z) = ε⁻¹√(sgn(det h)(cz+d)), times (cz+d) for κ = 3.
cplx j_kappa(const MetaElem& x, cplx z, int kappa = 1);
// diag(J_{1/2}, conj J_{1/2}) for sign > 0, the cubes for sign < 0.
Mat2C j_delta(const MetaElem& x, cplx z, int sign);

// det(𝔴)^{κ/4} J_{κ/2}(w̄, z)⁻¹ θ(𝔴z)
cplx slash(const ThetaSpec& spec, const MetaElem& wbar, cplx z, real tol = kDefaultTol);

// Slashed plain series at the coset representatives.
std::vector<cplx> theta_vector(long N, const DirichletChar& chi, int kappa, cplx z, real tol = kDefaultTol);

// 2×2 block; κ = 1 for sign > 0, κ = 3 for sign < 0.
Mat2C theta_matrix_pm(const DirichletChar& chi, int sign, cplx z, real tol = kDefaultTol);
// Blocks J_δ(M̄_i, z)⁻¹ θ^±(M_i z) over the coset representatives.
std::vector<Mat2C> theta_row_pm(long N, const DirichletChar& chi, int sign, cplx z, real tol = kDefaultTol);

} // namespace mtx
