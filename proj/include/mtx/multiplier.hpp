#pragma once

#include "mtx/metagroup.hpp"

namespace mtx {

// λ(r) = m(r)·β̃(r)⁻¹ on Γ_θ.
Unit lambda_definitional(const Mat2Q& r);
// Closed form: (2c/d)ε_d⁻¹ on Γ(2), and via r·ω⁻¹ on Γ(2)ω.
Unit lambda_closed(const Mat2Q& r);
// Closed form, cross-checked against the definition.
Unit lambda_theta(const Mat2Q& r);

Unit lambda_bar(const MetaElem& x);
Unit lambda_bar_chi(const MetaElem& x, const DirichletChar& chi);

struct MultiplierId {
    enum class Tag { Lambda, NuTheta, NuThetaM, NuThetaF, DeltaM, DeltaF };
    Tag tag = Tag::Lambda;
    long t = 1;

    std::string str() const;
};

// "lambda", "nu_theta:t", "nu_thetaM:t", "nu_thetaF:t", "delta_M", "delta_F" (":t" optional)
MultiplierId parse_multiplier(const std::string& s);

// Table value at r, where the row is chosen from r' = diag(t,1)·r·diag(t,1)⁻¹.
Unit nu_table(const MultiplierId& id, const Mat2Q& r);

enum class DeltaKind { M, F };
Unit delta_char(DeltaKind which, const Mat2Q& g);

// λ̄_χ at w̄·x·w̄⁻¹
Unit lambda_slash(const MetaElem& wbar, const MetaElem& x, const DirichletChar& chi = {});

} // namespace mtx
