#pragma once

#include <vector>

#include "mtx/multiplier.hpp"

namespace mtx {

// Column j has its single nonzero entry diag[j] in row perm[j].
struct MonomialMatrix {
    std::vector<int> perm;
    std::vector<Unit> diag;

    int dim() const { return static_cast<int>(perm.size()); }
    std::vector<cplx> dense() const; // row-major
    bool operator==(const MonomialMatrix& o) const = default;
};

MonomialMatrix operator*(const MonomialMatrix& x, const MonomialMatrix& y);

// S^swap · diag(d0, d1), S the 2×2 swap
struct ExactBlock {
    bool swap = false;
    Unit d0, d1;

    Mat2C to_complex() const;
    bool operator==(const ExactBlock& o) const = default;
};

ExactBlock operator*(const ExactBlock& x, const ExactBlock& y);

struct BlockMonomialMatrix {
    std::vector<int> perm;
    std::vector<ExactBlock> blocks;

    int dim() const { return static_cast<int>(perm.size()); }
    bool operator==(const BlockMonomialMatrix& o) const = default;
};

BlockMonomialMatrix operator*(const BlockMonomialMatrix& x, const BlockMonomialMatrix& y);

std::vector<MetaElem> coset_reps(long N);

struct Classified {
    int j;
    MetaElem s;
};

// M̄_i ḡ = s̄ M̄_j with s̄ over Γ_θ ∩ Γ₀(N²) (Γ^±_θ for det −1).
Classified classify(const MetaElem& gbar, int i, long N);

MonomialMatrix induced_matrix(const MetaElem& gbar, long N, const DirichletChar& chi);

// Π_i λ̄_χ(s̄_i)
Unit tensor_character(const MetaElem& gbar, long N, const DirichletChar& chi);
// Same product with each M̄_i replaced by h̄_i M̄_i.
Unit tensor_character_twisted(const MetaElem& gbar, long N, const DirichletChar& chi, const std::vector<MetaElem>& h);

ExactBlock lambda_pm(const MetaElem& x, const DirichletChar& chi);
BlockMonomialMatrix induced_matrix_pm(const MetaElem& gbar, long N, const DirichletChar& chi);

// λ at r = [[−1−2N², 2], [N², −1]] and at u(−1)·r·u(1).
std::pair<Unit, Unit> exenchigamma_witness(long N);

} // namespace mtx
