#include "mtx/induction.hpp"

namespace mtx {

namespace {

bool in_h(const Mat2Q& g, long N) {
    if (!g.integral() || boost::multiprecision::numerator(g.c) % (N * N) != 0) return false;
    if (g.det() == 1) return is_member(g, {SubgroupId::Tag::GammaTheta, 1});
    return in_theta_pm(g);
}

bool in_g(const Mat2Q& g, long N) {
    if (!g.integral()) return false;
    Q D = g.det();
    return (D == 1 || D == -1) && boost::multiprecision::numerator(g.c) % (N * N) == 0;
}

Classified classify_with(const MetaElem& gbar, int i, long N, const std::vector<MetaElem>& reps) {
    if (gbar.kind != CocycleKind::Bar) throw Error(ErrorKind::KindMismatch, "induction works in the Bar cover");
    if (!in_g(gbar.g, N)) throw Error(ErrorKind::NotInGroup, gbar.g.str() + " not in Gamma0(N^2)");
    if (i < 0 || i >= static_cast<int>(reps.size())) throw Error(ErrorKind::InvalidParams, "coset index out of range");
    MetaElem x = meta_mul(reps[static_cast<size_t>(i)], gbar);
    for (int j = 0; j < static_cast<int>(reps.size()); ++j) {
        MetaElem s = meta_mul(x, meta_inv(reps[static_cast<size_t>(j)]));
        if (in_h(s.g, N)) return {j, s};
    }
    throw Error(ErrorKind::InternalMismatch, "no coset for " + gbar.g.str());
}

void check_chi(long N, const DirichletChar& chi) {
    if (chi.modulus() != N && chi.modulus() != 1) throw Error(ErrorKind::InvalidParams, "chi must have modulus N or be trivial");
}

} // namespace

std::vector<cplx> MonomialMatrix::dense() const {
    const int k = dim();
    std::vector<cplx> m(static_cast<size_t>(k * k), cplx(0));
    for (int j = 0; j < k; ++j) m[static_cast<size_t>(perm[j] * k + j)] = diag[j].to_complex();
    return m;
}

MonomialMatrix operator*(const MonomialMatrix& x, const MonomialMatrix& y) {
    if (x.dim() != y.dim()) throw Error(ErrorKind::InvalidParams, "dimension mismatch");
    MonomialMatrix r{std::vector<int>(y.perm.size()), std::vector<Unit>(y.perm.size())};
    for (int j = 0; j < y.dim(); ++j) {
        int m = y.perm[j];
        r.perm[j] = x.perm[m];
        r.diag[j] = x.diag[m] * y.diag[j];
    }
    return r;
}

Mat2C ExactBlock::to_complex() const {
    if (swap) return {0, d1.to_complex(), d0.to_complex(), 0};
    return {d0.to_complex(), 0, 0, d1.to_complex()};
}

ExactBlock operator*(const ExactBlock& x, const ExactBlock& y) {
    // S^a D1 S^b D2 = S^{a+b} (S^b D1 S^b) D2
    Unit a0 = y.swap ? x.d1 : x.d0, a1 = y.swap ? x.d0 : x.d1;
    return {x.swap != y.swap, a0 * y.d0, a1 * y.d1};
}

BlockMonomialMatrix operator*(const BlockMonomialMatrix& x, const BlockMonomialMatrix& y) {
    if (x.dim() != y.dim()) throw Error(ErrorKind::InvalidParams, "dimension mismatch");
    BlockMonomialMatrix r{std::vector<int>(y.perm.size()), std::vector<ExactBlock>(y.perm.size())};
    for (int j = 0; j < y.dim(); ++j) {
        int m = y.perm[j];
        r.perm[j] = x.perm[m];
        r.blocks[j] = x.blocks[m] * y.blocks[j];
    }
    return r;
}

std::vector<MetaElem> coset_reps(long N) {
    std::vector<MetaElem> out;
    for (const auto& M : theta_coset_reps(N)) out.push_back(meta(M));
    return out;
}

Classified classify(const MetaElem& gbar, int i, long N) { return classify_with(gbar, i, N, coset_reps(N)); }

MonomialMatrix induced_matrix(const MetaElem& gbar, long N, const DirichletChar& chi) {
    check_chi(N, chi);
    if (gbar.g.det() != 1) throw Error(ErrorKind::NotInGroup, "induced_matrix needs det 1");
    auto reps = coset_reps(N);
    const int k = static_cast<int>(reps.size());
    MonomialMatrix m{std::vector<int>(static_cast<size_t>(k)), std::vector<Unit>(static_cast<size_t>(k))};
    for (int i = 0; i < k; ++i) {
        auto c = classify_with(gbar, i, N, reps);
        m.perm[c.j] = i;
        m.diag[c.j] = lambda_bar_chi(c.s, chi).inv();
    }
    return m;
}

Unit tensor_character_twisted(const MetaElem& gbar, long N, const DirichletChar& chi, const std::vector<MetaElem>& h) {
    check_chi(N, chi);
    if (gbar.g.det() != 1) throw Error(ErrorKind::NotInGroup, "tensor_character needs det 1");
    auto reps = coset_reps(N);
    if (!h.empty()) {
        if (h.size() != reps.size()) throw Error(ErrorKind::InvalidParams, "one twist per coset");
        for (size_t i = 0; i < reps.size(); ++i) {
            if (!in_h(h[i].g, N) || h[i].g.det() != 1) throw Error(ErrorKind::NotInGroup, h[i].g.str() + " not in the subgroup");
            reps[i] = meta_mul(h[i], reps[i]);
        }
    }
    Unit v;
    for (int i = 0; i < static_cast<int>(reps.size()); ++i) v *= lambda_bar_chi(classify_with(gbar, i, N, reps).s, chi);
    return v;
}

Unit tensor_character(const MetaElem& gbar, long N, const DirichletChar& chi) {
    return tensor_character_twisted(gbar, N, chi, {});
}

ExactBlock lambda_pm(const MetaElem& x, const DirichletChar& chi) {
    if (x.kind != CocycleKind::Bar) throw Error(ErrorKind::KindMismatch, "lambda_pm expects a Bar element");
    const MetaElem H = meta(h_minus1());
    Q D = x.g.det();
    if (D == -1) {
        ExactBlock b = lambda_pm(meta_mul(H, x), chi);
        b.swap = !b.swap;
        return b;
    }
    if (D != 1) throw Error(ErrorKind::NotInGroup, "lambda_pm needs det ±1");
    MetaElem xh = meta_mul(meta_mul(H, x), H);
    return {false, lambda_bar_chi(x, chi).inv(), lambda_bar_chi(xh, chi).inv()};
}

BlockMonomialMatrix induced_matrix_pm(const MetaElem& gbar, long N, const DirichletChar& chi) {
    check_chi(N, chi);
    auto reps = coset_reps(N);
    const int k = static_cast<int>(reps.size());
    BlockMonomialMatrix m{std::vector<int>(static_cast<size_t>(k)), std::vector<ExactBlock>(static_cast<size_t>(k))};
    for (int i = 0; i < k; ++i) {
        auto c = classify_with(gbar, i, N, reps);
        m.perm[c.j] = i;
        m.blocks[c.j] = lambda_pm(c.s, chi);
    }
    return m;
}

std::pair<Unit, Unit> exenchigamma_witness(long N) {
    if (N < 1) throw Error(ErrorKind::InvalidParams, "N must be positive");
    Q n2 = Q(N) * N;
    Mat2Q r(-1 - 2 * n2, 2, n2, -1);
    return {lambda_theta(r), lambda_theta(mul(mul(u(-1), r), u(1)))};
}

} // namespace mtx
