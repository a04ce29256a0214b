#include "mtx/harness.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <sstream>

namespace mtx {

namespace {

constexpr size_t kMaxFailures = 10;

std::string zstr(cplx z) {
    std::ostringstream os;
    os.precision(17);
    os << z.real() << (z.imag() < 0 ? "" : "+") << z.imag() << "i";
    return os.str();
}

real uniform(Rng& rng, real lo, real hi) { return std::uniform_real_distribution<real>(lo, hi)(rng); }

bool coin(Rng& rng) { return std::bernoulli_distribution(0.5)(rng); }

template <class Pred>
Mat2Q sample_where(long M, long bound, Rng& rng, Pred pred) {
    for (;;) {
        Mat2Q g = random_gamma0(M, bound, rng);
        if (pred(g)) return g;
    }
}

bool in_theta(const Mat2Q& g) { return is_member(g, {SubgroupId::Tag::GammaTheta, 1}); }

Mat2R inv_r(const Mat2R& g) {
    real D = g.det();
    return {g.d / D, -g.b / D, -g.c / D, g.a / D};
}

// Random GL₂(ℚ) element g₁·diag(p, y/p)·g₂ with det y ∈ {±1, ±2, ±3, 4}.
Mat2Q random_gl2(Rng& rng) {
    static const long dets[] = {1, -1, 2, -2, 3, -3, 4};
    static const Q ps[] = {Q(1), Q(-1), Q(2), Q(1, 2), Q(-3), Q(1, 3)};
    Q y = dets[std::uniform_int_distribution<int>(0, 6)(rng)];
    Q p = ps[std::uniform_int_distribution<int>(0, 5)(rng)];
    return mul(mul(random_gamma0(1, 10, rng), diag(p, y / p)), random_gamma0(1, 10, rng));
}

int sl2_sign_mod2(const Mat2Q& g) {
    auto m = [](const Q& x) { return boost::multiprecision::numerator(x) % 2 != 0 ? 1 : 0; };
    int a = m(g.a), b = m(g.b), c = m(g.c), d = m(g.d);
    bool odd = (a == 1 && b == 1 && c == 0 && d == 1) || (a == 1 && b == 0 && c == 1 && d == 1) ||
               (a == 0 && b == 1 && c == 1 && d == 0);
    return odd ? -1 : 1;
}

cplx ipow_c(cplx w, int k) {
    cplx r = 1;
    for (int i = 0; i < k; ++i) r *= w;
    return r;
}

// Runs body(element_index, rng) per element; DomainError from a point evaluation re-draws that sample.
template <class Body>
void for_samples(VerificationReport& rep, const std::string& tag, long count, Body body) {
    for (long e = 0; e < count; ++e) {
        Rng rng = sample_rng(rep.seed, tag, e);
        for (int attempt = 0;; ++attempt) {
            try {
                body(e, rng);
                break;
            } catch (const Error& err) {
                if (err.kind() != ErrorKind::DomainError || attempt > 200) {
                    rep.record_exact(false, "sample " + std::to_string(e) + ": " + err.what());
                    break;
                }
            }
        }
    }
}

void record_matrix(VerificationReport& rep, const Mat2C& lhs, const Mat2C& rhs, const std::string& el, cplx z) {
    real scale = max_abs(lhs);
    real dev = max_abs_diff(lhs, rhs);
    rep.record(cplx(scale), cplx(scale) + cplx(dev), el, z);
}

ThetaSpec plain_spec(const TheoremId& id) { return {ThetaVariant::Plain, id.kappa, chi_by_name(id.chi), 1}; }

// Θ(z)·γ(ḡ⁻¹) as a row
std::vector<cplx> row_times(const std::vector<cplx>& row, const MonomialMatrix& m) {
    std::vector<cplx> out(row.size());
    for (int i = 0; i < m.dim(); ++i) out[static_cast<size_t>(i)] = row[static_cast<size_t>(m.perm[i])] * m.diag[i].to_complex();
    return out;
}

std::vector<Mat2C> row_times(const std::vector<Mat2C>& row, const BlockMonomialMatrix& m) {
    std::vector<Mat2C> out(row.size());
    for (int i = 0; i < m.dim(); ++i) out[static_cast<size_t>(i)] = row[static_cast<size_t>(m.perm[i])] * m.blocks[i].to_complex();
    return out;
}

// Vector checks evaluate at M_i z too; smaller entries keep those points above the Im floor.
long vector_bound(const CheckParams& p) { return std::min(p.bound, 40L); }

MetaElem random_eps(const Mat2Q& g, Rng& rng) { return meta(g, Unit::from_sign(coin(rng) ? 1 : -1)); }

// Keeps the lower-left entries of every M_i·g small; otherwise no z puts all M_i z and M_i g z above the Im floor.
Mat2Q vector_element(long N, const CheckParams& p, Rng& rng) {
    const auto reps = theta_coset_reps(N);
    for (;;) {
        Mat2Q g = random_gamma0(N * N, vector_bound(p), rng);
        bool ok = true;
        for (const auto& M : reps) ok = ok && std::fabs(to_real(mul(M, g).c)) <= 40;
        if (ok) return g;
    }
}

cplx vector_z(const Mat2Q& g, long N, Rng& rng) {
    const auto reps = theta_coset_reps(N);
    for (int k = 0; k < 1000; ++k) {
        cplx z = k == 0 ? sample_z(g, rng) : cplx(uniform(rng, -1, 1), uniform(rng, 0.02L, 1.5L));
        bool ok = true;
        for (const auto& M : reps) ok = ok && M.act(z).imag() >= 2e-3L && mul(M, g).act(z).imag() >= 2e-3L;
        if (ok) return z;
    }
    throw Error(ErrorKind::DomainError, "no admissible point for " + g.str());
}

} // namespace

std::string TheoremId::str() const {
    std::ostringstream os;
    os << theorem_tag_name(tag);
    switch (tag) {
    case TheoremTag::MainThm1:
    case TheoremTag::MainThm1Bar:
    case TheoremTag::MainTheorem1_Vector:
    case TheoremTag::TensorInduction:
        os << "(N=" << N << ",chi=" << chi << ",kappa=" << kappa << ")";
        break;
    case TheoremTag::ExamThetaN_t:
    case TheoremTag::ExamThetaM_t:
    case TheoremTag::ExamThetaF_t:
        os << "(N=" << N << ",chi=" << chi << ",kappa=" << kappa << ",t=" << t << ")";
        break;
    case TheoremTag::PMTheta:
    case TheoremTag::PMVector:
        os << "(N=" << N << ",chi=" << chi << ",delta=" << (delta > 0 ? "+" : "-") << ")";
        break;
    default: break;
    }
    return os.str();
}

const char* theorem_tag_name(TheoremTag t) {
    switch (t) {
    case TheoremTag::Shimura_Gamma04: return "Shimura_Gamma04";
    case TheoremTag::LionVergne_GammaTheta: return "LionVergne_GammaTheta";
    case TheoremTag::MainThm1: return "MainThm1";
    case TheoremTag::MainThm1Bar: return "MainThm1Bar";
    case TheoremTag::MainTheorem1_Vector: return "MainTheorem1_Vector";
    case TheoremTag::TensorInduction: return "TensorInduction";
    case TheoremTag::ExamThetaN_t: return "ExamThetaN_t";
    case TheoremTag::ExamThetaM_t: return "ExamThetaM_t";
    case TheoremTag::ExamThetaF_t: return "ExamThetaF_t";
    case TheoremTag::Eta3Product: return "Eta3Product";
    case TheoremTag::Eta12Sign: return "Eta12Sign";
    case TheoremTag::PMTheta: return "PMTheta";
    case TheoremTag::PMVector: return "PMVector";
    }
    return "?";
}

TheoremTag parse_theorem_tag(const std::string& s) {
    for (int k = 0; k <= static_cast<int>(TheoremTag::PMVector); ++k) {
        auto t = static_cast<TheoremTag>(k);
        if (s == theorem_tag_name(t)) return t;
    }
    throw Error(ErrorKind::InvalidParams, "unknown theorem '" + s + "'");
}

DirichletChar chi_by_name(const std::string& name) {
    if (name == "trivial") return DirichletChar::trivial();
    if (name == "chi4") {
        auto c = DirichletChar::quadratic(-4);
        c.set_name("chi4");
        return c;
    }
    try {
        if (name.rfind("legendre", 0) == 0) return DirichletChar::legendre(std::stol(name.substr(8)));
        if (name.rfind("kronecker(", 0) == 0 && name.back() == ')')
            return DirichletChar::quadratic(std::stol(name.substr(10, name.size() - 11)));
    } catch (const Error&) {
        throw;
    } catch (const std::exception&) {
    }
    throw Error(ErrorKind::InvalidParams, "unknown character '" + name + "'");
}

void VerificationReport::record(cplx lhs, cplx rhs, const std::string& element, cplx z) {
    ++samples;
    real a = std::abs(lhs - rhs);
    real m = std::abs(lhs) > 1e-6L ? a / std::abs(lhs) : a;
    max_abs_dev = std::max(max_abs_dev, a);
    max_rel_dev = std::max(max_rel_dev, m);
    if (!(m <= tol) && failures.size() < kMaxFailures) failures.push_back({element, zstr(z), m});
    if (!(m <= tol)) pass = false;
}

void VerificationReport::record_exact(bool ok, const std::string& element) {
    ++samples;
    if (ok) return;
    pass = false;
    if (failures.size() < kMaxFailures) failures.push_back({element, "", 1});
}

void VerificationReport::record_abs(real dev, const std::string& element, cplx z) {
    ++samples;
    max_abs_dev = std::max(max_abs_dev, dev);
    max_rel_dev = std::max(max_rel_dev, dev);
    if (!(dev <= tol)) {
        pass = false;
        if (failures.size() < kMaxFailures) failures.push_back({element, zstr(z), dev});
    }
}

void VerificationReport::finish() {
    if (!(max_rel_dev <= tol)) pass = false;
}

Rng sample_rng(std::uint64_t seed, const std::string& tag, long index) {
    // splitmix64 over (seed, tag, index)
    auto mix = [](std::uint64_t x) {
        x += 0x9e3779b97f4a7c15ULL;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
        return x ^ (x >> 31);
    };
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char ch : tag) h = (h ^ ch) * 1099511628211ULL;
    return Rng(mix(mix(mix(seed) ^ h) ^ static_cast<std::uint64_t>(index)));
}

cplx sample_z(const Mat2Q& g, Rng& rng) {
    real x = uniform(rng, -1, 1), y = uniform(rng, 0.5L, 1.5L);
    if (g.c == 0) return {x, y};
    real c = to_real(g.c), d = to_real(g.d);
    return cplx(-d / c, 0) + cplx(x, y) / std::fabs(c);
}

VerificationReport check_cocycle_suite(CocycleKind kind, GroupScope scope, long samples, std::uint64_t seed) {
    VerificationReport rep;
    rep.theorem = std::string("cocycle:") + kind_name(kind) + (scope == GroupScope::SL2Z ? ":SL2Z" : ":GL2Q");
    rep.seed = seed;
    rep.tol = kind == CocycleKind::Hat ? 1e-10L : 0;
    for_samples(rep, rep.theorem, samples, [&](long, Rng& rng) {
        Mat2Q g[3];
        for (auto& x : g) x = scope == GroupScope::SL2Z ? random_gamma0(1, 50, rng) : random_gl2(rng);
        Mat2Q g12 = mul(g[0], g[1]), g23 = mul(g[1], g[2]);
        std::string el = g[0].str() + " | " + g[1].str() + " | " + g[2].str();
        if (kind == CocycleKind::Hat) {
            auto C = [&](const Mat2Q& a, const Mat2Q& b) {
                return scope == GroupScope::SL2Z ? c_hat(a, b) : big_cocycle_hat(a, b);
            };
            rep.record_abs(std::abs(C(g[0], g[1]) * C(g12, g[2]) - C(g[0], g23) * C(g[1], g[2])), el);
        } else {
            auto C = [&](const Mat2Q& a, const Mat2Q& b) {
                return scope == GroupScope::SL2Z ? small_cocycle(a, b, kind).exact : big_cocycle(a, b, kind).exact;
            };
            rep.record_exact(C(g[0], g[1]) * C(g12, g[2]) == C(g[0], g23) * C(g[1], g[2]), el);
        }
    });
    rep.finish();
    return rep;
}

VerificationReport check_coboundary_suite(long samples, std::uint64_t seed) {
    VerificationReport rep;
    rep.theorem = "coboundary:relacto3+twocoz0+eightcoz0+ztoz0+equah-1";
    rep.seed = seed;
    rep.tol = 1e-10L;
    const Mat2Q H = h_minus1();
    for_samples(rep, rep.theorem, samples, [&](long e, Rng& rng) {
        Mat2Q g1 = random_gamma0(1, 50, rng), g2 = random_gamma0(1, 50, rng);
        Mat2Q g12 = mul(g1, g2);
        std::string el = g1.str() + " | " + g2.str();
        rep.record_exact(c_bar(g1, g2) == m_weil(g12).inv() * m_weil(g1) * m_weil(g2) * c_tilde(g1, g2), "relacto3 " + el);
        cplx ch = c_hat(g1, g2);
        cplx two = c_bar(g1, g2).to_complex() * s_bar(g1) * s_bar(g2) / s_bar(g12);
        rep.record_abs(std::abs(ch - two), "twocoz0 " + el);
        cplx eight = c_tilde(g1, g2).to_complex() * s_tilde(g1) * s_tilde(g2) / s_tilde(g12);
        rep.record_abs(std::abs(ch - eight), "eightcoz0 " + el);
        cplx eq = ch * c_hat(mul(mul(H, g1), H), mul(mul(H, g2), H));
        rep.record_abs(std::abs(eq - cplx(1)), "equah-1 " + el);
        if (e < 100) {
            cplx z(uniform(rng, -2, 2), uniform(rng, 0.2L, 3));
            Mat2R p = p_of_z(z), pi = inv_r(p);
            Mat2R r1 = g1.to_real(), r2 = g2.to_real();
            cplx lhs = c_hat(r1, r2, z);
            cplx rhs = c_hat(pi * r1 * p, pi * r2 * p, kZ0);
            rep.record_abs(std::abs(lhs - rhs), "ztoz0 " + el, z);
        }
    });
    rep.finish();
    return rep;
}

VerificationReport check_gauss_suite(long bound) {
    VerificationReport rep;
    rep.theorem = "gauss:closed-vs-brute+reciprocity";
    rep.tol = 1e-10L;
    for (long c = -bound; c <= bound; ++c) {
        for (long d = -bound; d <= bound; ++d) {
            if (c == 0 || d == 0 || std::gcd(c, d) != 1 || (c * d) % 2 != 0) continue;
            std::string el = std::to_string(d) + "," + std::to_string(c);
            cplx closed = gauss_sum_closed(d, c).to_complex();
            cplx brute = gauss_sum_brute(d, c);
            rep.record_abs(std::abs(closed - brute), "G(d,c) " + el);
            cplx rec = brute * gauss_sum_brute(c, d);
            cplx want = Unit::root8(-(c * d > 0 ? 1 : -1)).to_complex();
            rep.record_abs(std::abs(rec - want), "reciprocity " + el);
        }
    }
    rep.finish();
    return rep;
}

VerificationReport check_trivialization_suite(long samples, std::uint64_t seed) {
    VerificationReport rep;
    rep.theorem = "trivialization:spgamma12+chap8csp";
    rep.seed = seed;
    rep.tol = 1e-10L;
    using BK = BetaKind;
    using BF = BetaFamily;
    for_samples(rep, rep.theorem, samples, [&](long, Rng& rng) {
        Mat2Q r1 = sample_where(1, 50, rng, in_theta), r2 = sample_where(1, 50, rng, in_theta);
        Mat2Q r12 = mul(r1, r2);
        std::string el = r1.str() + " | " + r2.str();
        auto cob = [&](const Mat2Q& a, const Mat2Q& b, const Mat2Q& ab, BK k, BF f) {
            auto x = beta_family(a, k, f), y = beta_family(b, k, f), xy = beta_family(ab, k, f);
            if (x.exact && y.exact && xy.exact) return std::make_pair(x.exact->inv() * y.exact->inv() * *xy.exact, xy.value / (x.value * y.value));
            return std::make_pair(Unit(), xy.value / (x.value * y.value));
        };
        rep.record_exact(c_tilde(r1, r2) == cob(r1, r2, r12, BK::Tilde, BF::GammaTheta).first, "beta~ " + el);
        rep.record_exact(c_bar(r1, r2) == cob(r1, r2, r12, BK::Bar, BF::GammaTheta).first, "beta- " + el);
        rep.record_abs(std::abs(c_hat(r1, r2) - cob(r1, r2, r12, BK::Hat, BF::GammaTheta).second), "beta^ " + el);

        Mat2Q g1 = random_gamma0(1, 50, rng), g2 = random_gamma0(1, 50, rng), g12 = mul(g1, g2);
        el = g1.str() + " | " + g2.str();
        rep.record_exact(c_bar(g1, g2) == cob(g1, g2, g12, BK::Bar, BF::Asai).first, "asai- " + el);
        rep.record_exact(c_tilde(g1, g2) == cob(g1, g2, g12, BK::Tilde, BF::Asai).first, "asai~ " + el);
        rep.record_abs(std::abs(c_hat(g1, g2) - cob(g1, g2, g12, BK::Hat, BF::Asai).second), "asai^ " + el);
    });
    rep.finish();
    return rep;
}

VerificationReport check_lambda_suite(long samples, std::uint64_t seed, long bound) {
    VerificationReport rep;
    rep.theorem = "lambda:closed-form+mutirr12";
    rep.seed = seed;
    for_samples(rep, rep.theorem, samples, [&](long, Rng& rng) {
        Mat2Q r1 = sample_where(1, bound, rng, in_theta), r2 = sample_where(1, bound, rng, in_theta);
        rep.record_exact(lambda_closed(r1) == lambda_definitional(r1), "closed " + r1.str());
        Unit lhs = lambda_closed(r1) * lambda_closed(r2);
        Unit rhs = lambda_closed(mul(r1, r2)) * c_bar(r1, r2);
        rep.record_exact(lhs == rhs, "mutirr12 " + r1.str() + " | " + r2.str());
    });
    rep.finish();
    return rep;
}

VerificationReport check_transformation(const TheoremId& id, const CheckParams& p) {
    VerificationReport rep;
    rep.theorem = id.str();
    rep.seed = p.seed;
    rep.tol = p.tol;
    const std::string tag = rep.theorem;
    const long N = id.N, N2 = N * N;

    switch (id.tag) {
    case TheoremTag::Shimura_Gamma04: {
        ThetaSpec spec{ThetaVariant::Plain, 1, DirichletChar::trivial(), 2};
        for_samples(rep, tag, p.samples, [&](long, Rng& rng) {
            Mat2Q r = random_gamma0(4, p.bound, rng);
            Z c = to_int(r.c), d = to_int(r.d);
            cplx nu = (Unit::from_sign(kronecker(c, d)) * eps_d(d).inv()).to_complex();
            for (long k = 0; k < p.z_count; ++k) {
                cplx z = sample_z(r, rng);
                cplx lhs = theta_series(spec, r.act(z)).value;
                cplx rhs = nu * sqrt_branch(to_real(r.c) * z + to_real(r.d)) * theta_series(spec, z).value;
                rep.record(lhs, rhs, r.str(), z);
            }
        });
        break;
    }
    case TheoremTag::LionVergne_GammaTheta: {
        ThetaSpec spec{ThetaVariant::Plain, 1, DirichletChar::trivial(), 1};
        for_samples(rep, tag, p.samples, [&](long, Rng& rng) {
            Mat2Q r = sample_where(1, p.bound, rng, in_theta);
            cplx lam = lambda_theta(r).to_complex();
            for (long k = 0; k < p.z_count; ++k) {
                cplx z = sample_z(r, rng);
                cplx lhs = theta_series(spec, r.act(z)).value;
                cplx rhs = lam * sqrt_branch(to_real(r.c) * z + to_real(r.d)) * theta_series(spec, z).value;
                rep.record(lhs, rhs, r.str(), z);
            }
        });
        break;
    }
    case TheoremTag::MainThm1:
    case TheoremTag::MainThm1Bar: {
        ThetaSpec spec = plain_spec(id);
        validate_theta_spec(spec);
        const bool bar = id.tag == TheoremTag::MainThm1Bar;
        for_samples(rep, tag, p.samples, [&](long, Rng& rng) {
            Mat2Q r = sample_where(N2, p.bound, rng, in_theta);
            MetaElem rb = bar ? random_eps(r, rng) : meta(r);
            cplx mult = bar ? lambda_bar_chi(rb, spec.chi).to_complex()
                            : lambda_theta(r).to_complex() * spec.chi.value(to_int(r.d));
            for (long k = 0; k < p.z_count; ++k) {
                cplx z = sample_z(r, rng);
                cplx w = to_real(r.c) * z + to_real(r.d);
                cplx j = bar ? j_kappa(rb, z, id.kappa) : ipow_c(sqrt_branch(w), id.kappa);
                cplx lhs = theta_series(spec, r.act(z)).value;
                cplx rhs = mult * j * theta_series(spec, z).value;
                rep.record(lhs, rhs, rb.str(), z);
            }
        });
        break;
    }
    case TheoremTag::MainTheorem1_Vector:
    case TheoremTag::TensorInduction: {
        DirichletChar chi = chi_by_name(id.chi);
        validate_theta_spec({ThetaVariant::Plain, id.kappa, chi, 1});
        const bool tensor = id.tag == TheoremTag::TensorInduction;
        for_samples(rep, tag, p.samples, [&](long, Rng& rng) {
            MetaElem gb = random_eps(vector_element(N, p, rng), rng);
            MetaElem hb = random_eps(random_gamma0(N2, vector_bound(p), rng), rng);
            if (tensor) {
                rep.record_exact(tensor_character(meta_mul(gb, hb), N, chi) ==
                                     tensor_character(gb, N, chi) * tensor_character(hb, N, chi),
                                 "multiplicative " + gb.str() + " | " + hb.str());
            } else {
                rep.record_exact(induced_matrix(meta_mul(gb, hb), N, chi) ==
                                     induced_matrix(gb, N, chi) * induced_matrix(hb, N, chi),
                                 "multiplicative " + gb.str() + " | " + hb.str());
            }
            MonomialMatrix ginv = induced_matrix(meta_inv(gb), N, chi);
            cplx V = tensor ? tensor_character(gb, N, chi).to_complex() : cplx(1);
            for (long k = 0; k < p.z_count; ++k) {
                cplx z = vector_z(gb.g, N, rng);
                cplx j = j_kappa(gb, z, id.kappa);
                auto lhs = theta_vector(N, chi, id.kappa, gb.g.act(z));
                auto rz = theta_vector(N, chi, id.kappa, z);
                if (tensor) {
                    cplx pl = 1, pr = V;
                    for (size_t i = 0; i < lhs.size(); ++i) pl *= lhs[i], pr *= j * rz[i];
                    rep.record(pl, pr, gb.str(), z);
                } else {
                    auto rhs = row_times(rz, ginv);
                    for (size_t i = 0; i < lhs.size(); ++i)
                        rep.record(lhs[i], j * rhs[i], gb.str() + " component " + std::to_string(i), z);
                }
            }
        });
        break;
    }
    case TheoremTag::ExamThetaN_t:
    case TheoremTag::ExamThetaM_t:
    case TheoremTag::ExamThetaF_t: {
        ThetaVariant var = id.tag == TheoremTag::ExamThetaN_t   ? ThetaVariant::Plain
                           : id.tag == TheoremTag::ExamThetaM_t ? ThetaVariant::Minus
                                                                : ThetaVariant::Fermionic;
        MultiplierId::Tag mt = id.tag == TheoremTag::ExamThetaN_t   ? MultiplierId::Tag::NuTheta
                               : id.tag == TheoremTag::ExamThetaM_t ? MultiplierId::Tag::NuThetaM
                                                                    : MultiplierId::Tag::NuThetaF;
        ThetaSpec spec{var, id.kappa, chi_by_name(id.chi), id.t};
        validate_theta_spec(spec);
        auto pred = [&](const Mat2Q& g) {
            if (var == ThetaVariant::Plain) return in_theta(g);
            const Q& e = var == ThetaVariant::Minus ? g.b : g.c;
            return boost::multiprecision::numerator(e) % 2 == 0;
        };
        const long cb = std::max(N2, p.bound / id.t);
        for_samples(rep, tag, p.samples, [&](long, Rng& rng) {
            Mat2Q rp = sample_where(N2, cb, rng, pred);
            Mat2Q r(rp.a, rp.b / id.t, rp.c * id.t, rp.d);
            cplx nu = nu_table({mt, id.t}, r).to_complex() * spec.chi.value(to_int(r.d));
            for (long k = 0; k < p.z_count; ++k) {
                cplx z = sample_z(r, rng);
                cplx w = to_real(r.c) * z + to_real(r.d);
                cplx lhs = theta_series(spec, r.act(z)).value;
                cplx rhs = nu * ipow_c(sqrt_branch(w), id.kappa) * theta_series(spec, z).value;
                rep.record(lhs, rhs, r.str(), z);
            }
        });
        break;
    }
    case TheoremTag::Eta3Product: {
        // the identity is stated for the series in e^{2πi n² w}, i.e. scale t = 2
        ThetaSpec pl{ThetaVariant::Plain, 1, DirichletChar::trivial(), 2};
        ThetaSpec mi{ThetaVariant::Minus, 1, DirichletChar::trivial(), 2};
        ThetaSpec fe{ThetaVariant::Fermionic, 1, DirichletChar::trivial(), 2};
        for_samples(rep, tag, p.samples, [&](long, Rng& rng) {
            cplx z(uniform(rng, -1, 1), uniform(rng, 0.3L, 2));
            cplx h = z / 2.0L;
            cplx lhs = theta_series(mi, h).value * theta_series(pl, h).value * theta_series(fe, h).value;
            cplx e = eta(z).value;
            rep.record(lhs, 2.0L * e * e * e, "z", z);
        });
        break;
    }
    case TheoremTag::Eta12Sign: {
        for_samples(rep, tag, p.samples, [&](long, Rng& rng) {
            Mat2Q g = random_gamma0(1, p.bound, rng);
            for (long k = 0; k < p.z_count; ++k) {
                cplx z = sample_z(g, rng);
                cplx w = to_real(g.c) * z + to_real(g.d);
                cplx lhs = ipow_c(eta(g.act(z)).value, 12);
                cplx rhs = ipow_c(w, 6) * ipow_c(eta(z).value, 12) * static_cast<real>(sl2_sign_mod2(g));
                rep.record(lhs, rhs, g.str(), z);
            }
        });
        break;
    }
    case TheoremTag::PMTheta:
    case TheoremTag::PMVector: {
        DirichletChar chi = chi_by_name(id.chi);
        const int kappa = id.delta > 0 ? 1 : 3;
        validate_theta_spec({ThetaVariant::Plain, kappa, chi, 1});
        const MetaElem H = meta(h_minus1());
        const bool vec = id.tag == TheoremTag::PMVector;
        for_samples(rep, tag, p.samples, [&](long, Rng& rng) {
            Mat2Q r = vec ? random_gamma0(N2, vector_bound(p), rng) : sample_where(N2, p.bound, rng, in_theta);
            MetaElem x = random_eps(r, rng);
            if (coin(rng)) x = meta_mul(H, x);
            MetaElem xi = meta_inv(x);
            Mat2C lam = vec ? Mat2C{} : lambda_pm(xi, chi).to_complex();
            for (long k = 0; k < p.z_count; ++k) {
                cplx z = sample_z(r, rng);
                if (coin(rng)) z = std::conj(z);
                Mat2C J = j_delta(x, z, id.delta);
                cplx xz = x.g.act(z);
                if (!vec) {
                    Mat2C lhs = theta_matrix_pm(chi, id.delta, xz);
                    Mat2C rhs = J * theta_matrix_pm(chi, id.delta, z) * lam;
                    record_matrix(rep, lhs, rhs, x.str(), z);
                } else {
                    auto lhs = theta_row_pm(N, chi, id.delta, xz);
                    auto rhs = row_times(theta_row_pm(N, chi, id.delta, z), induced_matrix_pm(xi, N, chi));
                    for (size_t i = 0; i < lhs.size(); ++i)
                        record_matrix(rep, lhs[i], J * rhs[i], x.str() + " block " + std::to_string(i), z);
                }
            }
        });
        break;
    }
    }
    rep.finish();
    return rep;
}

Profile parse_profile(const std::string& s) {
    if (s == "quick") return Profile::Quick;
    if (s == "full") return Profile::Full;
    throw Error(ErrorKind::InvalidParams, "profile must be quick or full");
}

std::vector<TheoremId> default_theorems() {
    using T = TheoremTag;
    std::vector<TheoremId> out;
    out.push_back({T::Shimura_Gamma04});
    out.push_back({T::LionVergne_GammaTheta});
    const TheoremId params[] = {{T::MainThm1, 1, "trivial", 1}, {T::MainThm1, 3, "legendre3", 3}, {T::MainThm1, 4, "chi4", 3}};
    for (T tag : {T::MainThm1, T::MainThm1Bar, T::MainTheorem1_Vector, T::TensorInduction}) {
        for (auto id : params) {
            id.tag = tag;
            out.push_back(id);
        }
    }
    for (T tag : {T::ExamThetaN_t, T::ExamThetaM_t, T::ExamThetaF_t}) {
        for (long t = 1; t <= 3; ++t) {
            out.push_back({tag, 1, "trivial", 1, 1, t});
            out.push_back({tag, 3, "legendre3", 3, 1, t});
        }
    }
    out.push_back({T::Eta3Product});
    out.push_back({T::Eta12Sign});
    for (T tag : {T::PMTheta, T::PMVector}) {
        out.push_back({tag, 1, "trivial", 1, 1});
        out.push_back({tag, 3, "legendre3", 3, -1});
    }
    return out;
}

std::vector<VerificationReport> run_all(Profile profile, std::uint64_t seed) {
    const bool full = profile == Profile::Full;
    std::vector<std::function<VerificationReport()>> jobs;
    const long cs = full ? 10000 : 100;
    for (auto k : {CocycleKind::Bar, CocycleKind::Tilde, CocycleKind::Hat})
        for (auto sc : {GroupScope::SL2Z, GroupScope::GL2Q})
            jobs.push_back([=] { return check_cocycle_suite(k, sc, cs, seed); });
    jobs.push_back([=] { return check_coboundary_suite(full ? 10000 : 100, seed); });
    jobs.push_back([=] { return check_gauss_suite(full ? 200 : 40); });
    jobs.push_back([=] { return check_trivialization_suite(full ? 1000 : 100, seed); });
    jobs.push_back([=] { return check_lambda_suite(full ? 10000 : 100, seed); });
    for (const auto& id : default_theorems()) {
        CheckParams p;
        p.seed = seed;
        p.samples = full ? 1000 : 20;
        p.z_count = full ? 10 : 3;
        p.tol = id.tag == TheoremTag::Eta3Product ? 1e-10L : 1e-9L;
        if (id.tag == TheoremTag::Eta3Product) p.samples = 20, p.z_count = 1;
        if (!full && (id.tag == TheoremTag::PMVector || id.tag == TheoremTag::MainTheorem1_Vector)) p.samples = 10;
        jobs.push_back([=] { return check_transformation(id, p); });
    }
    std::vector<std::future<VerificationReport>> futs;
    for (auto& j : jobs) futs.push_back(std::async(std::launch::async, j));
    std::vector<VerificationReport> out;
    for (auto& f : futs) out.push_back(f.get());
    return out;
}

} // namespace mtx
