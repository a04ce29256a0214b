#include "mtx/theta.hpp"

#include <cmath>

namespace mtx {

namespace {

void check_point(cplx z) {
    if (!(std::fabs(z.imag()) >= 1e-3L)) throw Error(ErrorKind::DomainError, "|Im z| must be at least 1e-3");
    if (!(std::fabs(z.real()) <= 1e6L)) throw Error(ErrorKind::DomainError, "|Re z| must be at most 1e6");
}

void check_tol(real tol) {
    if (!(tol >= 1e-16L) || !(tol < 1)) throw Error(ErrorKind::DomainError, "tol must lie in [1e-16, 1)");
}

// e^{iπ t z x²}
cplx gauss_term(real t, cplx z, real x2) {
    real ph = std::fmod(t * x2 * z.real(), 2.0L);
    real mag = std::exp(-kPi * t * x2 * z.imag());
    return {mag * std::cos(kPi * ph), mag * std::sin(kPi * ph)};
}

} // namespace

const char* variant_name(ThetaVariant v) {
    switch (v) {
    case ThetaVariant::Plain: return "plain";
    case ThetaVariant::Minus: return "minus";
    case ThetaVariant::Fermionic: return "fermionic";
    }
    return "?";
}

ThetaVariant parse_variant(const std::string& s) {
    if (s == "plain") return ThetaVariant::Plain;
    if (s == "minus" || s == "M") return ThetaVariant::Minus;
    if (s == "fermionic" || s == "F") return ThetaVariant::Fermionic;
    throw Error(ErrorKind::InvalidParams, "unknown theta variant '" + s + "' (plain|minus|fermionic)");
}

void validate_theta_spec(const ThetaSpec& spec) {
    if (spec.kappa != 1 && spec.kappa != 3) throw Error(ErrorKind::InvalidParams, "kappa must be 1 or 3");
    if (spec.t < 1) throw Error(ErrorKind::InvalidParams, "t must be >= 1");
    int want = spec.kappa == 1 ? 1 : -1;
    if (spec.chi.parity() != want) throw Error(ErrorKind::InvalidParams, "kappa does not match the parity of chi");
    if (spec.variant == ThetaVariant::Fermionic && spec.chi.modulus() % 2 == 0)
        throw Error(ErrorKind::InvalidParams, "fermionic series needs odd N");
}

long theta_truncation(real t_im, real tol) {
    return static_cast<long>(std::ceil(std::sqrt((std::log(1 / tol) + 5) / (kPi * t_im)))) + 5;
}

SeriesValue theta_series(const ThetaSpec& spec, cplx z, real tol) {
    check_tol(tol);
    if (z.imag() <= 0) throw Error(ErrorKind::DomainError, "theta_series needs Im z > 0");
    check_point(z);
    if (spec.kappa != 1 && spec.kappa != 3) throw Error(ErrorKind::InvalidParams, "kappa must be 1 or 3");
    if (spec.t < 1) throw Error(ErrorKind::InvalidParams, "t must be >= 1");
    const real t = static_cast<real>(spec.t);
    const long L = theta_truncation(t * z.imag(), tol);
    const long N = spec.chi.modulus();
    cplx s = 0;
    long terms = 0;
    if (spec.variant == ThetaVariant::Fermionic) {
        if (N % 2 == 0) throw Error(ErrorKind::InvalidParams, "fermionic series needs odd N");
        const long shift = (N + 1) / 2;
        for (long n = -L - 1; n <= L; ++n) {
            cplx cv = spec.chi.value(n + shift);
            if (cv == cplx(0)) continue;
            real x = n + 0.5L;
            if (spec.kappa == 3) cv *= x;
            s += cv * gauss_term(t, z, x * x);
            ++terms;
        }
    } else {
        for (long n = -L; n <= L; ++n) {
            cplx cv = spec.chi.value(n);
            if (cv == cplx(0)) continue;
            if (spec.variant == ThetaVariant::Minus && n % 2 != 0) cv = -cv;
            if (spec.kappa == 3) cv *= static_cast<real>(n);
            s += cv * gauss_term(t, z, static_cast<real>(n) * n);
            ++terms;
        }
    }
    return {s, terms, tol};
}

SeriesValue eta(cplx z, real tol) {
    check_tol(tol);
    if (z.imag() <= 0) throw Error(ErrorKind::DomainError, "eta needs Im z > 0");
    check_point(z);
    const cplx q = std::exp(cplx(0, 2 * kPi) * z);
    const real aq = std::abs(q);
    cplx prod = 1, qn = 1;
    long n = 0;
    real tail = 1;
    // stop once Σ_{m>n}|q|^m = |q|^{n+1}/(1−|q|) is below tol/10
    while (true) {
        ++n;
        qn *= q;
        prod *= cplx(1) - qn;
        tail = std::pow(aq, static_cast<real>(n + 1)) / (1 - aq);
        if (tail < tol / 10) break;
    }
    cplx pre = std::exp(cplx(0, kPi / 12) * z);
    return {pre * prod, n, tol};
}

cplx j_kappa(const MetaElem& x, cplx z, int kappa) {
    if (kappa != 1 && kappa != 3) throw Error(ErrorKind::InvalidParams, "kappa must be 1 or 3");
    Mat2R g = x.g.to_real();
    cplx w = g.c * z + g.d;
    if (w == cplx(0)) throw Error(ErrorKind::PoleAtZ, "cz+d = 0");
    real sd = x.g.det() > 0 ? 1 : -1;
    cplx v = sd * w;
    cplx j;
    // On the cut (c = 0) the lower half-plane takes the mirrored branch, so J(h, z) = conj J(h, z̄).
    if (z.imag() < 0 && x.g.c == 0 && v.real() < 0)
        j = cplx(0, std::sqrt(-v.real())) / x.eps_value();
    else
        j = sqrt_branch(v) / x.eps_value();
    return kappa == 3 ? j * w : j;
}

Mat2C j_delta(const MetaElem& x, cplx z, int sign) {
    cplx j = j_kappa(x, z, 1);
    if (sign < 0) j = j * j * j;
    return {j, 0, 0, std::conj(j)};
}

cplx slash(const ThetaSpec& spec, const MetaElem& wbar, cplx z, real tol) {
    Q D = wbar.g.det();
    if (D <= 0) throw Error(ErrorKind::DomainError, "slash needs det > 0");
    cplx wz = wbar.g.act(z);
    if (!(wz.imag() > 0)) throw Error(ErrorKind::DomainError, "w z is not in H");
    real scale = std::pow(to_real(D), static_cast<real>(spec.kappa) / 4);
    return scale / j_kappa(wbar, z, spec.kappa) * theta_series(spec, wz, tol).value;
}

std::vector<cplx> theta_vector(long N, const DirichletChar& chi, int kappa, cplx z, real tol) {
    if (chi.modulus() != N && chi.modulus() != 1) throw Error(ErrorKind::InvalidParams, "chi must have modulus N or be trivial");
    ThetaSpec spec{ThetaVariant::Plain, kappa, chi, 1};
    validate_theta_spec(spec);
    std::vector<cplx> out;
    for (const auto& M : theta_coset_reps(N)) out.push_back(slash(spec, meta(M), z, tol));
    return out;
}

Mat2C theta_matrix_pm(const DirichletChar& chi, int sign, cplx z, real tol) {
    if (z.imag() == 0) throw Error(ErrorKind::DomainError, "theta_matrix_pm needs Im z != 0");
    ThetaSpec spec{ThetaVariant::Plain, sign > 0 ? 1 : 3, chi, 1};
    auto S = [&](cplx w) { return theta_series(spec, w, tol).value; };
    if (z.imag() > 0) return {S(z), 0, 0, S(-std::conj(z))};
    return {0, S(-z), S(std::conj(z)), 0};
}

std::vector<Mat2C> theta_row_pm(long N, const DirichletChar& chi, int sign, cplx z, real tol) {
    std::vector<Mat2C> out;
    for (const auto& M : theta_coset_reps(N)) {
        MetaElem mb = meta(M);
        out.push_back(inv(j_delta(mb, z, sign)) * theta_matrix_pm(chi, sign, M.act(z), tol));
    }
    return out;
}

} // namespace mtx
