#include "mtx/multiplier.hpp"

namespace mtx {

namespace {

const SubgroupId kTheta{SubgroupId::Tag::GammaTheta, 1};
const SubgroupId kGamma2{SubgroupId::Tag::Gamma2, 1};

// (2c/d)ε_d⁻¹ for c even, d odd
Unit gamma2_part(const Z& c, const Z& d) { return Unit::from_sign(kronecker(2 * c, d)) * eps_d(d).inv(); }

// (−1/d)^k i^{ek}
Unit twist(const Z& d, const Z& k, int e) {
    long k4 = static_cast<long>(((k % 4) + 4) % 4);
    Unit v = Unit::i_pow(e * k4);
    if (k4 % 2 == 1) v *= Unit::from_sign(kronecker(-1, d));
    return v;
}

Z half(const Q& x) {
    Z v = to_int(x);
    if (v % 2 != 0) throw Error(ErrorKind::NotInDomain, "odd entry where an even one is required");
    return v / 2;
}

Mat2Q conj_scale(const Mat2Q& r, long t) {
    Mat2Q rp(r.a, r.b * t, r.c / t, r.d);
    if (!is_member(rp, {SubgroupId::Tag::SL2Z, 1})) throw Error(ErrorKind::NotInDomain, r.str() + " has no integral conjugate");
    return rp;
}

Unit nu_m_gamma2(const Mat2Q& r) {
    Z c = to_int(r.c), d = to_int(r.d);
    return gamma2_part(c, d) * twist(d, half(r.c), -1);
}

Unit nu_f_gamma2(const Mat2Q& r) {
    Z c = to_int(r.c), d = to_int(r.d);
    return gamma2_part(c, d) * twist(d, half(r.b), 1);
}

} // namespace

Unit lambda_definitional(const Mat2Q& r) { return m_weil(r) * beta_tilde(r).inv(); }

Unit lambda_closed(const Mat2Q& r) {
    if (!is_member(r, kTheta)) throw Error(ErrorKind::NotInGroup, r.str() + " not in Gamma_theta");
    if (is_member(r, kGamma2)) return gamma2_part(to_int(r.c), to_int(r.d));
    Mat2Q r0 = mul(r, inv(omega()));
    Z c0 = to_int(r0.c), d0 = to_int(r0.d);
    int h = (-c0 < 0 && d0 < 0) ? -1 : 1;
    return gamma2_part(c0, d0) * Unit::root8(-1) * Unit::from_sign(h);
}

Unit lambda_theta(const Mat2Q& r) {
    Unit closed = lambda_closed(r);
    Unit def = lambda_definitional(r);
    if (closed != def)
        throw Error(ErrorKind::InternalMismatch, "lambda closed form " + closed.str() + " vs " + def.str() + " at " + r.str());
    return closed;
}

Unit lambda_bar(const MetaElem& x) {
    if (x.kind != CocycleKind::Bar) throw Error(ErrorKind::KindMismatch, "lambda_bar expects a Bar element");
    return lambda_closed(x.g) * x.eps;
}

Unit lambda_bar_chi(const MetaElem& x, const DirichletChar& chi) {
    long N = chi.modulus();
    if (!is_member(x.g, {SubgroupId::Tag::Gamma0, N * N})) throw Error(ErrorKind::NotInGroup, x.g.str() + " not in Gamma0(N^2)");
    auto v = chi.eval(to_int(x.g.d));
    if (!v) throw Error(ErrorKind::InternalMismatch, "chi(d) vanished");
    return lambda_bar(x) * *v;
}

std::string MultiplierId::str() const {
    switch (tag) {
    case Tag::Lambda: return "lambda";
    case Tag::NuTheta: return "nu_theta:" + std::to_string(t);
    case Tag::NuThetaM: return "nu_thetaM:" + std::to_string(t);
    case Tag::NuThetaF: return "nu_thetaF:" + std::to_string(t);
    case Tag::DeltaM: return "delta_M";
    case Tag::DeltaF: return "delta_F";
    }
    return "?";
}

MultiplierId parse_multiplier(const std::string& s) {
    std::string name = s;
    long t = 1;
    auto colon = s.find(':');
    if (colon != std::string::npos) {
        name = s.substr(0, colon);
        try {
            t = std::stol(s.substr(colon + 1));
        } catch (const std::exception&) {
            throw Error(ErrorKind::InvalidParams, "bad t in '" + s + "'");
        }
        if (t < 1) throw Error(ErrorKind::InvalidParams, "t must be >= 1");
    }
    using T = MultiplierId::Tag;
    if (name == "lambda") return {T::Lambda, 1};
    if (name == "nu_theta") return {T::NuTheta, t};
    if (name == "nu_thetaM") return {T::NuThetaM, t};
    if (name == "nu_thetaF") return {T::NuThetaF, t};
    if (name == "delta_M") return {T::DeltaM, 1};
    if (name == "delta_F") return {T::DeltaF, 1};
    throw Error(ErrorKind::InvalidParams, "unknown multiplier '" + s + "'");
}

Unit nu_table(const MultiplierId& id, const Mat2Q& r) {
    using T = MultiplierId::Tag;
    switch (id.tag) {
    case T::Lambda: return lambda_theta(r);
    case T::DeltaM: return delta_char(DeltaKind::M, r);
    case T::DeltaF: return delta_char(DeltaKind::F, r);
    default: break;
    }
    Mat2Q rp = conj_scale(r, id.t);
    bool g2 = is_member(rp, kGamma2);
    switch (id.tag) {
    case T::NuTheta:
        if (!is_member(rp, kTheta)) throw Error(ErrorKind::NotInDomain, rp.str() + " not in Gamma_theta");
        return lambda_closed(rp);
    case T::NuThetaM: {
        if (!is_member(rp, {SubgroupId::Tag::GammaUpper0, 2})) throw Error(ErrorKind::NotInDomain, rp.str() + " has odd b");
        if (g2) return nu_m_gamma2(rp);
        Mat2Q r0 = mul(rp, u_minus(1));
        return nu_m_gamma2(r0) * Unit::root8(1) * c_bar(r0, u_minus(-1));
    }
    case T::NuThetaF: {
        if (!is_member(rp, {SubgroupId::Tag::Gamma0, 2})) throw Error(ErrorKind::NotInDomain, rp.str() + " has odd c");
        if (g2) return nu_f_gamma2(rp);
        Mat2Q r0 = mul(rp, u(-1));
        return nu_f_gamma2(r0) * Unit::root8(1);
    }
    default: break;
    }
    throw Error(ErrorKind::InvalidParams, "unhandled multiplier");
}

Unit delta_char(DeltaKind which, const Mat2Q& g) {
    if (!is_member(g, kGamma2)) throw Error(ErrorKind::NotInGroup, g.str() + " not in Gamma(2)");
    Z d = to_int(g.d);
    return twist(d, half(which == DeltaKind::M ? g.c : g.b), 1);
}

Unit lambda_slash(const MetaElem& wbar, const MetaElem& x, const DirichletChar& chi) {
    MetaElem s = meta_mul(meta_mul(wbar, x), meta_inv(wbar));
    long N = chi.modulus();
    if (!is_member(s.g, kTheta) || !is_member(s.g, {SubgroupId::Tag::Gamma0, N * N}))
        throw Error(ErrorKind::NotInDomain, "conjugate " + s.g.str() + " outside Gamma_theta ∩ Gamma0(N^2)");
    return lambda_bar_chi(s, chi);
}

} // namespace mtx
