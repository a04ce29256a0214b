#include "mtx/numth.hpp"

#include <cmath>
#include <numeric>

namespace mtx {

namespace {

using boost::multiprecision::denominator;
using boost::multiprecision::numerator;

Z floor_div(const Z& a, const Z& b) {
    Z q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

Z mod_pos(const Z& a, const Z& n) {
    Z r = a % n;
    if (r < 0) r += n;
    return r;
}

Q floor_q(const Q& x) { return Q(floor_div(numerator(x), denominator(x))); }

Z zgcd(Z a, Z b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        Z t = a % b;
        a = b;
        b = t;
    }
    return a;
}

// e^{-πi k/d} summed over k = c n² for n < |d|, exponents reduced mod 2|d|
cplx brute_small(long long c, long long d) {
    long long D = d < 0 ? -d : d;
    long long m = 2 * D;
    real s_re = 0, s_im = 0;
    for (long long n = 0; n < D; ++n) {
        long long k = static_cast<long long>((static_cast<__int128>(c) * n % m) * n % m);
        if (k < 0) k += m;
        real ang = -kPi * static_cast<real>(k) / static_cast<real>(d);
        s_re += std::cos(ang);
        s_im += std::sin(ang);
    }
    return cplx(s_re, s_im) / std::sqrt(static_cast<real>(D));
}

} // namespace

Unit::Unit(const Q& q) : q_(q - 2 * floor_q(q / 2)) {}

Unit Unit::from_sign(int s) { return Unit(Q(s < 0 ? 1 : 0)); }
Unit Unit::i_pow(long k) { return Unit(Q(k, 2)); }
Unit Unit::root8(long k) { return Unit(Q(k, 4)); }

cplx Unit::to_complex() const {
    // exact on the eighth roots, where most values live
    Q q8 = q_ * 4;
    if (is_integer(q8)) {
        static const real h = std::sqrt(0.5L);
        static const cplx tab[8] = {{1, 0}, {h, h}, {0, 1}, {-h, h}, {-1, 0}, {-h, -h}, {0, -1}, {h, -h}};
        return tab[static_cast<int>(numerator(q8))];
    }
    real t = kPi * to_real(q_);
    return {std::cos(t), std::sin(t)};
}

std::string Unit::str() const { return "e^{i*pi*" + to_string(q_) + "}"; }

int jacobi(Z a, Z n) {
    if (n <= 0 || n % 2 == 0) throw Error(ErrorKind::DomainError, "jacobi needs odd positive modulus");
    a = mod_pos(a, n);
    int r = 1;
    while (a != 0) {
        while (a % 2 == 0) {
            a /= 2;
            Z n8 = n % 8;
            if (n8 == 3 || n8 == 5) r = -r;
        }
        std::swap(a, n);
        if (a % 4 == 3 && n % 4 == 3) r = -r;
        a = a % n;
    }
    return n == 1 ? r : 0;
}

int kronecker(const Z& a0, const Z& b0) {
    if (a0 == 0 && b0 == 0) throw Error(ErrorKind::BothZero, "kronecker(0,0)");
    if (b0 == 0) return (a0 == 1 || a0 == -1) ? 1 : 0;
    if (a0 == 0) return b0 == 1 ? 1 : (b0 == -1 ? -1 : 0);
    Z a = a0, b = b0;
    int r = 1;
    if (b < 0) {
        b = -b;
        if (a < 0) r = -r;
    }
    while (b % 2 == 0) {
        b /= 2;
        if (a % 2 == 0) return 0;
        Z a8 = mod_pos(a, 8);
        if (a8 == 3 || a8 == 5) r = -r;
    }
    return r * jacobi(a, b);
}

Unit eps_d(const Z& d) {
    if (d % 2 == 0) throw Error(ErrorKind::EvenInput, "eps_d needs odd d");
    return mod_pos(d, 4) == 1 ? Unit() : Unit::i_pow(1);
}

int hilbert_real(const Q& a, const Q& b) {
    if (a == 0 || b == 0) throw Error(ErrorKind::ZeroInput, "hilbert symbol of zero");
    return (a < 0 && b < 0) ? -1 : 1;
}

int hilbert_real(real a, real b) {
    if (a == 0 || b == 0) throw Error(ErrorKind::ZeroInput, "hilbert symbol of zero");
    return (a < 0 && b < 0) ? -1 : 1;
}

Q sawtooth(const Q& x) {
    if (is_integer(x)) return 0;
    return x - floor_q(x) - Q(1, 2);
}

Q dedekind_sum(const Z& d, const Z& c) {
    if (c == 0) throw Error(ErrorKind::ZeroModulus, "dedekind_sum with c = 0");
    if (zgcd(c, d) != 1) throw Error(ErrorKind::NotCoprime, "dedekind_sum needs gcd(c,d) = 1");
    Z C = c < 0 ? Z(-c) : c;
    if (C < (Z(1) << 20)) {
        // s(d,c) = s(d,|c|); each term is (2k − C)(2r − C)/(4C²) with r = kd mod C
        const long long n = C.convert_to<long long>();
        const long long dm = mod_pos(d, C).convert_to<long long>();
        long long acc = 0;
        for (long long k = 1; k < n; ++k) acc += (2 * k - n) * (2 * (k * dm % n) - n);
        return Q(Z(acc), Z(4) * C * C);
    }
    Q s = 0;
    for (Z k = 1; k < C; ++k) s += sawtooth(Q(k, c)) * sawtooth(Q(k * d, c));
    return s;
}

Q asai_mu(const Mat2Q& g) {
    if (!is_member(g, {SubgroupId::Tag::SL2Z, 1})) throw Error(ErrorKind::NotInGroup, g.str() + " not in SL2(Z)");
    if (g.c == 0) return g.b / (12 * g.d) + Q(1 - sgn(g.d), 4);
    Z c = to_int(g.c), d = to_int(g.d);
    return (g.a + g.d) / (12 * g.c) - sgn(g.c) * (Q(1, 4) + dedekind_sum(d, c < 0 ? Z(-c) : c));
}

cplx gauss_sum_brute(const Z& c, const Z& d) {
    if (d == 0) throw Error(ErrorKind::ZeroModulus, "gauss_sum_brute with d = 0");
    if (zgcd(c, d) != 1) throw Error(ErrorKind::NotCoprime, "gauss_sum_brute needs gcd(c,d) = 1");
    const Z lim = Z(1) << 40;
    if (abs(c) < lim && abs(d) < (Z(1) << 20)) return brute_small(c.convert_to<long long>(), d.convert_to<long long>());
    // large inputs: reduce c mod 2|d| first
    Z m = 2 * abs(d);
    Z cr = mod_pos(c, m);
    if (cr < lim && abs(d) < lim) return brute_small(cr.convert_to<long long>(), d.convert_to<long long>());
    throw Error(ErrorKind::DomainError, "gauss_sum_brute modulus too large");
}

Unit gauss_sum_closed(const Z& d, const Z& c) {
    if (c == 0) {
        if (d == 1 || d == -1) return Unit();
        throw Error(ErrorKind::NotCoprime, "G(d,0) needs d = ±1");
    }
    if (d == 0) {
        if (c == 1 || c == -1) return Unit();
        throw Error(ErrorKind::NotCoprime, "G(0,c) needs c = ±1");
    }
    if (zgcd(c, d) != 1) throw Error(ErrorKind::NotCoprime, "gauss_sum_closed needs coprime arguments");
    if (c % 2 != 0 && d % 2 != 0) throw Error(ErrorKind::OddProduct, "gauss_sum_closed needs cd even");
    int scd = (c < 0) != (d < 0) ? -1 : 1;
    if (c % 2 == 0) {
        Z cp = c / 2, ad = abs(d);
        Unit v = Unit::from_sign(jacobi(cp, ad)) * Unit::root8(-scd);
        if (ad % 4 == 3) v *= Unit::i_pow(d > 0 ? 1 : -1);
        return v;
    }
    Z dp = d / 2, ac = abs(c);
    Unit v = Unit::from_sign(kronecker(dp, ac));
    if (ac % 4 == 3) v *= Unit::i_pow(c > 0 ? -1 : 1);
    return v;
}

bool char_is_primitive(const CharTable& t) {
    const long N = t.modulus;
    if (N < 1 || t.order < 1 || static_cast<long>(t.values.size()) != N)
        throw Error(ErrorKind::InvalidParams, "character table shape");
    auto val = [&](long r) { return t.values[static_cast<size_t>(r)]; };
    for (long r = 0; r < N; ++r) {
        bool unit = std::gcd(r, N) == 1;
        if (unit != val(r).has_value()) throw Error(ErrorKind::NotMultiplicative, "support of χ must be the units mod N");
    }
    for (long r = 0; r < N; ++r) {
        if (!val(r)) continue;
        for (long s = 0; s < N; ++s) {
            if (!val(s)) continue;
            long k = ((*val(r) + *val(s)) % t.order + t.order) % t.order;
            long kk = ((*val((r * s) % N)) % t.order + t.order) % t.order;
            if (k != kk) throw Error(ErrorKind::NotMultiplicative, "χ(rs) ≠ χ(r)χ(s)");
        }
    }
    for (long e = 1; e < N; ++e) {
        if (N % e != 0) continue;
        bool trivial_on_kernel = true;
        for (long a = 1; a < N && trivial_on_kernel; ++a) {
            if (std::gcd(a, N) != 1 || a % e != 1 % e) continue;
            if ((*val(a)) % t.order != 0) trivial_on_kernel = false;
        }
        if (trivial_on_kernel) return false;
    }
    return true;
}

DirichletChar::DirichletChar(CharTable t) : t_(std::move(t)) {
    if (!char_is_primitive(t_)) throw Error(ErrorKind::NotPrimitive, "character is not primitive");
    name_ = "chi" + std::to_string(t_.modulus);
}

DirichletChar DirichletChar::trivial() { return DirichletChar(); }

DirichletChar DirichletChar::legendre(long p) {
    if (p < 3 || p % 2 == 0) throw Error(ErrorKind::InvalidParams, "legendre needs an odd prime");
    for (long q = 3; q * q <= p; q += 2)
        if (p % q == 0) throw Error(ErrorKind::InvalidParams, "legendre needs an odd prime");
    CharTable t{p, 2, std::vector<std::optional<long>>(static_cast<size_t>(p))};
    for (long r = 1; r < p; ++r) t.values[static_cast<size_t>(r)] = kronecker(r, p) == 1 ? 0 : 1;
    DirichletChar chi(t);
    chi.name_ = "legendre" + std::to_string(p);
    return chi;
}

DirichletChar DirichletChar::quadratic(long D) {
    long N = D < 0 ? -D : D;
    if (N < 3) throw Error(ErrorKind::InvalidParams, "quadratic character needs |D| >= 3");
    CharTable t{N, 2, std::vector<std::optional<long>>(static_cast<size_t>(N))};
    for (long r = 1; r < N; ++r)
        if (std::gcd(r, N) == 1) t.values[static_cast<size_t>(r)] = kronecker(D, r) == 1 ? 0 : 1;
    DirichletChar chi(t);
    chi.name_ = "kronecker(" + std::to_string(D) + ")";
    return chi;
}

std::optional<Unit> DirichletChar::eval(const Z& n) const {
    long r = mod_pos(n, t_.modulus).convert_to<long>();
    const auto& v = t_.values[static_cast<size_t>(r)];
    if (!v) return std::nullopt;
    return Unit(Q(2 * *v, t_.order));
}

cplx DirichletChar::value(const Z& n) const {
    auto v = eval(n);
    return v ? v->to_complex() : cplx(0);
}

int DirichletChar::parity() const {
    auto v = eval(-1);
    return (v && *v == Unit()) ? 1 : -1;
}

bool DirichletChar::is_real() const {
    for (const auto& v : t_.values)
        if (v && (2 * *v) % t_.order != 0) return false;
    return true;
}

cplx char_gauss(const DirichletChar& chi, const Z& n) {
    const long N = chi.modulus();
    long nr = mod_pos(n, N).convert_to<long>();
    cplx s = 0;
    for (long k = 0; k < N; ++k) {
        auto v = chi.eval(k);
        if (!v) continue;
        real ang = 2 * kPi * static_cast<real>((k * nr) % N) / static_cast<real>(N);
        s += std::conj(v->to_complex()) * cplx(std::cos(ang), std::sin(ang));
    }
    return s;
}

} // namespace mtx
