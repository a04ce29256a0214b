#include "mtx/exactmat.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <sstream>
#include <vector>

namespace mtx {

const char* error_kind_name(ErrorKind k) {
    switch (k) {
    case ErrorKind::SingularMatrix: return "SingularMatrix";
    case ErrorKind::NotUnimodular: return "NotUnimodular";
    case ErrorKind::NotInGroup: return "NotInGroup";
    case ErrorKind::NotInDomain: return "NotInDomain";
    case ErrorKind::BothZero: return "BothZero";
    case ErrorKind::EvenInput: return "EvenInput";
    case ErrorKind::ZeroInput: return "ZeroInput";
    case ErrorKind::NotCoprime: return "NotCoprime";
    case ErrorKind::ZeroModulus: return "ZeroModulus";
    case ErrorKind::OddProduct: return "OddProduct";
    case ErrorKind::NotMultiplicative: return "NotMultiplicative";
    case ErrorKind::NotPrimitive: return "NotPrimitive";
    case ErrorKind::DomainError: return "DomainError";
    case ErrorKind::PoleAtZ: return "PoleAtZ";
    case ErrorKind::KindMismatch: return "KindMismatch";
    case ErrorKind::HatUnsupported: return "HatUnsupported";
    case ErrorKind::NotOrthogonal: return "NotOrthogonal";
    case ErrorKind::InternalMismatch: return "InternalMismatch";
    case ErrorKind::InvalidParams: return "InvalidParams";
    }
    return "Unknown";
}

real to_real(const Q& q) {
    return boost::multiprecision::numerator(q).convert_to<real>() /
           boost::multiprecision::denominator(q).convert_to<real>();
}

std::string to_string(const Q& q) {
    std::ostringstream os;
    os << boost::multiprecision::numerator(q);
    if (boost::multiprecision::denominator(q) != 1) os << "/" << boost::multiprecision::denominator(q);
    return os.str();
}

Q parse_rational(const std::string& s0) {
    std::string s = s0;
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.erase(s.begin());
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
    if (s.empty()) throw Error(ErrorKind::InvalidParams, "empty rational");
    try {
        auto slash = s.find('/');
        if (slash != std::string::npos) {
            Z p(s.substr(0, slash)), q(s.substr(slash + 1));
            if (q == 0) throw Error(ErrorKind::InvalidParams, "zero denominator in '" + s + "'");
            return Q(p, q);
        }
        auto dot = s.find('.');
        if (dot != std::string::npos) {
            std::string ip = s.substr(0, dot), fp = s.substr(dot + 1);
            bool neg = !ip.empty() && ip[0] == '-';
            if (neg) ip = ip.substr(1);
            if (ip.empty()) ip = "0";
            Z den = 1;
            for (size_t i = 0; i < fp.size(); ++i) den *= 10;
            Z num = Z(ip) * den + (fp.empty() ? Z(0) : Z(fp));
            return neg ? Q(-num, den) : Q(num, den);
        }
        return Q(Z(s));
    } catch (const Error&) {
        throw;
    } catch (const std::exception&) {
        throw Error(ErrorKind::InvalidParams, "cannot parse rational '" + s + "'");
    }
}

bool is_integer(const Q& q) { return boost::multiprecision::denominator(q) == 1; }

Z to_int(const Q& q) {
    if (!is_integer(q)) throw Error(ErrorKind::DomainError, "expected integer, got " + to_string(q));
    return boost::multiprecision::numerator(q);
}

int sgn(const Q& q) { return q > 0 ? 1 : (q < 0 ? -1 : 0); }

Mat2R operator*(const Mat2R& x, const Mat2R& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

Mat2C operator*(const Mat2C& x, const Mat2C& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

Mat2C inv(const Mat2C& m) {
    cplx D = m.det();
    if (D == cplx(0)) throw Error(ErrorKind::SingularMatrix, "inverse of singular complex matrix");
    return {m.d / D, -m.b / D, -m.c / D, m.a / D};
}

real max_abs(const Mat2C& m) { return std::max({std::abs(m.a), std::abs(m.b), std::abs(m.c), std::abs(m.d)}); }

real max_abs_diff(const Mat2C& x, const Mat2C& y) {
    return max_abs({x.a - y.a, x.b - y.b, x.c - y.c, x.d - y.d});
}

bool Mat2Q::integral() const { return is_integer(a) && is_integer(b) && is_integer(c) && is_integer(d); }

Mat2R Mat2Q::to_real() const { return {mtx::to_real(a), mtx::to_real(b), mtx::to_real(c), mtx::to_real(d)}; }

std::string Mat2Q::str() const {
    return to_string(a) + "," + to_string(b) + "," + to_string(c) + "," + to_string(d);
}

Mat2Q mul(const Mat2Q& x, const Mat2Q& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

Mat2Q inv(const Mat2Q& g) {
    Q D = g.det();
    if (D == 0) throw Error(ErrorKind::SingularMatrix, "inverse of " + g.str());
    return {g.d / D, -g.b / D, -g.c / D, g.a / D};
}

Mat2Q parse_matrix(const std::string& s) {
    std::vector<std::string> parts;
    std::string cur;
    for (char ch : s) {
        if (ch == ',' || ch == ' ' || ch == '[' || ch == ']') {
            if (!cur.empty()) parts.push_back(cur), cur.clear();
        } else {
            cur += ch;
        }
    }
    if (!cur.empty()) parts.push_back(cur);
    if (parts.size() != 4) throw Error(ErrorKind::InvalidParams, "matrix needs 4 entries: '" + s + "'");
    Mat2Q g(parse_rational(parts[0]), parse_rational(parts[1]), parse_rational(parts[2]), parse_rational(parts[3]));
    if (g.det() == 0) throw Error(ErrorKind::SingularMatrix, g.str());
    return g;
}

Mat2Q identity() { return {1, 0, 0, 1}; }
Mat2Q omega() { return {0, -1, 1, 0}; }
Mat2Q h_minus1() { return {1, 0, 0, -1}; }
Mat2Q u(const Q& b) { return {1, b, 0, 1}; }
Mat2Q u_minus(const Q& c) { return {1, 0, c, 1}; }
Mat2Q diag(const Q& a, const Q& d) { return {a, 0, 0, d}; }

namespace {

bool divides(long n, const Q& x) { return is_integer(x) && (boost::multiprecision::numerator(x) % n) == 0; }

int mod2(const Q& x) { return boost::multiprecision::numerator(x) % 2 != 0 ? 1 : 0; }

bool theta_pattern(const Mat2Q& g) {
    int a = mod2(g.a), b = mod2(g.b), c = mod2(g.c), d = mod2(g.d);
    return (a == 1 && b == 0 && c == 0 && d == 1) || (a == 0 && b == 1 && c == 1 && d == 0);
}

} // namespace

bool in_theta_pm(const Mat2Q& g) {
    if (!g.integral()) return false;
    Q D = g.det();
    if (D != 1 && D != -1) return false;
    return theta_pattern(g);
}

bool is_member(const Mat2Q& g, const SubgroupId& s) {
    using T = SubgroupId::Tag;
    if (s.tag == T::P_pos) return g.c == 0 && g.a > 0 && g.det() == 1;
    if (s.tag == T::P_pos_pm) return g.c == 0 && g.a > 0;
    if (!g.integral()) return false;
    Q D = g.det();
    if (s.tag == T::SL2Zpm) return D == 1 || D == -1;
    if (D != 1) return false;
    long N = s.N;
    switch (s.tag) {
    case T::SL2Z: return true;
    case T::GammaN: return divides(N, g.a - 1) && divides(N, g.b) && divides(N, g.c) && divides(N, g.d - 1);
    case T::Gamma0: return divides(N, g.c);
    case T::GammaUpper0: return divides(N, g.b);
    case T::GammaTheta: return theta_pattern(g);
    case T::Gamma2: return divides(2, g.a - 1) && divides(2, g.b) && divides(2, g.c) && divides(2, g.d - 1);
    case T::Gamma42:
        return divides(4, g.a - 1) && divides(4, g.d - 1) && divides(2, g.b) && divides(2, g.c);
    case T::Gamma2NN:
        if (N % 2 != 0) throw Error(ErrorKind::InvalidParams, "Gamma(2N,N) needs even N");
        return divides(2 * N, g.a - 1) && divides(2 * N, g.d - 1) && divides(N, g.b) && divides(N, g.c);
    default: return false;
    }
}

Iwasawa iwasawa(const Mat2R& g) {
    real D = g.det();
    if (std::fabs(std::fabs(D) - 1) > 1e-10L) throw Error(ErrorKind::NotUnimodular, "iwasawa needs det ±1");
    real s = D > 0 ? 1 : -1;
    real r = std::sqrt(g.c * g.c + g.d * g.d);
    Mat2R p{1 / r, s * (g.b * g.d + g.a * g.c) / r, 0, s * r};
    Mat2R k{s * g.d / r, -s * g.c / r, s * g.c / r, s * g.d / r};
    return {p, k};
}

std::vector<Mat2Q> theta_coset_reps(long N) {
    if (N < 1) throw Error(ErrorKind::InvalidParams, "N must be positive");
    if (N % 2 == 0) return {u(1), identity()};
    return {u(N), identity(), u_minus(-Q(N) * N)};
}

CosetIndex theta_coset_index(const Mat2Q& g, long N) {
    SubgroupId g0{SubgroupId::Tag::Gamma0, N * N};
    if (!is_member(g, g0)) throw Error(ErrorKind::NotInGroup, g.str() + " not in Gamma0(N^2)");
    auto reps = theta_coset_reps(N);
    for (int i = 0; i < static_cast<int>(reps.size()); ++i) {
        Mat2Q s = mul(g, inv(reps[i]));
        if (is_member(s, g0) && is_member(s, {SubgroupId::Tag::GammaTheta, 1})) return {i, s};
    }
    throw Error(ErrorKind::InternalMismatch, "no coset found for " + g.str());
}

Egcd egcd(const Z& a, const Z& b) {
    Z r0 = a, r1 = b, x0 = 1, x1 = 0, y0 = 0, y1 = 1;
    while (r1 != 0) {
        Z q = r0 / r1;
        Z t = r0 - q * r1; r0 = r1; r1 = t;
        t = x0 - q * x1; x0 = x1; x1 = t;
        t = y0 - q * y1; y0 = y1; y1 = t;
    }
    if (r0 < 0) r0 = -r0, x0 = -x0, y0 = -y0;
    return {r0, x0, y0};
}

Mat2Q random_gamma0(long M, long bound, Rng& rng) {
    if (M < 1 || bound < 1) throw Error(ErrorKind::InvalidParams, "random_gamma0 needs M, bound >= 1");
    long cmax = bound / M;
    std::uniform_int_distribution<long> dc(-cmax, cmax), dd(-bound, bound), dk(-5, 5);
    for (;;) {
        Z c = Z(M) * dc(rng);
        Z d = dd(rng);
        if (d == 0 && c != 1 && c != -1) continue;
        auto e = egcd(d, c);
        if (e.g != 1) continue;
        // x*d + y*c = 1, so a = x, b = -y gives ad - bc = 1
        Z a = e.x, b = -e.y;
        long k = dk(rng);
        return {Q(a + k * c), Q(b + k * d), Q(c), Q(d)};
    }
}

} // namespace mtx
