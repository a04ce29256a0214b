#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <complex>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "mtx/error.hpp"

namespace mtx {

using Z = boost::multiprecision::cpp_int;
using Q = boost::multiprecision::cpp_rational;
using real = long double;
using cplx = std::complex<real>;
using Rng = std::mt19937_64;

inline const real kPi = 3.141592653589793238462643383279502884L;

real to_real(const Q& q);
std::string to_string(const Q& q);
// Accepts "p", "p/q", or a plain decimal like "0.5".
Q parse_rational(const std::string& s);
bool is_integer(const Q& q);
Z to_int(const Q& q); // throws DomainError unless integral
int sgn(const Q& q);

struct Mat2R {
    real a = 1, b = 0, c = 0, d = 1;
    real det() const { return a * d - b * c; }
    cplx act(cplx z) const { return (a * z + b) / (c * z + d); }
};

Mat2R operator*(const Mat2R& x, const Mat2R& y);

// Complex 2×2 carrier for matrix-valued factors.
struct Mat2C {
    cplx a{1}, b{0}, c{0}, d{1};
    cplx det() const { return a * d - b * c; }
};

Mat2C operator*(const Mat2C& x, const Mat2C& y);
Mat2C inv(const Mat2C& m);
real max_abs(const Mat2C& m);
real max_abs_diff(const Mat2C& x, const Mat2C& y);

struct Mat2Q {
    Q a{1}, b{0}, c{0}, d{1};

    Mat2Q() = default;
    Mat2Q(Q a_, Q b_, Q c_, Q d_) : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {}

    Q det() const { return a * d - b * c; }
    bool integral() const;
    Mat2R to_real() const;
    cplx act(cplx z) const { return to_real().act(z); }
    std::string str() const; // "a,b,c,d"
    bool operator==(const Mat2Q& o) const = default;
};

Mat2Q mul(const Mat2Q& g1, const Mat2Q& g2);
Mat2Q inv(const Mat2Q& g);
inline Mat2Q operator*(const Mat2Q& x, const Mat2Q& y) { return mul(x, y); }

// "a,b,c,d" with rational entries
Mat2Q parse_matrix(const std::string& s);

Mat2Q identity();
Mat2Q omega();                 // [[0,-1],[1,0]]
Mat2Q h_minus1();              // diag(1,-1)
Mat2Q u(const Q& b);           // [[1,b],[0,1]]
Mat2Q u_minus(const Q& c);     // [[1,0],[c,1]]
Mat2Q diag(const Q& a, const Q& d);

struct SubgroupId {
    enum class Tag { SL2Z, SL2Zpm, GammaN, Gamma0, GammaUpper0, GammaTheta, Gamma2, Gamma42, Gamma2NN, P_pos, P_pos_pm };
    Tag tag;
    long N = 1;
};

bool is_member(const Mat2Q& g, const SubgroupId& s);

// Γ_θ ∪ h₋₁Γ_θ: integral, det ±1, congruent to I or ω mod 2 up to the entry signs.
bool in_theta_pm(const Mat2Q& g);

struct Iwasawa {
    Mat2R p;
    Mat2R k;
};

Iwasawa iwasawa(const Mat2R& g);

struct CosetIndex {
    int i; // 0-based index into theta_coset_reps(N)
    Mat2Q s;
};

// {u(N), I, u₋(−N²)} for odd N, {u(1), I} for even N.
std::vector<Mat2Q> theta_coset_reps(long N);
CosetIndex theta_coset_index(const Mat2Q& g, long N);

// Random element of Γ₀(M) with |c|,|d| ≤ bound; top row shifted by a random multiple of the bottom.
Mat2Q random_gamma0(long M, long bound, Rng& rng);

// (x, g, y) = extended gcd with x*a + y*b = g ≥ 0
struct Egcd {
    Z g, x, y;
};
Egcd egcd(const Z& a, const Z& b);

} // namespace mtx
