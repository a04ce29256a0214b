#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mtx/exactmat.hpp"

namespace mtx {

// Exact point e^{iπq} on the unit circle, q reduced to [0, 2).
class Unit {
public:
    Unit() = default;
    explicit Unit(const Q& q);

    static Unit from_sign(int s); // ±1
    static Unit i_pow(long k);    // i^k
    static Unit root8(long k);    // e^{iπk/4}

    const Q& exponent() const { return q_; }
    Unit operator*(const Unit& o) const { return Unit(q_ + o.q_); }
    Unit& operator*=(const Unit& o) { return *this = *this * o; }
    Unit inv() const { return Unit(-q_); }
    Unit pow(long k) const { return Unit(q_ * k); }
    cplx to_complex() const;
    bool operator==(const Unit& o) const { return q_ == o.q_; }
    bool operator!=(const Unit& o) const { return q_ != o.q_; }
    std::string str() const; // "e^{iπ p/q}"

private:
    Q q_{0};
};

int jacobi(Z a, Z n);
int kronecker(const Z& a, const Z& b);
Unit eps_d(const Z& d);
int hilbert_real(const Q& a, const Q& b);
int hilbert_real(real a, real b);
Q sawtooth(const Q& x);
Q dedekind_sum(const Z& d, const Z& c);
Q asai_mu(const Mat2Q& g);

// G(c,d) = |d|^{-1/2} Σ_{n<|d|} e^{-πi c n²/d}
cplx gauss_sum_brute(const Z& c, const Z& d);
// G(d,c) by the four-branch closed form.
Unit gauss_sum_closed(const Z& d, const Z& c);

struct CharTable {
    long modulus = 1;
    long order = 1;
    // values[r] = k means χ(r) = e^{2πik/order}; nullopt where gcd(r, modulus) > 1
    std::vector<std::optional<long>> values{0};
};

bool char_is_primitive(const CharTable& t);

class DirichletChar {
public:
    DirichletChar() = default;
    explicit DirichletChar(CharTable t); // validates multiplicativity and primitivity

    static DirichletChar trivial();
    static DirichletChar legendre(long p);
    // Kronecker character n -> (D/n) for a fundamental discriminant D.
    static DirichletChar quadratic(long D);

    long modulus() const { return t_.modulus; }
    long order() const { return t_.order; }
    const CharTable& table() const { return t_; }
    std::optional<Unit> eval(const Z& n) const;
    cplx value(const Z& n) const; // 0 where χ vanishes
    int parity() const;
    bool is_real() const;
    std::string name() const { return name_; }
    void set_name(std::string n) { name_ = std::move(n); }

private:
    CharTable t_;
    std::string name_ = "trivial";
};

inline std::optional<Unit> char_eval(const DirichletChar& chi, const Z& n) { return chi.eval(n); }
// Σ_{k mod N} χ̄(k) e^{2πikn/N}
cplx char_gauss(const DirichletChar& chi, const Z& n);

} // namespace mtx
