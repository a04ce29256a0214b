#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "mtx/induction.hpp"
#include "mtx/theta.hpp"

namespace mtx {

enum class TheoremTag {
    Shimura_Gamma04,
    LionVergne_GammaTheta,
    MainThm1,
    MainThm1Bar,
    MainTheorem1_Vector,
    TensorInduction,
    ExamThetaN_t,
    ExamThetaM_t,
    ExamThetaF_t,
    Eta3Product,
    Eta12Sign,
    PMTheta,
    PMVector,
};

struct TheoremId {
    TheoremTag tag = TheoremTag::Shimura_Gamma04;
    long N = 1;
    std::string chi = "trivial";
    int kappa = 1;
    int delta = 1;
    long t = 1;

    std::string str() const;
};

const char* theorem_tag_name(TheoremTag t);
TheoremTag parse_theorem_tag(const std::string& s);

// "trivial", "legendre<p>", "kronecker(<D>)", "chi4"
DirichletChar chi_by_name(const std::string& name);

struct Failure {
    std::string element;
    std::string z;
    real deviation = 0;
};

struct VerificationReport {
    std::string theorem;
    long samples = 0;
    std::uint64_t seed = 0;
    real max_abs_dev = 0;
    real max_rel_dev = 0;
    bool pass = true;
    std::vector<Failure> failures;
    real tol = 0;

    // Relative deviation when |lhs| > 1e−6, absolute otherwise.
    void record(cplx lhs, cplx rhs, const std::string& element, cplx z);
    void record_exact(bool ok, const std::string& element);
    void record_abs(real dev, const std::string& element, cplx z = 0);
    void finish();
};

// Per-sample stream derived from (seed, tag, index).
Rng sample_rng(std::uint64_t seed, const std::string& tag, long index);

// z = −d/c + (x+iy)/|c| with x ∈ [−1,1], y ∈ [0.5,1.5]; c = 0 gives x+iy.
cplx sample_z(const Mat2Q& g, Rng& rng);

enum class GroupScope { SL2Z, GL2Q };

struct CheckParams {
    long samples = 100;
    long z_count = 10;
    real tol = 1e-9L;
    std::uint64_t seed = 1;
    long bound = 150;
};

VerificationReport check_cocycle_suite(CocycleKind kind, GroupScope scope, long samples, std::uint64_t seed);
// relacto(3), twocoz0, eightcoz0, ztoz0, equah-1
VerificationReport check_coboundary_suite(long samples, std::uint64_t seed);
VerificationReport check_gauss_suite(long bound);
VerificationReport check_trivialization_suite(long samples, std::uint64_t seed);
VerificationReport check_lambda_suite(long samples, std::uint64_t seed, long bound = 10000);

VerificationReport check_transformation(const TheoremId& id, const CheckParams& p);

enum class Profile { Quick, Full };
Profile parse_profile(const std::string& s);

std::vector<TheoremId> default_theorems();
std::vector<VerificationReport> run_all(Profile profile, std::uint64_t seed);

} // namespace mtx
