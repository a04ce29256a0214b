#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "mtx/serialize.hpp"

using namespace mtx;

namespace {

cplx parse_z(const std::string& s) {
    auto comma = s.find(',');
    if (comma == std::string::npos) throw Error(ErrorKind::InvalidParams, "z must be 're,im'");
    try {
        return {std::stold(s.substr(0, comma)), std::stold(s.substr(comma + 1))};
    } catch (const std::exception&) {
        throw Error(ErrorKind::InvalidParams, "bad z '" + s + "'");
    }
}

DirichletChar load_chi(const std::string& path) {
    if (path.empty()) return DirichletChar::trivial();
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::InvalidParams, "cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw Error(ErrorKind::InvalidParams, path + ": " + e.what());
    }
    return char_from_json(j);
}

bool all_pass(const std::vector<VerificationReport>& rs) {
    for (const auto& r : rs)
        if (!r.pass) return false;
    return true;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"mtx: metaplectic cocycles, multipliers and theta series"};
    app.require_subcommand(1);
    int rc = 0;

    std::string kind, g1s, g2s;
    auto* cc = app.add_subcommand("cocycle", "evaluate a 2-cocycle C(g1, g2)");
    cc->add_option("kind", kind, "bar | tilde | hat")->required();
    cc->add_option("g1", g1s, "a,b,c,d")->required();
    cc->add_option("g2", g2s, "a,b,c,d")->required();

    std::string mid, rs;
    auto* mc = app.add_subcommand("multiplier", "evaluate a multiplier table at r");
    mc->add_option("id", mid, "lambda | nu_theta[:t] | nu_thetaM[:t] | nu_thetaF[:t] | delta_M | delta_F")->required();
    mc->add_option("r", rs, "a,b,c,d")->required();

    std::string variant, chi_file, zs;
    long t = 1;
    int kappa = 1;
    real tol = kDefaultTol;
    auto* tc = app.add_subcommand("theta", "evaluate a theta series");
    tc->add_option("variant", variant, "plain | minus | fermionic")->required();
    tc->add_option("--chi", chi_file, "character JSON file (default: trivial)");
    tc->add_option("--t", t, "scale t")->check(CLI::PositiveNumber);
    tc->add_option("--kappa", kappa, "1 or 3")->check(CLI::IsMember({1, 3}));
    tc->add_option("--z", zs, "re,im")->required();
    tc->add_option("--tol", tol, "truncation tolerance");

    std::string ezs;
    auto* ec = app.add_subcommand("eta", "evaluate the Dedekind eta function");
    ec->add_option("--z", ezs, "re,im")->required();
    ec->add_option("--tol", tol, "truncation tolerance");

    std::string target, profile = "quick", chi_name;
    long samples = -1, zcount = -1, N = -1, vt = -1;
    int vkappa = 0, delta = 0;
    double vtol = -1;
    std::uint64_t seed = 1;
    auto* vc = app.add_subcommand("verify", "verify a theorem, a suite, or everything");
    vc->add_option("target", target, "theorem tag, suite name, or 'all'")->required();
    vc->add_option("--samples", samples, "group elements per check");
    vc->add_option("--zs", zcount, "points per element");
    vc->add_option("--tol", vtol, "tolerance");
    vc->add_option("--seed", seed, "RNG seed");
    vc->add_option("--profile", profile, "quick | full");
    vc->add_option("--N", N, "level N");
    vc->add_option("--chi", chi_name, "trivial | legendre<p> | kronecker(<D>) | chi4");
    vc->add_option("--kappa", vkappa, "1 or 3");
    vc->add_option("--delta", delta, "+1 or -1");
    vc->add_option("--t", vt, "scale t");

    std::string out = "report.json", report_profile = "full";
    auto* rc_ = app.add_subcommand("report", "run the full profile and write the report");
    rc_->add_option("--out", out, "output path");
    rc_->add_option("--seed", seed, "RNG seed");
    rc_->add_option("--profile", report_profile, "quick | full");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*cc) {
            CocycleKind k = parse_kind(kind);
            CocycleValue v = big_cocycle(parse_matrix(g1s), parse_matrix(g2s), k);
            json j;
            j["kind"] = kind_name(k);
            j["value"] = k == CocycleKind::Hat ? complex_json(v.value) : to_json(v.exact);
            j["complex"] = complex_json(k == CocycleKind::Hat ? v.value : v.exact.to_complex());
            std::cout << j.dump(2) << "\n";
        } else if (*mc) {
            Unit v = nu_table(parse_multiplier(mid), parse_matrix(rs));
            json j;
            j["multiplier"] = parse_multiplier(mid).str();
            j["exponent"] = to_json(v);
            j["value"] = complex_json(v.to_complex());
            std::cout << j.dump(2) << "\n";
        } else if (*tc) {
            ThetaSpec spec{parse_variant(variant), kappa, load_chi(chi_file), t};
            std::cout << to_json(theta_series(spec, parse_z(zs), tol)).dump(2) << "\n";
        } else if (*ec) {
            std::cout << to_json(eta(parse_z(ezs), tol)).dump(2) << "\n";
        } else if (*vc) {
            Profile prof = parse_profile(profile);
            std::vector<VerificationReport> reps;
            const long suite_n = samples > 0 ? samples : (prof == Profile::Full ? 10000 : 100);
            if (target == "all") {
                reps = run_all(prof, seed);
            } else if (target == "cocycle") {
                for (auto k : {CocycleKind::Bar, CocycleKind::Tilde, CocycleKind::Hat})
                    for (auto sc : {GroupScope::SL2Z, GroupScope::GL2Q}) reps.push_back(check_cocycle_suite(k, sc, suite_n, seed));
            } else if (target == "coboundary") {
                reps.push_back(check_coboundary_suite(suite_n, seed));
            } else if (target == "gauss") {
                reps.push_back(check_gauss_suite(prof == Profile::Full ? 200 : 40));
            } else if (target == "trivialization") {
                reps.push_back(check_trivialization_suite(suite_n, seed));
            } else if (target == "lambda") {
                reps.push_back(check_lambda_suite(suite_n, seed));
            } else {
                TheoremTag tag = parse_theorem_tag(target);
                std::vector<TheoremId> ids;
                if (N > 0 || !chi_name.empty() || vkappa || delta || vt > 0) {
                    TheoremId id{tag};
                    if (N > 0) id.N = N;
                    if (!chi_name.empty()) id.chi = chi_name;
                    if (vkappa) id.kappa = vkappa;
                    if (delta) id.delta = delta;
                    if (vt > 0) id.t = vt;
                    ids.push_back(id);
                } else {
                    for (const auto& id : default_theorems())
                        if (id.tag == tag) ids.push_back(id);
                }
                for (const auto& id : ids) {
                    CheckParams p;
                    p.seed = seed;
                    p.samples = samples > 0 ? samples : (prof == Profile::Full ? 1000 : 20);
                    p.z_count = zcount > 0 ? zcount : (prof == Profile::Full ? 10 : 3);
                    p.tol = vtol > 0 ? vtol : (tag == TheoremTag::Eta3Product ? 1e-10 : 1e-9);
                    reps.push_back(check_transformation(id, p));
                }
            }
            std::cout << to_json(reps).dump(2) << "\n";
            rc = all_pass(reps) ? 0 : 1;
        } else if (*rc_) {
            auto reps = run_all(parse_profile(report_profile), seed);
            std::ofstream o(out);
            if (!o) throw Error(ErrorKind::InvalidParams, "cannot write " + out);
            o << to_json(reps).dump(2) << "\n";
            long failed = 0;
            for (const auto& r : reps) failed += r.pass ? 0 : 1;
            std::cerr << reps.size() << " reports, " << failed << " failed, written to " << out << "\n";
            rc = failed == 0 ? 0 : 1;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return rc;
}
