#include "mtx/serialize.hpp"

namespace mtx {

namespace {

double num(real x) { return static_cast<double>(x); }

} // namespace

json complex_json(cplx z) { return json::array({num(z.real()), num(z.imag())}); }

json to_json(const Mat2Q& g) { return json::array({to_string(g.a), to_string(g.b), to_string(g.c), to_string(g.d)}); }

json to_json(const Unit& u) { return to_string(u.exponent()); }

json to_json(const DirichletChar& chi) {
    json vals = json::array();
    for (const auto& v : chi.table().values) vals.push_back(v ? json(*v) : json(nullptr));
    json j;
    j["modulus"] = chi.modulus();
    j["order"] = chi.order();
    j["values"] = vals;
    return j;
}

DirichletChar char_from_json(const json& j) {
    try {
        CharTable t;
        t.modulus = j.at("modulus").get<long>();
        t.order = j.at("order").get<long>();
        t.values.clear();
        for (const auto& v : j.at("values")) {
            if (v.is_null()) t.values.emplace_back(std::nullopt);
            else t.values.emplace_back(v.get<long>());
        }
        return DirichletChar(std::move(t));
    } catch (const json::exception& e) {
        throw Error(ErrorKind::InvalidParams, std::string("bad character JSON: ") + e.what());
    }
}

json to_json(const MetaElem& x) {
    json j;
    j["kind"] = kind_name(x.kind);
    j["matrix"] = to_json(x.g);
    j["eps"] = x.kind == CocycleKind::Hat ? complex_json(x.heps) : to_json(x.eps);
    return j;
}

json to_json(const MonomialMatrix& m) {
    json d = json::array();
    for (const auto& u : m.diag) d.push_back(to_json(u));
    json j;
    j["perm"] = m.perm;
    j["diag"] = d;
    return j;
}

json to_json(const SeriesValue& v) {
    json j;
    j["re"] = num(v.value.real());
    j["im"] = num(v.value.imag());
    j["tol"] = num(v.tol);
    j["terms_used"] = v.terms;
    return j;
}

json to_json(const VerificationReport& r) {
    json f = json::array();
    for (const auto& x : r.failures) {
        json e;
        e["element"] = x.element;
        e["z"] = x.z;
        e["deviation"] = num(x.deviation);
        f.push_back(e);
    }
    json j;
    j["theorem"] = r.theorem;
    j["samples"] = r.samples;
    j["seed"] = r.seed;
    j["max_abs_dev"] = num(r.max_abs_dev);
    j["max_rel_dev"] = num(r.max_rel_dev);
    j["pass"] = r.pass;
    j["failures"] = f;
    return j;
}

json to_json(const std::vector<VerificationReport>& rs) {
    json a = json::array();
    for (const auto& r : rs) a.push_back(to_json(r));
    return a;
}

} // namespace mtx
