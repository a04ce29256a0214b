#pragma once

#include <json.hpp>

#include "mtx/harness.hpp"

namespace mtx {

using json = nlohmann::ordered_json;

json to_json(const Mat2Q& g); // ["a", "b", "c", "d"]
json to_json(const Unit& u);  // exponent "p/q"
json to_json(const DirichletChar& chi);
json to_json(const MetaElem& x);
json to_json(const MonomialMatrix& m);
json to_json(const SeriesValue& v);
json to_json(const VerificationReport& r);
json to_json(const std::vector<VerificationReport>& rs);
json complex_json(cplx z); // [re, im]

// {modulus, order, values}; residues with null are non-units
DirichletChar char_from_json(const json& j);

} // namespace mtx
