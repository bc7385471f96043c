#pragma once

// JSON views of library results. Exponent vectors are written as arrays of
// decimal strings; polynomials as strings.

#include <json.hpp>

#include "fchar/charp.hpp"
#include "fchar/onedim.hpp"
#include "fchar/semigroup.hpp"

namespace fchar::json_io {

using nlohmann::json;

json vec(const IntVec& v);
json vecs(const std::vector<IntVec>& vs);
json polys(const std::vector<Polynomial>& ps);
json ideal(const Ideal& i);

json verdict(const FCoherenceVerdict& v);
json closure(const ClosureVerdict& v);
json fedder(const FedderResult& r);
json identity(const IdentityCheck& r);
json comparison(const ClosureComparison& c);

json semigroup(const AffineSemigroup& c);
json lattice(const LatticeGroup& g);
json cone(const RationalCone& c);
json face(const Face& f);
json normality(const NormalityResult& r);
json pi_test(const NormalizationPiResult& r);
json retraction(const Retraction& r);
json membership(const SemigroupMembership& m, const AffineSemigroup& c);

json curve_pi(const CurvePiResult& r);
json numerical(const NumericalSemigroup& s);

/// Integer read from a number or a decimal string.
std::int64_t integer(const json& j);
IntVec int_vec(const json& j);

/// {"dim":2,"gens":[[4,0],[3,1]]}; entries may be numbers or decimal strings.
AffineSemigroup parse_semigroup(const json& j);
/// {"char":3,"gens_in_u":["u^2-1","u^3-u"]}
CurvePresentation parse_curve(const json& j);

}  // namespace fchar::json_io
