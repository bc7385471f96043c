#include "fchar/json_io.hpp"

#include <charconv>

namespace fchar::json_io {

json vec(const IntVec& v) {
  json out = json::array();
  for (auto x : v) out.push_back(std::to_string(x));
  return out;
}

json vecs(const std::vector<IntVec>& vs) {
  json out = json::array();
  for (const auto& v : vs) out.push_back(vec(v));
  return out;
}

json polys(const std::vector<Polynomial>& ps) {
  json out = json::array();
  for (const auto& p : ps) out.push_back(p.to_string());
  return out;
}

json ideal(const Ideal& i) { return polys(i.generators()); }

namespace {

json obstruction(const Obstruction& ob) {
  if (const auto* f = std::get_if<FaceCongruenceObstruction>(&ob)) {
    return {{"kind", "face-congruence"},
            {"element", vec(f->element)},
            {"face_rays", vecs(f->face_rays)},
            {"face_generators", vecs(f->face_generators)},
            {"face_lattice", vecs(f->face_lattice)},
            {"order", std::to_string(f->order)},
            {"p", f->p},
            {"blocking_prime", std::to_string(f->blocking_prime)}};
  }
  const auto& b = std::get<BranchPointObstruction>(ob);
  return {{"kind", "branch-point"}, {"p", b.p}, {"a", b.a}, {"b", b.b}};
}

json transcript(const std::vector<TranscriptEntry>& t) {
  json out = json::array();
  for (const auto& e : t) out.push_back({{"e", e.e}, {"condition", e.condition}, {"result", e.result}});
  return out;
}

}  // namespace

json verdict(const FCoherenceVerdict& v) {
  json out{{"status", to_string(v.status)}, {"evidence", v.evidence}};
  out["certificate"] = v.certificate_e ? json{{"e", *v.certificate_e}, {"kind", v.certificate_kind}} : json(nullptr);
  out["witness"] = v.witness ? vec(*v.witness) : json(nullptr);
  out["obstruction"] = v.obstruction ? obstruction(*v.obstruction) : json(nullptr);
  return out;
}

json closure(const ClosureVerdict& v) {
  json out{{"status", to_string(v.status)}, {"e_max", v.e_max}, {"transcript", transcript(v.transcript)},
           {"notes", v.notes}};
  out["exponent"] = v.exponent ? json(*v.exponent) : json(nullptr);
  out["witness"] = v.witness ? json(v.witness->to_string()) : json(nullptr);
  out["witness_e_min"] = v.witness_e_min ? json(*v.witness_e_min) : json(nullptr);
  return out;
}

json fedder(const FedderResult& r) {
  json out{{"f_pure", r.f_pure}, {"colon", ideal(r.colon)}};
  out["escaping_element"] = r.escaping_element ? json(r.escaping_element->to_string()) : json(nullptr);
  return out;
}

json identity(const IdentityCheck& r) { return {{"holds", r.holds}, {"lhs", ideal(r.lhs)}, {"rhs", ideal(r.rhs)}}; }

json comparison(const ClosureComparison& c) {
  json probes = json::array();
  for (const auto& p : c.probes)
    probes.push_back({{"probe", p.probe.to_string()},
                      {"frobenius", to_string(p.frobenius.status)},
                      {"tight", to_string(p.tight.status)},
                      {"tension", p.tension}});
  return {{"probes", probes}, {"tensions", c.tensions}};
}

json semigroup(const AffineSemigroup& c) { return {{"dim", c.dim()}, {"gens", vecs(c.generators())}}; }

json lattice(const LatticeGroup& g) { return {{"rank", g.rank()}, {"hnf_basis", vecs(g.basis())}}; }

json cone(const RationalCone& c) {
  return {{"span_dim", c.span_dim},
          {"rays", vecs(c.rays)},
          {"inequalities", vecs(c.inequalities)},
          {"equations", vecs(c.equations)}};
}

json face(const Face& f) {
  return {{"label", f.label}, {"dim", f.dim}, {"rays", vecs(f.rays)}, {"functional", vec(f.functional)}};
}

json normality(const NormalityResult& r) {
  json out{{"normal", r.normal}};
  out["witness"] = r.witness ? vec(*r.witness) : json(nullptr);
  return out;
}

json pi_test(const NormalizationPiResult& r) {
  json elems = json::array();
  for (const auto& e : r.elements) {
    json j{{"element", vec(e.element)}, {"face", e.face},  {"order", std::to_string(e.order)},
           {"pass", e.pass},            {"reason", e.reason}};
    j["exponent"] = e.exponent ? json(*e.exponent) : json(nullptr);
    j["obstruction"] = e.obstruction ? obstruction(*e.obstruction) : json(nullptr);
    elems.push_back(std::move(j));
  }
  return {{"pass", r.pass}, {"elements", elems}};
}

json retraction(const Retraction& r) {
  return {{"face", face(r.face)},
          {"kept", vecs(r.kept)},
          {"killed", vecs(r.killed)},
          {"pairs_checked", r.pairs_checked},
          {"idempotent", r.idempotent},
          {"identity_on_face", r.identity_on_face},
          {"multiplicative", r.multiplicative},
          {"self_check_passed", r.self_check_passed()}};
}

json membership(const SemigroupMembership& m, const AffineSemigroup& c) {
  json out{{"member", m.member}};
  if (m.member) {
    json combo = json::array();
    for (std::size_t k = 0; k < m.multiplicities.size(); ++k)
      if (m.multiplicities[k] != 0)
        combo.push_back({{"generator", vec(c.generators()[k])}, {"times", std::to_string(m.multiplicities[k])}});
    out["combination"] = combo;
  }
  return out;
}

json curve_pi(const CurvePiResult& r) {
  json out{{"status", r.purely_inseparable ? "PurelyInseparable" : "NoCertificateUpToBound"},
           {"e_max", r.e_max},
           {"transcript", transcript(r.transcript)}};
  out["exponent"] = r.exponent ? json(*r.exponent) : json(nullptr);
  out["representation"] = r.representation ? json(r.representation->to_string()) : json(nullptr);
  out["representation_verified"] = r.representation_verified;
  out["next_exponent_holds"] = r.next_exponent_holds ? json(*r.next_exponent_holds) : json(nullptr);
  return out;
}

json numerical(const NumericalSemigroup& s) {
  json gens = json::array(), gaps = json::array();
  for (auto g : s.generators()) gens.push_back(std::to_string(g));
  for (auto g : s.gaps()) gaps.push_back(std::to_string(g));
  return {{"generators", gens}, {"frobenius_number", std::to_string(s.frobenius_number())}, {"gaps", gaps}};
}

std::int64_t integer(const json& j) {
  if (j.is_number_integer()) return j.get<std::int64_t>();
  if (j.is_string()) {
    const auto& s = j.get_ref<const std::string&>();
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec == std::errc() && ptr == s.data() + s.size()) return v;
  }
  throw PreconditionError("expected an integer, got " + j.dump());
}

IntVec int_vec(const json& j) {
  if (!j.is_array()) throw PreconditionError("expected an integer array, got " + j.dump());
  IntVec out;
  for (const auto& x : j) out.push_back(integer(x));
  return out;
}

AffineSemigroup parse_semigroup(const json& j) {
  if (!j.is_object() || !j.contains("gens")) throw PreconditionError("semigroup JSON needs a \"gens\" array");
  std::vector<IntVec> gens;
  for (const auto& g : j.at("gens")) gens.push_back(int_vec(g));
  if (gens.empty()) throw PreconditionError("semigroup has no generators");
  std::size_t dim = j.contains("dim") ? static_cast<std::size_t>(integer(j.at("dim"))) : gens.front().size();
  return AffineSemigroup(dim, std::move(gens));
}

CurvePresentation parse_curve(const json& j) {
  if (!j.is_object() || !j.contains("char") || !j.contains("gens_in_u"))
    throw PreconditionError("curve JSON needs \"char\" and \"gens_in_u\"");
  return make_curve(static_cast<std::uint32_t>(integer(j.at("char"))),
                    j.at("gens_in_u").get<std::vector<std::string>>());
}

}  // namespace fchar::json_io
