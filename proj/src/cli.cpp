#include "fchar/cli.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <iomanip>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "fchar/fixtures.hpp"
#include "fchar/json_io.hpp"

namespace fchar::cli {

using nlohmann::json;

namespace {

const std::vector<std::string> kCommands = {"gb",     "member",  "colon",    "intersect", "eliminate",
                                            "bracket", "froot",   "fclosure", "tclosure",  "fedder",
                                            "identity-check",     "sg",       "curve",     "ns",
                                            "verify-paper"};

struct Options {
  std::optional<std::uint64_t> chr;
  std::string vars, ideal, ideal2, poly, modulus, file, drop, witnesses, only, vector, face, obstruction, gens;
  std::string order = "grevlex";
  std::string action;
  std::optional<unsigned> emax, emin, e;
  bool text = false;
  bool json_flag = false;
  std::size_t max_pairs = GroebnerLimits{}.max_pairs;
  std::uint64_t max_degree = GroebnerLimits{}.max_degree;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::stringstream in(s);
  while (std::getline(in, cur, sep)) {
    auto b = cur.find_first_not_of(" \t");
    auto e = cur.find_last_not_of(" \t");
    out.push_back(b == std::string::npos ? "" : cur.substr(b, e - b + 1));
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw PreconditionError(path + ": cannot open file");
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

json read_json_file(const std::string& path) {
  const std::string text = read_file(path);
  if (text.find_first_not_of(" \t\r\n") == std::string::npos) throw PreconditionError(path + ": file is empty");
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw PreconditionError(path + ": invalid JSON: " + e.what());
  }
}

// A JSON field that may be a list of strings or one comma-separated string.
std::string joined(const json& j) {
  if (j.is_string()) return j.get<std::string>();
  std::string s;
  for (const auto& x : j) {
    if (!s.empty()) s += ",";
    s += x.get<std::string>();
  }
  return s;
}

// Ring, ideals and polynomials shared by the polynomial subcommands.
struct PolyInput {
  RingPtr ring;
  Ideal ideal;
  Ideal ideal2;
  Ideal modulus;
  std::optional<Polynomial> poly;
  GroebnerLimits limits;

  QuotientRing quotient() const { return modulus.is_zero() ? QuotientRing(ring) : QuotientRing(modulus); }
  const Polynomial& need_poly(const char* what) const {
    if (!poly) throw PreconditionError(std::string("--poly is required (") + what + ")");
    return *poly;
  }
};

PolyInput poly_input(Options o) {
  if (!o.file.empty()) {
    json f = read_json_file(o.file);
    if (!f.is_object()) throw PreconditionError(o.file + ": expected a JSON object");
    if (!o.chr && f.contains("char")) o.chr = static_cast<std::uint64_t>(json_io::integer(f.at("char")));
    if (o.vars.empty() && f.contains("vars")) o.vars = joined(f.at("vars"));
    if (o.ideal.empty() && f.contains("ideal")) o.ideal = joined(f.at("ideal"));
    if (o.ideal2.empty() && f.contains("ideal2")) o.ideal2 = joined(f.at("ideal2"));
    if (o.modulus.empty() && f.contains("modulus")) o.modulus = joined(f.at("modulus"));
    if (o.poly.empty() && f.contains("poly")) o.poly = f.at("poly").get<std::string>();
  }
  if (!o.chr) throw PreconditionError("--char is required");
  std::vector<std::string> vars;
  if (!o.vars.empty()) {
    vars = split(o.vars, ',');
  } else {
    vars = scan_variables(o.ideal + "," + o.ideal2 + "," + o.modulus + "," + o.poly + "," + o.witnesses);
  }
  RingPtr ring = make_ring(*o.chr, vars);
  GroebnerLimits lim;
  lim.max_pairs = o.max_pairs;
  lim.max_degree = o.max_degree;
  std::optional<Polynomial> poly;
  if (!o.poly.empty()) poly = parse_polynomial(o.poly, ring);
  return {ring,
          Ideal(ring, parse_polynomial_list(o.ideal, ring)),
          Ideal(ring, parse_polynomial_list(o.ideal2, ring)),
          Ideal(ring, parse_polynomial_list(o.modulus, ring)),
          std::move(poly),
          lim};
}

const Ideal& need_ideal(const Ideal& i, const char* flag) {
  if (i.is_zero()) throw PreconditionError(std::string("ideal is empty (") + flag + ")");
  return i;
}

json ring_json(const RingPtr& r) { return {{"char", r->characteristic.value()}, {"vars", r->variables}}; }

MonomialOrder order_of(const std::string& name, std::size_t n) {
  if (name == "grevlex") return MonomialOrder::grevlex(n);
  if (name == "lex") return MonomialOrder::lex(n);
  throw PreconditionError("unknown order '" + name + "' (expected lex or grevlex)");
}

AffineSemigroup semigroup_input(const Options& o) {
  if (!o.file.empty()) return json_io::parse_semigroup(read_json_file(o.file));
  if (o.gens.empty()) throw PreconditionError("give the semigroup with --file or --gens \"4,0;3,1\"");
  std::vector<IntVec> gens;
  for (const auto& g : split(o.gens, ';')) {
    IntVec v;
    for (const auto& x : split(g, ',')) v.push_back(json_io::integer(json(x)));
    gens.push_back(std::move(v));
  }
  const std::size_t dim = gens.front().size();
  return AffineSemigroup(dim, std::move(gens));
}

IntVec vector_input(const std::string& s) {
  IntVec v;
  for (const auto& x : split(s, ',')) v.push_back(json_io::integer(json(x)));
  return v;
}

PrimeChar need_char(const Options& o) {
  if (!o.chr) throw PreconditionError("--char is required");
  return PrimeChar(*o.chr);
}

json cmd_poly(const std::string& cmd, const Options& o) {
  const PolyInput in = poly_input(o);
  json r{{"ring", ring_json(in.ring)}};
  const Ideal lifted = in.quotient().lift(in.ideal);
  if (cmd == "gb") {
    const MonomialOrder ord = order_of(o.order, in.ring->nvars());
    r["order"] = ord.name();
    r["basis"] = json_io::ideal(groebner_basis(need_ideal(lifted, "--ideal"), ord, in.limits));
  } else if (cmd == "member") {
    const Polynomial& f = in.need_poly("element to test");
    Polynomial nf = normal_form(f, lifted, in.limits);
    r["member"] = nf.is_zero();
    r["normal_form"] = nf.to_string();
  } else if (cmd == "colon") {
    Ideal c = !in.ideal2.is_zero() ? ideal_colon(lifted, in.ideal2, in.limits)
                                   : ideal_colon(lifted, in.need_poly("or --ideal2"), in.limits);
    r["colon"] = json_io::ideal(groebner_basis(c, in.limits));
  } else if (cmd == "intersect") {
    r["intersection"] = json_io::ideal(groebner_basis(
        ideal_intersect(need_ideal(lifted, "--ideal"), need_ideal(in.quotient().lift(in.ideal2), "--ideal2"), in.limits),
        in.limits));
  } else if (cmd == "eliminate") {
    std::vector<std::size_t> drop;
    for (const auto& name : split(o.drop, ',')) {
      std::size_t i = in.ring->index_of(name);
      if (i >= in.ring->nvars()) throw PreconditionError("--drop names unknown variable '" + name + "'");
      drop.push_back(i);
    }
    if (drop.empty()) throw PreconditionError("--drop is required");
    r["eliminated"] = json_io::ideal(eliminate(lifted, drop, in.limits));
  } else if (cmd == "bracket") {
    const unsigned e = o.e.value_or(1);
    Ideal b = bracket_power(need_ideal(in.ideal, "--ideal"), e);
    r["q"] = std::to_string(in.ring->characteristic.power_of_p(e));
    r["bracket"] = json_io::ideal(b);
    r["basis"] = json_io::ideal(groebner_basis(in.quotient().lift(b), in.limits));
  } else if (cmd == "froot") {
    const unsigned e = o.e.value_or(1);
    r["root"] = json_io::ideal(frobenius_root(need_ideal(in.ideal, "--ideal"), e, in.quotient(), in.limits));
  } else if (cmd == "fclosure") {
    r["verdict"] = json_io::closure(frobenius_closure_member(in.need_poly("element"), in.ideal, in.quotient(),
                                                             o.emax.value_or(kDefaultClosureEmax), in.limits));
  } else if (cmd == "tclosure") {
    WitnessSet w = default_witnesses(in.ideal);
    if (!o.witnesses.empty()) w = WitnessSet{parse_polynomial_list(o.witnesses, in.ring), true};
    r["verdict"] = json_io::closure(tight_closure_member_bounded(in.need_poly("element"), in.ideal, in.quotient(), w,
                                                                 o.emin.value_or(1),
                                                                 o.emax.value_or(kDefaultClosureEmax), in.limits));
  } else if (cmd == "fedder") {
    r.update(json_io::fedder(fedder_is_fpure(need_ideal(in.ideal, "--ideal"), in.limits)));
  } else if (cmd == "identity-check") {
    r.update(json_io::identity(
        colon_bracket_identity_check(in.ideal, in.need_poly("z"), o.e.value_or(1), in.limits)));
  }
  return r;
}

json cmd_sg(const Options& o) {
  const AffineSemigroup c = semigroup_input(o);
  json r{{"semigroup", json_io::semigroup(c)}};
  const std::string& a = o.action;
  if (a == "classify") {
    r.update(json_io::verdict(sg_classify_fcoherent(c, need_char(o), o.emax.value_or(kDefaultSandwichCap))));
  } else if (a == "normal") {
    r.update(json_io::normality(sg_is_normal(c)));
  } else if (a == "saturation") {
    r["hilbert_basis"] = json_io::vecs(sg_saturation(c).generators());
  } else if (a == "group") {
    r.update(json_io::lattice(sg_group(c)));
  } else if (a == "cone") {
    r.update(json_io::cone(sg_cone(c)));
  } else if (a == "member") {
    if (o.vector.empty()) throw PreconditionError("--vector is required");
    r.update(json_io::membership(sg_member(vector_input(o.vector), c), c));
  } else if (a == "faces") {
    json faces = json::array();
    for (const auto& f : sg_faces(c)) faces.push_back(json_io::face(f));
    r["faces"] = faces;
  } else if (a == "retract") {
    const auto faces = sg_faces(c);
    const Face* chosen = nullptr;
    for (std::size_t i = 0; i < faces.size(); ++i)
      if (faces[i].label == o.face || std::to_string(i) == o.face) chosen = &faces[i];
    if (!chosen) throw PreconditionError("not a face: '" + o.face + "' (see `fchar sg faces`)");
    r.update(json_io::retraction(sg_retract(c, *chosen)));
  } else if (a == "sandwich") {
    auto e = sg_pi_sandwich_certificate(c, need_char(o), o.emax.value_or(kDefaultSandwichCap));
    r["e"] = e ? json(*e) : json(nullptr);
  } else if (a == "pi-test") {
    r.update(json_io::pi_test(sg_normalization_pi_test(c, need_char(o))));
  }
  return r;
}

json cmd_curve(const Options& o) {
  CurvePresentation curve = [&] {
    if (!o.file.empty()) return json_io::parse_curve(read_json_file(o.file));
    if (o.gens.empty()) throw PreconditionError("give the curve with --file or --gens \"u^2-1,u^3-u\"");
    return make_curve(static_cast<std::uint32_t>(need_char(o).value()), split(o.gens, ','));
  }();
  GroebnerLimits lim;
  lim.max_pairs = o.max_pairs;
  lim.max_degree = o.max_degree;
  json r{{"char", curve.characteristic().value()}, {"gens_in_u", json_io::polys(curve.generators)}};
  const unsigned emax = o.emax.value_or(kDefaultCurveEmax);
  if (o.action == "pi-test") {
    r.update(json_io::curve_pi(curve_pi_normalization_test(curve, emax, lim)));
    return r;
  }
  std::optional<BranchPointObstruction> ob;
  if (o.obstruction == "search") {
    ob = find_branch_obstruction(curve);
  } else if (!o.obstruction.empty()) {
    IntVec ab = vector_input(o.obstruction);
    if (ab.size() != 2 || ab[0] < 0 || ab[1] < 0) throw PreconditionError("--obstruction expects \"a,b\" or \"search\"");
    ob = BranchPointObstruction{curve.characteristic().value(), static_cast<std::uint32_t>(ab[0]),
                                static_cast<std::uint32_t>(ab[1])};
  }
  r.update(json_io::verdict(curve_classify_fcoherent(curve, emax, ob, lim)));
  return r;
}

json cmd_ns(const Options& o) {
  if (o.gens.empty()) throw PreconditionError("--gens is required, e.g. --gens 2,3");
  NumericalSemigroup s(vector_input(o.gens));
  json r = json_io::numerical(s);
  if (o.action == "classify") r.update(json_io::verdict(ns_classify_fcoherent(s, need_char(o))));
  return r;
}

std::pair<json, int> cmd_verify(const Options& o) {
  json table = o.file.empty() ? embedded_fixture_table() : load_fixture_table(o.file);
  std::optional<std::string> only;
  if (!o.only.empty()) only = o.only;
  std::vector<FixtureOutcome> results;
  try {
    results = run_fixture_table(table, only);
  } catch (const FixtureFileError&) {
    throw;
  } catch (const PreconditionError& e) {
    if (o.file.empty()) throw;
    throw FixtureFileError(o.file, e.what());
  }
  json rows = json::array();
  std::size_t failed = 0;
  for (const auto& r : results) {
    json row{{"id", r.id}, {"group", r.group}, {"pass", r.pass}};
    if (!r.pass) {
      row["diff"] = r.detail;
      ++failed;
    }
    rows.push_back(std::move(row));
  }
  json out{{"fixtures", rows}, {"passed", results.size() - failed}, {"failed", failed}};
  if (only) out["only"] = *only;
  return {out, failed == 0 ? kOk : kFixtureMismatch};
}

void print_text(std::ostream& out, const std::string& command, const json& result) {
  out << command << "\n";
  for (const auto& [key, value] : result.items()) {
    out << "  " << key << ": ";
    if (value.is_string()) out << value.get<std::string>();
    else out << value.dump();
    out << "\n";
  }
}

}  // namespace

std::string usage() {
  std::string s =
      "usage: fchar <command> [options]\n"
      "commands:\n"
      "  gb, member, colon, intersect, eliminate   ideal arithmetic over F_p\n"
      "  bracket, froot                            Frobenius bracket powers and roots\n"
      "  fclosure, tclosure                        bounded Frobenius/tight closure membership\n"
      "  fedder                                    F-purity at the origin\n"
      "  identity-check                            compare (I:z)^[q] with (I^[q]:z^q)\n"
      "  sg <classify|normal|saturation|group|cone|member|faces|retract|sandwich|pi-test>\n"
      "  curve <classify|pi-test>                  curve algebras k[g(u)] in k[u]\n"
      "  ns <classify|gaps>                        numerical semigroups\n"
      "  verify-paper [--only GROUP] [--file TABLE]\n"
      "run `fchar <command> --help` for options\n";
  return s;
}

std::string sha256_hex(const std::string& data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr);
  std::ostringstream hex;
  for (unsigned int i = 0; i < len; ++i) hex << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(md[i]);
  return hex.str();
}

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  if (args.empty()) {
    err << usage();
    return kUsage;
  }
  if (args[0] == "--help" || args[0] == "-h") {
    out << usage();
    return kOk;
  }
  if (args[0] == "--version") {
    out << kVersion << "\n";
    return kOk;
  }
  if (std::find(kCommands.begin(), kCommands.end(), args[0]) == kCommands.end()) {
    err << "fchar: unknown command '" << args[0] << "'\n" << usage();
    return kUsage;
  }

  const std::string cmd = args[0];
  Options o;
  CLI::App app{"fchar " + cmd, "fchar " + cmd};
  app.add_option("--char", o.chr, "prime characteristic p");
  app.add_option("--file", o.file, "JSON input file");
  app.add_flag("--json", o.json_flag, "JSON report (default)");
  app.add_flag("--text", o.text, "plain text report");
  app.add_option("--max-pairs", o.max_pairs, "Groebner S-pair cap");
  app.add_option("--max-degree", o.max_degree, "Groebner S-pair degree cap");
  app.add_option("--emax", o.emax, "largest exponent e tried");

  const bool polynomial = cmd != "sg" && cmd != "curve" && cmd != "ns" && cmd != "verify-paper";
  if (polynomial) {
    app.add_option("--vars", o.vars, "comma-separated variables (default: inferred, sorted)");
    app.add_option("--ideal", o.ideal, "comma-separated generators");
    app.add_option("--ideal2", o.ideal2, "second ideal");
    app.add_option("--poly", o.poly, "polynomial (element, divisor or z)");
    app.add_option("--modulus", o.modulus, "generators of J for R = F_p[x]/J");
    app.add_option("--order", o.order, "lex or grevlex")->check(CLI::IsMember({"lex", "grevlex"}));
    app.add_option("--drop", o.drop, "variables to eliminate");
    app.add_option("--e", o.e, "Frobenius exponent e (q = p^e)");
    app.add_option("--emin", o.emin, "smallest exponent for tight closure");
    app.add_option("--witnesses", o.witnesses, "comma-separated test elements");
  }
  if (cmd == "sg") {
    app.add_option("action", o.action)
        ->required()
        ->check(CLI::IsMember({"classify", "normal", "saturation", "group", "cone", "member", "faces", "retract",
                               "sandwich", "pi-test"}));
    app.add_option("--gens", o.gens, "generators, e.g. \"4,0;3,1;1,3;0,4\"");
    app.add_option("--vector", o.vector, "vector for membership, e.g. 2,2");
    app.add_option("--face", o.face, "face label or index from `sg faces`");
  }
  if (cmd == "curve") {
    app.add_option("action", o.action)->required()->check(CLI::IsMember({"classify", "pi-test"}));
    app.add_option("--gens", o.gens, "generators in u, e.g. \"u^2-1,u^3-u\"");
    app.add_option("--obstruction", o.obstruction, "branch points \"a,b\" or \"search\"");
  }
  if (cmd == "ns") {
    app.add_option("action", o.action)->required()->check(CLI::IsMember({"classify", "gaps"}));
    app.add_option("--gens", o.gens, "generators, e.g. 2,3");
  }
  if (cmd == "verify-paper") app.add_option("--only", o.only, "fixture group to run");

  const std::vector<std::string> given(args.begin() + 1, args.end());
  std::vector<std::string> rest(given.rbegin(), given.rend());
  try {
    app.parse(rest);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "fchar " << cmd << ": " << e.what() << "\n";
    return kPrecondition;
  }

  const auto t0 = std::chrono::steady_clock::now();
  json result;
  int code = kOk;
  try {
    if (cmd == "sg") result = cmd_sg(o);
    else if (cmd == "curve") result = cmd_curve(o);
    else if (cmd == "ns") result = cmd_ns(o);
    else if (cmd == "verify-paper") std::tie(result, code) = cmd_verify(o);
    else result = cmd_poly(cmd, o);
  } catch (const ResourceCapError& e) {
    err << "fchar " << cmd << ": resource cap: " << e.what() << "\n";
    return kResourceCap;
  } catch (const PreconditionError& e) {
    err << "fchar " << cmd << ": " << e.what() << "\n";
    return kPrecondition;
  } catch (const json::exception& e) {
    err << "fchar " << cmd << ": malformed JSON input: " << e.what() << "\n";
    return kPrecondition;
  } catch (const std::exception& e) {
    err << "fchar " << cmd << ": " << e.what() << "\n";
    return kPrecondition;
  }
  const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();

  std::string command = cmd + (o.action.empty() ? "" : " " + o.action);
  json digest_input{{"command", command}, {"args", given}};
  if (!o.file.empty()) digest_input["file"] = read_file(o.file);
  if (o.text) {
    print_text(out, command, result);
  } else {
    json report{{"command", command},
                {"input_digest", sha256_hex(digest_input.dump())},
                {"result", result},
                {"timing_ms", ms},
                {"version", kVersion}};
    out << report.dump(2) << "\n";
  }
  return code;
}

}  // namespace fchar::cli
