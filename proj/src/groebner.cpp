#include "fchar/groebner.hpp"

#include <algorithm>
#include <map>
#include <tuple>
#include <utility>

namespace fchar {

namespace {

using TermVec = std::vector<Term>;

TermVec ordered_terms(const Polynomial& f, const MonomialOrder& order) {
  TermVec t(f.terms().begin(), f.terms().end());
  if (!(order.kind() == MonomialOrder::Kind::Grevlex && order == MonomialOrder::grevlex(order.nvars())))
    std::sort(t.begin(), t.end(),
              [&](const Term& a, const Term& b) { return order.compare(a.mono, b.mono) > 0; });
  return t;
}

void make_monic(TermVec& f, const PrimeChar& p) {
  if (f.empty() || f.front().coef == 1) return;
  std::uint32_t inv = p.inv(f.front().coef);
  for (Term& t : f) t.coef = p.mul(t.coef, inv);
}

// f[from..] - c * m * g[1..]; the leading terms are assumed to cancel.
TermVec sub_scaled(const TermVec& f, std::size_t from, std::uint32_t c, const Monomial& m, const TermVec& g,
                   const MonomialOrder& order, const PrimeChar& p) {
  TermVec out;
  out.reserve(f.size() - from + g.size());
  const std::uint32_t nc = p.neg(c);
  std::size_t i = from, j = 1;
  while (j < g.size()) {
    Monomial gm = g[j].mono * m;
    while (i < f.size() && order.compare(f[i].mono, gm) > 0) out.push_back(f[i++]);
    if (i < f.size() && f[i].mono == gm) {
      std::uint32_t s = p.add(f[i].coef, p.mul(nc, g[j].coef));
      if (s != 0) out.push_back({gm, s});
      ++i;
    } else {
      out.push_back({gm, p.mul(nc, g[j].coef)});
    }
    ++j;
  }
  out.insert(out.end(), f.begin() + static_cast<std::ptrdiff_t>(i), f.end());
  return out;
}

// Full reduction of f by monic polynomials `basis`, skipping index `skip`.
TermVec reduce_full(TermVec f, const std::vector<const TermVec*>& basis, const MonomialOrder& order,
                    const PrimeChar& p, const TermVec* skip = nullptr) {
  auto desc = [&order](const Monomial& a, const Monomial& b) { return order.compare(a, b) > 0; };
  std::map<Monomial, std::uint32_t, decltype(desc)> work(desc);
  for (const Term& t : f) work.emplace_hint(work.end(), t.mono, t.coef);
  TermVec rem;
  while (!work.empty()) {
    auto top = work.begin();
    const Term lt{top->first, top->second};
    work.erase(top);
    const TermVec* reducer = nullptr;
    for (const TermVec* g : basis) {
      if (g == skip) continue;
      if (g->front().mono.divides(lt.mono)) {
        reducer = g;
        break;
      }
    }
    if (reducer == nullptr) {
      rem.push_back(lt);
      continue;
    }
    const Monomial m = lt.mono.quotient(reducer->front().mono);
    const std::uint32_t nc = p.neg(lt.coef);
    for (std::size_t j = 1; j < reducer->size(); ++j) {
      const Term& gt = (*reducer)[j];
      auto [it, fresh] = work.try_emplace(gt.mono * m, 0);
      it->second = p.add(it->second, p.mul(nc, gt.coef));
      if (it->second == 0) work.erase(it);
    }
  }
  return rem;
}

struct Pair {
  std::size_t i;
  std::size_t j;
  Monomial lcm;
};

class Buchberger {
 public:
  Buchberger(const MonomialOrder& order, const PrimeChar& p, const GroebnerLimits& limits)
      : order_(order), p_(p), limits_(limits) {}

  void add_input(TermVec f) {
    f = reduce_full(std::move(f), active_list(), order_, p_);
    if (f.empty()) return;
    make_monic(f, p_);
    insert(std::move(f));
  }

  void run() {
    std::size_t processed = 0;
    while (!pairs_.empty()) {
      std::size_t best = 0;
      for (std::size_t k = 1; k < pairs_.size(); ++k)
        if (pair_less(pairs_[k], pairs_[best])) best = k;
      Pair pr = pairs_[best];
      pairs_.erase(pairs_.begin() + static_cast<std::ptrdiff_t>(best));
      if (pr.lcm.degree() > limits_.max_degree)
        throw ResourceCapError("Groebner degree cap exceeded: S-pair of degree " +
                               std::to_string(pr.lcm.degree()) + " > " + std::to_string(limits_.max_degree));
      if (++processed > limits_.max_pairs)
        throw ResourceCapError("Groebner S-pair cap exceeded (" + std::to_string(limits_.max_pairs) + ")");
      TermVec s = spoly(polys_[pr.i], polys_[pr.j], pr.lcm);
      s = reduce_full(std::move(s), active_list(), order_, p_);
      if (s.empty()) continue;
      make_monic(s, p_);
      insert(std::move(s));
    }
  }

  // Minimal basis, tails reduced, sorted by leading monomial descending.
  std::vector<TermVec> reduced_basis() const {
    std::vector<const TermVec*> minimal;
    for (std::size_t k = 0; k < polys_.size(); ++k)
      if (active_[k]) minimal.push_back(&polys_[k]);
    std::vector<TermVec> out;
    out.reserve(minimal.size());
    for (const TermVec* g : minimal) {
      TermVec tail(g->begin() + 1, g->end());
      TermVec reduced = reduce_full(std::move(tail), minimal, order_, p_, g);
      TermVec h;
      h.reserve(reduced.size() + 1);
      h.push_back(g->front());
      h.insert(h.end(), reduced.begin(), reduced.end());
      out.push_back(std::move(h));
    }
    std::sort(out.begin(), out.end(), [&](const TermVec& a, const TermVec& b) {
      return order_.compare(a.front().mono, b.front().mono) > 0;
    });
    return out;
  }

 private:
  bool pair_less(const Pair& a, const Pair& b) const {
    if (a.lcm.degree() != b.lcm.degree()) return a.lcm.degree() < b.lcm.degree();
    int c = order_.compare(a.lcm, b.lcm);
    if (c != 0) return c < 0;
    return std::tie(a.i, a.j) < std::tie(b.i, b.j);
  }

  std::vector<const TermVec*> active_list() const {
    std::vector<const TermVec*> out;
    for (std::size_t k = 0; k < polys_.size(); ++k)
      if (active_[k]) out.push_back(&polys_[k]);
    return out;
  }

  TermVec spoly(const TermVec& f, const TermVec& g, const Monomial& lcm) const {
    // Both monic: S = (lcm/lt f) f - (lcm/lt g) g.
    Monomial mf = lcm.quotient(f.front().mono);
    TermVec scaled_f;
    scaled_f.reserve(f.size());
    for (const Term& t : f) scaled_f.push_back({t.mono * mf, t.coef});
    return sub_scaled(scaled_f, 1, 1, lcm.quotient(g.front().mono), g, order_, p_);
  }

  // Gebauer–Möller update: coprime-leading-term and chain criteria.
  void insert(TermVec h) {
    const std::size_t hi = polys_.size();
    const Monomial lh = h.front().mono;
    polys_.push_back(std::move(h));
    active_.push_back(true);

    struct Cand {
      std::size_t g;
      Monomial lcm;
      bool coprime;
    };
    std::vector<Cand> c;
    for (std::size_t k = 0; k < hi; ++k)
      if (active_[k]) {
        const Monomial& lg = polys_[k].front().mono;
        c.push_back({k, lh.lcm(lg), lh.coprime(lg)});
      }

    std::vector<Cand> d;
    for (std::size_t k = 0; k < c.size(); ++k) {
      bool keep = c[k].coprime;
      if (!keep) {
        keep = true;
        for (std::size_t l = k + 1; l < c.size() && keep; ++l)
          if (c[l].lcm.divides(c[k].lcm)) keep = false;
        for (std::size_t l = 0; l < d.size() && keep; ++l)
          if (d[l].lcm.divides(c[k].lcm)) keep = false;
      }
      if (keep) d.push_back(c[k]);
    }

    std::vector<Pair> kept;
    kept.reserve(pairs_.size() + d.size());
    for (const Pair& pr : pairs_) {
      if (lh.divides(pr.lcm)) {
        Monomial l1 = polys_[pr.i].front().mono.lcm(lh);
        Monomial l2 = polys_[pr.j].front().mono.lcm(lh);
        if (!(l1 == pr.lcm) && !(l2 == pr.lcm)) continue;
      }
      kept.push_back(pr);
    }
    for (const Cand& cd : d)
      if (!cd.coprime) kept.push_back({cd.g, hi, cd.lcm});
    pairs_ = std::move(kept);

    for (std::size_t k = 0; k < hi; ++k)
      if (active_[k] && lh.divides(polys_[k].front().mono)) active_[k] = false;
  }

  const MonomialOrder& order_;
  const PrimeChar& p_;
  const GroebnerLimits& limits_;
  std::vector<TermVec> polys_;
  std::vector<bool> active_;
  std::vector<Pair> pairs_;
};

std::string fresh_name(const Ring& ring, const std::string& stem) {
  for (int k = 0;; ++k) {
    std::string name = stem + std::to_string(k);
    if (ring.index_of(name) == ring.nvars()) return name;
  }
}

RingPtr extend_ring(const Ring& ring, std::vector<std::string> extra_front) {
  if (ring.nvars() + extra_front.size() > kMaxVars)
    throw ResourceCapError("no room for auxiliary variables (limit " + std::to_string(kMaxVars) + ")");
  std::vector<std::string> vars = std::move(extra_front);
  vars.insert(vars.end(), ring.variables.begin(), ring.variables.end());
  return std::make_shared<const Ring>(ring.characteristic, std::move(vars));
}

std::vector<std::size_t> shift_map(std::size_t n, std::size_t by) {
  std::vector<std::size_t> m(n);
  for (std::size_t i = 0; i < n; ++i) m[i] = i + by;
  return m;
}

// Drops the first `by` variables, which must not occur in f.
Polynomial unshift(const Polynomial& f, const RingPtr& target, std::size_t by) {
  std::vector<Term> terms;
  terms.reserve(f.size());
  for (const Term& t : f.terms()) {
    std::vector<std::uint32_t> e(target->nvars());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = t.mono[i + by];
    terms.push_back({Monomial(e), t.coef});
  }
  return Polynomial::from_terms(target, std::move(terms));
}

bool uses_any(const Polynomial& f, std::span<const std::size_t> vars) {
  for (const Term& t : f.terms())
    for (std::size_t v : vars)
      if (t.mono[v] != 0) return true;
  return false;
}

const Ideal& basis_for(const Ideal& ideal, const MonomialOrder& order, const GroebnerLimits& limits,
                       std::optional<Ideal>& storage) {
  if (ideal.is_reduced_basis_for(order)) return ideal;
  storage.emplace(groebner_basis(ideal, order, limits));
  return *storage;
}

}  // namespace

// ---------------------------------------------------------------------------

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> generators) : ring_(std::move(ring)) {
  if (!ring_) throw PreconditionError("ideal without ring");
  for (auto& g : generators) {
    if (!(g.ring() == *ring_)) throw PreconditionError("ideal generator lives in a different ring");
    if (!g.is_zero()) gens_.push_back(std::move(g));
  }
}

std::string Ideal::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i) s += ", ";
    s += gens_[i].to_string();
  }
  if (gens_.empty()) s += "0";
  return s + ")";
}

QuotientRing::QuotientRing(RingPtr ring) : ambient(ring), modulus(ring, {}) {}

QuotientRing::QuotientRing(Ideal mod, bool reduced, bool domain)
    : ambient(mod.ring_ptr()), modulus(std::move(mod)), asserted_reduced(reduced), asserted_domain(domain) {}

Ideal QuotientRing::lift(const Ideal& ideal) const {
  if (!(ideal.ring() == *ambient)) throw PreconditionError("ideal does not live in the quotient's ambient ring");
  return ideal_sum(ideal, modulus);
}

Ideal groebner_basis(const Ideal& ideal, const MonomialOrder& order, const GroebnerLimits& limits) {
  if (order.nvars() != ideal.ring().nvars())
    throw PreconditionError("monomial order has " + std::to_string(order.nvars()) + " variables, ring has " +
                            std::to_string(ideal.ring().nvars()));
  if (ideal.is_reduced_basis_for(order)) return ideal;
  const PrimeChar& p = ideal.ring().characteristic;
  Buchberger engine(order, p, limits);

  // Feed generators in a canonical order so intermediate work does not
  // depend on how the caller listed them.
  std::vector<TermVec> inputs;
  for (const auto& g : ideal.generators()) {
    TermVec t = ordered_terms(g, order);
    make_monic(t, p);
    inputs.push_back(std::move(t));
  }
  std::sort(inputs.begin(), inputs.end(), [&](const TermVec& a, const TermVec& b) {
    std::size_t n = std::min(a.size(), b.size());
    for (std::size_t k = 0; k < n; ++k) {
      int c = order.compare(a[k].mono, b[k].mono);
      if (c != 0) return c < 0;
      if (a[k].coef != b[k].coef) return a[k].coef < b[k].coef;
    }
    return a.size() < b.size();
  });
  for (auto& t : inputs) engine.add_input(std::move(t));
  engine.run();

  std::vector<Polynomial> gens;
  for (auto& t : engine.reduced_basis()) gens.push_back(Polynomial::from_terms(ideal.ring_ptr(), std::move(t)));
  Ideal out(ideal.ring_ptr(), std::move(gens));
  out.basis_order_ = order;
  return out;
}

Ideal groebner_basis(const Ideal& ideal, const GroebnerLimits& limits) {
  return groebner_basis(ideal, MonomialOrder::grevlex(ideal.ring().nvars()), limits);
}

Polynomial normal_form(const Polynomial& f, const Ideal& ideal, const MonomialOrder& order,
                       const GroebnerLimits& limits) {
  if (!(f.ring() == ideal.ring())) throw PreconditionError("polynomial and ideal live in different rings");
  std::optional<Ideal> storage;
  const Ideal& gb = basis_for(ideal, order, limits, storage);
  std::vector<TermVec> basis;
  basis.reserve(gb.generators().size());
  for (const auto& g : gb.generators()) basis.push_back(ordered_terms(g, order));
  std::vector<const TermVec*> ptrs;
  for (const auto& b : basis) ptrs.push_back(&b);
  TermVec r = reduce_full(ordered_terms(f, order), ptrs, order, f.ring().characteristic);
  return Polynomial::from_terms(f.ring_ptr(), std::move(r));
}

Polynomial normal_form(const Polynomial& f, const Ideal& ideal, const GroebnerLimits& limits) {
  return normal_form(f, ideal, MonomialOrder::grevlex(ideal.ring().nvars()), limits);
}

bool ideal_member(const Polynomial& f, const Ideal& ideal, const GroebnerLimits& limits) {
  if (f.is_zero()) return true;
  if (ideal.is_zero()) return false;
  if (ideal.basis_order()) return normal_form(f, ideal, *ideal.basis_order(), limits).is_zero();
  return normal_form(f, ideal, limits).is_zero();
}

bool ideal_contains(const Ideal& big, const Ideal& small, const GroebnerLimits& limits) {
  if (!(big.ring() == small.ring())) throw PreconditionError("ideals live in different rings");
  std::optional<Ideal> storage;
  const Ideal& gb = big.basis_order() ? big : storage.emplace(groebner_basis(big, limits));
  for (const auto& g : small.generators())
    if (!ideal_member(g, gb, limits)) return false;
  return true;
}

bool ideal_equal(const Ideal& a, const Ideal& b, const GroebnerLimits& limits) {
  if (!(a.ring() == b.ring())) throw PreconditionError("ideals live in different rings");
  return groebner_basis(a, limits).generators() == groebner_basis(b, limits).generators();
}

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
  if (!(a.ring() == b.ring())) throw PreconditionError("ideals live in different rings");
  std::vector<Polynomial> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return {a.ring_ptr(), std::move(gens)};
}

Polynomial divide_exact(const Polynomial& f, const Polynomial& g) {
  if (g.is_zero()) throw PreconditionError("division by zero polynomial");
  const PrimeChar& p = f.ring().characteristic;
  const Term lg = g.terms().front();
  const std::uint32_t inv = p.inv(lg.coef);
  Polynomial r = f;
  std::vector<Term> q;
  while (!r.is_zero()) {
    const Term lt = r.terms().front();
    if (!lg.mono.divides(lt.mono)) throw PreconditionError("inexact polynomial division");
    Monomial m = lt.mono.quotient(lg.mono);
    std::uint32_t c = p.mul(lt.coef, inv);
    q.push_back({m, c});
    r = r - g.times_monomial(m, c);
  }
  return Polynomial::from_terms(f.ring_ptr(), std::move(q));
}

Ideal ideal_intersect(const Ideal& a, const Ideal& b, const GroebnerLimits& limits) {
  if (!(a.ring() == b.ring())) throw PreconditionError("ideals live in different rings");
  if (a.is_zero() || b.is_zero()) return {a.ring_ptr(), {}};
  const Ring& ring = a.ring();
  RingPtr ext = extend_ring(ring, {fresh_name(ring, "_tag")});
  auto shift = shift_map(ring.nvars(), 1);
  Polynomial t = Polynomial::variable(ext, 0);
  Polynomial one_minus_t = Polynomial::constant(ext, 1) - t;
  std::vector<Polynomial> gens;
  for (const auto& g : a.generators()) gens.push_back(t * g.embed(ext, shift));
  for (const auto& g : b.generators()) gens.push_back(one_minus_t * g.embed(ext, shift));
  const std::size_t tag[] = {0};
  Ideal gb = groebner_basis(Ideal(ext, std::move(gens)), MonomialOrder::elimination(ext->nvars(), tag), limits);
  std::vector<Polynomial> out;
  for (const auto& g : gb.generators())
    if (g.degree_in(0) == 0) out.push_back(unshift(g, a.ring_ptr(), 1));
  return groebner_basis(Ideal(a.ring_ptr(), std::move(out)), limits);
}

Ideal ideal_colon(const Ideal& ideal, const Polynomial& f, const GroebnerLimits& limits) {
  if (f.is_zero()) throw PreconditionError("colon by the zero polynomial");
  if (!(f.ring() == ideal.ring())) throw PreconditionError("polynomial and ideal live in different rings");
  if (ideal.is_zero()) return {ideal.ring_ptr(), {}};
  if (f.is_constant()) return groebner_basis(ideal, limits);
  Ideal both = ideal_intersect(ideal, Ideal(ideal.ring_ptr(), {f}), limits);
  std::vector<Polynomial> gens;
  for (const auto& h : both.generators()) gens.push_back(divide_exact(h, f));
  return groebner_basis(Ideal(ideal.ring_ptr(), std::move(gens)), limits);
}

Ideal ideal_colon(const Ideal& ideal, const Ideal& by, const GroebnerLimits& limits) {
  if (!(by.ring() == ideal.ring())) throw PreconditionError("ideals live in different rings");
  if (by.is_zero()) return {ideal.ring_ptr(), {Polynomial::constant(ideal.ring_ptr(), 1)}};
  std::optional<Ideal> acc;
  for (const auto& g : by.generators()) {
    Ideal c = ideal_colon(ideal, g, limits);
    acc = acc ? ideal_intersect(*acc, c, limits) : c;
  }
  return *acc;
}

Ideal eliminate(const Ideal& ideal, std::span<const std::size_t> drop, const GroebnerLimits& limits) {
  const std::size_t n = ideal.ring().nvars();
  for (std::size_t v : drop)
    if (v >= n) throw PreconditionError("elimination variable index out of range");
  if (drop.empty()) return groebner_basis(ideal, limits);
  Ideal gb = groebner_basis(ideal, MonomialOrder::elimination(n, drop), limits);
  std::vector<Polynomial> kept;
  for (const auto& g : gb.generators())
    if (!uses_any(g, drop)) kept.push_back(g);
  return groebner_basis(Ideal(ideal.ring_ptr(), std::move(kept)), limits);
}

// ---------------------------------------------------------------------------

namespace {

RingPtr make_work_ring(const std::vector<Polynomial>& gens) {
  if (gens.empty()) throw PreconditionError("subalgebra needs at least one generator");
  const Ring& base = gens.front().ring();
  if (base.nvars() != 1) throw PreconditionError("subalgebra membership needs a one-variable ambient ring");
  for (const auto& g : gens) {
    if (!(g.ring() == base)) throw PreconditionError("subalgebra generators live in different rings");
    if (g.is_constant()) throw PreconditionError("subalgebra generators must be nonconstant");
  }
  std::vector<std::string> vars = base.variables;
  std::string stem = "_s";
  while (base.index_of(stem + "1") != base.nvars()) stem = "_" + stem;
  for (std::size_t i = 0; i < gens.size(); ++i) vars.push_back(stem + std::to_string(i + 1));
  if (vars.size() > kMaxVars) throw ResourceCapError("too many subalgebra generators");
  return std::make_shared<const Ring>(base.characteristic, std::move(vars));
}

RingPtr make_rep_ring(const std::vector<Polynomial>& gens) {
  std::vector<std::string> vars;
  for (std::size_t i = 0; i < gens.size(); ++i) vars.push_back("y" + std::to_string(i + 1));
  return std::make_shared<const Ring>(gens.front().ring().characteristic, std::move(vars));
}

Ideal subalgebra_ideal(const RingPtr& work, const std::vector<Polynomial>& gens) {
  const std::size_t to_u[] = {0};
  std::vector<Polynomial> rel;
  for (std::size_t i = 0; i < gens.size(); ++i)
    rel.push_back(Polynomial::variable(work, i + 1) - gens[i].embed(work, to_u));
  return {work, std::move(rel)};
}

}  // namespace

SubalgebraOracle::SubalgebraOracle(std::vector<Polynomial> gens, const GroebnerLimits& limits)
    : gens_(std::move(gens)),
      work_ring_(make_work_ring(gens_)),
      rep_ring_(make_rep_ring(gens_)),
      order_(MonomialOrder::elimination(work_ring_->nvars(), std::vector<std::size_t>{0})),
      basis_(groebner_basis(subalgebra_ideal(work_ring_, gens_), order_, limits)) {}

SubalgebraOracle::Result SubalgebraOracle::member(const Polynomial& f) const {
  if (!(f.ring() == gens_.front().ring())) throw PreconditionError("candidate lives in a different ring");
  const std::size_t to_u[] = {0};
  Polynomial nf = normal_form(f.embed(work_ring_, to_u), basis_, order_);
  if (nf.degree_in(0) != 0) return {false, std::nullopt};
  return {true, unshift(nf, rep_ring_, 1)};
}

bool SubalgebraOracle::birational() const {
  for (const auto& g : basis_.generators())
    if (g.degree_in(0) == 1) return true;
  return false;
}

Polynomial SubalgebraOracle::evaluate(const Polynomial& representation) const {
  return representation.substitute(gens_);
}

SubalgebraOracle::Result subalgebra_member(const Polynomial& f, std::span<const Polynomial> gens,
                                           const GroebnerLimits& limits) {
  SubalgebraOracle oracle(std::vector<Polynomial>(gens.begin(), gens.end()), limits);
  return oracle.member(f);
}

}  // namespace fchar
