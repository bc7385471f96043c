// Small, slow, independent reference implementations used by the unit tests.
#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <vector>

#include "fchar/groebner.hpp"
#include "fchar/polyring.hpp"
#include "fchar/verdict.hpp"

namespace oracle {

using Exps = std::vector<std::uint32_t>;
using Dense = std::map<Exps, std::uint32_t>;

inline Dense dense(const fchar::Polynomial& f) {
  Dense out;
  const std::size_t n = f.ring().nvars();
  for (const auto& t : f.terms()) out[t.mono.exponents(n)] = t.coef;
  return out;
}

inline void put(Dense& d, const Exps& e, std::uint64_t c, std::uint32_t p) {
  const std::uint32_t v = static_cast<std::uint32_t>((d[e] + c) % p);
  if (v == 0) d.erase(e); else d[e] = v;
}

inline Dense add(const Dense& a, const Dense& b, std::uint32_t p) {
  Dense out = a;
  for (const auto& [e, c] : b) put(out, e, c, p);
  return out;
}

inline Dense mul(const Dense& a, const Dense& b, std::uint32_t p) {
  Dense out;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      Exps e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      put(out, e, static_cast<std::uint64_t>(ca) * cb, p);
    }
  return out;
}

inline Dense power(const Dense& a, unsigned n, std::size_t nvars, std::uint32_t p) {
  Dense out{{Exps(nvars, 0), 1}};
  for (unsigned i = 0; i < n; ++i) out = mul(out, a, p);
  return out;
}

inline std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  for (std::uint32_t x = 1; x < p; ++x)
    if (static_cast<std::uint64_t>(a) * x % p == 1) return x;
  return 0;
}

inline void all_exps(std::size_t n, unsigned max_deg, Exps& cur, std::size_t i, std::vector<Exps>& out) {
  if (i == n) {
    out.push_back(cur);
    return;
  }
  unsigned used = 0;
  for (std::size_t j = 0; j < i; ++j) used += cur[j];
  for (unsigned a = 0; used + a <= max_deg; ++a) {
    cur[i] = a;
    all_exps(n, max_deg, cur, i + 1, out);
  }
  cur[i] = 0;
}

inline std::vector<Exps> exps_up_to(std::size_t n, unsigned max_deg) {
  std::vector<Exps> out;
  Exps cur(n, 0);
  all_exps(n, max_deg, cur, 0, out);
  return out;
}

inline unsigned degree_of(const Exps& e) { return std::accumulate(e.begin(), e.end(), 0u); }

// Linear algebra over F_p on the Macaulay matrix: is f a combination of
// m·g_i with deg(m·g_i) ≤ D? A "true" is a proof of membership; "false" only
// says no certificate exists in degree ≤ D.
inline bool macaulay_member(const fchar::Polynomial& f, const std::vector<fchar::Polynomial>& gens, unsigned D) {
  const std::uint32_t p = f.ring().characteristic.value();
  const std::size_t n = f.ring().nvars();
  std::map<Exps, std::size_t> col;
  for (const auto& e : exps_up_to(n, D)) col.emplace(e, col.size());
  auto to_row = [&](const Dense& d) {
    std::vector<std::uint32_t> row(col.size(), 0);
    for (const auto& [e, c] : d) {
      auto it = col.find(e);
      if (it == col.end()) return std::vector<std::uint32_t>{};
      row[it->second] = c;
    }
    return row;
  };
  std::vector<std::vector<std::uint32_t>> rows;
  for (const auto& g : gens) {
    const Dense dg = dense(g);
    for (const auto& m : exps_up_to(n, D)) {
      Dense shifted;
      for (const auto& [e, c] : dg) {
        Exps s(n);
        for (std::size_t i = 0; i < n; ++i) s[i] = e[i] + m[i];
        shifted[s] = c;
      }
      auto r = to_row(shifted);
      if (!r.empty()) rows.push_back(std::move(r));
    }
  }
  auto target = to_row(dense(f));
  if (target.empty()) return false;
  // Row echelon form with pivot bookkeeping.
  std::vector<std::pair<std::size_t, std::vector<std::uint32_t>>> pivots;
  auto reduce = [&](std::vector<std::uint32_t>& r) {
    for (const auto& [pc, pr] : pivots) {
      if (r[pc] == 0) continue;
      const std::uint32_t c = r[pc];
      for (std::size_t j = 0; j < r.size(); ++j)
        r[j] = static_cast<std::uint32_t>((r[j] + static_cast<std::uint64_t>(p - c) * pr[j]) % p);
    }
  };
  for (auto& r : rows) {
    reduce(r);
    auto it = std::find_if(r.begin(), r.end(), [](std::uint32_t v) { return v != 0; });
    if (it == r.end()) continue;
    const std::size_t pc = static_cast<std::size_t>(it - r.begin());
    const std::uint32_t s = inv_mod(r[pc], p);
    for (auto& v : r) v = static_cast<std::uint32_t>(static_cast<std::uint64_t>(v) * s % p);
    for (auto& [qc, qr] : pivots)
      if (qr[pc] != 0) {
        const std::uint32_t c = qr[pc];
        for (std::size_t j = 0; j < qr.size(); ++j)
          qr[j] = static_cast<std::uint32_t>((qr[j] + static_cast<std::uint64_t>(p - c) * r[j]) % p);
      }
    pivots.emplace_back(pc, r);
  }
  reduce(target);
  return std::all_of(target.begin(), target.end(), [](std::uint32_t v) { return v == 0; });
}

// Monomial ideal membership: some generator exponent is ≤ e componentwise.
inline bool monomial_ideal_contains(const std::vector<Exps>& gens, const Exps& e) {
  return std::any_of(gens.begin(), gens.end(), [&](const Exps& g) {
    for (std::size_t i = 0; i < e.size(); ++i)
      if (g[i] > e[i]) return false;
    return true;
  });
}

// Minimal generators of the monomial ideal generated by `gens`.
inline std::set<Exps> minimalize(const std::vector<Exps>& gens) {
  std::set<Exps> out;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    bool minimal = true;
    for (std::size_t j = 0; j < gens.size() && minimal; ++j) {
      if (i == j || gens[j] == gens[i]) continue;
      if (monomial_ideal_contains({gens[j]}, gens[i])) minimal = false;
    }
    if (minimal) out.insert(gens[i]);
  }
  return out;
}

// Frobenius root of a monomial ideal: generators ⌊a/q⌋.
inline std::set<Exps> monomial_root(const std::vector<Exps>& gens, std::uint32_t q) {
  std::vector<Exps> out;
  for (auto g : gens) {
    for (auto& a : g) a /= q;
    out.push_back(g);
  }
  return minimalize(out);
}

// Elements of a semigroup with coordinate sum ≤ bound, by breadth-first search.
inline std::set<fchar::IntVec> enumerate(const std::vector<fchar::IntVec>& gens, std::int64_t bound) {
  const std::size_t d = gens.front().size();
  std::set<fchar::IntVec> seen{fchar::IntVec(d, 0)};
  std::queue<fchar::IntVec> work;
  work.push(fchar::IntVec(d, 0));
  while (!work.empty()) {
    const fchar::IntVec v = work.front();
    work.pop();
    for (const auto& g : gens) {
      fchar::IntVec w(d);
      std::int64_t s = 0;
      for (std::size_t i = 0; i < d; ++i) s += (w[i] = v[i] + g[i]);
      if (s <= bound && seen.insert(w).second) work.push(w);
    }
  }
  return seen;
}

// Group generated by `gens`, restricted to the box [-r, r]^2, by walking ±g.
inline std::set<fchar::IntVec> group_in_box(const std::vector<fchar::IntVec>& gens, std::int64_t r) {
  std::set<fchar::IntVec> seen{{0, 0}};
  std::queue<fchar::IntVec> work;
  work.push({0, 0});
  while (!work.empty()) {
    const fchar::IntVec v = work.front();
    work.pop();
    for (const auto& g : gens)
      for (int s : {1, -1}) {
        fchar::IntVec w{v[0] + s * g[0], v[1] + s * g[1]};
        if (std::abs(w[0]) > r || std::abs(w[1]) > r) continue;
        if (seen.insert(w).second) work.push(w);
      }
  }
  return seen;
}

// x in the real cone of 2-D generators: a nonnegative combination of at most two of them.
inline bool in_cone_2d(const std::vector<fchar::IntVec>& gens, const fchar::IntVec& x) {
  if (x[0] == 0 && x[1] == 0) return true;
  for (const auto& g : gens)
    if (g[0] * x[1] - g[1] * x[0] == 0 && g[0] * x[0] + g[1] * x[1] > 0) return true;
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      const auto& a = gens[i];
      const auto& b = gens[j];
      const std::int64_t det = a[0] * b[1] - a[1] * b[0];
      if (det == 0) continue;
      const std::int64_t s = x[0] * b[1] - x[1] * b[0];
      const std::int64_t t = a[0] * x[1] - a[1] * x[0];
      if ((det > 0 && s >= 0 && t >= 0) || (det < 0 && s <= 0 && t <= 0)) return true;
    }
  return false;
}

// Hilbert basis of group ∩ cone for 2-D generators inside the box [0, bound]^2.
inline std::set<fchar::IntVec> hilbert_basis_2d(const std::vector<fchar::IntVec>& gens, std::int64_t bound) {
  const auto group = group_in_box(gens, 3 * bound);
  std::vector<fchar::IntVec> pts;
  for (std::int64_t a = 0; a <= bound; ++a)
    for (std::int64_t b = 0; b <= bound; ++b)
      if ((a || b) && group.count({a, b}) && in_cone_2d(gens, {a, b})) pts.push_back({a, b});
  std::set<fchar::IntVec> ptset(pts.begin(), pts.end());
  std::set<fchar::IntVec> out;
  for (const auto& x : pts) {
    bool reducible = false;
    for (const auto& y : pts) {
      if (y == x || y[0] > x[0] || y[1] > x[1]) continue;
      if (ptset.count({x[0] - y[0], x[1] - y[1]})) {
        reducible = true;
        break;
      }
    }
    if (!reducible) out.insert(x);
  }
  return out;
}

// Membership table of a numerical semigroup on [0, n].
inline std::vector<bool> numerical_table(const std::vector<std::int64_t>& gens, std::int64_t n) {
  std::vector<bool> in(static_cast<std::size_t>(n + 1), false);
  in[0] = true;
  for (std::int64_t k = 1; k <= n; ++k)
    for (auto g : gens)
      if (g <= k && in[static_cast<std::size_t>(k - g)]) {
        in[static_cast<std::size_t>(k)] = true;
        break;
      }
  return in;
}

// Does u^target lie in the span of products of univariate polynomials
// g_i (all products of u-degree ≤ D)? Dense linear algebra over F_p.
inline bool subalgebra_span(const std::vector<std::vector<std::uint32_t>>& gens, const std::vector<std::uint32_t>& f,
                            std::uint32_t p, std::size_t D) {
  using Coeffs = std::vector<std::uint32_t>;
  auto degree = [](const Coeffs& c) {
    std::size_t d = 0;
    for (std::size_t i = 0; i < c.size(); ++i)
      if (c[i]) d = i;
    return d;
  };
  auto times = [&](const Coeffs& a, const Coeffs& b) {
    Coeffs out(a.size() + b.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j)
        out[i + j] = static_cast<std::uint32_t>((out[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p);
    out.resize(degree(out) + 1);
    return out;
  };
  std::vector<Coeffs> products{{1}};
  std::set<Coeffs> seen{{1}};
  for (std::size_t k = 0; k < products.size(); ++k)
    for (const auto& g : gens) {
      Coeffs h = times(products[k], g);
      if (degree(h) <= D && seen.insert(h).second) products.push_back(h);
    }
  std::vector<Coeffs> basis;
  std::vector<std::size_t> lead;
  auto reduce = [&](Coeffs v) {
    v.resize(D + 1, 0);
    for (std::size_t k = 0; k < basis.size(); ++k) {
      const std::uint32_t c = v[lead[k]];
      if (!c) continue;
      for (std::size_t i = 0; i <= D; ++i)
        v[i] = static_cast<std::uint32_t>((v[i] + static_cast<std::uint64_t>(p - c) * basis[k][i]) % p);
    }
    return v;
  };
  for (const auto& h : products) {
    Coeffs v = reduce(h);
    std::size_t pc = D + 1;
    for (std::size_t i = 0; i <= D; ++i)
      if (v[i]) pc = i;
    if (pc == D + 1) continue;
    const std::uint32_t s = inv_mod(v[pc], p);
    for (auto& x : v) x = static_cast<std::uint32_t>(static_cast<std::uint64_t>(x) * s % p);
    for (std::size_t k = 0; k < basis.size(); ++k)
      if (const std::uint32_t c = basis[k][pc])
        for (std::size_t i = 0; i <= D; ++i)
          basis[k][i] = static_cast<std::uint32_t>((basis[k][i] + static_cast<std::uint64_t>(p - c) * v[i]) % p);
    basis.push_back(v);
    lead.push_back(pc);
  }
  Coeffs r = reduce(f);
  return std::all_of(r.begin(), r.end(), [](std::uint32_t x) { return x == 0; });
}

// Fedder for a hypersurface: F-pure iff f^{p-1} has a term outside m^[p].
inline bool fedder_hypersurface(const fchar::Polynomial& f) {
  const std::uint32_t p = f.ring().characteristic.value();
  const std::size_t n = f.ring().nvars();
  const Dense fp = power(dense(f), p - 1, n, p);
  for (const auto& [e, c] : fp)
    if (std::all_of(e.begin(), e.end(), [&](std::uint32_t a) { return a < p; })) return true;
  return false;
}

}  // namespace oracle
