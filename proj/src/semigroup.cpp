#include "fchar/semigroup.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <limits>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>

#include "fchar/onedim.hpp"

namespace fchar {

std::string to_string(FCoherenceStatus s) {
  switch (s) {
    case FCoherenceStatus::FCoherent: return "FCoherent";
    case FCoherenceStatus::NotFCoherent: return "NotFCoherent";
    case FCoherenceStatus::Unknown: return "Unknown";
  }
  return "?";
}

std::string vec_to_string(const IntVec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + ")";
}

namespace {

using V3 = std::array<std::int64_t, 3>;

constexpr std::size_t kMaxConeDim = 3;
constexpr std::uint64_t kMaxBoxPoints = 20'000'000;
constexpr std::size_t kMaxSearchStates = 5'000'000;
constexpr std::int64_t kDirectCheckSum = 400;

std::int64_t mul_c(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw ResourceCapError("integer overflow in lattice arithmetic");
  return r;
}

std::int64_t add_c(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw ResourceCapError("integer overflow in lattice arithmetic");
  return r;
}

std::int64_t lcm_c(std::int64_t a, std::int64_t b) { return mul_c(a / std::gcd(a, b), b); }

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

bool is_zero(const IntVec& v) {
  return std::all_of(v.begin(), v.end(), [](std::int64_t x) { return x == 0; });
}

std::int64_t dot(const IntVec& a, const IntVec& b) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s = add_c(s, mul_c(a[i], b[i]));
  return s;
}

IntVec scaled(const IntVec& v, std::int64_t k) {
  IntVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = mul_c(v[i], k);
  return out;
}

IntVec minus(const IntVec& a, const IntVec& b) {
  IntVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

std::int64_t content(const IntVec& v) {
  std::int64_t g = 0;
  for (auto x : v) g = std::gcd(g, x);
  return g;
}

IntVec primitive(IntVec v) {
  std::int64_t g = content(v);
  if (g > 1)
    for (auto& x : v) x /= g;
  return v;
}

V3 to3(const IntVec& v) {
  V3 out{0, 0, 0};
  for (std::size_t i = 0; i < v.size() && i < 3; ++i) out[i] = v[i];
  return out;
}

IntVec from3(const V3& v, std::size_t d) { return IntVec(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(d)); }

V3 cross(const V3& a, const V3& b) {
  return {mul_c(a[1], b[2]) - mul_c(a[2], b[1]), mul_c(a[2], b[0]) - mul_c(a[0], b[2]),
          mul_c(a[0], b[1]) - mul_c(a[1], b[0])};
}

std::int64_t dot3(const V3& a, const V3& b) {
  return add_c(add_c(mul_c(a[0], b[0]), mul_c(a[1], b[1])), mul_c(a[2], b[2]));
}

bool zero3(const V3& a) { return a[0] == 0 && a[1] == 0 && a[2] == 0; }

V3 prim3(V3 v) {
  std::int64_t g = std::gcd(std::gcd(v[0], v[1]), v[2]);
  if (g > 1)
    for (auto& x : v) x /= g;
  return v;
}

V3 neg3(V3 v) {
  for (auto& x : v) x = -x;
  return v;
}

V3 add3(const V3& a, const V3& b) { return {add_c(a[0], b[0]), add_c(a[1], b[1]), add_c(a[2], b[2])}; }

bool desc_lex(const IntVec& a, const IntVec& b) { return a > b; }

void require_cone_dim(const AffineSemigroup& c) {
  if (c.dim() > kMaxConeDim)
    throw PreconditionError("unsupported dimension: cones and faces are implemented for d <= 3 (got d=" +
                            std::to_string(c.dim()) + ")");
}

// Cone geometry computed in ℤ^3 (smaller d is padded with zeros).
struct ConeData {
  std::size_t span = 0;
  std::vector<V3> rays;           // span 3: cyclic order
  std::vector<V3> ray_forms;      // ℓ vanishing exactly on ray i
  std::vector<V3> facet_forms;    // span 3: facet i between rays i, i+1
  V3 origin_form{0, 0, 0};
  std::vector<V3> inequalities;
  std::vector<V3> equations;
};

ConeData build_cone(const AffineSemigroup& c) {
  require_cone_dim(c);
  std::vector<V3> dirs;
  for (const auto& g : c.generators()) dirs.push_back(prim3(to3(g)));
  std::sort(dirs.begin(), dirs.end(), std::greater<>());
  dirs.erase(std::unique(dirs.begin(), dirs.end()), dirs.end());

  ConeData cd;
  const V3 a = dirs.front();
  std::optional<V3> normal;
  for (const auto& x : dirs)
    if (!zero3(cross(a, x))) {
      normal = prim3(cross(a, x));
      break;
    }

  if (!normal) {
    cd.span = 1;
    cd.rays = {a};
    cd.ray_forms = {V3{0, 0, 0}};
    cd.origin_form = a;
    cd.inequalities = {a};
    // Rows of the cross-product matrix: v ∥ a iff a × v = 0.
    cd.equations = {V3{0, -a[2], a[1]}, V3{a[2], 0, -a[0]}, V3{-a[1], a[0], 0}};
    return cd;
  }

  const V3 n = *normal;
  const bool planar = std::all_of(dirs.begin(), dirs.end(), [&](const V3& x) { return dot3(n, x) == 0; });
  if (planar) {
    cd.span = 2;
    auto extreme = [&](int sign) {
      for (const auto& x : dirs) {
        bool ok = true;
        for (const auto& y : dirs)
          if (sign * dot3(cross(x, y), n) < 0) ok = false;
        if (ok) return x;
      }
      throw std::logic_error("planar cone without boundary ray");
    };
    V3 r1 = extreme(1), r2 = extreme(-1);
    V3 n1 = prim3(cross(n, r1));
    if (dot3(n1, r2) < 0) n1 = neg3(n1);
    V3 n2 = prim3(cross(n, r2));
    if (dot3(n2, r1) < 0) n2 = neg3(n2);
    if (r1 < r2) {
      std::swap(r1, r2);
      std::swap(n1, n2);
    }
    cd.rays = {r1, r2};
    cd.ray_forms = {n1, n2};
    cd.origin_form = prim3(add3(n1, n2));
    cd.inequalities = {n1, n2};
    cd.equations = {n};
    return cd;
  }

  cd.span = 3;
  std::vector<V3> normals;
  for (std::size_t i = 0; i < dirs.size(); ++i)
    for (std::size_t j = i + 1; j < dirs.size(); ++j) {
      V3 m = cross(dirs[i], dirs[j]);
      if (zero3(m)) continue;
      m = prim3(m);
      bool pos = false, neg = false;
      for (const auto& x : dirs) {
        std::int64_t s = dot3(m, x);
        pos = pos || s > 0;
        neg = neg || s < 0;
      }
      if (pos && neg) continue;
      if (neg) m = neg3(m);
      if (std::find(normals.begin(), normals.end(), m) == normals.end()) normals.push_back(m);
    }
  // Each facet contributes an oriented edge e1 -> e2.
  std::map<V3, std::pair<V3, V3>> next;  // e1 -> (e2, facet normal)
  for (const auto& m : normals) {
    std::vector<V3> on;
    for (const auto& x : dirs)
      if (dot3(m, x) == 0) on.push_back(x);
    auto extreme = [&](int sign) {
      for (const auto& x : on) {
        bool ok = true;
        for (const auto& y : on)
          if (sign * dot3(cross(x, y), m) < 0) ok = false;
        if (ok) return x;
      }
      throw std::logic_error("facet without boundary ray");
    };
    next[extreme(1)] = {extreme(-1), m};
  }
  V3 start = next.begin()->first;
  for (const auto& [k, v] : next) start = std::max(start, k);
  V3 cur = start;
  do {
    auto it = next.find(cur);
    if (it == next.end() || cd.rays.size() > next.size()) throw std::logic_error("cone facets do not close up");
    cd.rays.push_back(cur);
    cd.facet_forms.push_back(it->second.second);
    cur = it->second.first;
  } while (cur != start);
  const std::size_t k = cd.rays.size();
  V3 total{0, 0, 0};
  for (std::size_t i = 0; i < k; ++i) {
    cd.ray_forms.push_back(prim3(add3(cd.facet_forms[(i + k - 1) % k], cd.facet_forms[i])));
    total = add3(total, cd.facet_forms[i]);
  }
  cd.origin_form = prim3(total);
  cd.inequalities = cd.facet_forms;
  return cd;
}

std::vector<IntVec> project(const std::vector<V3>& forms, std::size_t d) {
  std::vector<IntVec> out;
  for (const auto& f : forms) {
    IntVec v = from3(f, d);
    if (!is_zero(v)) out.push_back(v);
  }
  return out;
}

// Is p^e·λ in the submonoid of ℕ generated by mults?
class RayMonoid {
 public:
  explicit RayMonoid(std::vector<std::int64_t> mults) {
    for (auto m : mults) g_ = std::gcd(g_, m);
    for (auto& m : mults) m /= g_;
    ns_.emplace(std::move(mults));
  }

  bool contains(std::int64_t n) const { return n % g_ == 0 && ns_->contains(n / g_); }

  bool contains_power_multiple(std::uint32_t p, unsigned e, std::int64_t lambda) const {
    // Divisibility of p^e·λ by g, then size: huge values exceed the Frobenius number.
    std::int64_t r = lambda % g_;
    for (unsigned i = 0; i < e; ++i) r = static_cast<std::int64_t>((static_cast<__int128>(r) * p) % g_);
    if (r != 0) return false;
    __int128 v = lambda;
    for (unsigned i = 0; i < e; ++i) {
      v *= p;
      if (v > (static_cast<__int128>(1) << 62)) return true;
    }
    return contains(static_cast<std::int64_t>(v));
  }

  const NumericalSemigroup& numerical() const { return *ns_; }
  std::int64_t step() const { return g_; }

 private:
  std::int64_t g_ = 0;
  std::optional<NumericalSemigroup> ns_;
};

// Smallest e with p^e·λ in the ray monoid; nullopt when p does not reach
// every prime factor of the step.
std::optional<unsigned> ray_power_exponent(const RayMonoid& ray, std::uint32_t p, std::int64_t lambda) {
  for (unsigned e = 0; e <= 64; ++e)
    if (ray.contains_power_multiple(p, e, lambda)) return e;
  return std::nullopt;
}

std::size_t support_count(const IntVec& v) {
  return static_cast<std::size_t>(std::count_if(v.begin(), v.end(), [](std::int64_t x) { return x != 0; }));
}

}  // namespace

AffineSemigroup::AffineSemigroup(std::size_t dim, std::vector<IntVec> generators) : dim_(dim) {
  if (dim == 0) throw PreconditionError("affine semigroup dimension must be at least 1");
  if (generators.empty()) throw PreconditionError("affine semigroup needs at least one generator");
  for (const auto& g : generators) {
    if (g.size() != dim)
      throw PreconditionError("generator " + vec_to_string(g) + " has the wrong length for d=" + std::to_string(dim));
    for (auto x : g)
      if (x < 0) throw PreconditionError("generator " + vec_to_string(g) + " has a negative entry");
    if (is_zero(g)) throw PreconditionError("generators must be nonzero");
  }
  std::sort(generators.begin(), generators.end(), desc_lex);
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
  gens_ = std::move(generators);
}

std::string AffineSemigroup::to_string() const {
  std::string s = "<";
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i) s += ",";
    s += vec_to_string(gens_[i]);
  }
  return s + ">";
}

SemigroupMembership sg_member(const IntVec& v, const AffineSemigroup& c) {
  if (v.size() != c.dim()) throw PreconditionError("vector " + vec_to_string(v) + " has the wrong length");
  SemigroupMembership out;
  out.multiplicities.assign(c.generators().size(), 0);
  for (auto x : v)
    if (x < 0) return out;
  if (is_zero(v)) {
    out.member = true;
    return out;
  }
  std::vector<std::size_t> usable;
  for (std::size_t k = 0; k < c.generators().size(); ++k) {
    const IntVec& g = c.generators()[k];
    bool ok = true;
    for (std::size_t i = 0; i < v.size() && ok; ++i) ok = g[i] <= v[i];
    if (ok) usable.push_back(k);
  }
  if (usable.empty()) return out;

  // All usable generators on the line through v: a numerical-semigroup question.
  const IntVec dir = primitive(v);
  const std::int64_t lambda = content(v);
  std::vector<std::int64_t> mults;
  bool collinear = true;
  for (std::size_t k : usable) {
    const IntVec& g = c.generators()[k];
    std::int64_t m = content(g);
    if (primitive(g) != dir) {
      collinear = false;
      break;
    }
    mults.push_back(m);
  }
  if (collinear) {
    RayMonoid ray(mults);
    if (!ray.contains(lambda)) return out;
    auto rep = ray.numerical().representation(lambda / ray.step());
    const auto& ng = ray.numerical().generators();
    for (std::size_t j = 0; j < ng.size(); ++j) {
      if ((*rep)[j] == 0) continue;
      for (std::size_t i = 0; i < usable.size(); ++i)
        if (mults[i] / ray.step() == ng[j]) {
          out.multiplicities[usable[i]] += (*rep)[j];
          break;
        }
    }
    out.member = true;
    return out;
  }

  // Depth-first search with memoized failures; suffix supports prune early.
  const std::size_t n = usable.size();
  const std::size_t d = v.size();
  std::vector<std::vector<bool>> suffix_support(n + 1, std::vector<bool>(d, false));
  for (std::size_t k = n; k-- > 0;)
    for (std::size_t i = 0; i < d; ++i)
      suffix_support[k][i] = suffix_support[k + 1][i] || c.generators()[usable[k]][i] > 0;
  std::set<std::pair<std::size_t, IntVec>> failed;
  std::vector<std::int64_t> mult(n, 0);
  std::function<bool(std::size_t, const IntVec&)> search = [&](std::size_t idx, const IntVec& rem) -> bool {
    if (is_zero(rem)) return true;
    for (std::size_t i = 0; i < d; ++i)
      if (rem[i] > 0 && !suffix_support[idx][i]) return false;
    if (failed.count({idx, rem})) return false;
    const IntVec& g = c.generators()[usable[idx]];
    std::int64_t kmax = std::numeric_limits<std::int64_t>::max();
    for (std::size_t i = 0; i < d; ++i)
      if (g[i] > 0) kmax = std::min(kmax, rem[i] / g[i]);
    for (std::int64_t k = kmax; k >= 0; --k) {
      IntVec next = minus(rem, scaled(g, k));
      if (search(idx + 1, next)) {
        mult[idx] = k;
        return true;
      }
    }
    if (failed.size() >= kMaxSearchStates) throw ResourceCapError("semigroup membership search exceeded its state cap");
    failed.insert({idx, rem});
    return false;
  };
  if (!search(0, v)) return out;
  for (std::size_t k = 0; k < n; ++k) out.multiplicities[usable[k]] = mult[k];
  out.member = true;
  return out;
}

LatticeGroup::LatticeGroup(std::size_t dim, const std::vector<IntVec>& spanning) : dim_(dim) {
  std::vector<IntVec> rows;
  for (const auto& r : spanning) {
    if (r.size() != dim) throw PreconditionError("lattice vector " + vec_to_string(r) + " has the wrong length");
    if (!is_zero(r)) rows.push_back(r);
  }
  std::size_t top = 0;
  for (std::size_t col = 0; col < dim && top < rows.size(); ++col) {
    bool have_pivot = false;
    while (true) {
      std::size_t best = rows.size();
      for (std::size_t i = top; i < rows.size(); ++i)
        if (rows[i][col] != 0 && (best == rows.size() || std::llabs(rows[i][col]) < std::llabs(rows[best][col])))
          best = i;
      if (best == rows.size()) break;
      have_pivot = true;
      std::swap(rows[top], rows[best]);
      bool done = true;
      for (std::size_t i = top + 1; i < rows.size(); ++i) {
        if (rows[i][col] == 0) continue;
        std::int64_t q = rows[i][col] / rows[top][col];
        rows[i] = minus(rows[i], scaled(rows[top], q));
        if (rows[i][col] != 0) done = false;
      }
      if (done) break;
    }
    if (!have_pivot) continue;
    if (rows[top][col] < 0) rows[top] = scaled(rows[top], -1);
    for (std::size_t i = 0; i < top; ++i) {
      std::int64_t q = floor_div(rows[i][col], rows[top][col]);
      if (q != 0) rows[i] = minus(rows[i], scaled(rows[top], q));
    }
    pivots_.push_back(col);
    ++top;
  }
  rows.resize(top);
  basis_ = std::move(rows);
}

std::optional<std::int64_t> LatticeGroup::order_of(const IntVec& v) const {
  if (v.size() != dim_) throw PreconditionError("vector " + vec_to_string(v) + " has the wrong length");
  // Rational echelon solve; w/den tracks the residual.
  IntVec w = v;
  std::int64_t den = 1;
  std::int64_t n = 1;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    const IntVec& row = basis_[i];
    const std::int64_t bp = row[pivots_[i]];
    const std::int64_t num = w[pivots_[i]];
    if (num == 0) continue;
    const std::int64_t full_den = mul_c(den, bp);
    n = lcm_c(n, full_den / std::gcd(num, full_den));
    const std::int64_t g = std::gcd(num, bp);
    w = minus(scaled(w, bp / g), scaled(row, num / g));
    den = mul_c(den, bp / g);
    std::int64_t cg = std::gcd(content(w), den);
    if (cg > 1) {
      for (auto& x : w) x /= cg;
      den /= cg;
    }
  }
  if (!is_zero(w)) return std::nullopt;
  return n;
}

bool LatticeGroup::contains(const IntVec& v) const {
  auto n = order_of(v);
  return n && *n == 1;
}

LatticeGroup sg_group(const AffineSemigroup& c) { return LatticeGroup(c.dim(), c.generators()); }

bool RationalCone::contains(const IntVec& v) const {
  for (const auto& e : equations)
    if (dot(e, v) != 0) return false;
  for (const auto& f : inequalities)
    if (dot(f, v) < 0) return false;
  return true;
}

RationalCone sg_cone(const AffineSemigroup& c) {
  ConeData cd = build_cone(c);
  RationalCone rc;
  rc.dim = c.dim();
  rc.span_dim = cd.span;
  for (const auto& r : cd.rays) rc.rays.push_back(from3(r, c.dim()));
  rc.inequalities = project(cd.inequalities, c.dim());
  rc.equations = project(cd.equations, c.dim());
  return rc;
}

bool Face::contains(const IntVec& v) const { return dot(functional, v) == 0; }

std::vector<Face> sg_faces(const AffineSemigroup& c) {
  ConeData cd = build_cone(c);
  const std::size_t d = c.dim();
  std::vector<Face> faces;
  faces.push_back({0, {}, from3(cd.origin_form, d), "origin"});
  if (cd.span >= 2)
    for (std::size_t i = 0; i < cd.rays.size(); ++i) {
      IntVec r = from3(cd.rays[i], d);
      faces.push_back({1, {r}, from3(cd.ray_forms[i], d), "ray " + vec_to_string(r)});
    }
  if (cd.span == 3) {
    const std::size_t k = cd.rays.size();
    for (std::size_t i = 0; i < k; ++i) {
      IntVec a = from3(cd.rays[i], d), b = from3(cd.rays[(i + 1) % k], d);
      faces.push_back({2, {a, b}, from3(cd.facet_forms[i], d), "facet " + vec_to_string(a) + "," + vec_to_string(b)});
    }
  }
  std::vector<IntVec> all;
  for (const auto& r : cd.rays) all.push_back(from3(r, d));
  faces.push_back({cd.span, all, IntVec(d, 0), "full cone"});
  return faces;
}

AffineSemigroup sg_saturation(const AffineSemigroup& c) {
  const ConeData cd = build_cone(c);
  const LatticeGroup group = sg_group(c);
  const RationalCone cone = sg_cone(c);
  const std::size_t d = c.dim();

  std::vector<V3> scaled_rays;
  for (const auto& r : cd.rays) {
    auto n = group.order_of(from3(r, d));
    if (!n) throw std::logic_error("cone ray outside the span of the generators");
    scaled_rays.push_back({mul_c(r[0], *n), mul_c(r[1], *n), mul_c(r[2], *n)});
  }
  std::vector<std::vector<std::size_t>> simplices;
  if (cd.span == 1) simplices.push_back({0});
  else if (cd.span == 2) simplices.push_back({0, 1});
  else
    for (std::size_t i = 1; i + 1 < cd.rays.size(); ++i) simplices.push_back({0, i, i + 1});

  std::set<IntVec, std::greater<>> candidates;
  for (const auto& s : simplices) {
    std::vector<V3> rs;
    for (auto i : s) rs.push_back(scaled_rays[i]);
    for (const auto& r : rs) candidates.insert(from3(r, d));
    // Closed fundamental parallelepiped of the scaled rays.
    auto inside = [&](const V3& x) {
      if (rs.size() == 1) {
        const V3& r = rs[0];
        if (!zero3(cross(x, r))) return false;
        std::int64_t t = dot3(x, r);
        return t >= 0 && t <= dot3(r, r);
      }
      if (rs.size() == 2) {
        V3 n = cross(rs[0], rs[1]);
        if (dot3(n, x) != 0) return false;
        std::int64_t nn = dot3(n, n);
        std::int64_t l1 = dot3(cross(x, rs[1]), n), l2 = dot3(cross(rs[0], x), n);
        return l1 >= 0 && l1 <= nn && l2 >= 0 && l2 <= nn;
      }
      std::int64_t det = dot3(rs[0], cross(rs[1], rs[2]));
      std::array<std::int64_t, 3> l{dot3(x, cross(rs[1], rs[2])), dot3(rs[0], cross(x, rs[2])),
                                    dot3(rs[0], cross(rs[1], x))};
      if (det < 0) {
        det = -det;
        for (auto& t : l) t = -t;
      }
      return std::all_of(l.begin(), l.end(), [&](std::int64_t t) { return t >= 0 && t <= det; });
    };
    V3 hi{0, 0, 0};
    for (const auto& r : rs)
      for (std::size_t i = 0; i < 3; ++i) hi[i] = add_c(hi[i], std::max<std::int64_t>(0, r[i]));
    std::uint64_t volume = 1;
    for (std::size_t i = 0; i < d; ++i) {
      volume *= static_cast<std::uint64_t>(hi[i] + 1);
      if (volume > kMaxBoxPoints) throw ResourceCapError("saturation enumeration box exceeds its cap");
    }
    V3 x{0, 0, 0};
    std::function<void(std::size_t)> walk = [&](std::size_t i) {
      if (i == d) {
        if (zero3(x) || !inside(x)) return;
        IntVec v = from3(x, d);
        if (group.contains(v)) candidates.insert(std::move(v));
        return;
      }
      for (x[i] = 0; x[i] <= hi[i]; ++x[i]) walk(i + 1);
      x[i] = 0;
    };
    walk(0);
  }

  std::vector<IntVec> sorted(candidates.begin(), candidates.end());
  std::stable_sort(sorted.begin(), sorted.end(), [](const IntVec& a, const IntVec& b) {
    return std::accumulate(a.begin(), a.end(), std::int64_t{0}) < std::accumulate(b.begin(), b.end(), std::int64_t{0});
  });
  std::vector<IntVec> basis;
  for (const auto& v : sorted) {
    bool reducible = false;
    for (const auto& a : sorted) {
      if (a == v) continue;
      IntVec rest = minus(v, a);
      if (!is_zero(rest) && cone.contains(rest)) {
        reducible = true;
        break;
      }
    }
    if (!reducible) basis.push_back(v);
  }
  return AffineSemigroup(d, std::move(basis));
}

NormalityResult sg_is_normal(const AffineSemigroup& c) {
  const AffineSemigroup sat = sg_saturation(c);
  NormalityResult r;
  for (const auto& h : sat.generators())
    if (!sg_member(h, c).member) {
      r.normal = false;
      r.witness = h;
      return r;
    }
  return r;
}

std::optional<unsigned> sg_pi_sandwich_certificate(const AffineSemigroup& c, const PrimeChar& p, unsigned e_cap) {
  unsigned e = 0;
  for (std::size_t i = 0; i < c.dim(); ++i) {
    std::vector<std::int64_t> mults;
    for (const auto& g : c.generators())
      if (support_count(g) == 1 && g[i] > 0) mults.push_back(g[i]);
    if (mults.empty()) return std::nullopt;
    RayMonoid axis(mults);
    std::optional<unsigned> ei;
    for (unsigned k = 0; k <= e_cap && !ei; ++k)
      if (axis.contains_power_multiple(p.value(), k, 1)) ei = k;
    if (!ei) return std::nullopt;
    e = std::max(e, *ei);
  }
  return e;
}

namespace {

struct FaceInfo {
  Face face;
  std::vector<IntVec> gens;
  LatticeGroup lattice;
};

FaceInfo minimal_face(const AffineSemigroup& c, const std::vector<Face>& faces, const IntVec& h) {
  for (const auto& f : faces) {
    if (f.dim == 0 || !f.contains(h)) continue;
    std::vector<IntVec> gens;
    for (const auto& g : c.generators())
      if (f.contains(g)) gens.push_back(g);
    LatticeGroup lattice(c.dim(), gens);
    return {f, std::move(gens), std::move(lattice)};
  }
  throw std::logic_error("no face contains " + vec_to_string(h));
}

std::int64_t smallest_prime_factor(std::int64_t n) {
  for (std::int64_t q = 2; q * q <= n; ++q)
    if (n % q == 0) return q;
  return n;
}

// p-free part of n and the exponent stripped.
std::pair<std::int64_t, unsigned> strip_p(std::int64_t n, std::uint32_t p) {
  unsigned e = 0;
  while (n % p == 0) {
    n /= p;
    ++e;
  }
  return {n, e};
}

std::optional<IntVec> power_multiple(const IntVec& h, std::uint32_t p, unsigned e, std::int64_t sum_bound) {
  IntVec v = h;
  for (unsigned i = 0; i < e; ++i) {
    v = scaled(v, p);
    if (std::accumulate(v.begin(), v.end(), std::int64_t{0}) > sum_bound) return std::nullopt;
  }
  if (std::accumulate(v.begin(), v.end(), std::int64_t{0}) > sum_bound) return std::nullopt;
  return v;
}

}  // namespace

NormalizationPiResult sg_normalization_pi_test(const AffineSemigroup& c, const PrimeChar& p) {
  const std::vector<Face> faces = sg_faces(c);
  const AffineSemigroup sat = sg_saturation(c);
  NormalizationPiResult out;
  for (const auto& h : sat.generators()) {
    FaceInfo info = minimal_face(c, faces, h);
    PiElementResult r;
    r.element = h;
    r.face = info.face.label;
    auto order = info.lattice.order_of(h);
    if (!order) throw std::logic_error("Hilbert basis element outside the span of its face");
    r.order = *order;
    auto [rest, e0] = strip_p(*order, p.value());
    if (rest != 1) {
      r.pass = false;
      FaceCongruenceObstruction ob;
      ob.element = h;
      ob.face_rays = info.face.rays;
      ob.face_generators = info.gens;
      ob.face_lattice = info.lattice.basis();
      ob.order = *order;
      ob.p = p.value();
      ob.blocking_prime = smallest_prime_factor(rest);
      r.obstruction = ob;
      r.reason = "order " + std::to_string(*order) + " of h modulo group(C ∩ F) is divisible by " +
                 std::to_string(ob.blocking_prime) + ", so it never divides p^e";
      out.pass = false;
      out.elements.push_back(std::move(r));
      continue;
    }
    r.pass = true;
    if (info.face.dim == 1) {
      std::vector<std::int64_t> mults;
      for (const auto& g : info.gens) mults.push_back(content(g));
      r.exponent = ray_power_exponent(RayMonoid(mults), p.value(), content(h));
    } else {
      for (unsigned e = e0; e <= e0 + 20; ++e) {
        auto v = power_multiple(h, p.value(), e, kDirectCheckSum);
        if (!v) break;
        if (sg_member(*v, c).member) {
          r.exponent = e;
          break;
        }
      }
    }
    if (r.exponent)
      r.reason = "p^" + std::to_string(*r.exponent) + "·h lies in C";
    else
      r.reason = "p^" + std::to_string(e0) +
                 "·h lies in group(C ∩ F) and in the relative interior of F; its large multiples lie in C";
    out.elements.push_back(std::move(r));
  }
  return out;
}

bool verify_face_obstruction(const AffineSemigroup& c, const FaceCongruenceObstruction& ob, unsigned e_limit) {
  if (ob.order <= 1 || ob.blocking_prime <= 1 || ob.blocking_prime == ob.p) return false;
  if (ob.order % ob.blocking_prime != 0 || smallest_prime_factor(ob.blocking_prime) != ob.blocking_prime) return false;
  LatticeGroup lattice(c.dim(), ob.face_generators);
  if (lattice.order_of(ob.element) != ob.order) return false;
  for (const auto& g : c.generators()) {
    bool listed = std::find(ob.face_generators.begin(), ob.face_generators.end(), g) != ob.face_generators.end();
    bool on_face = true;
    for (const auto& f : sg_faces(c))
      if (f.rays == ob.face_rays) on_face = f.contains(g);
    if (listed != on_face) return false;
  }
  std::int64_t r = 1 % ob.order;
  for (unsigned e = 0; e <= e_limit; ++e) {
    if (r == 0) return false;
    r = static_cast<std::int64_t>((static_cast<__int128>(r) * ob.p) % ob.order);
  }
  for (unsigned e = 0; e <= e_limit; ++e) {
    auto v = power_multiple(ob.element, ob.p, e, kDirectCheckSum);
    if (!v) break;
    if (sg_member(*v, c).member) return false;
  }
  return true;
}

FCoherenceVerdict sg_classify_fcoherent(const AffineSemigroup& c, const PrimeChar& p, unsigned e_cap) {
  require_cone_dim(c);
  FCoherenceVerdict v;
  const auto sandwich = sg_pi_sandwich_certificate(c, p, e_cap);
  const NormalizationPiResult pi = sg_normalization_pi_test(c, p);
  const RationalCone cone = sg_cone(c);

  if (sandwich) {
    if (!pi.pass) throw std::logic_error("sandwich certificate and failing normalization test contradict");
    for (std::size_t i = 0; i < c.dim(); ++i) {
      IntVec unit(c.dim(), 0);
      unit[i] = p.power_of_p(*sandwich);
      if (!sg_member(unit, c).member) throw std::logic_error("sandwich certificate does not re-verify");
    }
    v.status = FCoherenceStatus::FCoherent;
    v.certificate_e = sandwich;
    v.certificate_kind = "sandwich";
    v.evidence.push_back("p^" + std::to_string(*sandwich) + "·e_i lies in C for every i: k[x^(p^e)] ⊆ k[C] ⊆ k[x] "
                         "is purely inseparable, so the perfect closure of k[C] is a polynomial ring's");
    return v;
  }

  if (!pi.pass) {
    const PiElementResult* bad = nullptr;
    for (const auto& r : pi.elements)
      if (!r.pass) {
        bad = &r;
        break;
      }
    const FaceCongruenceObstruction& ob = *bad->obstruction;
    if (!verify_face_obstruction(c, ob, 10 * e_cap)) throw std::logic_error("face obstruction does not re-verify");
    v.status = FCoherenceStatus::NotFCoherent;
    v.witness = ob.element;
    v.obstruction = ob;
    v.evidence.push_back("h = " + vec_to_string(ob.element) + " lies in the normalization, on the face " + bad->face);
    v.evidence.push_back("p^e·h ∈ C forces " + std::to_string(ob.order) + " | p^e, impossible since " +
                         std::to_string(ob.blocking_prime) + " ∤ p^e");
    if (ob.face_rays.size() == 1) {
      // Same congruence for each multiple j·h with j | order.
      for (std::int64_t j = 1; j < ob.order; ++j)
        if (ob.order % j == 0)
          v.evidence.push_back("for " + vec_to_string(scaled(ob.element, j)) + ": " + std::to_string(ob.order / j) +
                               "n = p^e has no solution");
    }
    v.evidence.push_back("the normalization is not purely inseparable over k[C], so k[C] is not F-coherent");
    return v;
  }

  if (cone.span_dim == 1) {
    unsigned e = 0;
    for (const auto& r : pi.elements) {
      if (!r.exponent) throw std::logic_error("one-dimensional normalization test without exponent");
      e = std::max(e, *r.exponent);
    }
    v.status = FCoherenceStatus::FCoherent;
    v.certificate_e = e;
    v.certificate_kind = "one-dimensional-normalization";
    v.evidence.push_back("k[C] is one-dimensional and its normalization is purely inseparable over it (p^" +
                         std::to_string(e) + "·h ∈ C for the Hilbert basis element h)");
    return v;
  }

  v.status = FCoherenceStatus::Unknown;
  v.evidence.push_back("no sandwich certificate with e <= " + std::to_string(e_cap) +
                       ": some p^e·e_i is missing from C");
  for (const auto& r : pi.elements)
    v.evidence.push_back("normalization element " + vec_to_string(r.element) + " (" + r.face + "): " + r.reason);
  v.evidence.push_back("the normalization is purely inseparable, which is necessary but not known to be sufficient");
  return v;
}

std::optional<IntVec> Retraction::apply(const IntVec& v) const {
  if (face.contains(v)) return v;
  return std::nullopt;
}

Retraction sg_retract(const AffineSemigroup& c, const Face& face, std::size_t samples, std::uint64_t seed) {
  const auto faces = sg_faces(c);
  if (std::find(faces.begin(), faces.end(), face) == faces.end())
    throw PreconditionError("not a face of cone(C): " + face.label);
  Retraction r;
  r.face = face;
  for (const auto& g : c.generators()) (face.contains(g) ? r.kept : r.killed).push_back(g);

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coef(0, 3);
  // Every other pair is drawn from C ∩ F.
  auto sample = [&](bool on_face) {
    IntVec v(c.dim(), 0);
    for (const auto& g : on_face ? r.kept : c.generators()) {
      int k = coef(rng);
      for (std::size_t i = 0; i < v.size(); ++i) v[i] += k * g[i];
    }
    return v;
  };
  auto times = [](const std::optional<IntVec>& a, const std::optional<IntVec>& b) -> std::optional<IntVec> {
    if (!a || !b) return std::nullopt;
    IntVec s(a->size());
    for (std::size_t i = 0; i < s.size(); ++i) s[i] = (*a)[i] + (*b)[i];
    return s;
  };
  for (std::size_t k = 0; k < samples; ++k) {
    IntVec a = sample(k % 2 == 1), b = sample(false);
    auto ra = r.apply(a), rb = r.apply(b);
    IntVec ab(a.size());
    for (std::size_t i = 0; i < ab.size(); ++i) ab[i] = a[i] + b[i];
    if (r.apply(ab) != times(ra, rb)) r.multiplicative = false;
    for (const auto& x : {ra, rb})
      if (x && r.apply(*x) != x) r.idempotent = false;
    for (const auto& x : {a, b})
      if (face.contains(x) && r.apply(x) != x) r.identity_on_face = false;
    ++r.pairs_checked;
  }
  return r;
}

}  // namespace fchar
