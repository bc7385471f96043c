#include "fchar/polyring.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <set>
#include <unordered_map>
#include <utility>

namespace fchar {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

// ---------------------------------------------------------------------------
// PrimeChar

PrimeChar::PrimeChar(std::uint64_t p) : p_(0) {
  if (p >= (1ull << 31) || !is_prime(p))
    throw PreconditionError("characteristic must be a prime below 2^31, got " + std::to_string(p));
  p_ = static_cast<std::uint32_t>(p);
}

std::uint32_t PrimeChar::reduce(std::int64_t c) const noexcept {
  std::int64_t r = c % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return static_cast<std::uint32_t>(r);
}

std::uint32_t PrimeChar::add(std::uint32_t a, std::uint32_t b) const noexcept {
  std::uint64_t s = std::uint64_t{a} + b;
  return static_cast<std::uint32_t>(s >= p_ ? s - p_ : s);
}

std::uint32_t PrimeChar::sub(std::uint32_t a, std::uint32_t b) const noexcept {
  return a >= b ? a - b : static_cast<std::uint32_t>(std::uint64_t{a} + p_ - b);
}

std::uint32_t PrimeChar::mul(std::uint32_t a, std::uint32_t b) const noexcept {
  return static_cast<std::uint32_t>((std::uint64_t{a} * b) % p_);
}

std::uint32_t PrimeChar::neg(std::uint32_t a) const noexcept { return a == 0 ? 0 : p_ - a; }

std::uint32_t PrimeChar::pow(std::uint32_t a, std::uint64_t n) const noexcept {
  std::uint32_t result = 1 % p_;
  std::uint32_t base = a % p_;
  while (n > 0) {
    if (n & 1) result = mul(result, base);
    base = mul(base, base);
    n >>= 1;
  }
  return result;
}

std::uint32_t PrimeChar::inv(std::uint32_t a) const {
  if (a % p_ == 0) throw std::domain_error("inverse of zero in F_p");
  return pow(a, p_ - 2);
}

std::uint32_t PrimeChar::power_of_p(unsigned e) const {
  std::uint64_t q = 1;
  for (unsigned i = 0; i < e; ++i) {
    q *= p_;
    if (q > kMaxExponent)
      throw ExponentOverflow("p^e exceeds the exponent cap 2^20 (p=" + std::to_string(p_) +
                             ", e=" + std::to_string(e) + ")");
  }
  return static_cast<std::uint32_t>(q);
}

// ---------------------------------------------------------------------------
// Ring

Ring::Ring(PrimeChar p, std::vector<std::string> vars)
    : characteristic(p), variables(std::move(vars)) {
  if (variables.size() > kMaxVars)
    throw PreconditionError("at most " + std::to_string(kMaxVars) + " variables are supported");
  std::set<std::string> seen;
  for (const auto& v : variables) {
    if (v.empty() || !(std::isalpha(static_cast<unsigned char>(v[0])) || v[0] == '_'))
      throw PreconditionError("invalid variable name '" + v + "'");
    for (char ch : v)
      if (!(std::isalnum(static_cast<unsigned char>(ch)) || ch == '_'))
        throw PreconditionError("invalid variable name '" + v + "'");
    if (!seen.insert(v).second) throw PreconditionError("duplicate variable '" + v + "'");
  }
}

std::size_t Ring::index_of(std::string_view name) const noexcept {
  for (std::size_t i = 0; i < variables.size(); ++i)
    if (variables[i] == name) return i;
  return variables.size();
}

RingPtr make_ring(std::uint64_t p, std::vector<std::string> vars) {
  return std::make_shared<const Ring>(PrimeChar(p), std::move(vars));
}

// ---------------------------------------------------------------------------
// Monomial

Monomial::Monomial(std::span<const std::uint32_t> exps) {
  if (exps.size() > kMaxVars) throw PreconditionError("exponent vector longer than kMaxVars");
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (exps[i] > kMaxExponent) throw ExponentOverflow("exponent exceeds the cap 2^20");
    e_[i] = exps[i];
  }
  refresh();
}

Monomial Monomial::variable(std::size_t i, std::uint32_t exp) {
  Monomial m;
  if (exp > kMaxExponent) throw ExponentOverflow("exponent exceeds the cap 2^20");
  m.e_[i] = exp;
  m.refresh();
  return m;
}

void Monomial::refresh() noexcept {
  deg_ = 0;
  mask_ = 0;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    deg_ += e_[i];
    if (e_[i] != 0) mask_ |= 1u << i;
  }
}

std::vector<std::uint32_t> Monomial::exponents(std::size_t nvars) const {
  return {e_.begin(), e_.begin() + static_cast<std::ptrdiff_t>(nvars)};
}

bool Monomial::divides(const Monomial& other) const noexcept {
  if ((mask_ & ~other.mask_) != 0 || deg_ > other.deg_) return false;
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (e_[i] > other.e_[i]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial m;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    std::uint32_t s = e_[i] + other.e_[i];
    if (s > kMaxExponent) throw ExponentOverflow("exponent exceeds the cap 2^20");
    m.e_[i] = s;
  }
  m.deg_ = deg_ + other.deg_;
  m.mask_ = mask_ | other.mask_;
  return m;
}

Monomial Monomial::quotient(const Monomial& divisor) const noexcept {
  Monomial m;
  for (std::size_t i = 0; i < kMaxVars; ++i) m.e_[i] = e_[i] - divisor.e_[i];
  m.refresh();
  return m;
}

Monomial Monomial::lcm(const Monomial& other) const noexcept {
  Monomial m;
  for (std::size_t i = 0; i < kMaxVars; ++i) m.e_[i] = std::max(e_[i], other.e_[i]);
  m.refresh();
  return m;
}

Monomial Monomial::scaled(std::uint32_t factor) const {
  Monomial m;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    std::uint64_t s = std::uint64_t{e_[i]} * factor;
    if (s > kMaxExponent) throw ExponentOverflow("exponent exceeds the cap 2^20");
    m.e_[i] = static_cast<std::uint32_t>(s);
  }
  m.refresh();
  return m;
}

std::size_t Monomial::hash() const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (std::uint32_t x : e_) h = (h ^ x) * 1099511628211ull;
  return h;
}

// ---------------------------------------------------------------------------
// MonomialOrder

namespace {

std::vector<std::size_t> iota_vec(std::size_t n) {
  std::vector<std::size_t> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = i;
  return v;
}

// Canonical storage order: grevlex over declared variable order.
int canonical_compare(const Monomial& a, const Monomial& b) noexcept {
  if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
  for (std::size_t i = kMaxVars; i-- > 0;)
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  return 0;
}

bool canonical_greater(const Term& a, const Term& b) noexcept {
  return canonical_compare(a.mono, b.mono) > 0;
}

}  // namespace

MonomialOrder::MonomialOrder(Kind kind, std::vector<std::size_t> priority, std::size_t block)
    : kind_(kind), priority_(std::move(priority)), block_(block) {
  std::vector<std::size_t> sorted = priority_;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != iota_vec(priority_.size()))
    throw PreconditionError("monomial order priority must be a permutation of the variables");
  identity_ = priority_ == iota_vec(priority_.size());
}

MonomialOrder MonomialOrder::lex(std::size_t nvars) { return {Kind::Lex, iota_vec(nvars), 0}; }

MonomialOrder MonomialOrder::grevlex(std::size_t nvars) { return {Kind::Grevlex, iota_vec(nvars), 0}; }

MonomialOrder MonomialOrder::with_priority(Kind kind, std::vector<std::size_t> priority) {
  if (kind == Kind::Elimination) throw PreconditionError("use MonomialOrder::elimination for block orders");
  return {kind, std::move(priority), 0};
}

MonomialOrder MonomialOrder::elimination(std::size_t nvars, std::span<const std::size_t> first_block) {
  std::vector<std::size_t> priority;
  std::vector<bool> in_block(nvars, false);
  for (std::size_t v : first_block) {
    if (v >= nvars) throw PreconditionError("elimination variable index out of range");
    if (in_block[v]) continue;
    in_block[v] = true;
  }
  for (std::size_t v = 0; v < nvars; ++v)
    if (in_block[v]) priority.push_back(v);
  std::size_t block = priority.size();
  for (std::size_t v = 0; v < nvars; ++v)
    if (!in_block[v]) priority.push_back(v);
  return {Kind::Elimination, std::move(priority), block};
}

std::string MonomialOrder::name() const {
  switch (kind_) {
    case Kind::Lex: return "lex";
    case Kind::Grevlex: return "grevlex";
    case Kind::Elimination: return "elimination(" + std::to_string(block_) + ")";
  }
  return "?";
}

int MonomialOrder::grevlex_range(const Monomial& a, const Monomial& b, std::size_t lo,
                                 std::size_t hi) const noexcept {
  std::uint64_t da = 0, db = 0;
  for (std::size_t j = lo; j < hi; ++j) {
    da += a[priority_[j]];
    db += b[priority_[j]];
  }
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t j = hi; j-- > lo;) {
    std::uint32_t x = a[priority_[j]], y = b[priority_[j]];
    if (x != y) return x < y ? 1 : -1;
  }
  return 0;
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const noexcept {
  switch (kind_) {
    case Kind::Grevlex:
      if (identity_) {
        if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
        for (std::size_t i = priority_.size(); i-- > 0;)
          if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
        return 0;
      }
      return grevlex_range(a, b, 0, priority_.size());
    case Kind::Lex:
      for (std::size_t v : priority_)
        if (a[v] != b[v]) return a[v] < b[v] ? -1 : 1;
      return 0;
    case Kind::Elimination: {
      int c = grevlex_range(a, b, 0, block_);
      if (c != 0) return c;
      return grevlex_range(a, b, block_, priority_.size());
    }
  }
  return 0;
}

// ---------------------------------------------------------------------------
// Polynomial

Polynomial::Polynomial(RingPtr ring) : ring_(std::move(ring)) {
  if (!ring_) throw PreconditionError("polynomial without ring");
}

Polynomial::Polynomial(RingPtr ring, std::vector<Term> sorted_terms)
    : ring_(std::move(ring)), terms_(std::move(sorted_terms)) {}

Polynomial Polynomial::constant(RingPtr ring, std::int64_t c) {
  std::uint32_t r = ring->characteristic.reduce(c);
  std::vector<Term> t;
  if (r != 0) t.push_back({Monomial{}, r});
  return {std::move(ring), std::move(t)};
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t i) {
  if (i >= ring->nvars()) throw PreconditionError("variable index out of range");
  return {std::move(ring), {Term{Monomial::variable(i), 1}}};
}

Polynomial Polynomial::monomial(RingPtr ring, const Monomial& m, std::uint32_t coef) {
  coef %= ring->characteristic.value();
  std::vector<Term> t;
  if (coef != 0) t.push_back({m, coef});
  return {std::move(ring), std::move(t)};
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
  const PrimeChar& p = ring->characteristic;
  std::sort(terms.begin(), terms.end(), canonical_greater);
  std::vector<Term> out;
  out.reserve(terms.size());
  for (const Term& t : terms) {
    std::uint32_t c = t.coef % p.value();
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coef = p.add(out.back().coef, c);
    } else {
      if (!out.empty() && out.back().coef == 0) out.pop_back();
      out.push_back({t.mono, c});
    }
  }
  if (!out.empty() && out.back().coef == 0) out.pop_back();
  return {std::move(ring), std::move(out)};
}

bool Polynomial::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
}

std::uint64_t Polynomial::total_degree() const noexcept {
  return terms_.empty() ? 0 : terms_.front().mono.degree();
}

std::uint32_t Polynomial::degree_in(std::size_t var) const noexcept {
  std::uint32_t d = 0;
  for (const Term& t : terms_) d = std::max(d, t.mono[var]);
  return d;
}

std::uint32_t Polynomial::constant_term() const noexcept {
  if (!terms_.empty() && terms_.back().mono.is_one()) return terms_.back().coef;
  return 0;
}

void Polynomial::require_same_ring(const Polynomial& g) const {
  if (ring_ != g.ring_ && !(*ring_ == *g.ring_))
    throw PreconditionError("polynomials live in different rings");
}

Polynomial Polynomial::operator+(const Polynomial& g) const {
  require_same_ring(g);
  const PrimeChar& p = ring_->characteristic;
  std::vector<Term> out;
  out.reserve(terms_.size() + g.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() && j < g.terms_.size()) {
    int c = canonical_compare(terms_[i].mono, g.terms_[j].mono);
    if (c > 0) {
      out.push_back(terms_[i++]);
    } else if (c < 0) {
      out.push_back(g.terms_[j++]);
    } else {
      std::uint32_t s = p.add(terms_[i].coef, g.terms_[j].coef);
      if (s != 0) out.push_back({terms_[i].mono, s});
      ++i;
      ++j;
    }
  }
  out.insert(out.end(), terms_.begin() + static_cast<std::ptrdiff_t>(i), terms_.end());
  out.insert(out.end(), g.terms_.begin() + static_cast<std::ptrdiff_t>(j), g.terms_.end());
  return {ring_, std::move(out)};
}

Polynomial Polynomial::operator-() const {
  std::vector<Term> out = terms_;
  for (Term& t : out) t.coef = ring_->characteristic.neg(t.coef);
  return {ring_, std::move(out)};
}

Polynomial Polynomial::operator-(const Polynomial& g) const { return *this + (-g); }

Polynomial Polynomial::scaled(std::uint32_t c) const {
  const PrimeChar& p = ring_->characteristic;
  c %= p.value();
  if (c == 0) return Polynomial(ring_);
  std::vector<Term> out = terms_;
  for (Term& t : out) t.coef = p.mul(t.coef, c);
  return {ring_, std::move(out)};
}

Polynomial Polynomial::times_monomial(const Monomial& m, std::uint32_t c) const {
  const PrimeChar& p = ring_->characteristic;
  c %= p.value();
  if (c == 0) return Polynomial(ring_);
  std::vector<Term> out;
  out.reserve(terms_.size());
  // Multiplication by a monomial preserves any monomial order.
  for (const Term& t : terms_) out.push_back({t.mono * m, p.mul(t.coef, c)});
  return {ring_, std::move(out)};
}

Polynomial Polynomial::operator*(const Polynomial& g) const {
  require_same_ring(g);
  if (is_zero() || g.is_zero()) return Polynomial(ring_);
  if (g.size() == 1) return times_monomial(g.terms_[0].mono, g.terms_[0].coef);
  if (size() == 1) return g.times_monomial(terms_[0].mono, terms_[0].coef);
  const PrimeChar& p = ring_->characteristic;
  std::unordered_map<Monomial, std::uint32_t, MonomialHash> acc;
  acc.reserve(terms_.size() * g.terms_.size());
  for (const Term& a : terms_)
    for (const Term& b : g.terms_) {
      auto [it, inserted] = acc.try_emplace(a.mono * b.mono, 0);
      it->second = p.add(it->second, p.mul(a.coef, b.coef));
    }
  std::vector<Term> out;
  out.reserve(acc.size());
  for (const auto& [m, c] : acc)
    if (c != 0) out.push_back({m, c});
  std::sort(out.begin(), out.end(), canonical_greater);
  return {ring_, std::move(out)};
}

Polynomial Polynomial::pow(std::uint64_t n) const {
  if (size() == 1) {
    if (n > kMaxExponent && !terms_[0].mono.is_one())
      throw ExponentOverflow("exponent exceeds the cap 2^20");
    Monomial m = terms_[0].mono.is_one() ? Monomial{} : terms_[0].mono.scaled(static_cast<std::uint32_t>(n));
    return monomial(ring_, m, ring_->characteristic.pow(terms_[0].coef, n));
  }
  Polynomial result = constant(ring_, 1);
  Polynomial base = *this;
  while (n > 0) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return result;
}

Polynomial Polynomial::frobenius_power(unsigned e) const {
  if (e == 0) return *this;
  std::uint32_t q = ring_->characteristic.power_of_p(e);
  std::vector<Term> out;
  out.reserve(terms_.size());
  // Scaling every exponent by q preserves grevlex order.
  for (const Term& t : terms_) out.push_back({t.mono.scaled(q), t.coef});
  return {ring_, std::move(out)};
}

Polynomial Polynomial::embed(RingPtr target, std::span<const std::size_t> var_map) const {
  if (var_map.size() != ring_->nvars()) throw PreconditionError("variable map has wrong length");
  if (target->characteristic != ring_->characteristic)
    throw PreconditionError("cannot embed across characteristics");
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const Term& t : terms_) {
    std::array<std::uint32_t, kMaxVars> e{};
    for (std::size_t i = 0; i < var_map.size(); ++i) {
      if (t.mono[i] == 0) continue;
      if (var_map[i] >= target->nvars()) throw PreconditionError("variable map out of range");
      e[var_map[i]] += t.mono[i];
    }
    out.push_back({Monomial(std::span<const std::uint32_t>(e.data(), target->nvars())), t.coef});
  }
  return from_terms(std::move(target), std::move(out));
}

Polynomial Polynomial::substitute(std::span<const Polynomial> images) const {
  if (images.size() != ring_->nvars()) throw PreconditionError("substitution needs one image per variable");
  if (images.empty()) return *this;
  const RingPtr& target = images[0].ring_ptr();
  for (const auto& img : images) img.require_same_ring(images[0]);
  std::vector<std::vector<Polynomial>> powers(images.size());
  auto power = [&](std::size_t i, std::uint32_t k) -> const Polynomial& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(constant(target, 1));
    while (cache.size() <= k) cache.push_back(cache.back() * images[i]);
    return cache[k];
  };
  Polynomial result(target);
  for (const Term& t : terms_) {
    Polynomial prod = constant(target, t.coef);
    for (std::size_t i = 0; i < images.size(); ++i)
      if (t.mono[i] > 0) prod = prod * power(i, t.mono[i]);
    result = result + prod;
  }
  return result;
}

std::uint32_t Polynomial::evaluate(std::span<const std::uint32_t> point) const {
  if (point.size() != ring_->nvars()) throw PreconditionError("evaluation point has wrong length");
  const PrimeChar& p = ring_->characteristic;
  std::uint32_t acc = 0;
  for (const Term& t : terms_) {
    std::uint32_t v = t.coef;
    for (std::size_t i = 0; i < point.size(); ++i)
      if (t.mono[i] > 0) v = p.mul(v, p.pow(point[i], t.mono[i]));
    acc = p.add(acc, v);
  }
  return acc;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const Term& t : terms_) {
    if (!out.empty()) out += '+';
    std::string mono;
    for (std::size_t i = 0; i < ring_->nvars(); ++i) {
      if (t.mono[i] == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += ring_->variables[i];
      if (t.mono[i] > 1) mono += '^' + std::to_string(t.mono[i]);
    }
    if (mono.empty()) {
      out += std::to_string(t.coef);
    } else {
      if (t.coef != 1) out += std::to_string(t.coef) + '*';
      out += mono;
    }
  }
  return out;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  return (a.ring_ == b.ring_ || *a.ring_ == *b.ring_) && a.terms_ == b.terms_;
}

// ---------------------------------------------------------------------------
// Parser

namespace {

class Parser {
 public:
  Parser(std::string_view text, const RingPtr& ring) : s_(text), ring_(ring) {}

  Polynomial parse_all() {
    skip_ws();
    if (pos_ == s_.size()) throw ParseError("empty polynomial", pos_);
    Polynomial f = expr();
    skip_ws();
    if (pos_ != s_.size()) throw ParseError(std::string("unexpected '") + s_[pos_] + "'", pos_);
    return f;
  }

 private:
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial expr() {
    Polynomial acc(ring_);
    bool first = true;
    for (;;) {
      skip_ws();
      bool negate = false;
      if (accept('+')) {
      } else if (accept('-')) {
        negate = true;
      } else if (!first) {
        break;
      }
      Polynomial t = term();
      acc = negate ? acc - t : acc + t;
      first = false;
    }
    return acc;
  }

  Polynomial term() {
    Polynomial acc = factor();
    while (accept('*')) acc = acc * factor();
    return acc;
  }

  Polynomial factor() {
    skip_ws();
    if (accept('-')) return -factor();
    Polynomial base = primary();
    if (accept('^')) {
      skip_ws();
      std::size_t at = pos_;
      if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
        throw ParseError("expected integer exponent", pos_);
      std::uint64_t n = 0;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
        n = n * 10 + static_cast<std::uint64_t>(s_[pos_++] - '0');
        if (n > (1ull << 40)) throw ParseError("exponent too large", at);
      }
      return base.pow(n);
    }
    return base;
  }

  Polynomial primary() {
    skip_ws();
    if (pos_ >= s_.size()) throw ParseError("unexpected end of input", pos_);
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      if (!accept(')')) throw ParseError("expected ')'", pos_);
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const PrimeChar& p = ring_->characteristic;
      std::uint32_t v = 0;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
        v = p.add(p.mul(v, 10 % p.value()), static_cast<std::uint32_t>(s_[pos_++] - '0') % p.value());
      return Polynomial::constant(ring_, v);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      std::string_view name = s_.substr(start, pos_ - start);
      std::size_t idx = ring_->index_of(name);
      if (idx == ring_->nvars()) throw ParseError("unknown variable '" + std::string(name) + "'", start);
      return Polynomial::variable(ring_, idx);
    }
    throw ParseError(std::string("unexpected '") + c + "'", pos_);
  }

  std::string_view s_;
  const RingPtr& ring_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const RingPtr& ring) {
  return Parser(text, ring).parse_all();
}

std::vector<Polynomial> parse_polynomial_list(std::string_view text, const RingPtr& ring) {
  std::vector<Polynomial> out;
  std::size_t start = 0;
  bool any = false;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) any = true;
  if (!any) return out;
  for (;;) {
    std::size_t comma = text.find(',', start);
    std::string_view piece = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    try {
      out.push_back(parse_polynomial(piece, ring));
    } catch (const ParseError& e) {
      throw ParseError(std::string("in list item ") + std::to_string(out.size() + 1) + ": " + e.what(),
                       start + e.position());
    }
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::vector<std::string> scan_variables(std::string_view text) {
  std::set<std::string> names;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = i;
      while (i < text.size() && (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_')) ++i;
      names.emplace(text.substr(start, i - start));
    } else {
      ++i;
    }
  }
  return {names.begin(), names.end()};
}

}  // namespace fchar
