#include "drees/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace drees {

int grevlex_cmp(const Monomial& a, const Monomial& b) {
  unsigned da = a.degree(), db = b.degree();
  if (da != db) return da > db ? 1 : -1;
  for (std::size_t i = kMaxVars; i-- > 0;)
    if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? 1 : -1;
  return 0;
}

std::size_t MonomialHash::operator()(const Monomial& m) const {
  std::size_t h = 1469598103934665603ull;
  for (auto x : m.e) h = (h ^ x) * 1099511628211ull;
  return h;
}

unsigned Order::value() const {
  if (is_infinite()) throw DomainError("order is infinite");
  return v_;
}

Ring::Ring(Field field, std::vector<std::string> vars) {
  if (vars.empty()) throw DomainError("a ring needs at least one variable");
  if (vars.size() > kMaxVars) throw DomainError("at most " + std::to_string(kMaxVars) + " variables are supported");
  std::set<std::string> seen;
  for (const auto& v : vars) {
    if (v.empty() || !(std::isalpha(static_cast<unsigned char>(v[0])) || v[0] == '_'))
      throw DomainError("bad variable name '" + v + "'");
    for (char c : v)
      if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) throw DomainError("bad variable name '" + v + "'");
    if (!seen.insert(v).second) throw DomainError("duplicate variable '" + v + "'");
    if (field.degree() > 1 && v == field.generator_name())
      throw DomainError("variable '" + v + "' clashes with the field generator");
  }
  d_ = std::make_shared<RingData>(RingData{std::move(field), std::move(vars)});
}

Ring Ring::parse(std::string_view spec) {
  auto open = spec.rfind('[');
  auto close = spec.rfind(']');
  if (open == std::string_view::npos || close == std::string_view::npos || close < open)
    throw ParseError("bad ring spec '" + std::string(spec) + "'");
  for (std::size_t i = close + 1; i < spec.size(); ++i)
    if (!std::isspace(static_cast<unsigned char>(spec[i]))) throw ParseError("trailing text in ring spec");
  Field f = Field::parse(spec.substr(0, open));
  std::vector<std::string> vars;
  std::string cur;
  for (std::size_t i = open + 1; i <= close; ++i) {
    char c = spec[i];
    if (c == ',' || c == ']') {
      vars.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      cur += c;
    }
  }
  return Ring(f, vars);
}

std::optional<std::size_t> Ring::find(std::string_view name) const {
  for (std::size_t i = 0; i < d_->vars.size(); ++i)
    if (d_->vars[i] == name) return i;
  return std::nullopt;
}

std::size_t Ring::index(std::string_view name) const {
  if (auto i = find(name)) return *i;
  throw DomainError("unknown variable '" + std::string(name) + "' in " + spec());
}

std::string Ring::spec() const {
  std::string s = field().spec() + "[";
  for (std::size_t i = 0; i < nvars(); ++i) s += (i ? "," : "") + d_->vars[i];
  return s + "]";
}

Ring Ring::without(std::string_view name) const {
  std::size_t k = index(name);
  std::vector<std::string> v;
  for (std::size_t i = 0; i < nvars(); ++i)
    if (i != k) v.push_back(d_->vars[i]);
  return Ring(field(), v);
}

bool Ring::operator==(const Ring& o) const {
  return d_ == o.d_ || (field() == o.field() && vars() == o.vars());
}

RationalPoint RationalPoint::origin(const Ring& r) {
  return {r, std::vector<Scalar>(r.nvars(), r.field().zero())};
}

RationalPoint RationalPoint::of(const Ring& r, const std::vector<long>& values) {
  if (values.size() != r.nvars()) throw DomainError("point has wrong number of coordinates");
  RationalPoint p{r, {}};
  for (long v : values) p.coords.push_back(r.field().from_int(v));
  return p;
}

bool RationalPoint::is_origin() const {
  for (const auto& c : coords)
    if (!ring.field().is_zero(c)) return false;
  return true;
}

std::string RationalPoint::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < coords.size(); ++i) s += (i ? "," : "") + ring.field().to_string(coords[i]);
  return s + ")";
}

bool RationalPoint::operator==(const RationalPoint& o) const {
  if (ring != o.ring || coords.size() != o.coords.size()) return false;
  for (std::size_t i = 0; i < coords.size(); ++i)
    if (!ring.field().equal(coords[i], o.coords[i])) return false;
  return true;
}

Polynomial Polynomial::constant(const Ring& r, const Scalar& c) {
  Polynomial p(r);
  if (!r.field().is_zero(c)) p.terms_.push_back({Monomial{}, c});
  return p;
}

Polynomial Polynomial::variable(const Ring& r, std::string_view name) { return variable(r, r.index(name)); }

Polynomial Polynomial::variable(const Ring& r, std::size_t index) {
  if (index >= r.nvars()) throw DomainError("variable index out of range");
  Monomial m;
  m[index] = 1;
  return monomial(r, m, r.field().one());
}

Polynomial Polynomial::monomial(const Ring& r, const Monomial& m, const Scalar& c) {
  Polynomial p(r);
  if (!r.field().is_zero(c)) p.terms_.push_back({m, c});
  return p;
}

Polynomial Polynomial::from_terms(const Ring& r, std::vector<Term> terms) {
  const Field& F = r.field();
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return grevlex_cmp(a.m, b.m) > 0; });
  Polynomial p(r);
  p.terms_.reserve(terms.size());
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().m == t.m) {
      p.terms_.back().c = F.add(p.terms_.back().c, t.c);
    } else {
      if (!p.terms_.empty() && F.is_zero(p.terms_.back().c)) p.terms_.pop_back();
      p.terms_.push_back(std::move(t));
    }
  }
  if (!p.terms_.empty() && F.is_zero(p.terms_.back().c)) p.terms_.pop_back();
  return p;
}

const Term& Polynomial::leading() const {
  if (terms_.empty()) throw DomainError("zero polynomial has no leading term");
  return terms_.front();
}

bool Polynomial::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].m.degree() == 0); }

void Polynomial::check(const Polynomial& o) const {
  if (ring_ != o.ring_) throw DomainError("ring mismatch: " + ring_.spec() + " vs " + o.ring_.spec());
}

namespace {

// a + sign*b where both are sorted descending.
std::vector<Term> merge(const Field& F, const std::vector<Term>& a, const std::vector<Term>& b, bool subtract) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    int c = grevlex_cmp(a[i].m, b[j].m);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back({b[j].m, subtract ? F.neg(b[j].c) : b[j].c});
      ++j;
    } else {
      Scalar s = subtract ? F.sub(a[i].c, b[j].c) : F.add(a[i].c, b[j].c);
      if (!F.is_zero(s)) out.push_back({a[i].m, std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) out.push_back({b[j].m, subtract ? F.neg(b[j].c) : b[j].c});
  return out;
}

}  // namespace

Polynomial Polynomial::operator+(const Polynomial& o) const {
  check(o);
  Polynomial r(ring_);
  r.terms_ = merge(field(), terms_, o.terms_, false);
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  check(o);
  Polynomial r(ring_);
  r.terms_ = merge(field(), terms_, o.terms_, true);
  return r;
}

Polynomial Polynomial::operator-() const {
  Polynomial r(ring_);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.m, field().neg(t.c)});
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  check(o);
  if (is_zero() || o.is_zero()) return Polynomial(ring_);
  if (o.terms_.size() == 1) return mul_term(o.terms_[0].m, o.terms_[0].c);
  if (terms_.size() == 1) return o.mul_term(terms_[0].m, terms_[0].c);
  // Accumulate row by row, merging the (already sorted) partial products.
  const Polynomial& small = terms_.size() <= o.terms_.size() ? *this : o;
  const Polynomial& big = terms_.size() <= o.terms_.size() ? o : *this;
  std::vector<Term> acc;
  for (const auto& t : small.terms_) {
    Polynomial row = big.mul_term(t.m, t.c);
    acc = merge(field(), acc, row.terms_, false);
  }
  Polynomial r(ring_);
  r.terms_ = std::move(acc);
  return r;
}

Polynomial Polynomial::scale(const Scalar& c) const {
  if (field().is_zero(c)) return Polynomial(ring_);
  Polynomial r(ring_);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.m, field().mul(t.c, c)});
  return r;
}

Polynomial Polynomial::mul_term(const Monomial& m, const Scalar& c) const {
  if (field().is_zero(c)) return Polynomial(ring_);
  Polynomial r(ring_);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.m * m, field().mul(t.c, c)});
  return r;
}

Polynomial Polynomial::sub_mul(const Monomial& m, const Scalar& c, const Polynomial& g) const {
  check(g);
  Polynomial r(ring_);
  r.terms_ = merge(field(), terms_, g.mul_term(m, c).terms_, true);
  return r;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial r = constant(ring_, 1), base = *this;
  while (e) {
    if (e & 1) r *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return r;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return scale(field().inv(lc()));
}

Polynomial Polynomial::tail() const {
  Polynomial r(ring_);
  if (!terms_.empty()) r.terms_.assign(terms_.begin() + 1, terms_.end());
  return r;
}

bool Polynomial::operator==(const Polynomial& o) const {
  if (ring_ != o.ring_ || terms_.size() != o.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (!(terms_[i].m == o.terms_[i].m) || !field().equal(terms_[i].c, o.terms_[i].c)) return false;
  return true;
}

bool Polynomial::proportional(const Polynomial& o) const {
  if (ring_ != o.ring_ || terms_.size() != o.terms_.size()) return false;
  if (terms_.empty()) return true;
  Scalar ratio = field().div(o.terms_[0].c, terms_[0].c);
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (!(terms_[i].m == o.terms_[i].m)) return false;
    if (!field().equal(field().mul(terms_[i].c, ratio), o.terms_[i].c)) return false;
  }
  return true;
}

unsigned Polynomial::total_degree() const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, t.m.degree());
  return d;
}

unsigned Polynomial::degree_in(std::size_t var) const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, t.m[var]);
  return d;
}

FieldElement Polynomial::evaluate(const RationalPoint& p) const {
  if (p.ring != ring_) throw DomainError("point and polynomial live in different rings");
  const Field& F = field();
  Scalar sum = F.zero();
  for (const auto& t : terms_) {
    Scalar v = t.c;
    for (std::size_t i = 0; i < ring_.nvars(); ++i)
      if (t.m[i]) v = F.mul(v, F.pow(p.coords[i], t.m[i]));
    sum = F.add(sum, v);
  }
  return {F, sum};
}

Polynomial Polynomial::substitute(const std::vector<std::optional<Polynomial>>& images, const Ring& target) const {
  if (images.size() != ring_.nvars()) throw DomainError("substitution has wrong arity");
  if (target.field() != field()) throw DomainError("substitution changes the field");
  std::vector<Polynomial> base;
  for (std::size_t i = 0; i < ring_.nvars(); ++i) {
    if (images[i]) {
      if (images[i]->ring() != target) throw DomainError("substitution image outside target ring");
      base.push_back(*images[i]);
    } else {
      base.push_back(Polynomial::variable(target, target.index(ring_.vars()[i])));
    }
  }
  std::vector<std::vector<Polynomial>> powers(ring_.nvars());
  auto power = [&](std::size_t i, unsigned e) -> const Polynomial& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(Polynomial::constant(target, 1));
    while (cache.size() <= e) cache.push_back(cache.back() * base[i]);
    return cache[e];
  };
  std::vector<Term> acc;
  for (const auto& t : terms_) {
    Polynomial prod = Polynomial::constant(target, t.c);
    for (std::size_t i = 0; i < ring_.nvars() && !prod.is_zero(); ++i)
      if (t.m[i]) prod *= power(i, t.m[i]);
    for (auto& x : prod.terms_) acc.push_back(std::move(x));
  }
  return from_terms(target, std::move(acc));
}

Polynomial Polynomial::substitute(const std::map<std::string, Polynomial>& images) const {
  std::optional<Ring> target;
  std::vector<std::optional<Polynomial>> v(ring_.nvars());
  for (const auto& [name, img] : images) {
    v[ring_.index(name)] = img;
    if (target && *target != img.ring()) throw DomainError("substitution images live in different rings");
    target = img.ring();
  }
  return substitute(v, target ? *target : ring_);
}

Polynomial Polynomial::embed(const Ring& target) const {
  if (target.field() != field()) throw DomainError("embedding changes the field");
  std::vector<std::size_t> map(ring_.nvars());
  for (std::size_t i = 0; i < ring_.nvars(); ++i) {
    if (!involves(i)) continue;
    map[i] = target.index(ring_.vars()[i]);
  }
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial m;
    for (std::size_t i = 0; i < ring_.nvars(); ++i)
      if (t.m[i]) m[map[i]] = t.m[i];
    out.push_back({m, t.c});
  }
  return from_terms(target, std::move(out));
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  const Field& F = field();
  std::string s;
  for (const auto& t : terms_) {
    std::string mono;
    for (std::size_t i = 0; i < ring_.nvars(); ++i) {
      if (!t.m[i]) continue;
      if (!mono.empty()) mono += "*";
      mono += ring_.vars()[i];
      if (t.m[i] > 1) mono += "^" + std::to_string(t.m[i]);
    }
    std::string term;
    if (mono.empty()) {
      term = F.is_compound(t.c) ? "(" + F.to_string(t.c) + ")" : F.to_string(t.c);
    } else if (F.is_one(t.c)) {
      term = mono;
    } else if (F.is_one(F.neg(t.c)) && F.is_negative_literal(t.c)) {
      term = "-" + mono;
    } else {
      std::string c = F.to_string(t.c);
      if (F.is_compound(t.c)) c = "(" + c + ")";
      term = c + "*" + mono;
    }
    if (!s.empty() && term[0] != '-') s += "+";
    s += term;
  }
  return s;
}

Order order_at_origin(const Polynomial& f) {
  if (f.is_zero()) return Order::infinity();
  unsigned d = std::numeric_limits<unsigned>::max();
  for (const auto& t : f.terms()) d = std::min(d, t.m.degree());
  return Order(d);
}

Order order_at(const Polynomial& f, const RationalPoint& p) { return order_at_origin(recenter(f, p)); }

Order order_along_subspace(const Polynomial& f, const std::vector<std::string>& center) {
  if (center.empty()) throw DomainError("empty center");
  std::vector<std::size_t> idx;
  for (const auto& v : center) idx.push_back(f.ring().index(v));
  if (f.is_zero()) return Order::infinity();
  unsigned d = std::numeric_limits<unsigned>::max();
  for (const auto& t : f.terms()) {
    unsigned s = 0;
    for (auto i : idx) s += t.m[i];
    d = std::min(d, s);
  }
  return Order(d);
}

Polynomial initial_form(const Polynomial& f) {
  if (f.is_zero()) throw DomainError("initial form of zero");
  unsigned d = order_at_origin(f).value();
  std::vector<Term> out;
  for (const auto& t : f.terms())
    if (t.m.degree() == d) out.push_back(t);
  return Polynomial::from_terms(f.ring(), std::move(out));
}

Polynomial recenter(const Polynomial& f, const RationalPoint& p) {
  if (p.ring != f.ring()) throw DomainError("point and polynomial live in different rings");
  if (p.is_origin()) return f;
  const Ring& R = f.ring();
  std::vector<std::optional<Polynomial>> img(R.nvars());
  for (std::size_t i = 0; i < R.nvars(); ++i)
    if (!R.field().is_zero(p.coords[i])) img[i] = Polynomial::variable(R, i) + Polynomial::constant(R, p.coords[i]);
  return f.substitute(img, R);
}

bool is_monic_in(const Polynomial& g, std::size_t var) {
  unsigned d = g.degree_in(var);
  const Term* top = nullptr;
  for (const auto& t : g.terms()) {
    if (t.m[var] != d) continue;
    if (top) return false;
    top = &t;
  }
  if (!top || !g.field().is_one(top->c)) return false;
  return top->m.degree() == d;
}

DivMod univ_divmod(const Polynomial& f, const Polynomial& g, std::string_view var_name) {
  if (f.ring() != g.ring()) throw DomainError("ring mismatch in division");
  std::size_t var = f.ring().index(var_name);
  if (g.is_zero() || !is_monic_in(g, var)) throw DomainError("divisor " + g.to_string() + " is not monic in " + std::string(var_name));
  unsigned d = g.degree_in(var);
  Polynomial q(f.ring()), r = f;
  while (!r.is_zero()) {
    unsigned D = r.degree_in(var);
    if (D < d) break;
    std::vector<Term> part;
    for (const auto& t : r.terms())
      if (t.m[var] == D) {
        Monomial m = t.m;
        m[var] -= d;
        part.push_back({m, t.c});
      }
    Polynomial step = Polynomial::from_terms(f.ring(), std::move(part));
    q += step;
    r -= step * g;
  }
  return {q, r};
}

std::vector<Polynomial> coefficients_in(const Polynomial& f, std::size_t var, const Ring& base) {
  const Ring& R = f.ring();
  if (base.nvars() + 1 != R.nvars()) throw DomainError("base ring must drop exactly one variable");
  std::vector<std::vector<Term>> parts(f.degree_in(var) + 1);
  for (const auto& t : f.terms()) {
    Monomial m;
    for (std::size_t i = 0, j = 0; i < R.nvars(); ++i) {
      if (i == var) continue;
      m[j++] = t.m[i];
    }
    parts[t.m[var]].push_back({m, t.c});
  }
  std::vector<Polynomial> out;
  for (auto& p : parts) out.push_back(Polynomial::from_terms(base, std::move(p)));
  return out;
}

Polynomial from_coefficients(const std::vector<Polynomial>& coeffs, const Ring& full, std::size_t var) {
  std::vector<Term> out;
  for (std::size_t e = 0; e < coeffs.size(); ++e)
    for (const auto& t : coeffs[e].terms()) {
      Monomial m;
      for (std::size_t i = 0, j = 0; i < full.nvars(); ++i) m[i] = i == var ? static_cast<std::uint32_t>(e) : t.m[j++];
      out.push_back({m, t.c});
    }
  return Polynomial::from_terms(full, std::move(out));
}

}  // namespace drees
