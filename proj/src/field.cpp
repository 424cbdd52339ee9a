#include "drees/field.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace drees {

namespace {

using u64 = std::uint64_t;
using Vec = std::vector<u64>;  // polynomial over F_p, low to high

u64 mulmod(u64 a, u64 b, u64 p) { return (a * b) % p; }

u64 powmod(u64 a, u64 e, u64 p) {
  u64 r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

u64 invmod(u64 a, u64 p) { return powmod(a, p - 2, p); }

void trim(Vec& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Vec pmul(const Vec& a, const Vec& b, u64 p) {
  if (a.empty() || b.empty()) return {};
  Vec r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + mulmod(a[i], b[j], p)) % p;
  trim(r);
  return r;
}

// Remainder of a modulo b (b nonzero).
Vec pmod(Vec a, const Vec& b, u64 p) {
  trim(a);
  u64 lead_inv = invmod(b.back(), p);
  while (a.size() >= b.size()) {
    u64 c = mulmod(a.back(), lead_inv, p);
    std::size_t shift = a.size() - b.size();
    for (std::size_t j = 0; j < b.size(); ++j)
      a[shift + j] = (a[shift + j] + p - mulmod(c, b[j], p)) % p;
    trim(a);
  }
  return a;
}

Vec pquot(Vec a, const Vec& b, u64 p, Vec* rem) {
  trim(a);
  Vec q;
  if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, 0);
  u64 lead_inv = invmod(b.back(), p);
  while (a.size() >= b.size()) {
    u64 c = mulmod(a.back(), lead_inv, p);
    std::size_t shift = a.size() - b.size();
    q[shift] = c;
    for (std::size_t j = 0; j < b.size(); ++j)
      a[shift + j] = (a[shift + j] + p - mulmod(c, b[j], p)) % p;
    trim(a);
  }
  trim(q);
  if (rem) *rem = a;
  return q;
}

Vec psub(const Vec& a, const Vec& b, u64 p) {
  Vec r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    u64 x = i < a.size() ? a[i] : 0;
    u64 y = i < b.size() ? b[i] : 0;
    r[i] = (x + p - y) % p;
  }
  trim(r);
  return r;
}

Vec pgcd(Vec a, Vec b, u64 p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Vec r = pmod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// x^(p^e) mod f
Vec frobenius_power(unsigned e, const Vec& f, u64 p) {
  Vec x{0, 1};
  Vec cur = pmod(x, f, p);
  for (unsigned i = 0; i < e; ++i) {
    Vec base = cur, r{1};
    u64 ee = p;
    while (ee) {
      if (ee & 1) r = pmod(pmul(r, base, p), f, p);
      base = pmod(pmul(base, base, p), f, p);
      ee >>= 1;
    }
    cur = r;
  }
  return cur;
}

bool rabin_irreducible(const Vec& f, u64 p) {
  unsigned k = static_cast<unsigned>(f.size() - 1);
  Vec x{0, 1};
  if (!psub(frobenius_power(k, f, p), pmod(x, f, p), p).empty()) return false;
  for (unsigned q = 2; q <= k; ++q) {
    if (k % q != 0 || !is_prime(q)) continue;
    Vec g = pgcd(f, psub(frobenius_power(k / q, f, p), x, p), p);
    if (g.size() > 1) return false;
  }
  return true;
}

bool trial_irreducible(const Vec& f, u64 p) {
  unsigned k = static_cast<unsigned>(f.size() - 1);
  for (unsigned d = 1; d <= k / 2; ++d) {
    u64 count = 1;
    for (unsigned i = 0; i < d; ++i) count *= p;
    for (u64 idx = 0; idx < count; ++idx) {
      Vec g(d + 1, 0);
      u64 v = idx;
      for (unsigned i = 0; i < d; ++i) {
        g[i] = v % p;
        v /= p;
      }
      g[d] = 1;
      if (pmod(f, g, p).empty()) return false;
    }
  }
  return true;
}

Vec to_vec(const Residues& r, unsigned k) {
  Vec v(r.begin(), r.begin() + k);
  trim(v);
  return v;
}

Residues from_vec(const Vec& v) {
  Residues r{};
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = static_cast<std::uint32_t>(v[i]);
  return r;
}

// Parses an integer-coefficient univariate like "t^2+t+1" in variable `name`.
std::vector<long long> parse_univariate(std::string_view s, std::string& name) {
  std::map<unsigned, long long> coef;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  };
  auto fail = [&](const std::string& msg) -> void {
    throw ParseError("bad modulus '" + std::string(s) + "': " + msg);
  };
  skip();
  if (i >= s.size()) fail("empty");
  while (i < s.size()) {
    long long sign = 1;
    skip();
    if (s[i] == '+' || s[i] == '-') {
      if (s[i] == '-') sign = -1;
      ++i;
      skip();
    }
    long long c = 1;
    bool have_num = false;
    if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      c = 0;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) c = c * 10 + (s[i++] - '0');
      have_num = true;
      skip();
      if (i < s.size() && s[i] == '*') {
        ++i;
        skip();
      } else {
        coef[0] += sign * c;
        skip();
        continue;
      }
    }
    if (i >= s.size() || !std::isalpha(static_cast<unsigned char>(s[i]))) fail("expected generator");
    std::string id;
    while (i < s.size() && std::isalnum(static_cast<unsigned char>(s[i]))) id += s[i++];
    if (name.empty()) name = id;
    if (id != name) fail("mixed generator names");
    unsigned e = 1;
    skip();
    if (i < s.size() && s[i] == '^') {
      ++i;
      skip();
      if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i]))) fail("bad exponent");
      e = 0;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) e = e * 10 + (s[i++] - '0');
    }
    (void)have_num;
    coef[e] += sign * c;
    skip();
  }
  unsigned deg = coef.rbegin()->first;
  std::vector<long long> out(deg + 1, 0);
  for (auto& [e, c] : coef) out[e] = c;
  return out;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

bool is_irreducible_mod_p(const std::vector<std::uint32_t>& f, std::uint32_t p) {
  Vec v(f.begin(), f.end());
  trim(v);
  if (v.size() < 2) return false;
  if (v.size() == 2) return true;
  unsigned half = static_cast<unsigned>(v.size() - 1) / 2;
  double search = 1;
  for (unsigned i = 0; i < half; ++i) search *= p;
  // Exhaustive trial division when the search space is small, Rabin's test otherwise.
  return search <= 1e6 ? trial_irreducible(v, p) : rabin_irreducible(v, p);
}

std::vector<std::uint32_t> default_modulus(std::uint32_t p, unsigned k) {
  static const std::map<std::pair<std::uint32_t, unsigned>, std::vector<std::uint32_t>> builtin = {
      {{2, 2}, {1, 1, 1}},    {{2, 3}, {1, 1, 0, 1}}, {{2, 4}, {1, 1, 0, 0, 1}},
      {{3, 2}, {1, 0, 1}},    {{3, 3}, {1, 2, 0, 1}}, {{5, 2}, {2, 1, 1}},
      {{7, 2}, {1, 0, 1}},
  };
  if (auto it = builtin.find({p, k}); it != builtin.end()) return it->second;
  for (u64 idx = 1;; ++idx) {
    std::vector<std::uint32_t> f(k + 1, 0);
    u64 v = idx;
    for (unsigned i = 0; i < k; ++i) {
      f[i] = static_cast<std::uint32_t>(v % p);
      v /= p;
    }
    f[k] = 1;
    if (f[0] != 0 && is_irreducible_mod_p(f, p)) return f;
  }
}

Field::Field() : d_(std::make_shared<FieldDescriptor>()) {}

Field Field::rationals() { return Field(); }

Field Field::prime(std::uint32_t p) {
  if (!is_prime(p) || p >= (1u << 31)) throw DomainError("F" + std::to_string(p) + ": not a prime below 2^31");
  auto d = std::make_shared<FieldDescriptor>();
  d->characteristic = p;
  return Field(d);
}

Field Field::extension(std::uint32_t p, std::vector<std::uint32_t> modulus, std::string generator) {
  if (!is_prime(p) || p >= (1u << 31)) throw DomainError("characteristic " + std::to_string(p) + " is not a prime below 2^31");
  for (auto& c : modulus) c %= p;
  while (!modulus.empty() && modulus.back() == 0) modulus.pop_back();
  if (modulus.size() < 2) throw DomainError("modulus must have degree >= 1");
  unsigned k = static_cast<unsigned>(modulus.size() - 1);
  if (k == 1) return prime(p);
  if (k > 4) throw DomainError("extension degree above 4 is not supported");
  if (modulus.back() != 1) throw DomainError("modulus must be monic");
  if (!is_irreducible_mod_p(modulus, p)) throw DomainError("modulus is reducible over F" + std::to_string(p));
  auto d = std::make_shared<FieldDescriptor>();
  d->characteristic = p;
  d->degree = k;
  d->modulus = std::move(modulus);
  d->generator = std::move(generator);
  return Field(d);
}

Field Field::parse(std::string_view spec) {
  auto strip = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  spec = strip(spec);
  if (spec == "Q" || spec == "QQ") return rationals();
  if (spec.size() < 2 || spec[0] != 'F') throw ParseError("bad field spec '" + std::string(spec) + "'");
  std::string_view head = spec.substr(1), tail;
  if (auto colon = spec.find(':'); colon != std::string_view::npos) {
    head = spec.substr(1, colon - 1);
    tail = strip(spec.substr(colon + 1));
  }
  head = strip(head);
  if (head.empty() || !std::all_of(head.begin(), head.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    throw ParseError("bad field size in '" + std::string(spec) + "'");
  if (head.size() > 19) throw DomainError("field size too large");
  u64 q = std::stoull(std::string(head));
  u64 p = 0;
  for (u64 d = 2; d * d <= q; ++d)
    if (q % d == 0) {
      p = d;
      break;
    }
  if (p == 0) p = q;
  unsigned k = 0;
  u64 r = q;
  while (r % p == 0) {
    r /= p;
    ++k;
  }
  if (q < 2 || r != 1) throw DomainError("F" + std::to_string(q) + ": not a prime power");
  if (p >= (1ull << 31)) throw DomainError("characteristic must be below 2^31");
  if (k == 1) {
    if (!tail.empty()) throw ParseError("modulus given for a prime field");
    return prime(static_cast<std::uint32_t>(p));
  }
  if (k > 4) throw DomainError("extension degree above 4 is not supported");
  if (tail.empty()) return extension(static_cast<std::uint32_t>(p), default_modulus(static_cast<std::uint32_t>(p), k));
  std::string name;
  auto coeffs = parse_univariate(tail, name);
  std::vector<std::uint32_t> mod(coeffs.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    long long c = coeffs[i] % static_cast<long long>(p);
    if (c < 0) c += static_cast<long long>(p);
    mod[i] = static_cast<std::uint32_t>(c);
  }
  while (!mod.empty() && mod.back() == 0) mod.pop_back();
  if (mod.size() != k + 1) throw DomainError("modulus degree does not match F" + std::to_string(q));
  return extension(static_cast<std::uint32_t>(p), mod, name);
}

std::uint64_t Field::size() const {
  if (!finite()) throw DomainError("Q is infinite");
  u64 q = 1;
  for (unsigned i = 0; i < degree(); ++i) q *= characteristic();
  return q;
}

std::string Field::spec() const {
  if (!finite()) return "Q";
  std::string s = "F" + std::to_string(size());
  if (degree() > 1) {
    const auto& m = d_->modulus;
    std::string poly;
    for (int i = static_cast<int>(m.size()) - 1; i >= 0; --i) {
      if (m[i] == 0) continue;
      if (!poly.empty()) poly += "+";
      if (i == 0) {
        poly += std::to_string(m[i]);
        continue;
      }
      if (m[i] != 1) poly += std::to_string(m[i]) + "*";
      poly += d_->generator;
      if (i > 1) poly += "^" + std::to_string(i);
    }
    s += ":" + poly;
  }
  return s;
}

bool Field::operator==(const Field& o) const {
  if (d_ == o.d_) return true;
  return d_->characteristic == o.d_->characteristic && d_->degree == o.d_->degree &&
         d_->modulus == o.d_->modulus;
}

Scalar Field::zero() const {
  if (!finite()) return mpq_class(0);
  return Residues{};
}

Scalar Field::one() const { return from_int(1); }

Scalar Field::from_int(long v) const {
  if (!finite()) return mpq_class(v);
  long p = characteristic();
  long r = v % p;
  if (r < 0) r += p;
  Residues out{};
  out[0] = static_cast<std::uint32_t>(r);
  return out;
}

Scalar Field::from_mpz(const mpz_class& v) const {
  if (!finite()) return mpq_class(v);
  mpz_class r = v % characteristic();
  if (r < 0) r += characteristic();
  Residues out{};
  out[0] = static_cast<std::uint32_t>(r.get_ui());
  return out;
}

Scalar Field::from_rational(const mpq_class& in) const {
  mpq_class v = in;
  v.canonicalize();
  if (!finite()) return v;
  Scalar den = from_mpz(v.get_den());
  if (is_zero(den)) throw DomainError("denominator vanishes in characteristic " + std::to_string(characteristic()));
  return div(from_mpz(v.get_num()), den);
}

Scalar Field::gen() const {
  if (degree() < 2) throw DomainError("field has no extension generator");
  Residues r{};
  r[1] = 1;
  return r;
}

bool Field::is_zero(const Scalar& a) const {
  if (!finite()) return sgn(std::get<mpq_class>(a)) == 0;
  const auto& r = std::get<Residues>(a);
  return r[0] == 0 && r[1] == 0 && r[2] == 0 && r[3] == 0;
}

bool Field::is_one(const Scalar& a) const {
  if (!finite()) return std::get<mpq_class>(a) == 1;
  const auto& r = std::get<Residues>(a);
  return r[0] == 1 && r[1] == 0 && r[2] == 0 && r[3] == 0;
}

bool Field::equal(const Scalar& a, const Scalar& b) const {
  if (!finite()) return std::get<mpq_class>(a) == std::get<mpq_class>(b);
  return std::get<Residues>(a) == std::get<Residues>(b);
}

Scalar Field::add(const Scalar& a, const Scalar& b) const {
  if (!finite()) return mpq_class(std::get<mpq_class>(a) + std::get<mpq_class>(b));
  const auto& x = std::get<Residues>(a);
  const auto& y = std::get<Residues>(b);
  u64 p = characteristic();
  Residues r{};
  for (unsigned i = 0; i < degree(); ++i) r[i] = static_cast<std::uint32_t>((u64(x[i]) + y[i]) % p);
  return r;
}

Scalar Field::sub(const Scalar& a, const Scalar& b) const {
  if (!finite()) return mpq_class(std::get<mpq_class>(a) - std::get<mpq_class>(b));
  const auto& x = std::get<Residues>(a);
  const auto& y = std::get<Residues>(b);
  u64 p = characteristic();
  Residues r{};
  for (unsigned i = 0; i < degree(); ++i) r[i] = static_cast<std::uint32_t>((u64(x[i]) + p - y[i]) % p);
  return r;
}

Scalar Field::neg(const Scalar& a) const {
  if (!finite()) return mpq_class(-std::get<mpq_class>(a));
  const auto& x = std::get<Residues>(a);
  u64 p = characteristic();
  Residues r{};
  for (unsigned i = 0; i < degree(); ++i) r[i] = static_cast<std::uint32_t>((p - x[i]) % p);
  return r;
}

Scalar Field::mul(const Scalar& a, const Scalar& b) const {
  if (!finite()) return mpq_class(std::get<mpq_class>(a) * std::get<mpq_class>(b));
  const auto& x = std::get<Residues>(a);
  const auto& y = std::get<Residues>(b);
  u64 p = characteristic();
  unsigned k = degree();
  if (k == 1) {
    Residues r{};
    r[0] = static_cast<std::uint32_t>(mulmod(x[0], y[0], p));
    return r;
  }
  u64 prod[7] = {0, 0, 0, 0, 0, 0, 0};
  for (unsigned i = 0; i < k; ++i)
    for (unsigned j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + mulmod(x[i], y[j], p)) % p;
  const auto& m = d_->modulus;
  for (int i = 2 * static_cast<int>(k) - 2; i >= static_cast<int>(k); --i) {
    u64 c = prod[i];
    if (c == 0) continue;
    prod[i] = 0;
    for (unsigned j = 0; j < k; ++j) prod[i - k + j] = (prod[i - k + j] + p - mulmod(c, m[j], p)) % p;
  }
  Residues r{};
  for (unsigned i = 0; i < k; ++i) r[i] = static_cast<std::uint32_t>(prod[i]);
  return r;
}

Scalar Field::inv(const Scalar& a) const {
  if (is_zero(a)) throw DomainError("division by zero");
  if (!finite()) return mpq_class(1 / std::get<mpq_class>(a));
  u64 p = characteristic();
  const auto& x = std::get<Residues>(a);
  if (degree() == 1) {
    Residues r{};
    r[0] = static_cast<std::uint32_t>(invmod(x[0], p));
    return r;
  }
  // Extended Euclid: s*a + t*m = g with g a nonzero constant.
  Vec m(d_->modulus.begin(), d_->modulus.end());
  Vec r0 = m, r1 = to_vec(x, degree());
  Vec s0{}, s1{1};
  while (r1.size() > 1) {
    Vec rem;
    Vec q = pquot(r0, r1, p, &rem);
    Vec s2 = psub(s0, pmul(q, s1, p), p);
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  u64 c = invmod(r1[0], p);
  Vec out = pmod(s1, m, p);
  for (auto& v : out) v = mulmod(v, c, p);
  return from_vec(out);
}

Scalar Field::div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }

Scalar Field::pow(const Scalar& a, std::uint64_t e) const {
  Scalar r = one(), base = a;
  while (e) {
    if (e & 1) r = mul(r, base);
    e >>= 1;
    if (e) base = mul(base, base);
  }
  return r;
}

Scalar Field::pth_root(const Scalar& a) const {
  if (!finite()) throw DomainError("p-th root needs positive characteristic");
  // Frobenius has order k, so its inverse is a -> a^(p^(k-1)).
  Scalar r = a;
  for (unsigned i = 1; i < degree(); ++i) r = pow(r, characteristic());
  return r;
}

Scalar Field::element_at(std::uint64_t index) const {
  if (!finite()) throw DomainError("Q is infinite");
  Residues r{};
  for (unsigned i = 0; i < degree(); ++i) {
    r[i] = static_cast<std::uint32_t>(index % characteristic());
    index /= characteristic();
  }
  return r;
}

std::vector<FieldElement> Field::elements() const {
  u64 q = size();
  std::vector<FieldElement> out;
  out.reserve(q);
  for (u64 i = 0; i < q; ++i) out.emplace_back(*this, element_at(i));
  return out;
}

std::string Field::to_string(const Scalar& a) const {
  if (!finite()) return std::get<mpq_class>(a).get_str();
  const auto& r = std::get<Residues>(a);
  if (degree() == 1) return std::to_string(r[0]);
  std::string s;
  for (int i = static_cast<int>(degree()) - 1; i >= 0; --i) {
    if (r[i] == 0) continue;
    if (!s.empty()) s += "+";
    if (i == 0) {
      s += std::to_string(r[i]);
      continue;
    }
    if (r[i] != 1) s += std::to_string(r[i]) + "*";
    s += d_->generator;
    if (i > 1) s += "^" + std::to_string(i);
  }
  return s.empty() ? "0" : s;
}

bool Field::is_compound(const Scalar& a) const {
  if (!finite() || degree() == 1) return false;
  const auto& r = std::get<Residues>(a);
  int nz = 0;
  for (unsigned i = 0; i < degree(); ++i) nz += r[i] != 0;
  return nz > 1;
}

bool Field::is_negative_literal(const Scalar& a) const {
  return !finite() && sgn(std::get<mpq_class>(a)) < 0;
}

void FieldElement::check(const FieldElement& o) const {
  if (field_ != o.field_) throw DomainError("field mismatch: " + field_.spec() + " vs " + o.field_.spec());
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  check(o);
  return {field_, field_.add(v_, o.v_)};
}
FieldElement FieldElement::operator-(const FieldElement& o) const {
  check(o);
  return {field_, field_.sub(v_, o.v_)};
}
FieldElement FieldElement::operator*(const FieldElement& o) const {
  check(o);
  return {field_, field_.mul(v_, o.v_)};
}
FieldElement FieldElement::operator/(const FieldElement& o) const {
  check(o);
  return {field_, field_.div(v_, o.v_)};
}
bool FieldElement::operator==(const FieldElement& o) const {
  return field_ == o.field_ && field_.equal(v_, o.v_);
}

FieldElement field_arith(const FieldElement& a, const FieldElement& b, ArithOp op) {
  switch (op) {
    case ArithOp::Add: return a + b;
    case ArithOp::Sub: return a - b;
    case ArithOp::Mul: return a * b;
    case ArithOp::Div: return a / b;
  }
  throw DomainError("unknown op");
}

}  // namespace drees
