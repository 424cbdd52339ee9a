#include "drees/ramify.hpp"

#include <sstream>

namespace drees {

MonicInput MonicInput::make(const Ring& ring, const std::string& var, std::vector<Polynomial> factors) {
  std::size_t z = ring.index(var);
  if (factors.empty()) throw DomainError("no factors given");
  for (const auto& f : factors) {
    if (f.ring() != ring) throw DomainError("factor outside the input ring");
    if (f.degree_in(z) == 0 || !is_monic_in(f, z))
      throw DomainError("factor " + f.to_string() + " is not monic of positive degree in " + var);
  }
  return {ring, var, std::move(factors)};
}

std::vector<unsigned> MonicInput::degrees() const {
  std::vector<unsigned> d;
  for (const auto& f : factors) d.push_back(f.degree_in(var));
  return d;
}

unsigned MonicInput::total_degree() const {
  unsigned b = 0;
  for (auto d : degrees()) b += d;
  return b;
}

Polynomial MonicInput::product() const {
  Polynomial p = Polynomial::constant(ring, 1);
  for (const auto& f : factors) p *= f;
  return p;
}

Polynomial change_field(const Polynomial& f, const Ring& target) {
  if (f.ring().vars() != target.vars()) throw DomainError("field change must keep the variables");
  const Field& from = f.field();
  const Field& to = target.field();
  if (from == to) return f.embed(target);
  bool prime_into_ext = from.finite() && from.degree() == 1 && from.characteristic() == to.characteristic();
  if (from.finite() && !prime_into_ext)
    throw DomainError("coefficients can only be carried from Q, the prime field or the same field");
  std::vector<Term> out;
  for (const auto& t : f.terms())
    out.push_back({t.m, prime_into_ext ? to.from_int(from.residues(t.c)[0]) : to.from_rational(from.rational(t.c))});
  return Polynomial::from_terms(target, std::move(out));
}

MonicInput MonicInput::over(const Field& field) const {
  Ring r(field, ring.vars());
  std::vector<Polynomial> fs;
  for (const auto& f : factors) fs.push_back(change_field(f, r));
  return make(r, var, std::move(fs));
}

bool purely_ramified_at(const MonicInput& input, const RationalPoint& P) {
  const Field& F = input.ring.field();
  if (!F.finite()) throw DomainError("purely-ramified test needs a finite field");
  Ring base = input.base();
  if (P.ring != base) throw DomainError("point must live in the base ring " + base.spec());
  Ring line(F, {input.var});
  std::size_t z = input.ring.index(input.var);
  std::vector<std::optional<Polynomial>> img(input.ring.nvars());
  for (std::size_t i = 0, j = 0; i < input.ring.nvars(); ++i) {
    if (i == z) continue;
    img[i] = Polynomial::constant(line, P.coords[j++]);
  }
  Polynomial prod = Polynomial::constant(line, 1);
  for (const auto& f : input.factors) prod *= f.substitute(img, line);
  return univ_radical(prod).degree_in(std::size_t(0)) == 1;
}

EliminationResult generalized_discriminants(const MonicInput& input) {
  ReesAlgebra G(input.ring);
  auto deg = input.degrees();
  for (std::size_t i = 0; i < input.factors.size(); ++i) G.add_unique(input.factors[i], deg[i]);
  ReesAlgebra sat = diff_saturate(G, {input.var});
  EliminationOptions opt;
  opt.check_transversal = false;
  return eliminate(sat, {input.factors[0], deg[0]}, input.var, opt);
}

RamificationReport verify_thm_1_16(const MonicInput& input, std::uint64_t budget) {
  const Field& F = input.ring.field();
  if (!F.finite()) throw DomainError("pointwise verification needs a finite field");
  Ring base = input.base();
  if (point_count(base) > budget) throw ResourceError("scan of " + base.spec() + " exceeds the point budget");
  EliminationResult disc = generalized_discriminants(input);
  RamificationReport rep;
  rep.field = F.spec();
  for_each_point(
      base,
      [&](const RationalPoint& p) {
        ++rep.points;
        bool ram = purely_ramified_at(input, p);
        bool van = true;  // the zero algebra vanishes everywhere
        for (const auto& g : disc.algebra.generators())
          if (!g.poly.evaluate(p).is_zero()) {
            van = false;
            break;
          }
        if (ram) rep.ramified.push_back(p);
        if (van) rep.vanishing.push_back(p);
        if (ram != van) rep.counterexamples.push_back(p);
        return true;
      },
      budget);
  rep.agreement = rep.counterexamples.empty();
  return rep;
}

RamificationReport verify_thm_1_16(const MonicInput& input, const Field& field, std::uint64_t budget) {
  return verify_thm_1_16(input.over(field), budget);
}

bool verify_thm_1_16_ii(const MonicInput& input, const RationalPoint& Q) {
  if (Q.ring != input.ring) throw DomainError("point must live in " + input.ring.spec());
  unsigned b = input.total_degree();
  Order o = order_at(input.product(), Q);
  if (o.is_infinite() || o.value() != b)
    throw DomainError("point " + Q.to_string() + " is not a " + std::to_string(b) + "-fold point");
  Ring base = input.base();
  std::size_t z = input.ring.index(input.var);
  RationalPoint proj{base, {}};
  for (std::size_t i = 0; i < Q.coords.size(); ++i)
    if (i != z) proj.coords.push_back(Q.coords[i]);
  EliminationResult disc = generalized_discriminants(input);
  for (const auto& g : disc.algebra.generators())
    if (!(order_at(g.poly, proj) >= g.weight)) return false;
  return true;
}

std::string RamificationReport::render() const {
  std::ostringstream os;
  auto list = [](const std::vector<RationalPoint>& pts) {
    std::string s;
    for (std::size_t i = 0; i < pts.size(); ++i) s += (i ? " " : "") + pts[i].to_string();
    return s.empty() ? std::string("-") : s;
  };
  os << "field:            " << field << "\n";
  os << "points scanned:   " << points << "\n";
  os << "purely ramified:  " << list(ramified) << "\n";
  os << "discriminant = 0: " << list(vanishing) << "\n";
  os << "counterexamples:  " << list(counterexamples) << "\n";
  os << "#! agreement: " << (agreement ? "true" : "false") << " points: " << points
     << " mismatches: " << counterexamples.size() << "\n";
  return os.str();
}

}  // namespace drees
