#include "drees/scenario.hpp"

#include <algorithm>
#include <exception>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <thread>

namespace drees {

bool ScenarioReport::check(std::string label, bool ok, std::string detail) {
  checks.push_back({std::move(label), ok, std::move(detail)});
  return ok;
}

std::size_t ScenarioReport::passed_count() const {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const auto& c) { return c.passed; }));
}

std::string ScenarioReport::render() const {
  std::ostringstream os;
  os << "scenario: " << name << " seed: " << seed << "\n";
  for (const auto& s : steps) os << "  " << s << "\n";
  for (const auto& c : checks) {
    os << (c.passed ? "[pass] " : "[FAIL] ") << c.label;
    if (!c.detail.empty()) os << ": " << c.detail;
    os << "\n";
  }
  os << "#! passed: " << passed_count() << "/" << checks.size() << "\n";
  return os.str();
}

namespace {

std::string str(const Rational& q) { return q.get_str(); }

RationalPoint origin_of(const ReesAlgebra& A) { return RationalPoint::origin(A.ring()); }

ReesAlgebra single(const Ring& r, const std::string& poly, unsigned w) {
  ReesAlgebra A(r);
  A.add(parse_polynomial(r, poly), w);
  return A;
}

// Same generator set up to order and units.
bool same_generators(const ReesAlgebra& A, const ReesAlgebra& B) {
  auto covered = [](const ReesAlgebra& X, const ReesAlgebra& Y) {
    for (const auto& g : X.generators()) {
      bool hit = false;
      for (const auto& h : Y.generators())
        if (h.weight == g.weight && h.poly.proportional(g.poly)) hit = true;
      if (!hit) return false;
    }
    return true;
  };
  return A.ring() == B.ring() && covered(A, B) && covered(B, A);
}

std::size_t index_of(const ReesAlgebra& A, const Polynomial& f, unsigned w) {
  for (std::size_t i = 0; i < A.size(); ++i)
    if (A.generators()[i].weight == w && A.generators()[i].poly == f) return i;
  throw DomainError("generator " + f.to_string() + " of weight " + std::to_string(w) + " not found");
}

ReesAlgebra substitute_all(const ReesAlgebra& A, const std::map<std::string, Polynomial>& images) {
  ReesAlgebra out(A.ring());
  for (const auto& g : A.generators()) out.add(g.poly.substitute(images), g.weight);
  return out;
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : g_(seed) {}
  std::uint64_t below(std::uint64_t n) { return g_() % n; }
  bool coin() { return below(2) == 1; }

 private:
  std::mt19937_64 g_;
};

Scalar random_scalar(const Field& F, Rng& rng, bool nonzero) {
  if (F.finite()) {
    std::uint64_t q = F.size();
    return F.element_at(nonzero ? 1 + rng.below(q - 1) : rng.below(q));
  }
  long v = static_cast<long>(rng.below(7)) - 3;
  if (nonzero && v == 0) v = 1;
  return F.from_int(v);
}

// Sum of up to `terms` random terms whose exponents satisfy `ok`.
Polynomial random_poly(const Ring& r, Rng& rng, unsigned terms, unsigned max_deg,
                       const std::function<bool(const Monomial&)>& ok) {
  Polynomial p(r);
  for (unsigned t = 0; t < terms; ++t) {
    for (int attempt = 0; attempt < 50; ++attempt) {
      Monomial m;
      for (std::size_t i = 0; i < r.nvars(); ++i) m.e[i] = static_cast<std::uint32_t>(rng.below(max_deg + 1));
      if (m.degree() > max_deg || !ok(m)) continue;
      p += Polynomial::monomial(r, m, random_scalar(r.field(), rng, true));
      break;
    }
  }
  return p;
}

// Evaluates fn(0..n-1) on a small thread pool; results keep index order.
template <typename T>
std::vector<T> parallel_map(std::size_t n, unsigned workers, const std::function<T(std::size_t)>& fn) {
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(n, 1)));
  std::vector<std::optional<T>> out(n);
  std::vector<std::exception_ptr> errs(n);
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w)
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < n; i += workers) {
        try {
          out[i] = fn(i);
        } catch (...) {
          errs[i] = std::current_exception();
        }
      }
    });
  for (auto& t : pool) t.join();
  std::vector<T> res;
  for (std::size_t i = 0; i < n; ++i) {
    if (errs[i]) std::rethrow_exception(errs[i]);
    res.push_back(std::move(*out[i]));
  }
  return res;
}

void ex6_9(ScenarioReport& rep) {
  Ring R = Ring::parse("Q[Y,Z]");
  ReesAlgebra G = diff_saturate(single(R, "Z^2+Y^5", 2));
  rep.step("saturate <(Z^2+Y^5)W^2>: " + G.to_string());
  rep.check("saturation contains 2ZW", G.contains(parse_polynomial(R, "2*Z"), 1));
  rep.check("saturation contains 5Y^4W", G.contains(parse_polynomial(R, "5*Y^4"), 1));
  ReesAlgebra S(R);
  S.add(parse_polynomial(R, "Z"), 1);
  S.add(parse_polynomial(R, "Y^4"), 1);
  ReesAlgebra RG = eliminate(S, {parse_polynomial(R, "Z"), 1}, "Z").algebra;
  rep.step("eliminate Z from {ZW, Y^4W} with f = Z: " + RG.to_string());
  Ring Ry = Ring::parse("Q[Y]");
  rep.check("R_G = <Y^4W>", same_generators(RG, single(Ry, "Y^4", 1)), RG.normalized().to_string());
  auto T = weighted_transform(S, {"Y", "Z"}, "Y");
  rep.step("transform at {Y,Z}, chart Y: " + T.algebra.to_string());
  Ring R1 = T.chart.ring;
  ReesAlgebra expect1(R1);
  expect1.add(parse_polynomial(R1, "Z1"), 1);
  expect1.add(parse_polynomial(R1, "Y^3"), 1);
  rep.check("G_1 = {Z1 W, Y^3 W}", same_generators(T.algebra, expect1), T.algebra.to_string());
  ReesAlgebra RG1 = eliminate(T.algebra, {parse_polynomial(R1, "Z1"), 1}, "Z1").algebra;
  ReesAlgebra RG_1 = weighted_transform(RG, {"Y"}, "Y").algebra;
  rep.step("R_{G_1} = " + RG1.to_string() + ", (R_G)_1 = " + RG_1.to_string());
  rep.check("R_{G_1} = <Y^3W>", same_generators(RG1, single(Ry, "Y^3", 1)));
  rep.check("R_{G_1} = (R_G)_1", same_generators(RG1, RG_1));
}

void ex6_10(ScenarioReport& rep) {
  Ring R = Ring::parse("F2[Y,Z]");
  ReesAlgebra G = diff_saturate(single(R, "Z^2+Y^5", 2));
  rep.step("saturate <(Z^2+Y^5)W^2>: " + G.to_string());
  rep.check("saturation contains Y^4W", G.contains(parse_polynomial(R, "Y^4"), 1));
  rep.check("e0 at the origin is 1", e0_invariant(G, origin_of(G)) == 1);
  ReesAlgebra S(R);
  S.add(parse_polynomial(R, "Y^4"), 1);
  Polynomial f = parse_polynomial(R, "Z^2+Y^5");
  S.add(f, 2);
  ReesAlgebra RG = eliminate(S, {f, 2}, "Z").algebra;
  rep.step("eliminate with f = Z^2+Y^5: " + RG.to_string());
  Ring Ry = Ring::parse("F2[Y]");
  rep.check("R_G = <Y^8W^2>", same_generators(RG, single(Ry, "Y^8", 2)));
  rep.check("R_G slope-equivalent to <Y^4W>", slope_equivalent(RG, single(Ry, "Y^4", 1)));
  auto T = weighted_transform(S, {"Y", "Z"}, "Y");
  rep.step("transform at {Y,Z}, chart Y: " + T.algebra.to_string());
  Ring R1 = T.chart.ring;
  ReesAlgebra expect1(R1);
  expect1.add(parse_polynomial(R1, "Y^3"), 1);
  Polynomial f1 = parse_polynomial(R1, "Z1^2+Y^3");
  expect1.add(f1, 2);
  rep.check("G_1 = {Y^3W, (Z1^2+Y^3)W^2}", same_generators(T.algebra, expect1), T.algebra.to_string());
  ReesAlgebra RG_1 = weighted_transform(RG, {"Y"}, "Y").algebra;
  ReesAlgebra G1s = diff_saturate(T.algebra);
  ReesAlgebra RGp1 = eliminate(G1s, {f1, 2}, "Z1").algebra;
  rep.step("(R_G)_1 = " + RG_1.to_string() + ", R_{G'_1} = " + RGp1.to_string());
  rep.check("(R_G)_1 slope-equivalent to <Y^3W>", slope_equivalent(RG_1, single(Ry, "Y^3", 1)),
            "slope " + str(monomial_slope(RG_1)));
  rep.check("R_{G'_1} slope-equivalent to <Y^2W>", slope_equivalent(RGp1, single(Ry, "Y^2", 1)),
            "slope " + str(monomial_slope(RGp1)));
  rep.check("(R_G)_1 and R_{G'_1} are not slope-equivalent", !slope_equivalent(RG_1, RGp1));
}

void ex5_14(ScenarioReport& rep) {
  Ring R = Ring::parse("F2[X,Y]");
  ReesAlgebra G = diff_saturate(single(R, "X^4+X^2*Y^5", 4));
  RationalPoint O = origin_of(G);
  rep.step("saturate <(X^4+X^2*Y^5)W^4>: " + G.to_string());
  std::string orders;
  for (unsigned k = 1; k <= 4; ++k) orders += (k > 1 ? " " : "") + component_order(G, k, O).to_string();
  rep.step("orders of I_1..I_4 at the origin: " + orders);
  rep.check("I_4 has order 4", component_order(G, 4, O).value() == 4);
  for (unsigned i = 1; i <= 3; ++i) {
    Order o = component_order(G, i, O);
    rep.check("I_" + std::to_string(i) + " does not have order " + std::to_string(i),
              o.is_infinite() || o.value() != i, o.to_string());
  }
  unsigned e0 = e0_invariant(G, O);
  rep.check("e0 at the origin is 2", e0 == 2, std::to_string(e0));
  ReesAlgebra H = G;
  H.add(parse_polynomial(R, "X"), 1);
  H.add(parse_polynomial(R, "X^2+Y^5"), 2);
  H = diff_saturate(H);
  rep.step("adjoin XW and (X^2+Y^5)W^2, saturate: " + H.to_string());
  unsigned e0h = e0_invariant(H, O);
  rep.check("e0 after adjoining is 0", e0h == 0, std::to_string(e0h));
}

void ex6_11(ScenarioReport& rep) {
  Ring R = Ring::parse("F3[X,Z]");
  Polynomial f = parse_polynomial(R, "Z^3+X^13*Z+X^16");
  ReesAlgebra G = diff_saturate(ReesAlgebra(R, {{f, 3}}));
  rep.check("e0 at the origin is 1", e0_invariant(G, origin_of(G)) == 1);
  CurveRun run = follow_curve(f, "X", "Z", Field::parse("F9"));
  for (const auto& st : run.stages)
    rep.step("i=" + std::to_string(st.index) + " (" + st.reached_by + ") f=" + st.f.to_string() +
             " ord (R_G)_i=" + str(st.projected_ord) + " ord R_{G'_i}=" + str(st.eliminated_ord) +
             (st.agree() ? " agree" : " differ"));
  for (const auto& o : run.obstructions) rep.step("obstruction: " + o);
  rep.check("every center rational over F3", run.obstructions.empty());
  rep.check("no multiplicity-3 point left", run.resolved);
  rep.check("five quadratic transforms", run.transforms == 5, std::to_string(run.transforms));
  for (unsigned i = 0; i < 5; ++i) {
    bool want = i < 2;
    if (i >= run.stages.size()) {
      rep.check("stage " + std::to_string(i) + " reached", false);
      continue;
    }
    const auto& st = run.stages[i];
    rep.check(std::string("i=") + std::to_string(i) + (want ? " slopes agree" : " slopes differ"), st.agree() == want,
              str(st.projected_ord) + " vs " + str(st.eliminated_ord));
  }
}

MonicInput random_monic(Rng& rng) {
  static const char* bases[][3] = {{"F3", "x", ""}, {"F5", "x", ""}, {"F2", "x", "y"}, {"F4", "x", ""}};
  const auto& b = bases[rng.below(4)];
  std::vector<std::string> vars{b[1]};
  if (*b[2]) vars.push_back(b[2]);
  vars.push_back("Z");
  Ring R(Field::parse(b[0]), vars);
  Ring S = R.without("Z");
  std::size_t z = R.index("Z");
  Polynomial Zp = Polynomial::variable(R, z);
  unsigned total = 1 + static_cast<unsigned>(rng.below(4));
  std::vector<unsigned> degs{total};
  if (total >= 2 && rng.coin()) {
    unsigned c1 = 1 + static_cast<unsigned>(rng.below(total - 1));
    degs = {c1, total - c1};
  }
  auto base_poly = [&](unsigned terms) {
    return random_poly(S, rng, terms, 2, [](const Monomial&) { return true; }).embed(R);
  };
  std::vector<Polynomial> factors;
  for (unsigned c : degs) {
    Polynomial g(R);
    if (rng.coin()) {
      // (Z - r)^c plus a perturbation vanishing somewhere: many ramified fibers.
      Polynomial shift = Zp - base_poly(1 + rng.below(2));
      g = shift.pow(c);
      if (c > 1 && rng.coin()) g += base_poly(1) * base_poly(1) * Zp.pow(static_cast<unsigned>(rng.below(c)));
    } else {
      g = Zp.pow(c);
      for (unsigned j = 0; j < c; ++j) g += base_poly(static_cast<unsigned>(rng.below(3))) * Zp.pow(j);
    }
    factors.push_back(g);
  }
  return MonicInput::make(R, "Z", factors);
}

void thm1_16_random(ScenarioReport& rep, unsigned workers) {
  constexpr std::size_t kInstances = 60;
  Rng rng(rep.seed);
  std::vector<MonicInput> inputs;
  for (std::size_t i = 0; i < kInstances; ++i) inputs.push_back(random_monic(rng));
  auto reports = parallel_map<RamificationReport>(inputs.size(), workers,
                                                  [&](std::size_t i) { return verify_thm_1_16(inputs[i]); });
  std::size_t mismatches = 0, points = 0;
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    std::string fs;
    for (const auto& f : inputs[i].factors) fs += "(" + f.to_string() + ")";
    rep.step(inputs[i].ring.spec() + " " + fs + ": " + std::to_string(reports[i].ramified.size()) + " ramified of " +
             std::to_string(reports[i].points) + ", mismatches " + std::to_string(reports[i].counterexamples.size()));
    mismatches += reports[i].counterexamples.size();
    points += reports[i].points;
  }
  rep.check("ramified locus equals discriminant locus on every instance", mismatches == 0,
            std::to_string(inputs.size()) + " inputs, " + std::to_string(points) + " points, " +
                std::to_string(mismatches) + " mismatches");
}

struct ShearCase {
  ReesAlgebra G;
  Polynomial f;
  unsigned b;
};

std::optional<ShearCase> random_shear_case(Rng& rng) {
  static const char* fields[] = {"Q", "F2", "F3"};
  Ring R(Field::parse(fields[rng.below(3)]), {"X", "Y", "Z"});
  unsigned b = 2 + static_cast<unsigned>(rng.below(2));
  Polynomial f = Polynomial::variable(R, 2).pow(b);
  f += random_poly(R, rng, 1 + static_cast<unsigned>(rng.below(3)), b + 4,
                   [b](const Monomial& m) { return m.e[2] < b && m.degree() >= b; });
  ReesAlgebra G(R);
  G.add(f, b);
  if (rng.coin()) {
    unsigned m = 1 + static_cast<unsigned>(rng.below(2));
    Polynomial g = random_poly(R, rng, 1 + static_cast<unsigned>(rng.below(2)), m + 3,
                               [m](const Monomial& mm) { return mm.e[2] == 0 && mm.degree() >= m + 1; });
    if (!g.is_zero()) G.add(g, m);
  }
  G = diff_saturate(G);
  GroebnerBasis J = buchberger(singular_ideal(G));
  if (zero_set_dimension(J) > 1) return std::nullopt;
  return ShearCase{G, f, b};
}

// Orders at the image of the origin: direct, Z-shears, and base shears that keep f monic.
struct ShearOutcome {
  Rational direct;
  std::vector<std::pair<std::string, Rational>> others;
};

ShearOutcome shear_orders(const ShearCase& c) {
  const Ring& R = c.G.ring();
  Polynomial X = Polynomial::variable(R, 0), Y = Polynomial::variable(R, 1), Z = Polynomial::variable(R, 2);
  auto elim_ord = [&](const ReesAlgebra& G, const Polynomial& f) {
    EliminationResult e = eliminate(diff_saturate(G), {f, c.b}, "Z");
    return ord_at_point(e.algebra, RationalPoint::origin(e.base));
  };
  ShearOutcome out{elim_ord(c.G, c.f), {}};
  for (long lam = 1; lam <= 2; ++lam) {
    Polynomial l = Polynomial::constant(R, lam);
    std::map<std::string, Polynomial> zs{{"Z", Z + l * X}};
    out.others.push_back({"Z->Z+" + std::to_string(lam) + "X", elim_ord(substitute_all(c.G, zs), c.f.substitute(zs))});
    for (const char* v : {"X", "Y"}) {
      Polynomial V = std::string(v) == "X" ? X : Y;
      std::map<std::string, Polynomial> bs{{v, V + l * Z}};
      Polynomial g = c.f.substitute(bs);
      auto coeffs = coefficients_in(g, 2, R.without("Z"));
      if (g.degree_in(std::size_t(2)) != c.b || !coeffs.back().is_constant() || coeffs.back().is_zero()) continue;
      Scalar lead = coeffs.back().lc();
      g = g.scale(R.field().inv(lead));
      out.others.push_back({std::string(v) + "->" + v + "+" + std::to_string(lam) + "Z",
                            elim_ord(substitute_all(c.G, bs), g)});
    }
  }
  return out;
}

void thm5_5_random(ScenarioReport& rep, unsigned workers) {
  constexpr std::size_t kInstances = 12;
  Rng rng(rep.seed);
  std::vector<ShearCase> cases;
  for (int tries = 0; cases.size() < kInstances && tries < 500; ++tries)
    if (auto c = random_shear_case(rng)) cases.push_back(*c);
  auto outs = parallel_map<ShearOutcome>(cases.size(), workers, [&](std::size_t i) { return shear_orders(cases[i]); });
  std::size_t bad = 0, comparisons = 0;
  for (std::size_t i = 0; i < cases.size(); ++i) {
    std::string line = cases[i].G.ring().spec() + " f=" + cases[i].f.to_string() + " ord " + str(outs[i].direct);
    for (const auto& [label, o] : outs[i].others) {
      line += ", " + label + ": " + str(o);
      ++comparisons;
      if (o != outs[i].direct) ++bad;
    }
    rep.step(line);
  }
  rep.check("enough simple instances with singular locus of codimension >= 2", cases.size() == kInstances,
            std::to_string(cases.size()));
  rep.check("ord of the elimination algebra does not depend on the projection", bad == 0,
            std::to_string(comparisons) + " comparisons, " + std::to_string(bad) + " differ");
}

struct GiraudCase {
  ReesAlgebra G;
  std::vector<std::string> center;
  std::string chart;
};

GiraudCase random_giraud_case(Rng& rng) {
  static const char* fields[] = {"Q", "F2", "F3"};
  bool three = rng.coin();
  std::vector<std::string> vars = three ? std::vector<std::string>{"X", "Y", "Z"} : std::vector<std::string>{"Y", "Z"};
  Ring R(Field::parse(fields[rng.below(3)]), vars);
  std::vector<std::string> center = vars;
  if (three && rng.coin()) center = {"Y", "Z"};
  std::vector<std::size_t> cidx;
  for (const auto& c : center) cidx.push_back(R.index(c));
  ReesAlgebra G(R);
  unsigned ngen = 1 + static_cast<unsigned>(rng.below(2));
  for (unsigned k = 0; k < ngen; ++k) {
    unsigned n = 1 + static_cast<unsigned>(rng.below(3));
    Polynomial g = random_poly(R, rng, 1 + static_cast<unsigned>(rng.below(3)), n + 2, [&](const Monomial& m) {
      unsigned d = 0;
      for (auto i : cidx) d += m.e[i];
      return d >= n;
    });
    if (g.is_zero()) g = Polynomial::variable(R, cidx[0]).pow(n);
    G.add(g, n);
  }
  return {G, center, center[rng.below(center.size())]};
}

struct GiraudOutcome {
  unsigned kmax = 0;
  unsigned equal = 0;
};

GiraudOutcome giraud_compare(const GiraudCase& c) {
  ReesAlgebra G1 = diff_saturate(weighted_transform(c.G, c.center, c.chart).algebra);
  ReesAlgebra H1 = diff_saturate(weighted_transform(diff_saturate(c.G), c.center, c.chart).algebra);
  GiraudOutcome out{c.G.max_weight(), 0};
  for (unsigned k = 1; k <= out.kmax; ++k)
    if (ideal_equal(degree_ideal(G1, k), degree_ideal(H1, k))) ++out.equal;
  return out;
}

void thm6_6_random(ScenarioReport& rep, unsigned workers) {
  constexpr std::size_t kInstances = 12;
  Rng rng(rep.seed);
  std::vector<GiraudCase> cases;
  for (std::size_t i = 0; i < kInstances; ++i) cases.push_back(random_giraud_case(rng));
  auto outs = parallel_map<GiraudOutcome>(cases.size(), workers, [&](std::size_t i) { return giraud_compare(cases[i]); });
  std::size_t bad = 0;
  for (std::size_t i = 0; i < cases.size(); ++i) {
    std::string center;
    for (const auto& v : cases[i].center) center += (center.empty() ? "" : ",") + v;
    rep.step(cases[i].G.ring().spec() + " " + cases[i].G.to_string() + " center {" + center + "} chart " +
             cases[i].chart + ": " + std::to_string(outs[i].equal) + "/" + std::to_string(outs[i].kmax) +
             " degrees equal");
    if (outs[i].equal != outs[i].kmax) ++bad;
  }
  rep.check("transforms of G and of its saturation span the same algebra degreewise", bad == 0,
            std::to_string(cases.size()) + " instances, " + std::to_string(bad) + " differ");
}

}  // namespace

CurveRun follow_curve(const Polynomial& f0, const std::string& x, const std::string& var,
                      const std::optional<Field>& probe_field, unsigned max_steps) {
  const Ring& R0 = f0.ring();
  if (R0.nvars() != 2) throw DomainError("curve tracking needs a ring in two variables, got " + R0.spec());
  R0.index(x);
  const std::size_t zi = R0.index(var);
  const unsigned b = f0.degree_in(zi);
  const Field& F = R0.field();
  if (!F.finite()) throw DomainError("curve tracking scans rational points and needs a finite field");
  ReesAlgebra G = diff_saturate(ReesAlgebra(R0, {{f0, b}}));
  const std::size_t fat = index_of(G, f0, b);
  ReesAlgebra base = eliminate(G, {f0, b}, var).algebra;

  CurveRun run;
  std::string z = var;
  Polynomial f = f0;
  std::string via = "start";
  for (unsigned i = 0;; ++i) {
    EliminationResult e = eliminate(diff_saturate(G), {f, b}, z);
    run.stages.push_back({i, f, z, via, ord_at_point(base, origin_of(base)), ord_at_point(e.algebra, origin_of(e.algebra))});
    if (i == max_steps) {
      run.obstructions.push_back("step limit of " + std::to_string(max_steps) + " reached");
      break;
    }
    TransformResult tx = weighted_transform(G, {x, z}, x);
    TransformResult tz = weighted_transform(G, {x, z}, z);
    ++run.transforms;
    const Ring& Rx = tx.chart.ring;
    const std::string zx = Rx.vars()[zi];
    Polynomial fx = tx.algebra.generators()[fat].poly;
    Polynomial fz = tz.algebra.generators()[fat].poly;
    auto on_line = [&](const Ring& ring, const Scalar& a) {
      RationalPoint p = RationalPoint::origin(ring);
      p.coords[zi] = a;
      return p;
    };
    auto heavy = [&](const Polynomial& g, const RationalPoint& p) {
      Order o = order_at(g, p);
      return o.is_infinite() || o.value() >= b;
    };
    std::vector<RationalPoint> hits;
    for (const auto& a : F.elements())
      if (heavy(fx, on_line(Rx, a.value()))) hits.push_back(on_line(Rx, a.value()));
    bool z_origin = heavy(fz, RationalPoint::origin(tz.chart.ring));
    if (probe_field) {
      Ring P(*probe_field, Rx.vars());
      Polynomial fp = change_field(fx, P);
      std::size_t n = 0;
      for (const auto& a : probe_field->elements())
        if (heavy(fp, on_line(P, a.value()))) ++n;
      if (n > hits.size()) {
        run.obstructions.push_back("after transform " + std::to_string(i + 1) + ": " + std::to_string(n) +
                                   " multiplicity-" + std::to_string(b) + " points on the exceptional line over " +
                                   probe_field->spec() + ", only " + std::to_string(hits.size()) + " over " +
                                   F.spec());
        break;
      }
    }
    if (hits.empty() && !z_origin) {
      run.resolved = true;
      break;
    }
    if (hits.empty()) {
      run.obstructions.push_back("after transform " + std::to_string(i + 1) + ": the only multiplicity-" +
                                 std::to_string(b) + " point lies in the " + z + "-chart, where " + x +
                                 " is not a coordinate of the base");
      break;
    }
    if (hits.size() + (z_origin ? 1 : 0) > 1)
      run.obstructions.push_back("after transform " + std::to_string(i + 1) + ": several multiplicity-" +
                                 std::to_string(b) + " points; following " + hits[0].to_string());
    const RationalPoint& p = hits[0];
    ReesAlgebra next(Rx);
    for (const auto& g : tx.algebra.generators()) next.add(recenter(g.poly, p), g.weight);
    G = next;
    f = recenter(fx, p);
    z = zx;
    via = "chart " + x + " at " + p.to_string();
    try {
      base = weighted_transform(base, {x}, x).algebra;
    } catch (const DomainError& err) {
      run.obstructions.push_back(std::string("base transform failed: ") + err.what());
      break;
    }
  }
  return run;
}

const std::vector<std::string>& scenario_names() {
  static const std::vector<std::string> names{"ex6.9",          "ex6.10",         "ex5.14",        "ex6.11",
                                              "thm5.5-random", "thm1.16-random", "thm6.6-random"};
  return names;
}

ScenarioReport run_scenario(const std::string& name, std::uint64_t seed, unsigned workers) {
  ScenarioReport rep;
  rep.name = name;
  rep.seed = seed;
  if (name == "ex6.9") ex6_9(rep);
  else if (name == "ex6.10") ex6_10(rep);
  else if (name == "ex5.14") ex5_14(rep);
  else if (name == "ex6.11") ex6_11(rep);
  else if (name == "thm5.5-random") thm5_5_random(rep, workers);
  else if (name == "thm1.16-random") thm1_16_random(rep, workers);
  else if (name == "thm6.6-random") thm6_6_random(rep, workers);
  else {
    std::string known;
    for (const auto& n : scenario_names()) known += " " + n;
    throw DomainError("unknown scenario '" + name + "'; known:" + known);
  }
  return rep;
}

}  // namespace drees
