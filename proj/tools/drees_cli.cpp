#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "drees/io.hpp"
#include "drees/scenario.hpp"

using namespace drees;

namespace {

enum Exit { kOk = 0, kAssertion = 1, kUsage = 2, kResource = 3 };

std::vector<std::string> split_names(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

std::optional<Field> field_opt(const std::string& spec) {
  if (spec.empty()) return std::nullopt;
  return Field::parse(spec);
}

void write_out(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw DomainError("cannot write " + path);
  f << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"drees: differential Rees algebras, elimination and blowups"};
  app.require_subcommand(1);

  std::string file, out, active, field, at, var = "Z", center, chart, name;
  bool normalize = false, saturate_first = false, total = false, no_check = false;
  std::size_t monic = 1;
  std::uint64_t seed = 1;
  unsigned workers = 0;

  auto add_file = [&](CLI::App* c) {
    c->add_option("file", file, "algebra file")->required();
    c->add_option("--field", field, "re-read coefficients in this field");
  };

  auto* sat = app.add_subcommand("saturate", "differential saturation");
  add_file(sat);
  sat->add_option("--active", active, "comma-separated variables (default: all)");
  sat->add_flag("--normalize", normalize, "scale generators to leading coefficient 1");
  sat->add_option("-o,--output", out, "output file (default: stdout)");

  auto* sing = app.add_subcommand("sing", "singular ideal and its rational zero set");
  add_file(sing);

  auto* ord = app.add_subcommand("ord", "ord of the algebra at a rational point");
  add_file(ord);
  ord->add_option("--at", at, "point, e.g. Y=0,Z=1 (default: origin)");

  auto* e0 = app.add_subcommand("e0", "e0 invariant at a simple point");
  add_file(e0);
  e0->add_option("--at", at, "point (default: origin)");
  e0->add_flag("--saturate", saturate_first, "saturate the input first");

  auto* tau = app.add_subcommand("tau", "tau lower bound at a simple point");
  add_file(tau);
  tau->add_option("--at", at, "point (default: origin)");
  tau->add_flag("--saturate", saturate_first, "saturate the input first");

  auto* elim = app.add_subcommand("eliminate", "elimination algebra of a monic generator");
  add_file(elim);
  elim->add_option("--monic", monic, "1-based index of the monic generator")->required();
  elim->add_option("--var", var, "variable to eliminate");
  elim->add_flag("--no-transversal-check", no_check, "skip the degree = order = weight check");
  elim->add_option("-o,--output", out, "output file (default: stdout)");

  auto* blow = app.add_subcommand("blowup", "weighted transform at a coordinate center");
  add_file(blow);
  blow->add_option("--center", center, "comma-separated center variables")->required();
  blow->add_option("--chart", chart, "chart variable (must lie in the center)")->required();
  blow->add_flag("--total", total, "total transform, no division");
  blow->add_option("-o,--output", out, "output file (default: stdout)");

  auto* ram = app.add_subcommand("ramify-verify", "compare the purely ramified locus with the discriminant locus");
  add_file(ram);
  ram->add_option("--var", var, "distinguished variable");

  auto* scen = app.add_subcommand("scenario", "run a built-in scenario");
  scen->add_option("name", name, "scenario name")->required()->check(CLI::IsMember(scenario_names()));
  scen->add_option("--seed", seed, "seed for random scenarios");
  scen->add_option("--workers", workers, "threads for random batches (0: all cores)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*scen) {
      ScenarioReport rep = run_scenario(name, seed, workers);
      std::cout << rep.render();
      return rep.passed() ? kOk : kAssertion;
    }

    ReesAlgebra A = read_algebra_file(file, field_opt(field));
    const Ring& R = A.ring();

    if (*sat) {
      ReesAlgebra S = active.empty() ? diff_saturate(A) : diff_saturate(A, split_names(active));
      write_out(out, emit_algebra(normalize ? S.normalized() : S));
    } else if (*sing) {
      GroebnerBasis J = buchberger(singular_ideal(A));
      std::cout << "ring: " << R.spec() << "\n";
      for (const auto& g : J.basis()) std::cout << "sing: " << g.to_string() << "\n";
      if (R.field().finite() && point_count(R) <= kScanBudget) {
        auto pts = rational_zero_set(Ideal(R, J.basis()));
        for (const auto& p : pts) std::cout << "point: " << p.to_string() << "\n";
        std::cout << "#! basis: " << J.basis().size() << " points: " << pts.size() << "\n";
      } else {
        std::cout << "#! basis: " << J.basis().size() << " points: unscanned\n";
      }
    } else if (*ord) {
      RationalPoint P = parse_point(R, at);
      std::string o = ord_at_point(A, P).get_str();
      std::cout << "#! ord: " << o << " at: " << P.to_string() << "\n";
    } else if (*e0 || *tau) {
      ReesAlgebra S = saturate_first ? diff_saturate(A) : A;
      RationalPoint P = parse_point(R, at);
      unsigned v = *e0 ? e0_invariant(S, P) : tau_estimate(S, P);
      std::cout << "#! " << (*e0 ? "e0" : "tau") << ": " << v << " at: " << P.to_string() << "\n";
    } else if (*elim) {
      if (monic == 0 || monic > A.size())
        throw DomainError("--monic must be between 1 and " + std::to_string(A.size()));
      EliminationOptions opt;
      opt.check_transversal = !no_check;
      write_out(out, emit_elimination(eliminate(A, A.generators()[monic - 1], var, opt)));
    } else if (*blow) {
      auto c = split_names(center);
      if (total) {
        write_out(out, emit_algebra(total_transform(A, c, chart)));
      } else {
        TransformResult T = weighted_transform(A, c, chart);
        std::string text = "# chart: " + chart + " center: " + center + " exceptional: " + T.chart.exceptional + "\n";
        for (const auto& [v, img] : T.chart.substitution) text += "# " + v + " = " + img.to_string() + "\n";
        write_out(out, text + emit_algebra(T.algebra));
      }
    } else if (*ram) {
      std::vector<Polynomial> factors;
      for (const auto& g : A.generators()) factors.push_back(g.poly);
      MonicInput in = MonicInput::make(R, var, factors);
      RamificationReport rep = verify_thm_1_16(in);
      std::cout << rep.render();
      return rep.agreement ? kOk : kAssertion;
    }
    return kOk;
  } catch (const ResourceError& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return kResource;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
}
