#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "drees/ramify.hpp"

namespace drees {

struct ScenarioCheck {
  std::string label;
  bool passed = false;
  std::string detail;
};

struct ScenarioReport {
  std::string name;
  std::uint64_t seed = 0;
  std::vector<std::string> steps;  // log of the computation, in order
  std::vector<ScenarioCheck> checks;

  void step(std::string line) { steps.push_back(std::move(line)); }
  bool check(std::string label, bool ok, std::string detail = {});
  std::size_t passed_count() const;
  bool passed() const { return passed_count() == checks.size(); }
  std::string render() const;  // ends with "#! passed: k/n"
};

const std::vector<std::string>& scenario_names();
// workers = 0 picks the hardware concurrency. Output does not depend on it.
ScenarioReport run_scenario(const std::string& name, std::uint64_t seed = 1, unsigned workers = 0);

// Repeated point blowups of a plane curve f (monic in var, degree b) at multiplicity-b points.
struct CurveStage {
  unsigned index = 0;  // number of transforms applied so far
  Polynomial f;        // strict transform, recentered so the tracked point is the origin
  std::string var;     // name of the distinguished variable at this stage
  std::string reached_by;
  Rational projected_ord;   // ord at 0 of the i-th transform of the elimination algebra
  Rational eliminated_ord;  // ord at 0 of the elimination of the saturated i-th transform
  bool agree() const { return projected_ord == eliminated_ord; }
};

struct CurveRun {
  std::vector<CurveStage> stages;
  unsigned transforms = 0;
  bool resolved = false;  // stopped because no multiplicity-b point is left
  std::vector<std::string> obstructions;
};

// probe_field, when given, is an extension of the prime field used to detect
// multiplicity-b points that are not rational over the base field.
CurveRun follow_curve(const Polynomial& f, const std::string& base_var, const std::string& var,
                      const std::optional<Field>& probe_field = std::nullopt, unsigned max_steps = 12);

}  // namespace drees
