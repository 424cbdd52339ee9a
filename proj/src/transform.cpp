#include <algorithm>
#include <cctype>

#include "drees/algebra.hpp"

namespace drees {

std::string next_name(const std::string& name, const std::vector<std::string>& taken) {
  std::size_t cut = name.size();
  while (cut > 0 && std::isdigit(static_cast<unsigned char>(name[cut - 1]))) --cut;
  std::string stem = name.substr(0, cut);
  unsigned long n = cut < name.size() ? std::stoul(name.substr(cut)) : 0;
  if (stem.empty()) stem = name;
  std::string cand;
  do {
    cand = stem + std::to_string(++n);
  } while (std::find(taken.begin(), taken.end(), cand) != taken.end());
  return cand;
}

Polynomial BlowupChart::apply(const Polynomial& f) const {
  if (f.ring() != parent_ring) throw DomainError("polynomial is not in the chart's source ring");
  std::vector<std::optional<Polynomial>> img(parent_ring.nvars());
  for (std::size_t i = 0; i < parent_ring.nvars(); ++i) {
    auto it = substitution.find(parent_ring.vars()[i]);
    img[i] = it != substitution.end() ? it->second : Polynomial::variable(ring, parent_ring.vars()[i]);
  }
  return f.substitute(img, ring);
}

BlowupChart make_chart(const Ring& r, const std::vector<std::string>& center, const std::string& chart_var,
                       std::shared_ptr<const BlowupChart> parent) {
  if (center.empty()) throw DomainError("empty center");
  for (const auto& v : center) r.index(v);
  if (std::find(center.begin(), center.end(), chart_var) == center.end())
    throw DomainError("chart variable " + chart_var + " is not in the center");
  std::vector<std::string> names = r.vars();
  std::vector<std::string> renamed = names;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (names[i] == chart_var || std::find(center.begin(), center.end(), names[i]) == center.end()) continue;
    std::vector<std::string> taken = names;
    taken.insert(taken.end(), renamed.begin(), renamed.end());
    renamed[i] = next_name(names[i], taken);
  }
  Ring target = r.with_vars(renamed);
  BlowupChart chart{target, r, chart_var, center, {}, std::move(parent)};
  Polynomial e = Polynomial::variable(target, chart_var);
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (renamed[i] == names[i]) continue;
    chart.substitution.emplace(names[i], e * Polynomial::variable(target, renamed[i]));
  }
  return chart;
}

TransformResult weighted_transform(const ReesAlgebra& G, const std::vector<std::string>& center,
                                   const std::string& chart_var, std::shared_ptr<const BlowupChart> parent) {
  for (const auto& g : G.generators()) {
    Order o = order_along_subspace(g.poly, center);
    if (!(o >= g.weight))
      throw DomainError("center is not permissible: " + g.poly.to_string() + " has order " + o.to_string() +
                        " along it but weight " + std::to_string(g.weight));
  }
  BlowupChart chart = make_chart(G.ring(), center, chart_var, std::move(parent));
  std::size_t e = chart.ring.index(chart_var);
  ReesAlgebra out(chart.ring);
  for (const auto& g : G.generators()) {
    Polynomial t = chart.apply(g.poly);
    std::vector<Term> q;
    for (const auto& term : t.terms()) {
      if (term.m[e] < g.weight) throw DomainError("exact division by the exceptional variable failed");
      Monomial m = term.m;
      m[e] -= g.weight;
      q.push_back({m, term.c});
    }
    out.add(Polynomial::from_terms(chart.ring, std::move(q)), g.weight);
  }
  return {out, chart};
}

ReesAlgebra total_transform(const ReesAlgebra& G, const std::vector<std::string>& center, const std::string& chart_var) {
  BlowupChart chart = make_chart(G.ring(), center, chart_var);
  ReesAlgebra out(chart.ring);
  for (const auto& g : G.generators()) out.add(chart.apply(g.poly), g.weight);
  return out;
}

}  // namespace drees
