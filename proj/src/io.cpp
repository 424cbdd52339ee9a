#include "drees/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace drees {

namespace {

std::string_view strip(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i)
    if (i == s.size() || s[i] == sep) {
      out.push_back(strip(s.substr(start, i - start)));
      start = i + 1;
    }
  return out;
}

}  // namespace

ReesAlgebra parse_algebra(std::string_view text, const std::optional<Field>& field_override) {
  std::optional<Ring> ring;
  std::vector<ReesGenerator> gens;
  std::istringstream in{std::string(text)};
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string_view line = strip(raw);
    if (line.empty() || line[0] == '#') continue;
    auto where = [&] { return "line " + std::to_string(lineno) + ": "; };
    if (line.rfind("ring:", 0) == 0) {
      if (ring) throw ParseError(where() + "second ring declaration");
      Ring r = Ring::parse(strip(line.substr(5)));
      ring = field_override ? Ring(*field_override, r.vars()) : r;
    } else if (line.rfind("gen:", 0) == 0) {
      if (!ring) throw ParseError(where() + "generator before the ring declaration");
      std::string_view body = strip(line.substr(4));
      auto w = body.rfind(" w ");
      if (w == std::string_view::npos) throw ParseError(where() + "expected '<poly> w <weight>'");
      std::string weight(strip(body.substr(w + 3)));
      if (weight.empty() || weight.find_first_not_of("0123456789") != std::string::npos)
        throw ParseError(where() + "bad weight '" + weight + "'");
      unsigned long n = std::stoul(weight);
      if (n == 0) throw ParseError(where() + "weight must be positive");
      Polynomial p = parse_polynomial(*ring, body.substr(0, w));
      if (p.is_zero()) throw ParseError(where() + "zero generator");
      gens.push_back({p, static_cast<unsigned>(n)});
    } else {
      throw ParseError(where() + "unrecognized line '" + std::string(line) + "'");
    }
  }
  if (!ring) throw ParseError("missing 'ring:' line");
  return ReesAlgebra(*ring, gens);
}

ReesAlgebra read_algebra_file(const std::string& path, const std::optional<Field>& field_override) {
  std::ifstream f(path);
  if (!f) throw DomainError("cannot open " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_algebra(ss.str(), field_override);
}

std::string emit_algebra(const ReesAlgebra& A) {
  std::ostringstream os;
  os << "ring: " << A.ring().spec() << "\n";
  for (const auto& g : A.generators()) os << "gen: " << g.poly.to_string() << " w " << g.weight << "\n";
  os << "#! generators: " << A.size() << " max-weight: " << A.max_weight() << "\n";
  return os.str();
}

std::string emit_elimination(const EliminationResult& r) {
  std::ostringstream os;
  os << "ring: " << r.base.spec() << "\n";
  for (const auto& w : r.warnings) os << "# warning: " << w << "\n";
  const auto& gens = r.algebra.generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const auto& pv = r.provenance[i];
    os << "# from: " << pv.source.to_string() << " w " << pv.source_weight << " coeff " << pv.coeff << "\n";
    os << "gen: " << gens[i].poly.to_string() << " w " << gens[i].weight << "\n";
  }
  os << "#! generators: " << r.algebra.size() << " max-weight: " << r.algebra.max_weight() << "\n";
  return os.str();
}

RationalPoint parse_point(const Ring& r, std::string_view text) {
  RationalPoint p = RationalPoint::origin(r);
  text = strip(text);
  if (text.empty()) return p;
  auto parts = split(text, ',');
  bool named = parts[0].find('=') != std::string_view::npos;
  if (!named && parts.size() != r.nvars())
    throw ParseError("point needs " + std::to_string(r.nvars()) + " coordinates");
  Ring line(r.field(), {"_p"});
  for (std::size_t i = 0; i < parts.size(); ++i) {
    std::string_view part = parts[i];
    std::size_t idx = i;
    if (named) {
      auto eq = part.find('=');
      if (eq == std::string_view::npos) throw ParseError("mixed named and positional coordinates");
      idx = r.index(strip(part.substr(0, eq)));
      part = strip(part.substr(eq + 1));
    }
    Polynomial v = parse_polynomial(line, part);
    if (!v.is_constant()) throw ParseError("coordinate '" + std::string(part) + "' is not a constant");
    p.coords[idx] = v.is_zero() ? r.field().zero() : v.lc();
  }
  return p;
}

}  // namespace drees
