#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "drees/elim.hpp"

namespace drees {

// ring: F2[Y,Z]
// gen: Z^2+Y^5 w 2
// Blank lines and '#' comments are ignored. A field override re-reads the coefficients in that field.
ReesAlgebra parse_algebra(std::string_view text, const std::optional<Field>& field_override = std::nullopt);
ReesAlgebra read_algebra_file(const std::string& path, const std::optional<Field>& field_override = std::nullopt);

std::string emit_algebra(const ReesAlgebra& A);
std::string emit_elimination(const EliminationResult& r);

// "Y=1,Z=0" or "1,0" (coordinates in variable order); empty means the origin.
RationalPoint parse_point(const Ring& r, std::string_view text);

}  // namespace drees
