#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "acx/invariant_complex.hpp"
#include "acx/pi_param.hpp"

namespace acx::cli {

/// Invariant model read from JSON:
///   {"dim": 4,
///    "names": ["e1", ...],                                   optional
///    "brackets": [{"i": 2, "j": 3, "out": [[4, "1", "0"]]}],  1-based, i < j, [k, re, im]
///    "J": [["0", "-1", ...], ...],                           rows; column j holds J e_j
///    "characters": [[1, 0, 0, 0], ...],                      optional closed covectors
///    "params": {"a": "4*pi"}}                                optional
/// J entries are exact expressions in rationals, a, pi and i.
struct ModelFile {
  int dim = 0;
  std::vector<std::string> names;
  std::vector<LieAlgebra::Bracket> brackets;
  std::vector<std::vector<Scalar>> j;  ///< may contain the symbol a
  std::vector<Vector> characters;
  std::optional<PiParam> a;

  bool uses_a() const;
  LieAlgebra algebra() const;
  ACStructure structure(const std::optional<PiParam>& a_override) const;
  /// Effective parameter: the override, else params.a. Throws std::invalid_argument if J needs a and neither is set.
  std::optional<PiParam> parameter(const std::optional<PiParam>& a_override) const;
  LieComplex complex(const std::optional<PiParam>& a_override, int window) const;
};

/// Throws std::invalid_argument with the JSON path of the offending field.
ModelFile parse_model(std::string_view json_text);
ModelFile load_model(const std::string& path);

/// Exact scalar expression: integers, p/q, a, pi, i, + - * / and parentheses.
Scalar parse_scalar_expression(std::string_view text);

}  // namespace acx::cli
