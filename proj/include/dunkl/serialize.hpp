#pragma once

#include "dunkl/multipoly.hpp"

#include <json.hpp>

#include <string>

namespace dunkl {

/// {"num": [{"e0", "e1", "c": "p/q"}], "den": [{"a", "b", "c": "p/q", "mult"}], "scale": "p/q"}
nlohmann::json to_json(const ParamRat& x);
/// Throws std::invalid_argument on malformed input.
ParamRat param_rat_from_json(const nlohmann::json& j);

/// {"arity": 2|4, "terms": [{"exps": [...], "coeff": <ParamRat>}]}, terms in
/// lexicographic exponent order.
nlohmann::json to_json(const MultiPoly& f);
MultiPoly multipoly_from_json(const nlohmann::json& j);

/// Plain text with variables k0, k1, z, zb, w, wb.
std::string render_text(const ParamRat& x);
std::string render_text(const MultiPoly& f);

/// Display-only LaTeX rendering.
std::string render_latex(const ParamRat& x);
std::string render_latex(const MultiPoly& f);

}  // namespace dunkl
