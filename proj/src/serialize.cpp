#include "dunkl/serialize.hpp"

#include <cctype>
#include <stdexcept>

namespace dunkl {

namespace {

const char* const kTextVars[] = {"z", "zb", "w", "wb"};
const char* const kLatexVars[] = {"z", "\\bar{z}", "w", "\\bar{w}"};

ExactScalar scalar_field(const nlohmann::json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_string()) {
    throw std::invalid_argument(std::string("missing rational field '") + key + "'");
  }
  return parse_scalar(j[key].get<std::string>());
}

long int_field(const nlohmann::json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_integer()) {
    throw std::invalid_argument(std::string("missing integer field '") + key + "'");
  }
  return j[key].get<long>();
}

std::string monomial(const BasicMultiPoly<ParamRat>::Exps& e, int arity, const char* const* vars, const char* join,
                     bool braces) {
  std::string out;
  for (int i = 0; i < arity; ++i) {
    const int p = e[static_cast<std::size_t>(i)];
    if (p == 0) continue;
    if (!out.empty()) out += join;
    out += vars[i];
    if (p > 1) out += braces ? "^{" + std::to_string(p) + "}" : "^" + std::to_string(p);
  }
  return out;
}

// a + b*k0 + c*k1 style polynomial in LaTeX
std::string latex_poly(const ParamPoly& p) {
  std::string s = p.to_string("\\kappa_0", "\\kappa_1");
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '*') continue;
    if (s[i] == '^') {
      std::size_t j = i + 1;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j])) != 0) ++j;
      out += "^{" + s.substr(i + 1, j - i - 1) + "}";
      i = j - 1;
      continue;
    }
    out += s[i];
  }
  return out;
}

std::string render_poly(const MultiPoly& f, const char* const* vars, const char* join, bool latex) {
  if (f.is_zero()) return "0";
  std::string out;
  for (const auto& [e, c] : f.terms()) {
    const std::string mono = monomial(e, f.arity(), vars, join, latex);
    std::string coeff = latex ? render_latex(c) : render_text(c);
    const bool negative = !coeff.empty() && coeff[0] == '-' && coeff.find_first_of("+-", 1) == std::string::npos &&
                          coeff.find('/') == std::string::npos;
    if (negative) coeff = coeff.substr(1);
    const bool compound = coeff.find_first_of(" ") != std::string::npos;
    std::string term;
    if (mono.empty()) {
      term = coeff;
    } else if (coeff == "1") {
      term = mono;
    } else {
      term = (compound ? "(" + coeff + ")" : coeff) + join + mono;
    }
    if (out.empty()) {
      out = negative ? "-" + term : term;
    } else {
      out += negative ? " - " : " + ";
      out += term;
    }
  }
  return out;
}

}  // namespace

nlohmann::json to_json(const ParamRat& x) {
  nlohmann::json num = nlohmann::json::array();
  for (const auto& [e, c] : x.num().terms()) num.push_back({{"e0", e.first}, {"e1", e.second}, {"c", format_scalar(c)}});
  nlohmann::json den = nlohmann::json::array();
  for (const auto& [form, mult] : x.den()) {
    den.push_back({{"a", form.a()}, {"b", form.b()}, {"c", format_scalar(form.c())}, {"mult", mult}});
  }
  return {{"num", num}, {"den", den}, {"scale", format_scalar(x.scale())}};
}

ParamRat param_rat_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("num") || !j.contains("den") || !j["num"].is_array() || !j["den"].is_array()) {
    throw std::invalid_argument("malformed rational function");
  }
  ParamPoly num;
  for (const auto& t : j["num"]) {
    num.add_term(static_cast<int>(int_field(t, "e0")), static_cast<int>(int_field(t, "e1")), scalar_field(t, "c"));
  }
  ExactScalar scale = scalar_field(j, "scale");
  ParamRat::Denominator den;
  for (const auto& d : j["den"]) {
    const long mult = int_field(d, "mult");
    if (mult < 1) throw std::invalid_argument("denominator multiplicity must be positive");
    const Affine value(int_field(d, "a"), int_field(d, "b"), scalar_field(d, "c"));
    if (value.is_constant()) throw std::invalid_argument("constant denominator form");
    auto [factor, form] = LinearForm::normalize(value);
    for (long i = 0; i < mult; ++i) scale /= factor;
    den[form] += static_cast<int>(mult);
  }
  return ParamRat::reduce(num, den, scale);
}

nlohmann::json to_json(const MultiPoly& f) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [e, c] : f.terms()) {
    nlohmann::json exps = nlohmann::json::array();
    for (int i = 0; i < f.arity(); ++i) exps.push_back(e[static_cast<std::size_t>(i)]);
    terms.push_back({{"exps", exps}, {"coeff", to_json(c)}});
  }
  return {{"arity", f.arity()}, {"terms", terms}};
}

MultiPoly multipoly_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array()) throw std::invalid_argument("malformed polynomial");
  const int arity = static_cast<int>(int_field(j, "arity"));
  MultiPoly out(arity);
  for (const auto& t : j["terms"]) {
    if (!t.contains("exps") || !t["exps"].is_array() || static_cast<int>(t["exps"].size()) != arity) {
      throw std::invalid_argument("exponent list does not match arity");
    }
    BasicMultiPoly<ParamRat>::Exps e{0, 0, 0, 0};
    for (int i = 0; i < arity; ++i) e[static_cast<std::size_t>(i)] = t["exps"][static_cast<std::size_t>(i)].get<int>();
    out.add_term(e, param_rat_from_json(t.at("coeff")));
  }
  return out;
}

std::string render_text(const ParamRat& x) { return x.to_string("k0", "k1"); }

std::string render_text(const MultiPoly& f) { return render_poly(f, kTextVars, "*", false); }

std::string render_latex(const ParamRat& x) {
  if (x.is_zero()) return "0";
  const ParamPoly top = x.num() * x.scale();
  if (x.den().empty()) return latex_poly(top);
  std::string bottom;
  for (const auto& [form, mult] : x.den()) {
    ParamPoly p(form.as_affine());
    bottom += "(" + latex_poly(p) + ")";
    if (mult > 1) bottom += "^{" + std::to_string(mult) + "}";
  }
  return "\\frac{" + latex_poly(top) + "}{" + bottom + "}";
}

std::string render_latex(const MultiPoly& f) { return render_poly(f, kLatexVars, " ", true); }

}  // namespace dunkl
