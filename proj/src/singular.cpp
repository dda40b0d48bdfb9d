#include "dunkl/singular.hpp"

#include "dunkl/errors.hpp"
#include "dunkl/harmonic.hpp"
#include "dunkl/intertwine.hpp"
#include "dunkl/kernels.hpp"

#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace dunkl {

nlohmann::json VerificationRecord::to_json() const {
  return {{"identity", identity}, {"params", params}, {"status", passed ? "pass" : "fail"}, {"witness", witness}};
}

void VerificationReport::add(std::string identity, nlohmann::json params, bool passed, std::string witness) {
  records.push_back({std::move(identity), std::move(params), passed, std::move(witness)});
}

void VerificationReport::append(const VerificationReport& other) {
  records.insert(records.end(), other.records.begin(), other.records.end());
}

bool VerificationReport::all_passed() const { return first_failure() == nullptr; }

const VerificationRecord* VerificationReport::first_failure() const {
  for (const auto& r : records) {
    if (!r.passed) return &r;
  }
  return nullptr;
}

nlohmann::json VerificationReport::to_json() const {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& r : records) out.push_back(r.to_json());
  return out;
}

EpsilonRat epsilon_substitute(const ParamRat& x, int m) { return x.substitute(Affine(1, 0, 0), Affine(-1, 1, -m)); }

MultiPoly epsilon_substitute(const MultiPoly& f, int m) {
  return f.map_coeffs([m](const ParamRat& c) { return epsilon_substitute(c, m); });
}

int eps_order(const EpsilonRat& x) { return x.multiplicity(LinearForm::normalize(Affine(0, 1, 0)).second); }

int eps_order(const MultiPoly& f) {
  int order = 0;
  for (const auto& [e, c] : f.terms()) order = std::max(order, eps_order(c));
  return order;
}

ParamRat eps_at_zero(const EpsilonRat& x) {
  if (eps_order(x) > 0) throw PoleError("pole at eps = 0");
  return x.substitute(Affine(1, 0, 0), Affine(0));
}

MultiPoly eps_at_zero(const MultiPoly& f) {
  return f.map_coeffs([](const ParamRat& c) { return eps_at_zero(c); });
}

ParamRat substitute_singular(const ParamRat& x, int m) { return x.substitute(Affine(1, 0, 0), Affine(-1, 0, -m)); }

MultiPoly substitute_singular(const MultiPoly& f, int m) {
  return f.map_coeffs([m](const ParamRat& c) { return substitute_singular(c, m); });
}

namespace {

const ExactScalar kHalf(1, 2);

std::string exps_string(const BasicMultiPoly<ParamRat>::Exps& e, int arity) {
  std::ostringstream os;
  os << "[" << e[0] << "," << e[1];
  if (arity == 4) os << "," << e[2] << "," << e[3];
  os << "]";
  return os.str();
}

// Empty when f is zero, else the first surviving coefficient.
std::string residual_witness(const MultiPoly& f) {
  if (f.is_zero()) return {};
  const auto& [e, c] = *f.terms().begin();
  return "residual at " + exps_string(e, f.arity()) + ": " + c.to_string();
}

std::string scalar_witness(const ParamRat& x) { return x.is_zero() ? std::string{} : "residual " + x.to_string(); }

// (k0 + 1/2)_p
ParamRat shifted_rising(int p) { return ParamRat::rising(Affine(1, 0, kHalf), p); }

// (k0 + 1/2)_p q! / ((k0 + 1/2)_r t!)
ParamRat collapse_const(int p, int q, int r, int t) {
  return shifted_rising(p) * ParamRat::inv_rising(Affine(1, 0, kHalf), r) * ParamRat(factorial(q) / factorial(t));
}

MultiPoly radial2(int j) { return MultiPoly::monomial(j, j); }
MultiPoly radial4(int j) { return MultiPoly::monomial4({j, j, j, j}); }

MultiPoly f_sub(int n, Variant v, int m) { return substitute_singular(f_coeff_form(n, v), m); }

// lhs_scale * f_{deg_l} = c * (z zbar)^e * rhs, with e possibly negative.
void add_collapse(VerificationReport& rep, const std::string& name, const nlohmann::json& params, const MultiPoly& lhs,
                  const ParamRat& c, int e, const MultiPoly& rhs) {
  try {
    const MultiPoly diff = lhs * radial2(std::max(0, -e)) - rhs * radial2(std::max(0, e)) * c;
    rep.add(name, params, diff.is_zero(), residual_witness(diff));
  } catch (const std::domain_error& err) {
    rep.add(name, params, false, err.what());
  }
}

// x + c^2 y = 0 after substitution
void add_ratio(VerificationReport& rep, const std::string& name, const nlohmann::json& params, const ParamRat& x,
               const ParamRat& c, const ParamRat& y, int m) {
  try {
    const ParamRat residual = substitute_singular(x, m) + c * c * substitute_singular(y, m);
    rep.add(name, params, residual.is_zero(), scalar_witness(residual));
  } catch (const std::domain_error& err) {
    rep.add(name, params, false, err.what());
  }
}

void add_vanishing(VerificationReport& rep, const std::string& name, const nlohmann::json& params, const ParamRat& x,
                   int m) {
  try {
    const ParamRat v = substitute_singular(x, m);
    rep.add(name, params, v.is_zero(), scalar_witness(v));
  } catch (const std::domain_error& err) {
    rep.add(name, params, false, err.what());
  }
}

}  // namespace

VerificationReport check_basis_collapse(int m, int n) {
  if (m < 1) throw std::domain_error("m must be positive");
  VerificationReport rep;
  const nlohmann::json params = {{"m", m}, {"n", n}};
  if (n >= 0 && n <= m) {
    add_collapse(rep, "collapse even symmetric", params, f_sub(2 * n, Variant::Real, m),
                 collapse_const(n, m - n, m - n, n), 2 * n - m, f_sub(2 * m - 2 * n, Variant::Real, m));
  }
  if (n >= 1 && n <= m - 1) {
    add_collapse(rep, "collapse even antisymmetric", params, f_sub(2 * n, Variant::Imag, m),
                 collapse_const(n, m - n - 1, m - n, n - 1), 2 * n - m, f_sub(2 * m - 2 * n, Variant::Imag, m));
  }
  if (n >= 0 && n < m) {
    add_collapse(rep, "collapse odd symmetric", params, f_sub(2 * n + 1, Variant::Real, m),
                 collapse_const(n + 1, m - n - 1, m - n, n), 2 * n - m + 1,
                 f_sub(2 * m - 2 * n - 1, Variant::Real, m));
    add_collapse(rep, "collapse odd antisymmetric", params, f_sub(2 * n + 1, Variant::Imag, m),
                 collapse_const(n, m - n - 1, m - n - 1, n), 2 * n - m + 1,
                 f_sub(2 * m - 2 * n - 1, Variant::Imag, m));
    const MultiPoly conj = f_sub(2 * m - 2 * n - 1, Variant::Full, m).conjugate_swap().shift({0, 1, 0, 0});
    add_collapse(rep, "collapse even onto conjugate odd", params, f_sub(2 * n, Variant::Full, m),
                 collapse_const(n, m - n - 1, m - n, n), 2 * n - m, conj);
  }
  return rep;
}

VerificationReport check_lambda_ratios(int m, int n) {
  if (m < 1) throw std::domain_error("m must be positive");
  VerificationReport rep;
  const nlohmann::json params = {{"m", m}, {"n", n}};
  if (n >= 1 && n <= m - 1 && 2 * n != m) {
    add_ratio(rep, "norm ratio even symmetric", params, lambda_const(2 * m - 2 * n, Variant::Real),
              collapse_const(n, m - n, m - n, n), lambda_const(2 * n, Variant::Real), m);
    add_ratio(rep, "norm ratio even antisymmetric", params, lambda_const(2 * m - 2 * n, Variant::Imag),
              collapse_const(n, m - n - 1, m - n, n - 1), lambda_const(2 * n, Variant::Imag), m);
  }
  if (n == 0) {
    const ParamRat c = ParamRat::inv_rising(Affine(1, 0, kHalf), m) * ParamRat(factorial(m));
    add_ratio(rep, "norm top even symmetric", params, lambda_const(2 * m, Variant::Real), c, ParamRat(1), m);
    add_vanishing(rep, "norm top even antisymmetric vanishes", params, lambda_const(2 * m, Variant::Imag), m);
  }
  if (n >= 0 && n <= m - 1 && 2 * n + 1 != m) {
    add_ratio(rep, "norm ratio odd symmetric", params, lambda_const(2 * m - 2 * n - 1, Variant::Real),
              collapse_const(n + 1, m - n - 1, m - n, n), lambda_const(2 * n + 1, Variant::Real), m);
    add_ratio(rep, "norm ratio odd antisymmetric", params, lambda_const(2 * m - 2 * n - 1, Variant::Imag),
              collapse_const(n, m - n - 1, m - n - 1, n), lambda_const(2 * n + 1, Variant::Imag), m);
  }
  if (n >= 0 && n <= m - 1) {
    add_ratio(rep, "norm ratio mixed parity", params, lambda_const(2 * m - 2 * n - 1, Variant::Full),
              collapse_const(n, m - n - 1, m - n, n), lambda_const(2 * n, Variant::Full), m);
  }
  if (n == m || n > 2 * m) {
    add_vanishing(rep, "symmetric norm constant vanishes", params, lambda_const(n, Variant::Real), m);
    add_vanishing(rep, "antisymmetric norm constant vanishes", params, lambda_const(n, Variant::Imag), m);
  }
  if (n >= 2 * m) add_vanishing(rep, "full norm constant vanishes", params, lambda_const(n, Variant::Full), m);
  return rep;
}

VerificationReport check_pzero(const GroupParam& g, int m, int N) {
  if (m < 1) throw std::domain_error("m must be positive");
  VerificationReport rep;
  const int sm = g.s() * m;
  const nlohmann::json params = {{"s", g.s()}, {"m", m}, {"N", N}};
  try {
    if (N > 2 * sm) {
      const MultiPoly p = substitute_singular(poisson_p(g, N), m);
      rep.add("kernel vanishes above twice sm", params, p.is_zero(), residual_witness(p));
    } else {
      const MultiPoly lhs = substitute_singular(poisson_p(g, N), m) * radial4(std::max(0, sm - N));
      const MultiPoly rhs = substitute_singular(poisson_p(g, 2 * sm - N), m) * radial4(std::max(0, N - sm));
      const MultiPoly sum = lhs + rhs;
      rep.add("kernel reflection about sm", params, sum.is_zero(), residual_witness(sum));
    }
  } catch (const std::domain_error& err) {
    rep.add("kernel identity at the singular line", params, false, err.what());
  }
  return rep;
}

std::vector<std::pair<int, int>> k_pairing(const GroupParam& g, int n, int m) {
  const int sm = g.s() * m;
  std::vector<std::pair<int, int>> out;
  for (int j0 = 0; 2 * j0 <= n; ++j0) {
    if (n - 2 * j0 > 2 * sm || n - j0 < sm) continue;
    const int j1 = n - j0 - sm;
    if (j1 <= j0) out.emplace_back(j0, j1);
  }
  return out;
}

namespace {

struct Grouping {
  std::vector<std::vector<int>> groups;
};

// Groups the indices 0..count-1: each pair becomes one group, everything else a singleton.
Grouping group_indices(int count, const std::vector<std::pair<int, int>>& pairs) {
  Grouping out;
  std::set<int> used;
  for (const auto& [x, y] : pairs) {
    if (used.count(x) != 0 || used.count(y) != 0) throw std::logic_error("overlapping pairs");
    if (x == y) {
      out.groups.push_back({x});
    } else {
      out.groups.push_back({x, y});
    }
    used.insert(x);
    used.insert(y);
  }
  for (int i = 0; i < count; ++i) {
    if (used.count(i) == 0) out.groups.push_back({i});
  }
  return out;
}

std::string group_label(const std::vector<int>& ids, const std::vector<std::string>& names) {
  std::string out;
  for (int i : ids) {
    if (!out.empty()) out += "+";
    out += names[static_cast<std::size_t>(i)];
  }
  return out;
}

// Shared driver: eps-substitutes the terms, checks groups, singular members
// of proper pairs, and agreement of the assembled value with direct
// substitution of the symbolic total.
VerificationReport check_grouped(const std::string& what, const nlohmann::json& params,
                                 const std::vector<MultiPoly>& terms, const std::vector<std::string>& names,
                                 const std::vector<std::pair<int, int>>& pairs, const MultiPoly& total, int m) {
  VerificationReport rep;
  std::vector<MultiPoly> eps_terms;
  for (const MultiPoly& t : terms) eps_terms.push_back(epsilon_substitute(t, m));
  const Grouping grouping = group_indices(static_cast<int>(terms.size()), pairs);
  MultiPoly assembled(total.arity());
  for (const auto& group : grouping.groups) {
    MultiPoly sum(total.arity());
    for (int i : group) sum += eps_terms[static_cast<std::size_t>(i)];
    const int order = eps_order(sum);
    if (order > 0) {
      throw UnpairedPoleError(what + ": group " + group_label(group, names) + " keeps a pole of order " +
                              std::to_string(order) + " at " + params.dump());
    }
    assembled += eps_at_zero(sum);
  }
  rep.add(what + " groups regular", params, true);

  bool control = true;
  std::string control_witness;
  for (const auto& [x, y] : pairs) {
    if (x == y) continue;
    for (int i : {x, y}) {
      if (eps_order(eps_terms[static_cast<std::size_t>(i)]) < 1) {
        control = false;
        if (control_witness.empty()) control_witness = names[static_cast<std::size_t>(i)] + " is regular on its own";
      }
    }
  }
  rep.add(what + " paired members singular alone", params, control, control_witness);

  try {
    const MultiPoly direct = substitute_singular(total, m);
    const MultiPoly diff = direct - assembled;
    rep.add(what + " grouped value matches direct substitution", params, diff.is_zero(), residual_witness(diff));
  } catch (const PoleError& err) {
    rep.add(what + " grouped value matches direct substitution", params, false, err.what());
  }
  return rep;
}

}  // namespace

VerificationReport check_k_removable(const GroupParam& g, int m, int n) {
  if (m < 1 || n < 0) throw std::domain_error("need m >= 1 and n >= 0");
  const nlohmann::json params = {{"s", g.s()}, {"m", m}, {"n", n}};
  std::vector<std::string> names;
  for (int j = 0; 2 * j <= n; ++j) names.push_back("j=" + std::to_string(j));
  return check_grouped("kernel series", params, kernel_terms(g, n), names, k_pairing(g, n, m), kernel_k(g, n), m);
}

VPairing v_pairing(const GroupParam& g, int a, int b, int m) {
  const MonomialCase mc = decompose(g, a, b);
  VPairing out;
  out.shifted = mc.shifted;
  if (!mc.shifted) {
    for (int k = 0; k <= mc.v; ++k) {
      const int kp = mc.u + mc.v - m - k;
      if (k < kp && kp <= mc.v) out.pairs.emplace_back(k, kp);
    }
    return out;
  }
  const int lower = 1 - (mc.r + mc.t) / g.s();
  for (int k = 0; k <= mc.v; ++k) {
    const int kp = mc.u + mc.v + 1 - m - k;
    if (kp >= lower && kp <= mc.v) out.pairs.emplace_back(k, kp);
  }
  return out;
}

VerificationReport check_v_removable(const GroupParam& g, int a, int b, int m) {
  if (m < 1) throw std::domain_error("m must be positive");
  const nlohmann::json params = {{"s", g.s()}, {"m", m}, {"a", a}, {"b", b}};
  const VPairing pairing = v_pairing(g, a, b, m);
  const std::vector<VTerm> vterms = intertwine_terms(g, a, b);
  std::map<std::pair<int, int>, int> index;
  std::vector<MultiPoly> terms;
  std::vector<std::string> names;
  for (const VTerm& t : vterms) {
    index[{t.series, t.k}] = static_cast<int>(terms.size());
    terms.push_back(t.poly);
    names.push_back("sum" + std::to_string(t.series) + " k=" + std::to_string(t.k));
  }
  // a term absent from the expansion is zero; give it a slot so pairs stay well formed
  auto slot = [&](int series, int k) {
    auto it = index.find({series, k});
    if (it != index.end()) return it->second;
    index[{series, k}] = static_cast<int>(terms.size());
    terms.emplace_back(2);
    names.push_back("sum" + std::to_string(series) + " k=" + std::to_string(k) + " (zero)");
    return static_cast<int>(terms.size()) - 1;
  };
  std::vector<std::pair<int, int>> pairs;
  for (const auto& [k, kp] : pairing.pairs) pairs.emplace_back(slot(1, k), slot(pairing.shifted ? 2 : 1, kp));
  return check_grouped("V expansion", params, terms, names, pairs, intertwine_mono(g, a, b), m);
}

}  // namespace dunkl
