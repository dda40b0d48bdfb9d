#include "dunkl/param_poly.hpp"

#include <algorithm>
#include <vector>

namespace dunkl {

namespace {

using Dense = std::vector<ExactScalar>;

// v * (r0 + r1*y)
Dense times_linear(const Dense& v, const ExactScalar& r0, const ExactScalar& r1) {
  if (v.empty()) return {};
  Dense out(v.size() + (r1 != 0 ? 1 : 0));
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k] == 0) continue;
    if (r0 != 0) out[k] += r0 * v[k];
    if (r1 != 0) out[k + 1] += r1 * v[k];
  }
  return out;
}

void accumulate(Dense& acc, const Dense& v) {
  if (acc.size() < v.size()) acc.resize(v.size());
  for (std::size_t k = 0; k < v.size(); ++k) acc[k] += v[k];
}

bool all_zero(const Dense& v) {
  return std::all_of(v.begin(), v.end(), [](const ExactScalar& x) { return x == 0; });
}

}  // namespace

ParamPoly::ParamPoly(const ExactScalar& constant) {
  if (constant != 0) terms_.emplace(Exponents{0, 0}, constant);
}

ParamPoly::ParamPoly(const Affine& value) {
  if (value.a != 0) terms_.emplace(Exponents{1, 0}, ExactScalar(value.a));
  if (value.b != 0) terms_.emplace(Exponents{0, 1}, ExactScalar(value.b));
  if (value.c != 0) terms_.emplace(Exponents{0, 0}, value.c);
}

bool ParamPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exponents{0, 0});
}

ExactScalar ParamPoly::constant_term() const {
  auto it = terms_.find({0, 0});
  return it == terms_.end() ? ExactScalar(0) : it->second;
}

int ParamPoly::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e.first + e.second);
  return d;
}

void ParamPoly::add_term(int e0, int e1, const ExactScalar& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace({e0, e1}, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

ParamPoly ParamPoly::operator-() const {
  ParamPoly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

ParamPoly& ParamPoly::operator+=(const ParamPoly& other) {
  for (const auto& [e, c] : other.terms_) add_term(e.first, e.second, c);
  return *this;
}

ParamPoly& ParamPoly::operator-=(const ParamPoly& other) {
  for (const auto& [e, c] : other.terms_) add_term(e.first, e.second, -c);
  return *this;
}

ParamPoly& ParamPoly::operator*=(const ExactScalar& k) {
  if (k == 0) {
    terms_.clear();
  } else if (k != 1) {
    for (auto& [e, c] : terms_) c *= k;
  }
  return *this;
}

ParamPoly operator*(const ParamPoly& x, const ParamPoly& y) {
  if (x.is_zero() || y.is_zero()) return {};
  const int dx = x.total_degree();
  const int dy = y.total_degree();
  const int d = dx + dy;
  // Dense accumulation over the triangle e0 + e1 <= d keeps the inner loop
  // free of map lookups.
  std::vector<ExactScalar> acc(static_cast<std::size_t>((d + 1) * (d + 1)));
  mpq_class tmp;
  for (const auto& [ex, cx] : x.terms_) {
    for (const auto& [ey, cy] : y.terms_) {
      const int i = ex.first + ey.first;
      const int j = ex.second + ey.second;
      mpq_mul(tmp.get_mpq_t(), cx.get_mpq_t(), cy.get_mpq_t());
      auto& slot = acc[static_cast<std::size_t>(i * (d + 1) + j)];
      mpq_add(slot.get_mpq_t(), slot.get_mpq_t(), tmp.get_mpq_t());
    }
  }
  ParamPoly out;
  for (int i = 0; i <= d; ++i) {
    for (int j = 0; i + j <= d; ++j) {
      auto& v = acc[static_cast<std::size_t>(i * (d + 1) + j)];
      if (v != 0) out.terms_.emplace_hint(out.terms_.end(), ParamPoly::Exponents{i, j}, std::move(v));
    }
  }
  return out;
}

ParamPoly ParamPoly::times(const Affine& factor) const {
  ParamPoly out;
  if (is_zero() || factor.is_zero()) return out;
  for (const auto& [e, c] : terms_) {
    if (factor.a != 0) out.add_term(e.first + 1, e.second, c * factor.a);
    if (factor.b != 0) out.add_term(e.first, e.second + 1, c * factor.b);
    if (factor.c != 0) out.add_term(e.first, e.second, c * factor.c);
  }
  return out;
}

ExactScalar ParamPoly::eval(const ExactScalar& k0, const ExactScalar& k1) const {
  ExactScalar sum = 0;
  for (const auto& [e, c] : terms_) {
    ExactScalar t = c;
    for (int i = 0; i < e.first; ++i) t *= k0;
    for (int i = 0; i < e.second; ++i) t *= k1;
    sum += t;
  }
  return sum;
}

double ParamPoly::eval(double k0, double k1) const {
  double sum = 0.0;
  for (const auto& [e, c] : terms_) {
    double t = c.get_d();
    for (int i = 0; i < e.first; ++i) t *= k0;
    for (int i = 0; i < e.second; ++i) t *= k1;
    sum += t;
  }
  return sum;
}

std::optional<ParamPoly> ParamPoly::divide_exact(const LinearForm& form) const {
  if (form.is_constant()) {
    ParamPoly q = *this;
    q *= 1 / form.c();
    return q;
  }
  if (is_zero()) return ParamPoly{};

  // Main variable x is k0 when a != 0, otherwise k1; y is the other one.
  const bool main_is_k0 = form.a() != 0;
  const ExactScalar lead = main_is_k0 ? ExactScalar(form.a()) : ExactScalar(form.b());
  const ExactScalar r0 = -form.c() / lead;
  const ExactScalar r1 = main_is_k0 ? ExactScalar(-form.b()) / lead : ExactScalar(0);

  // Reject by evaluating at one point of the zero line.
  {
    const ExactScalar y(7, 13);
    const ExactScalar x = r0 + r1 * y;
    const ExactScalar v = main_is_k0 ? eval(x, y) : eval(y, x);
    if (v != 0) return std::nullopt;
  }

  int dmain = 0;
  for (const auto& [e, c] : terms_) dmain = std::max(dmain, main_is_k0 ? e.first : e.second);
  std::vector<Dense> p(static_cast<std::size_t>(dmain + 1));
  for (const auto& [e, c] : terms_) {
    const int i = main_is_k0 ? e.first : e.second;
    const int j = main_is_k0 ? e.second : e.first;
    auto& row = p[static_cast<std::size_t>(i)];
    if (row.size() <= static_cast<std::size_t>(j)) row.resize(static_cast<std::size_t>(j + 1));
    row[static_cast<std::size_t>(j)] = c;
  }
  // Nonzero and free of the main variable: cannot contain the form.
  if (dmain == 0) return std::nullopt;

  std::vector<Dense> q(static_cast<std::size_t>(dmain));
  q[static_cast<std::size_t>(dmain - 1)] = p[static_cast<std::size_t>(dmain)];
  for (int i = dmain - 1; i >= 1; --i) {
    Dense next = times_linear(q[static_cast<std::size_t>(i)], r0, r1);
    accumulate(next, p[static_cast<std::size_t>(i)]);
    q[static_cast<std::size_t>(i - 1)] = std::move(next);
  }
  Dense rem = times_linear(q[0], r0, r1);
  accumulate(rem, p[0]);
  if (!all_zero(rem)) return std::nullopt;

  ParamPoly out;
  const ExactScalar inv = 1 / lead;
  for (int i = 0; i < dmain; ++i) {
    const auto& row = q[static_cast<std::size_t>(i)];
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (row[j] == 0) continue;
      if (main_is_k0) {
        out.add_term(i, static_cast<int>(j), row[j] * inv);
      } else {
        out.add_term(static_cast<int>(j), i, row[j] * inv);
      }
    }
  }
  return out;
}

bool ParamPoly::divisible_by(const LinearForm& form) const { return divide_exact(form).has_value(); }

ExactScalar ParamPoly::content() const {
  if (is_zero()) return 1;
  mpz_class g = 0;
  mpz_class l = 1;
  for (const auto& [e, c] : terms_) {
    g = gcd(g, c.get_num());
    l = lcm(l, c.get_den());
  }
  if (g < 0) g = -g;
  ExactScalar out(g, l);
  out.canonicalize();
  return out;
}

ParamPoly ParamPoly::substitute(const Affine& r0, const Affine& r1) const {
  if (is_zero()) return {};
  int d0 = 0;
  int d1 = 0;
  for (const auto& [e, c] : terms_) {
    d0 = std::max(d0, e.first);
    d1 = std::max(d1, e.second);
  }
  std::vector<ParamPoly> pow0{ParamPoly(ExactScalar(1))};
  std::vector<ParamPoly> pow1{ParamPoly(ExactScalar(1))};
  for (int i = 1; i <= d0; ++i) pow0.push_back(pow0.back().times(r0));
  for (int i = 1; i <= d1; ++i) pow1.push_back(pow1.back().times(r1));
  ParamPoly out;
  for (const auto& [e, c] : terms_) {
    out += (pow0[static_cast<std::size_t>(e.first)] * pow1[static_cast<std::size_t>(e.second)]) * c;
  }
  return out;
}

std::string ParamPoly::to_string(const char* v0, const char* v1) const {
  if (is_zero()) return "0";
  std::string out;
  bool first = true;
  // Highest total degree first reads more naturally.
  std::vector<std::pair<Exponents, ExactScalar>> ordered(terms_.begin(), terms_.end());
  std::stable_sort(ordered.begin(), ordered.end(), [](const auto& x, const auto& y) {
    const int dx = x.first.first + x.first.second;
    const int dy = y.first.first + y.first.second;
    if (dx != dy) return dx > dy;
    return x.first.first > y.first.first;
  });
  for (const auto& [e, c] : ordered) {
    ExactScalar mag = abs(c);
    if (c < 0) {
      out += first ? "-" : " - ";
    } else if (!first) {
      out += " + ";
    }
    first = false;
    std::string mono;
    auto append_var = [&mono](const char* v, int p) {
      if (p == 0) return;
      if (!mono.empty()) mono += "*";
      mono += v;
      if (p > 1) mono += "^" + std::to_string(p);
    };
    append_var(v0, e.first);
    append_var(v1, e.second);
    if (mono.empty()) {
      out += format_scalar_short(mag);
    } else if (mag == 1) {
      out += mono;
    } else {
      out += format_scalar_short(mag) + "*" + mono;
    }
  }
  return out;
}

ParamPoly pochhammer(const Affine& base, int n) {
  if (n < 0) throw std::domain_error("pochhammer with negative length");
  ParamPoly out(ExactScalar(1));
  for (int i = 0; i < n; ++i) {
    out = out.times(base + Affine(i));
    if (out.is_zero()) break;
  }
  return out;
}

}  // namespace dunkl
