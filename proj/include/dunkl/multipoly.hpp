#pragma once

#include "dunkl/param_rat.hpp"
#include "dunkl/scalar.hpp"

#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>

namespace dunkl {

namespace detail {
inline bool coeff_is_zero(const ParamRat& c) { return c.is_zero(); }
inline bool coeff_is_zero(const ExactScalar& c) { return c == 0; }
}  // namespace detail

/// Sparse polynomial in (z, zbar) or (z, zbar, w, wbar). Exponent tuples are
/// always four wide; for arity 2 the last two stay zero.
template <class Coeff>
class BasicMultiPoly {
 public:
  using Exps = std::array<int, 4>;
  using TermMap = std::map<Exps, Coeff>;

  explicit BasicMultiPoly(int arity = 2) : arity_(arity) {
    if (arity != 2 && arity != 4) throw std::invalid_argument("arity must be 2 or 4");
  }

  static BasicMultiPoly constant(const Coeff& c, int arity = 2) {
    BasicMultiPoly p(arity);
    p.add_term({0, 0, 0, 0}, c);
    return p;
  }
  static BasicMultiPoly monomial(int a, int b, const Coeff& c = Coeff(1)) {
    BasicMultiPoly p(2);
    p.add_term({a, b, 0, 0}, c);
    return p;
  }
  static BasicMultiPoly monomial4(const Exps& e, const Coeff& c = Coeff(1)) {
    BasicMultiPoly p(4);
    p.add_term(e, c);
    return p;
  }

  int arity() const { return arity_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Coefficient of z^a zbar^b; zero for any negative index.
  Coeff coeff(int a, int b) const { return coeff(Exps{a, b, 0, 0}); }
  Coeff coeff(const Exps& e) const {
    for (int x : e) {
      if (x < 0) return Coeff(0);
    }
    auto it = terms_.find(e);
    return it == terms_.end() ? Coeff(0) : it->second;
  }

  void add_term(const Exps& e, const Coeff& c) {
    for (int x : e) {
      if (x < 0) throw std::invalid_argument("negative exponent");
    }
    if (arity_ == 2 && (e[2] != 0 || e[3] != 0)) throw std::invalid_argument("w exponent in arity-2 polynomial");
    if (detail::coeff_is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (detail::coeff_is_zero(it->second)) terms_.erase(it);
    }
  }

  BasicMultiPoly operator-() const {
    BasicMultiPoly out = *this;
    for (auto& [e, c] : out.terms_) c = -c;
    return out;
  }
  BasicMultiPoly& operator+=(const BasicMultiPoly& o) {
    check_arity(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  BasicMultiPoly& operator-=(const BasicMultiPoly& o) {
    check_arity(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  BasicMultiPoly& operator*=(const Coeff& k) {
    if (detail::coeff_is_zero(k)) {
      terms_.clear();
      return *this;
    }
    for (auto it = terms_.begin(); it != terms_.end();) {
      it->second *= k;
      it = detail::coeff_is_zero(it->second) ? terms_.erase(it) : std::next(it);
    }
    return *this;
  }
  friend BasicMultiPoly operator+(BasicMultiPoly x, const BasicMultiPoly& y) { return x += y; }
  friend BasicMultiPoly operator-(BasicMultiPoly x, const BasicMultiPoly& y) { return x -= y; }
  friend BasicMultiPoly operator*(BasicMultiPoly x, const Coeff& k) { return x *= k; }
  friend BasicMultiPoly operator*(const Coeff& k, BasicMultiPoly x) { return x *= k; }
  friend BasicMultiPoly operator*(const BasicMultiPoly& x, const BasicMultiPoly& y) {
    x.check_arity(y);
    BasicMultiPoly out(x.arity_);
    for (const auto& [ex, cx] : x.terms_) {
      for (const auto& [ey, cy] : y.terms_) {
        out.add_term({ex[0] + ey[0], ex[1] + ey[1], ex[2] + ey[2], ex[3] + ey[3]}, cx * cy);
      }
    }
    return out;
  }
  friend bool operator==(const BasicMultiPoly& x, const BasicMultiPoly& y) {
    if (x.arity_ != y.arity_ || x.terms_.size() != y.terms_.size()) return false;
    auto it = y.terms_.begin();
    for (const auto& [e, c] : x.terms_) {
      if (it->first != e || !(it->second == c)) return false;
      ++it;
    }
    return true;
  }

  /// Interchanges z and zbar (and w, wbar for arity 4).
  BasicMultiPoly conjugate_swap() const {
    BasicMultiPoly out(arity_);
    for (const auto& [e, c] : terms_) out.terms_.emplace(Exps{e[1], e[0], e[3], e[2]}, c);
    return out;
  }

  /// Interchanges the (z, zbar) pair with the (w, wbar) pair.
  BasicMultiPoly swap_pairs() const {
    require_arity(4);
    BasicMultiPoly out(4);
    for (const auto& [e, c] : terms_) out.terms_.emplace(Exps{e[2], e[3], e[0], e[1]}, c);
    return out;
  }

  /// z^a zbar^b -> z^{as} zbar^{bs}.
  BasicMultiPoly substitute_power(int s) const {
    require_arity(2);
    if (s < 1) throw std::invalid_argument("power must be positive");
    BasicMultiPoly out(2);
    for (const auto& [e, c] : terms_) out.terms_.emplace(Exps{e[0] * s, e[1] * s, 0, 0}, c);
    return out;
  }

  /// Multiplies by z^a zbar^b (w^c wbar^d).
  BasicMultiPoly shift(const Exps& by) const {
    BasicMultiPoly out(arity_);
    for (const auto& [e, c] : terms_) {
      out.add_term({e[0] + by[0], e[1] + by[1], e[2] + by[2], e[3] + by[3]}, c);
    }
    return out;
  }

  /// f(z, zbar) viewed as a polynomial in all four variables.
  BasicMultiPoly embed_z() const {
    require_arity(2);
    BasicMultiPoly out(4);
    for (const auto& [e, c] : terms_) out.terms_.emplace(Exps{e[0], e[1], 0, 0}, c);
    return out;
  }
  /// f(w, wbar).
  BasicMultiPoly embed_w() const {
    require_arity(2);
    BasicMultiPoly out(4);
    for (const auto& [e, c] : terms_) out.terms_.emplace(Exps{0, 0, e[0], e[1]}, c);
    return out;
  }
  /// f(wbar, w): z goes to wbar and zbar to w.
  BasicMultiPoly embed_w_conj() const {
    require_arity(2);
    BasicMultiPoly out(4);
    for (const auto& [e, c] : terms_) out.terms_.emplace(Exps{0, 0, e[1], e[0]}, c);
    return out;
  }

  /// Common total degree in (z, zbar) if all terms share one; nullopt for zero
  /// or inhomogeneous input.
  std::optional<int> homogeneous_degree() const {
    if (terms_.empty()) return std::nullopt;
    const int d = terms_.begin()->first[0] + terms_.begin()->first[1];
    for (const auto& [e, c] : terms_) {
      if (e[0] + e[1] != d) return std::nullopt;
    }
    return d;
  }

  template <class Fn>
  auto map_coeffs(Fn&& fn) const {
    using Out = std::decay_t<decltype(fn(std::declval<const Coeff&>()))>;
    BasicMultiPoly<Out> out(arity_);
    for (const auto& [e, c] : terms_) out.add_term(e, fn(c));
    return out;
  }

 private:
  void check_arity(const BasicMultiPoly& o) const {
    if (o.arity_ != arity_) throw std::invalid_argument("arity mismatch");
  }
  void require_arity(int a) const {
    if (arity_ != a) throw std::invalid_argument("unexpected arity");
  }

  int arity_;
  TermMap terms_;
};

/// Polynomial over Q(k0, k1).
using MultiPoly = BasicMultiPoly<ParamRat>;
/// Polynomial with plain rational coefficients (specialized parameters).
using ScalarPoly = BasicMultiPoly<ExactScalar>;

inline ScalarPoly specialize(const MultiPoly& f, const ExactScalar& k0, const ExactScalar& k1) {
  return f.map_coeffs([&](const ParamRat& c) { return c.specialize(k0, k1); });
}

inline MultiPoly z_poly() { return MultiPoly::monomial(1, 0); }
inline MultiPoly zbar_poly() { return MultiPoly::monomial(0, 1); }

}  // namespace dunkl
