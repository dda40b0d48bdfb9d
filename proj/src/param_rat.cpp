#include "dunkl/param_rat.hpp"

#include "dunkl/errors.hpp"

#include <algorithm>
#include <stdexcept>

namespace dunkl {

namespace {

// Multiplies num by every form of `extra`, respecting multiplicities.
void times_forms(ParamPoly& num, const ParamRat::Denominator& extra) {
  for (const auto& [form, mult] : extra) {
    for (int i = 0; i < mult; ++i) num = num.times(form.as_affine());
  }
}

// Cancels factors of den against num as far as they divide.
void cancel_into(ParamPoly& num, ParamRat::Denominator& den) {
  if (num.is_zero()) {
    den.clear();
    return;
  }
  for (auto it = den.begin(); it != den.end();) {
    while (it->second > 0) {
      auto q = num.divide_exact(it->first);
      if (!q) break;
      num = std::move(*q);
      --it->second;
    }
    it = it->second == 0 ? den.erase(it) : std::next(it);
  }
}

}  // namespace

ParamRat::ParamRat(const ExactScalar& constant) : num_(constant) { canonicalize(); }

ParamRat::ParamRat(const ParamPoly& poly) : num_(poly) { canonicalize(); }

ParamRat::ParamRat(const Affine& value) : num_(value) { canonicalize(); }

void ParamRat::canonicalize() {
  if (num_.is_zero()) {
    den_.clear();
    scale_ = 1;
    return;
  }
  const ExactScalar g = num_.content();
  if (g != 1) num_ *= 1 / g;
  scale_ *= g;
  if (scale_ < 0) {
    scale_ = -scale_;
    num_ = -num_;
  }
}

ParamRat ParamRat::reduce(ParamPoly num, Denominator den, const ExactScalar& scale) {
  ParamRat out;
  for (auto it = den.begin(); it != den.end();) {
    it = it->second <= 0 ? den.erase(it) : std::next(it);
  }
  cancel_into(num, den);
  out.num_ = std::move(num);
  out.den_ = std::move(den);
  out.scale_ = scale;
  out.canonicalize();
  return out;
}

ParamRat ParamRat::factored(const ExactScalar& c, std::span<const Affine> num, std::span<const Affine> den) {
  ExactScalar scale = c;
  std::map<LinearForm, int> count;
  for (const Affine& f : den) {
    if (f.is_zero()) throw DegenerateDenominator("zero factor in denominator");
    if (f.is_constant()) {
      scale /= f.c;
      continue;
    }
    auto [k, form] = LinearForm::normalize(f);
    scale /= k;
    --count[form];
  }
  for (const Affine& f : num) {
    if (f.is_zero()) return ParamRat{};
    if (f.is_constant()) {
      scale *= f.c;
      continue;
    }
    auto [k, form] = LinearForm::normalize(f);
    scale *= k;
    ++count[form];
  }
  if (scale == 0) return ParamRat{};
  ParamPoly p(ExactScalar(1));
  Denominator d;
  for (const auto& [form, e] : count) {
    if (e > 0) {
      for (int i = 0; i < e; ++i) p = p.times(form.as_affine());
    } else if (e < 0) {
      d.emplace(form, -e);
    }
  }
  ParamRat out;
  out.num_ = std::move(p);
  out.den_ = std::move(d);
  out.scale_ = scale;
  out.canonicalize();
  return out;
}

ParamRat ParamRat::rising(const Affine& base, int n) {
  if (n < 0) throw std::domain_error("rising factorial with negative length");
  std::vector<Affine> factors;
  factors.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) factors.push_back(base + Affine(i));
  return factored(1, factors, {});
}

ParamRat ParamRat::inv_rising(const Affine& base, int n) {
  if (n < 0) throw std::domain_error("rising factorial with negative length");
  std::vector<Affine> factors;
  factors.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) factors.push_back(base + Affine(i));
  return factored(1, {}, factors);
}

int ParamRat::multiplicity(const LinearForm& form) const {
  auto it = den_.find(form);
  return it == den_.end() ? 0 : it->second;
}

ParamRat ParamRat::operator-() const {
  ParamRat out = *this;
  out.num_ = -out.num_;
  return out;
}

ParamRat& ParamRat::operator+=(const ParamRat& other) {
  if (other.is_zero()) return *this;
  if (is_zero()) return *this = other;
  if (den_ == other.den_) {
    ParamPoly sum = num_ * scale_ + other.num_ * other.scale_;
    Denominator den = den_;
    return *this = reduce(std::move(sum), std::move(den));
  }
  Denominator den = den_;
  for (const auto& [form, mult] : other.den_) {
    int& slot = den[form];
    slot = std::max(slot, mult);
  }
  Denominator extra_x;
  Denominator extra_y;
  for (const auto& [form, mult] : den) {
    if (int e = mult - multiplicity(form); e > 0) extra_x.emplace(form, e);
    if (int e = mult - other.multiplicity(form); e > 0) extra_y.emplace(form, e);
  }
  ParamPoly nx = num_ * scale_;
  ParamPoly ny = other.num_ * other.scale_;
  times_forms(nx, extra_x);
  times_forms(ny, extra_y);
  return *this = reduce(nx + ny, std::move(den));
}

ParamRat& ParamRat::operator-=(const ParamRat& other) { return *this += -other; }

ParamRat& ParamRat::operator*=(const ParamRat& other) { return *this = *this * other; }

ParamRat operator*(const ParamRat& x, const ParamRat& y) {
  if (x.is_zero() || y.is_zero()) return ParamRat{};
  if (y.is_constant()) {
    ParamRat out = x;
    out.scale_ *= y.constant_value();
    out.canonicalize();
    return out;
  }
  if (x.is_constant()) return y * x;
  ParamPoly nx = x.num_;
  ParamPoly ny = y.num_;
  ParamRat::Denominator dx = x.den_;
  ParamRat::Denominator dy = y.den_;
  cancel_into(ny, dx);
  cancel_into(nx, dy);
  for (const auto& [form, mult] : dy) dx[form] += mult;
  ParamRat out;
  out.num_ = nx * ny;
  out.den_ = std::move(dx);
  out.scale_ = x.scale_ * y.scale_;
  out.canonicalize();
  return out;
}

bool operator==(const ParamRat& x, const ParamRat& y) {
  if (x.den_ == y.den_) return x.num_ * x.scale_ == y.num_ * y.scale_;
  ParamRat::Denominator extra_x;
  ParamRat::Denominator extra_y;
  for (const auto& [form, mult] : y.den_) {
    if (int e = mult - x.multiplicity(form); e > 0) extra_x.emplace(form, e);
  }
  for (const auto& [form, mult] : x.den_) {
    if (int e = mult - y.multiplicity(form); e > 0) extra_y.emplace(form, e);
  }
  ParamPoly nx = x.num_ * x.scale_;
  ParamPoly ny = y.num_ * y.scale_;
  times_forms(nx, extra_x);
  times_forms(ny, extra_y);
  return nx == ny;
}

ParamRat ParamRat::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  if (!num_.is_constant()) throw std::domain_error("inverse of a non-factored rational function");
  ParamRat out;
  ParamPoly p(ExactScalar(1));
  times_forms(p, den_);
  out.num_ = std::move(p);
  out.scale_ = 1 / (scale_ * num_.constant_term());
  out.canonicalize();
  return out;
}

ExactScalar ParamRat::specialize(const ExactScalar& k0, const ExactScalar& k1) const {
  ExactScalar d = 1;
  for (const auto& [form, mult] : den_) {
    const ExactScalar v = form.eval(k0, k1);
    if (v == 0) throw PoleError("denominator " + form.to_string() + " vanishes");
    for (int i = 0; i < mult; ++i) d *= v;
  }
  return scale_ * num_.eval(k0, k1) / d;
}

double ParamRat::eval(double k0, double k1) const {
  double d = 1.0;
  for (const auto& [form, mult] : den_) {
    const double v = form.as_affine().eval(k0, k1);
    for (int i = 0; i < mult; ++i) d *= v;
  }
  return scale_.get_d() * num_.eval(k0, k1) / d;
}

ParamRat ParamRat::substitute(const Affine& r0, const Affine& r1) const {
  ExactScalar scale = scale_;
  Denominator den;
  for (const auto& [form, mult] : den_) {
    const Affine image = form.a() * r0 + form.b() * r1 + Affine(form.c());
    if (image.is_zero()) throw PoleError("denominator " + form.to_string() + " vanishes identically");
    if (image.is_constant()) {
      for (int i = 0; i < mult; ++i) scale /= image.c;
      continue;
    }
    auto [k, nf] = LinearForm::normalize(image);
    for (int i = 0; i < mult; ++i) scale /= k;
    den[nf] += mult;
  }
  return reduce(num_.substitute(r0, r1), std::move(den), scale);
}

std::string ParamRat::to_string(const char* v0, const char* v1) const {
  if (is_zero()) return "0";
  const std::string top = (num_ * scale_).to_string(v0, v1);
  if (den_.empty()) return top;
  std::string bottom;
  std::size_t nfactors = 0;
  for (const auto& [form, mult] : den_) {
    if (!bottom.empty()) bottom += "*";
    bottom += "(" + form.to_string(v0, v1) + ")";
    if (mult > 1) bottom += "^" + std::to_string(mult);
    ++nfactors;
  }
  const bool single_top = (num_ * scale_).terms().size() == 1;
  std::string out = single_top ? top : "(" + top + ")";
  out += "/";
  out += (nfactors == 1 && den_.begin()->second == 1) ? bottom : "(" + bottom + ")";
  return out;
}

}  // namespace dunkl
