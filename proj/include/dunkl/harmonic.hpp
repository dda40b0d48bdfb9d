#pragma once

#include "dunkl/dunkl.hpp"
#include "dunkl/multipoly.hpp"

#include <string>
#include <string_view>
#include <utility>

namespace dunkl {

/// Which member of the harmonic family: f_n itself, its symmetric part f_n^0
/// or its antisymmetric part f_n^1.
enum class Variant { Full, Real, Imag };

Variant parse_variant(std::string_view name);
std::string variant_name(Variant v);

/// c(f_n^v; a, b) straight from the E-function formulas; zero off the support.
ParamRat harmonic_coeff(int n, Variant v, int a, int b);

/// f_n^v assembled from harmonic_coeff. Cached.
MultiPoly f_coeff_form(int n, Variant v);

/// f_n^v expanded from its Jacobi-polynomial definition.
MultiPoly f_definitional(int n, Variant v);

/// f_n^v(z^s, zbar^s)
MultiPoly f_of_power(int n, Variant v, int s);

/// Reciprocal squared norms. lambda(0, Real) = lambda(0, Full) = 1 and
/// lambda(0, Imag) = 0 by convention.
ParamRat lambda_const(int n, Variant v);
/// Squared norm 1/lambda; throws std::domain_error where lambda is zero.
ParamRat norm_sq(int n, Variant v);

/// <f_n(z^s), z^s f_{n-1}(z^s)>, n >= 1.
ParamRat nu_const(int n);
ParamRat nu_inv(int n);

/// Harmonic basis of degree N for I2(2s).
std::pair<MultiPoly, MultiPoly> basis_H(const GroupParam& g, int N);

/// Normalized moment of t^j against (1-t)^{k0-1/2} (1+t)^{k1-1/2} on [-1, 1].
ParamRat jacobi_power_moment(int j);

/// Integral of z^a zbar^b over the circle against the normalized measure.
ParamRat circle_moment(const GroupParam& g, int a, int b);

/// <f, h> = integral of f(z) h(zbar, z).
ParamRat inner_product(const MultiPoly& f, const MultiPoly& h, const GroupParam& g);

}  // namespace dunkl
