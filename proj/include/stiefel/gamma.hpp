#pragma once

// Scalar and matrix-argument gamma functions, plus the normalization
// constants built from them.

#include <complex>
#include <limits>

namespace stiefel {

using complex = std::complex<double>;

/// Absolute distance below which an argument is treated as sitting on a pole.
inline constexpr double kPoleEps = 1e-8;

/// A complex transform parameter. Construction rejects NaN and Inf.
class ComplexParam {
 public:
  ComplexParam(double re) : ComplexParam(complex(re, 0.0)) {}  // NOLINT
  ComplexParam(double re, double im) : ComplexParam(complex(re, im)) {}
  ComplexParam(complex v);  // NOLINT

  complex value() const { return value_; }
  double re() const { return value_.real(); }
  double im() const { return value_.imag(); }

 private:
  complex value_;
};

struct GammaEvalResult {
  complex value{std::numeric_limits<double>::quiet_NaN(), 0.0};
  bool at_pole = false;
  double pole_distance = std::numeric_limits<double>::infinity();
};

// Classical gamma of a complex argument (Lanczos, g = 7, with reflection
// for Re z < 1/2). Throws PoleError within kPoleEps of a nonpositive integer.
complex gamma(complex z);
// Analytic-branch log gamma; exp(log_gamma(z)) == gamma(z).
complex log_gamma(complex z);
// 1/Gamma(z); entire, exactly 0 at the poles of gamma.
complex reciprocal_gamma(complex z);

// Distance from z to the nearest nonpositive integer.
double gamma_pole_distance(complex z);

/// Siegel gamma of the cone of positive definite m x m matrices,
/// pi^{m(m-1)/4} prod_{j<m} Gamma(a - j/2). Never throws for m >= 1; a pole
/// is reported through the result flags.
GammaEvalResult siegel_gamma(int m, ComplexParam a);
/// Same value, but throws PoleError at a pole.
complex siegel_gamma_value(int m, ComplexParam a);
complex log_siegel_gamma(int m, ComplexParam a);
// Exactly zero on the polar set.
complex reciprocal_siegel_gamma(int m, ComplexParam a);

/// Total mass 2^m pi^{nm/2} / Gamma_m(n/2) of the invariant measure on V_{n,m}.
double stiefel_volume(int n, int m);

/// prod_{i<m} prod_{j<ell} (a - i + 2j)(a - n + 2 + 2j + i).
complex bernstein_poly(int ell, int m, int n, ComplexParam a);

/// Gamma_m(n/2) / (Gamma_m(k/2) Gamma_m((n-k)/2)); the constant relating the
/// a.c. of the normalized cosine transform at zero to the Funk transform.
double funk_const(int n, int m, int k);

/// Mean of det(v'uu'v)^{(a-k)/2} over the probability measure on V_{n,m}:
/// Gamma_m(n/2) Gamma_m(a/2) / (Gamma_m(k/2) Gamma_m((a-k+n)/2)).
complex cosine_const(int n, int m, int k, ComplexParam a);

/// (Gamma_m(m/2)/Gamma_m(n/2)) (Gamma_m((m-a)/2)/Gamma_m(a/2)), a not in {1,2,...}.
complex delta_norm(int n, int m, ComplexParam a);
/// The same normalization in the lambda-notation, lambda = a - m + n/2.
complex tilde_delta_norm(int n, int m, ComplexParam lam);

/// Eigenvalue of the normalized rank-one Cos^lambda transform on degree-j
/// spherical harmonics of S^{n-1}.
complex multiplier_c(int j, ComplexParam lam, int n);

// True when z is within kPoleEps of one of 1, 2, 3, ...
bool near_positive_integer(complex z);

}  // namespace stiefel
