#pragma once

// Zeta integrals Z(f, alpha - n) = int f(x) |x|_m^{alpha-n} dx over n x m
// real matrices, the Cayley-Laplace operator det(d'd), and the Bernstein
// identity used to continue Z below its convergence strip.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "stiefel/gamma.hpp"
#include "stiefel/manifold.hpp"
#include "stiefel/monte_carlo.hpp"
#include "stiefel/polynomial.hpp"

namespace stiefel::zeta {

/// A point of matrix space with finite entries.
class MatrixSpacePoint {
 public:
  explicit MatrixSpacePoint(Matrix x);
  int n() const { return static_cast<int>(x_.rows()); }
  int m() const { return static_cast<int>(x_.cols()); }
  const Matrix& matrix() const { return x_; }

 private:
  Matrix x_;
};

/// |x|_m = det(x'x)^{1/2}.
double abs_det(const Matrix& x);

enum class Family { gaussian, gaussian_times_poly };

/// p(x) exp(-tr x'x). The plain Gaussian has p = 1.
class SchwartzTestFunction {
 public:
  static SchwartzTestFunction gaussian(int n, int m);
  static SchwartzTestFunction gaussian_times_poly(Polynomial p);
  /// Registry: "gaussian", "gaussian_trace" (p = 1 + tr x'x).
  static SchwartzTestFunction from_name(const std::string& name, int n, int m);

  int n() const { return poly_.n(); }
  int m() const { return poly_.m(); }
  Family family() const { return family_; }
  const Polynomial& polynomial() const { return poly_; }
  double operator()(const Matrix& x) const;

  /// Closed-form image under the Cayley-Laplace operator applied `times` times.
  SchwartzTestFunction cayley_laplace(int times = 1) const;

 private:
  SchwartzTestFunction(Family family, Polynomial p) : family_(family), poly_(std::move(p)) {}
  Family family_;
  Polynomial poly_;
};

struct QuadratureSpec {
  std::size_t n_samples = 200'000;
  std::uint64_t seed = 0;
  // Matrix-gamma shapes of the proposal are set from this parameter
  // (defaults to Re alpha of the integral being estimated). Fixing it lets
  // several alphas share the same draws.
  std::optional<double> proposal_alpha;
  McOptions mc = default_mc_options();
};

/// int integrand(x, |x|_m) dx via x = Q R (Q Haar, R upper triangular) with
/// independent gamma-distributed squared diagonal entries of R.
MCEstimate integrate_matrix_space(const std::function<complex(const Matrix&, double)>& integrand,
                                  int n, int m, double proposal_alpha, const QuadratureSpec& spec);

/// Direct zeta integral; Re alpha > m - 1.
MCEstimate zeta_integral(const SchwartzTestFunction& f, ComplexParam alpha, const QuadratureSpec& spec);

/// 2^{-m} sigma_{n,m} Gamma_m(alpha/2), the value for the plain Gaussian.
complex gaussian_zeta_closed_form(int n, int m, ComplexParam alpha);

/// Finite-difference det(d'd) f at x, m <= 2. Fourth-order five-point stencils
/// for m = 1; products of fourth-order central stencils with one Richardson
/// step for m = 2.
double cayley_laplace(const std::function<double(const Matrix&)>& f, const MatrixSpacePoint& x,
                      double step = 1e-2);
/// Exact det(d'd) f at x for the Gaussian family.
double cayley_laplace_exact(const SchwartzTestFunction& f, const Matrix& x);

struct BernsteinResidual {
  double fd_value = 0.0;     // finite-difference det(d'd) |x|^{alpha+2-n}
  double exact_value = 0.0;  // B_1(alpha) |x|^{alpha-n}
  double residual = 0.0;
  bool relative = true;  // false when B_1(alpha) = 0 and the absolute form is used
};

/// The difference step is relative_step * sqrt(lambda_min(x'x)), so the
/// relative accuracy does not depend on the scale of x. Defaults: 1e-2 for
/// m = 1, 5e-2 for m = 2.
BernsteinResidual bernstein_identity_residual(double alpha, int ell, const MatrixSpacePoint& x,
                                              std::optional<double> relative_step = std::nullopt);

enum class ZetaPath { direct, continued };
std::string to_string(ZetaPath p);

struct ZetaValue {
  MCEstimate estimate;
  ZetaPath path = ZetaPath::direct;
  int ell = 0;
};

/// Z(Delta^ell f, alpha + 2 ell - n) / B_ell(alpha); Re alpha > m - 1 - 2 ell.
MCEstimate bernstein_continuation(const SchwartzTestFunction& f, ComplexParam alpha, int ell,
                                  const QuadratureSpec& spec);

/// Direct integral inside the strip, otherwise the continuation with the
/// smallest admissible ell.
ZetaValue zeta_value(const SchwartzTestFunction& f, ComplexParam alpha, const QuadratureSpec& spec);

struct LimitResult {
  std::vector<double> alphas;
  std::vector<MCEstimate> samples;  // Z(f, alpha - n) / Gamma(alpha/2) at each alpha
  double extrapolated = 0.0;
  double reference = 0.0;  // pi^{n/2} / Gamma(n/2) f(0)
};

/// a.c. of Z(f, alpha - n)/Gamma(alpha/2) at alpha = 0 for m = 1, from the
/// one-step continuation on a geometric alpha grid (shared draws) and
/// Richardson extrapolation.
LimitResult normalized_zeta_limit(const SchwartzTestFunction& f, const QuadratureSpec& spec,
                                  std::vector<double> alphas = {0.1, 0.05, 0.025});

}  // namespace stiefel::zeta
