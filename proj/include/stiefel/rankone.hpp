#pragma once

// The rank-one Cos^lambda transform on S^{n-1} in the spherical-harmonic
// multiplier domain. rho = n/2 and the kernel exponent is lambda - rho.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "stiefel/functions.hpp"
#include "stiefel/gamma.hpp"
#include "stiefel/monte_carlo.hpp"

namespace stiefel::rankone {

/// C_j^{order}(t) by the three-term recurrence; order 0 uses the Chebyshev
/// convention T_j. For order 1/2 this is the Legendre polynomial P_j.
double gegenbauer(int j, double order, double t);

/// v -> C_j^{(n-2)/2}(v . axis).
class ZonalFunction {
 public:
  ZonalFunction(int n, int degree);  // axis e_n
  ZonalFunction(int n, int degree, Eigen::VectorXd axis);

  int n() const { return n_; }
  int degree() const { return degree_; }
  double order() const { return 0.5 * (n_ - 2); }
  const Eigen::VectorXd& axis() const { return axis_; }

  double at(double t) const { return gegenbauer(degree_, order(), t); }
  double operator()(const Eigen::VectorXd& v) const { return at(v.dot(axis_)); }
  ManifoldFunction as_manifold_function() const;

 private:
  int n_;
  int degree_;
  Eigen::VectorXd axis_;
};

/// |Delta_S g + j (j + n - 2) g| at v . axis = t for g = C_j^{(n-2)/2}, with
/// the zonal spherical Laplacian (1 - t^2) g'' - (n - 1) t g' taken by
/// central differences of step h.
double zonal_eigen_residual(int n, int j, double t, double h = 1e-4);

struct HarmonicExpansion {
  int n = 0;
  std::vector<double> coefficients;  // f = sum_j coefficients[j] C_j^{(n-2)/2}
  double reconstruction_error = 0.0;  // quadrature L2 norm of the residual

  double operator()(double t) const;
};

/// Zonal coefficients of f(t), t = v . axis, against the weight
/// (1 - t^2)^{(n-3)/2}. The quadrature is Gauss-Legendre in the polar angle
/// with `nodes` points; J may not exceed nodes / 4.
HarmonicExpansion expand_zonal(const std::function<double(double)>& f, int n, int J,
                               int nodes = 256);

enum class MultiplierPath {
  automatic,  // direct when Re(lambda) - rho >= -1/4, else continued
  direct,     // kernel |u.v|^{lambda-rho}; Re lambda > rho - 1
  continued,  // one spherical-Laplacian step, kernel |u.v|^{lambda-rho+2}; Re lambda > rho - 2
};

std::string to_string(MultiplierPath p);

/// The concrete path (direct or continued) used for lambda on S^{n-1};
/// throws ConvergenceDomainError when the requested path does not converge.
MultiplierPath resolve_multiplier_path(ComplexParam lam, int n, MultiplierPath requested);

/// Empirical c_{j,lambda}: the normalized Cos^lambda of the zonal harmonic of
/// degree j, by Monte Carlo over v, divided by the harmonic at the same point
/// u (default: the axis e_n).
MCEstimate cos_lambda_multiplier_mc(int j, ComplexParam lam, int n, std::size_t n_samples,
                                    const SeededRng& rng,
                                    MultiplierPath path = MultiplierPath::automatic,
                                    const std::optional<Eigen::VectorXd>& u = std::nullopt,
                                    const McOptions& opt = default_mc_options());

struct CompositionReport {
  double max_deviation = 0.0;  // max |c_{j,lambda} c_{j,-lambda} - 1|
  int worst_j = 0;
  complex worst_lambda{0.0, 0.0};
  int checked = 0;
};

/// Even j <= j_max only; odd multipliers vanish.
CompositionReport composition_identity_check(int n, int j_max,
                                             const std::vector<complex>& lam_grid);

/// lim_{lambda -> rho - 1} of the unnormalized multiplier divided by
/// Gamma((lambda + 1 - rho)/2), with the pole cancelled in closed form:
/// (-1)^{j/2} Gamma((j+1)/2) Gamma(n/2) / (pi Gamma((j+n-1)/2)); 0 for odd j.
double funk_limit_multiplier(int j, int n);

struct FunkCheckReport {
  int j = 0;
  int n = 0;
  double algebraic = 0.0;      // funk_limit_multiplier
  double c11 = 0.0;            // funk_const(n, 1, 1)
  MCEstimate empirical;        // Funk multiplier by Monte Carlo
  double funk_oracle = 0.0;    // C_j(0) / C_j(1)
  complex scaled{0.0, 0.0};    // c11 * empirical
  double scaled_stderr = 0.0;
  double sigma = 0.0;          // scaled against algebraic
  double oracle_sigma = 0.0;   // empirical against funk_oracle
  bool pass = false;
};

/// The Funk multiplier is measured at a point u with u . axis = tilt.
FunkCheckReport funk_multiplier_check(int j, int n, std::size_t n_samples, const SeededRng& rng,
                                      double tilt = 0.95,
                                      const McOptions& opt = default_mc_options());

struct DecayReport {
  complex lambda{0.0, 0.0};
  int n = 0;
  int j_max = 0;
  double slope = 0.0;
  double expected = 0.0;  // -Re lambda
  bool pass = false;      // |slope - expected| <= 0.05
};

/// Least-squares slope of log|c_{j,lambda}| against log j over even
/// j in [j_max/2, j_max].
DecayReport multiplier_decay_check(ComplexParam lam, int j_max, int n = 3);

}  // namespace stiefel::rankone
