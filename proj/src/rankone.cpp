#include "stiefel/rankone.hpp"

#include <cmath>
#include <numbers>

#include "stiefel/error.hpp"
#include "stiefel/manifold.hpp"
#include "stiefel/quadrature.hpp"
#include "stiefel/transforms.hpp"

namespace stiefel::rankone {

namespace {
constexpr double kPi = std::numbers::pi;

Eigen::VectorXd last_axis(int n) {
  Eigen::VectorXd e = Eigen::VectorXd::Zero(n);
  e(n - 1) = 1.0;
  return e;
}

// (exp(s L) - 1) / s, continuous at s = 0.
complex expm1_over(complex s, double log_t) {
  const complex w = s * log_t;
  if (std::abs(w) < 1e-3) {
    return log_t * (1.0 + w / 2.0 + w * w / 6.0 + w * w * w / 24.0);
  }
  return (std::exp(w) - 1.0) / s;
}
}  // namespace

double gegenbauer(int j, double order, double t) {
  if (j < 0) throw ConfigError("gegenbauer needs j >= 0");
  if (!(order > -0.5)) throw ConfigError("gegenbauer needs order > -1/2");
  if (j == 0) return 1.0;
  if (order == 0.0) {
    double p0 = 1.0;
    double p1 = t;
    for (int i = 2; i <= j; ++i) {
      const double p2 = 2.0 * t * p1 - p0;
      p0 = p1;
      p1 = p2;
    }
    return p1;
  }
  double p0 = 1.0;
  double p1 = 2.0 * order * t;
  for (int i = 2; i <= j; ++i) {
    const double p2 = (2.0 * t * (i + order - 1.0) * p1 - (i + 2.0 * order - 2.0) * p0) / i;
    p0 = p1;
    p1 = p2;
  }
  return p1;
}

ZonalFunction::ZonalFunction(int n, int degree) : ZonalFunction(n, degree, last_axis(n)) {}

ZonalFunction::ZonalFunction(int n, int degree, Eigen::VectorXd axis)
    : n_(n), degree_(degree), axis_(std::move(axis)) {
  if (n < 2) throw DimensionError("zonal functions need n >= 2");
  if (degree < 0) throw ConfigError("zonal degree must be >= 0");
  if (axis_.size() != n) throw DimensionError("zonal axis has the wrong length");
  if (std::abs(axis_.norm() - 1.0) > 1e-10) throw FrameError("zonal axis must be a unit vector");
}

ManifoldFunction ZonalFunction::as_manifold_function() const {
  return zonal_function(n_, degree_, axis_);
}

double zonal_eigen_residual(int n, int j, double t, double h) {
  const double nu = 0.5 * (n - 2);
  auto g = [&](double x) { return gegenbauer(j, nu, x); };
  const double d1 = (g(t + h) - g(t - h)) / (2.0 * h);
  const double d2 = (g(t + h) - 2.0 * g(t) + g(t - h)) / (h * h);
  const double lap = (1.0 - t * t) * d2 - (n - 1.0) * t * d1;
  return std::abs(lap + j * (j + n - 2.0) * g(t));
}

double HarmonicExpansion::operator()(double t) const {
  const double nu = 0.5 * (n - 2);
  double sum = 0.0;
  for (std::size_t j = 0; j < coefficients.size(); ++j) {
    sum += coefficients[j] * gegenbauer(static_cast<int>(j), nu, t);
  }
  return sum;
}

HarmonicExpansion expand_zonal(const std::function<double(double)>& f, int n, int J, int nodes) {
  if (n < 2) throw DimensionError("expand_zonal needs n >= 2");
  if (J < 0) throw ConfigError("expand_zonal needs J >= 0");
  if (4 * J > nodes) {
    throw QuadratureDegreeError("expand_zonal: J = " + std::to_string(J) + " exceeds " +
                                std::to_string(nodes) + " nodes / 4");
  }
  const double nu = 0.5 * (n - 2);
  // t = cos(theta); (1 - t^2)^{(n-3)/2} dt = sin^{n-2}(theta) dtheta.
  const QuadratureRule rule = gauss_legendre(nodes, 0.0, kPi);
  std::vector<double> ts(rule.nodes.size());
  std::vector<double> ws(rule.nodes.size());
  std::vector<double> fs(rule.nodes.size());
  for (std::size_t q = 0; q < ts.size(); ++q) {
    ts[q] = std::cos(rule.nodes[q]);
    ws[q] = rule.weights[q] * std::pow(std::sin(rule.nodes[q]), n - 2);
    fs[q] = f(ts[q]);
  }
  HarmonicExpansion out;
  out.n = n;
  out.coefficients.assign(static_cast<std::size_t>(J + 1), 0.0);
  for (int j = 0; j <= J; ++j) {
    double num = 0.0;
    double den = 0.0;
    for (std::size_t q = 0; q < ts.size(); ++q) {
      const double c = gegenbauer(j, nu, ts[q]);
      num += ws[q] * fs[q] * c;
      den += ws[q] * c * c;
    }
    out.coefficients[static_cast<std::size_t>(j)] = num / den;
  }
  double err = 0.0;
  for (std::size_t q = 0; q < ts.size(); ++q) {
    const double d = fs[q] - out(ts[q]);
    err += ws[q] * d * d;
  }
  out.reconstruction_error = std::sqrt(err);
  return out;
}

std::string to_string(MultiplierPath p) {
  switch (p) {
    case MultiplierPath::automatic:
      return "auto";
    case MultiplierPath::direct:
      return "direct";
    case MultiplierPath::continued:
      return "continued";
  }
  return "auto";
}

MultiplierPath resolve_multiplier_path(ComplexParam lam, int n, MultiplierPath requested) {
  const double rho = 0.5 * n;
  const double s = lam.re() - rho;
  MultiplierPath path = requested;
  if (path == MultiplierPath::automatic) {
    path = s >= -0.25 ? MultiplierPath::direct : MultiplierPath::continued;
  }
  if (path == MultiplierPath::direct && !(s > -1.0)) {
    throw ConvergenceDomainError("Cos^lambda needs Re lambda > rho - 1 = " + std::to_string(rho - 1));
  }
  if (path == MultiplierPath::continued && !(s > -2.0)) {
    throw ConvergenceDomainError("continued Cos^lambda needs Re lambda > rho - 2 = " +
                                 std::to_string(rho - 2));
  }
  return path;
}

MCEstimate cos_lambda_multiplier_mc(int j, ComplexParam lam, int n, std::size_t n_samples,
                                    const SeededRng& rng, MultiplierPath path,
                                    const std::optional<Eigen::VectorXd>& u, const McOptions& opt) {
  if (n < 2) throw DimensionError("rank-one transforms need n >= 2");
  if (j < 0) throw ConfigError("harmonic degree must be >= 0");
  if (n_samples == 0) n_samples = default_sample_count(1);
  const ZonalFunction y(n, j);
  const Eigen::VectorXd point = u.value_or(y.axis());
  if (point.size() != n || std::abs(point.norm() - 1.0) > 1e-10) {
    throw FrameError("evaluation point must be a unit vector in R^n");
  }
  const double y_at_u = y(point);
  if (std::abs(y_at_u) < 1e-3) throw ConfigError("harmonic nearly vanishes at the evaluation point");

  const double rho = 0.5 * n;
  const complex s = lam.value() - rho;
  const MultiplierPath resolved = resolve_multiplier_path(lam, n, path);
  const double sqrt_pi = std::sqrt(kPi);
  const double gamma_rho = std::tgamma(rho);

  std::function<complex(double)> kernel;  // of |u . v|, times Y_j(v) afterwards
  if (resolved == MultiplierPath::direct) {
    if (j == 0) {
      const complex norm = sqrt_pi * gamma(-s / 2.0) * reciprocal_gamma((s + 1.0) / 2.0) / gamma_rho;
      kernel = [norm, s](double a) -> complex {
        const auto p = kernel_power(a, s);
        return p ? norm * *p : complex(std::numeric_limits<double>::quiet_NaN());
      };
    } else {
      // The harmonic has mean zero, so the kernel may be shifted by a
      // constant; this keeps lambda = rho finite.
      const complex norm =
          -2.0 * sqrt_pi * gamma(1.0 - s / 2.0) * reciprocal_gamma((s + 1.0) / 2.0) / gamma_rho;
      kernel = [norm, s](double a) -> complex {
        if (!(a > 0.0)) return complex(std::numeric_limits<double>::quiet_NaN());
        return norm * expm1_over(s, std::log(a));
      };
    }
  } else {
    const double eig = j * (j + n - 2.0);
    const complex factor = sqrt_pi * gamma(-s / 2.0) * reciprocal_gamma((s + 3.0) / 2.0) /
                           (2.0 * gamma_rho) * ((s + 2.0) * (s + static_cast<double>(n)) - eig) /
                           (s + 2.0);
    const complex e = s + 2.0;
    kernel = [factor, e](double a) -> complex {
      const auto p = kernel_power(a, e);
      return p ? factor * *p : complex(std::numeric_limits<double>::quiet_NaN());
    };
  }

  auto sample = [&](Engine& eng) {
    SampleValues<1> out;
    const Frame v = haar_frame(eng, n, 1);
    const Eigen::VectorXd col = v.matrix().col(0);
    const complex k = kernel(std::abs(col.dot(point)));
    if (!std::isfinite(k.real()) || !std::isfinite(k.imag())) {
      out.rejected = true;
      return out;
    }
    out.values[0] = k * y(col) / y_at_u;
    return out;
  };
  return monte_carlo_multi<1>(n_samples, rng, sample, opt).estimates[0];
}

CompositionReport composition_identity_check(int n, int j_max, const std::vector<complex>& lam_grid) {
  const double rho = 0.5 * n;
  CompositionReport out;
  for (const complex& l : lam_grid) {
    if (near_positive_integer(l + 1.0 - rho) || near_positive_integer(-l + 1.0 - rho)) {
      throw ExcludedParamError("composition needs +-lambda + 1 - rho outside {1, 2, ...}");
    }
    for (int j = 0; j <= j_max; j += 2) {
      const complex prod = multiplier_c(j, l, n) * multiplier_c(j, -l, n);
      const double dev = std::abs(prod - 1.0);
      ++out.checked;
      if (dev >= out.max_deviation) {
        out.max_deviation = dev;
        out.worst_j = j;
        out.worst_lambda = l;
      }
    }
  }
  return out;
}

double funk_limit_multiplier(int j, int n) {
  if (j < 0) throw ConfigError("harmonic degree must be >= 0");
  if (j % 2 == 1) return 0.0;
  const double sign = (j / 2) % 2 == 0 ? 1.0 : -1.0;
  return sign * std::exp(std::lgamma(0.5 * (j + 1)) + std::lgamma(0.5 * n) -
                         std::lgamma(0.5 * (j + n - 1))) /
         kPi;
}

FunkCheckReport funk_multiplier_check(int j, int n, std::size_t n_samples, const SeededRng& rng,
                                      double tilt, const McOptions& opt) {
  if (n < 3) throw DimensionError("funk_multiplier_check needs n >= 3");
  if (j % 2 == 1) throw ConfigError("funk_multiplier_check needs even j");
  if (!(std::abs(tilt) < 1.0)) throw ConfigError("tilt must lie in (-1, 1)");
  FunkCheckReport r;
  r.j = j;
  r.n = n;
  r.algebraic = funk_limit_multiplier(j, n);
  r.c11 = funk_const(n, 1, 1);
  const double nu = 0.5 * (n - 2);
  r.funk_oracle = gegenbauer(j, nu, 0.0) / gegenbauer(j, nu, 1.0);

  const ZonalFunction y(n, j);
  Matrix u = Matrix::Zero(n, 1);
  u(0, 0) = std::sqrt(1.0 - tilt * tilt);
  u(n - 1, 0) = tilt;
  const double y_at_u = y(u.col(0));
  if (std::abs(y_at_u) < 1e-3) throw ConfigError("harmonic nearly vanishes at the tilted point");
  MCEstimate f = funk_transform(y.as_manifold_function(), Frame::from_matrix(u), n_samples, rng,
                                Completion::deterministic, opt);
  f.value /= y_at_u;
  f.stderr /= std::abs(y_at_u);
  r.empirical = f;
  r.scaled = r.c11 * f.value;
  r.scaled_stderr = r.c11 * f.stderr;
  r.sigma = sigma_distance(r.scaled, r.algebraic, r.scaled_stderr);
  r.oracle_sigma = sigma_distance(f.value, r.funk_oracle, f.stderr);
  r.pass = r.sigma <= 4.0 && r.oracle_sigma <= 4.0;
  return r;
}

DecayReport multiplier_decay_check(ComplexParam lam, int j_max, int n) {
  if (j_max < 8) throw ConfigError("multiplier_decay_check needs j_max >= 8");
  DecayReport r;
  r.lambda = lam.value();
  r.n = n;
  r.j_max = j_max;
  r.expected = -lam.re();
  const complex l = lam.value();
  const double rho = 0.5 * n;
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  int count = 0;
  int j0 = j_max / 2;
  if (j0 % 2 == 1) ++j0;
  for (int j = j0; j <= j_max; j += 2) {
    // log|c| directly from log-gammas; large j overflows the gamma values.
    const complex lc = log_gamma(0.5 * (j + rho - l)) - log_gamma(0.5 * (j + rho + l));
    const double x = std::log(static_cast<double>(j));
    const double yv = lc.real();
    sx += x;
    sy += yv;
    sxx += x * x;
    sxy += x * yv;
    ++count;
  }
  r.slope = (count * sxy - sx * sy) / (count * sxx - sx * sx);
  r.pass = std::abs(r.slope - r.expected) <= 0.05;
  return r;
}

}  // namespace stiefel::rankone
