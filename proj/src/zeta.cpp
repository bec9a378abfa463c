#include "stiefel/zeta.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "stiefel/error.hpp"

namespace stiefel::zeta {

namespace {
constexpr double kPi = std::numbers::pi;
// Scale of the proposal (heavier tails than exp(-r^2)) and the factor by which
// its gamma shapes undershoot the singular exponent near rank deficiency.
constexpr double kProposalScale = 1.25;
constexpr double kShapeFactor = 0.8;
}  // namespace

MatrixSpacePoint::MatrixSpacePoint(Matrix x) : x_(std::move(x)) {
  if (x_.size() == 0 || !x_.allFinite()) throw ConfigError("matrix-space point needs finite entries");
}

double abs_det(const Matrix& x) {
  const Matrix g = x.transpose() * x;
  return std::sqrt(std::max(0.0, small_det(g)));
}

SchwartzTestFunction SchwartzTestFunction::gaussian(int n, int m) {
  if (m < 1 || m > n) throw DimensionError("test functions need 1 <= m <= n");
  return SchwartzTestFunction(Family::gaussian, Polynomial::constant(n, m, 1.0));
}

SchwartzTestFunction SchwartzTestFunction::gaussian_times_poly(Polynomial p) {
  if (p.m() > p.n()) throw DimensionError("test functions need 1 <= m <= n");
  return SchwartzTestFunction(Family::gaussian_times_poly, std::move(p));
}

SchwartzTestFunction SchwartzTestFunction::from_name(const std::string& name, int n, int m) {
  if (name == "gaussian") return gaussian(n, m);
  if (name == "gaussian_trace") {
    Polynomial p = Polynomial::constant(n, m, 1.0);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < m; ++j) {
        const Polynomial x = Polynomial::variable(n, m, i, j);
        p += x * x;
      }
    }
    return gaussian_times_poly(std::move(p));
  }
  throw ConfigError("unknown test-function family '" + name + "'");
}

double SchwartzTestFunction::operator()(const Matrix& x) const {
  return poly_(x) * std::exp(-x.squaredNorm());
}

SchwartzTestFunction SchwartzTestFunction::cayley_laplace(int times) const {
  if (times < 0) throw ConfigError("cayley_laplace needs times >= 0");
  Polynomial p = poly_;
  for (int t = 0; t < times; ++t) p = cayley_laplace_gaussian(p);
  return SchwartzTestFunction(times == 0 ? family_ : Family::gaussian_times_poly, std::move(p));
}

MCEstimate integrate_matrix_space(const std::function<complex(const Matrix&, double)>& integrand,
                                  int n, int m, double proposal_alpha, const QuadratureSpec& spec) {
  if (m < 1 || m > n) throw DimensionError("matrix space needs 1 <= m <= n");
  if (!(proposal_alpha > m - 1)) {
    throw ConvergenceDomainError("matrix-space proposal needs alpha > m - 1");
  }
  const double theta = kProposalScale;
  std::vector<double> shape(static_cast<std::size_t>(m));
  // Volume factor of x = QR: dx = C prod_i R_ii^{n-i} dR dQ_*, i = 1..m.
  double log_c = 0.5 * n * m * std::log(2.0 * kPi) - 0.25 * m * (m - 1) * std::log(2.0 * kPi);
  double log_q_const = 0.0;
  for (int i = 1; i <= m; ++i) {
    const double dof = 0.5 * (n - i + 1);
    log_c += (1.0 - dof) * std::log(2.0) - std::lgamma(dof);
    const double a = kShapeFactor * 0.5 * (proposal_alpha - i + 1);
    shape[static_cast<std::size_t>(i - 1)] = a;
    log_q_const += std::log(2.0) - std::lgamma(a) - a * std::log(theta);
  }
  const int n_off = m * (m - 1) / 2;
  log_q_const -= 0.5 * n_off * std::log(kPi * theta);

  auto sampler = [&](Engine& e) {
    const Frame q = haar_frame(e, n, m);
    Matrix r = Matrix::Zero(m, m);
    double log_weight = log_c - log_q_const;
    double det = 1.0;
    std::normal_distribution<double> off(0.0, std::sqrt(0.5 * theta));
    for (int i = 0; i < m; ++i) {
      const double a = shape[static_cast<std::size_t>(i)];
      std::gamma_distribution<double> g(a, theta);
      double s = g(e);
      while (!(s > 0.0)) s = g(e);
      const double rii = std::sqrt(s);
      r(i, i) = rii;
      det *= rii;
      // target Jacobian R^{n-i} over proposal 2 R^{2a-1} exp(-R^2/theta)/(...)
      log_weight += (n - (i + 1) - (2.0 * a - 1.0)) * std::log(rii) + s / theta;
      for (int j = i + 1; j < m; ++j) {
        const double z = off(e);
        r(i, j) = z;
        log_weight += z * z / theta;
      }
    }
    const Matrix x = q.matrix() * r;
    return integrand(x, det) * std::exp(log_weight);
  };
  return monte_carlo(spec.n_samples, SeededRng(spec.seed, 0x2e7a), sampler, spec.mc);
}

MCEstimate zeta_integral(const SchwartzTestFunction& f, ComplexParam alpha, const QuadratureSpec& spec) {
  const int m = f.m();
  const int n = f.n();
  if (!(alpha.re() > m - 1)) {
    throw ConvergenceDomainError("zeta_integral needs Re alpha > m - 1 = " + std::to_string(m - 1));
  }
  const complex e = alpha.value() - static_cast<double>(n);
  return integrate_matrix_space(
      [&](const Matrix& x, double det) { return f(x) * std::exp(e * std::log(det)); }, n, m,
      spec.proposal_alpha.value_or(alpha.re()), spec);
}

complex gaussian_zeta_closed_form(int n, int m, ComplexParam alpha) {
  return std::pow(2.0, -m) * stiefel_volume(n, m) * siegel_gamma_value(m, 0.5 * alpha.value());
}

namespace {

struct Partial {
  int var;
  int order;  // 1 or 2
};

// Fourth-order central stencils: offsets (in units of h) and weights.
struct Stencil {
  std::array<double, 5> offset;
  std::array<double, 5> weight;
  int size;
};
constexpr Stencil kFirst{{2, 1, -1, -2, 0}, {-1.0 / 12, 8.0 / 12, -8.0 / 12, 1.0 / 12, 0}, 4};
constexpr Stencil kSecond{{2, 1, 0, -1, -2}, {-1.0 / 12, 16.0 / 12, -30.0 / 12, 16.0 / 12, -1.0 / 12}, 5};

double mixed_partial(const std::function<double(const Matrix&)>& f, const Matrix& x,
                     const std::vector<Partial>& parts, double h) {
  Matrix y = x;
  const Eigen::Index m = x.cols();
  std::function<double(std::size_t)> rec = [&](std::size_t level) -> double {
    if (level == parts.size()) return f(y);
    const Partial& p = parts[level];
    const Stencil& st = p.order == 1 ? kFirst : kSecond;
    double& entry = y(p.var / m, p.var % m);
    const double saved = entry;
    double acc = 0.0;
    for (int q = 0; q < st.size; ++q) {
      entry = saved + st.offset[q] * h;
      acc += st.weight[q] * rec(level + 1);
    }
    entry = saved;
    return acc / std::pow(h, p.order);
  };
  return rec(0);
}

double laplacian_fourth_order(const std::function<double(const Matrix&)>& f, const Matrix& x,
                              double h) {
  Matrix y = x;
  const double f0 = f(x);
  double sum = 0.0;
  for (Eigen::Index i = 0; i < x.rows(); ++i) {
    const double s = x(i, 0);
    auto at = [&](double d) {
      y(i, 0) = s + d;
      return f(y);
    };
    sum += (-at(2 * h) + 16 * at(h) - 30 * f0 + 16 * at(-h) - at(-2 * h)) / (12 * h * h);
    y(i, 0) = s;
  }
  return sum;
}

double cayley_laplace_rank_two(const std::function<double(const Matrix&)>& f, const Matrix& x,
                               double h) {
  const int n = static_cast<int>(x.rows());
  auto var = [](int i, int j) { return i * 2 + j; };
  double d11d22 = 0.0;
  double d12sq = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int l = 0; l < n; ++l) {
      d11d22 += mixed_partial(f, x, {{var(i, 0), 2}, {var(l, 1), 2}}, h);
      if (i == l) {
        d12sq += mixed_partial(f, x, {{var(i, 0), 2}, {var(i, 1), 2}}, h);
      } else {
        d12sq += mixed_partial(f, x, {{var(i, 0), 1}, {var(i, 1), 1}, {var(l, 0), 1}, {var(l, 1), 1}}, h);
      }
    }
  }
  return d11d22 - d12sq;
}

void check_step(double step) {
  if (!(step >= 1e-4 && step <= 1e-1)) {
    throw StepError("finite-difference step must lie in [1e-4, 1e-1]");
  }
}

double cayley_laplace_unchecked(const std::function<double(const Matrix&)>& f,
                                const MatrixSpacePoint& x, double step) {
  switch (x.m()) {
    case 1:
      return laplacian_fourth_order(f, x.matrix(), step);
    case 2: {
      const double coarse = cayley_laplace_rank_two(f, x.matrix(), step);
      const double fine = cayley_laplace_rank_two(f, x.matrix(), 0.5 * step);
      return (16.0 * fine - coarse) / 15.0;
    }
    default:
      throw DimensionError("finite-difference Cayley-Laplace supports m <= 2");
  }
}

}  // namespace

double cayley_laplace(const std::function<double(const Matrix&)>& f, const MatrixSpacePoint& x,
                      double step) {
  check_step(step);
  return cayley_laplace_unchecked(f, x, step);
}

double cayley_laplace_exact(const SchwartzTestFunction& f, const Matrix& x) {
  return f.cayley_laplace(1)(x);
}

BernsteinResidual bernstein_identity_residual(double alpha, int ell, const MatrixSpacePoint& x,
                                              std::optional<double> relative_step) {
  if (ell != 1) throw ConfigError("bernstein_identity_residual supports ell = 1");
  const int n = x.n();
  const int m = x.m();
  if (m > 2 || m > n) throw DimensionError("bernstein_identity_residual needs m <= 2 and m <= n");
  const Matrix g = x.matrix().transpose() * x.matrix();
  const double step = relative_step.value_or(m == 1 ? 1e-2 : 5e-2);
  check_step(step);
  Eigen::SelfAdjointEigenSolver<Matrix> es(g, Eigen::EigenvaluesOnly);
  const double lambda_min = es.eigenvalues().minCoeff();
  if (lambda_min < 0.1) {
    throw RankError("bernstein_identity_residual needs the smallest eigenvalue of x'x >= 0.1");
  }
  const double s = 0.5 * (alpha + 2.0 - n);
  auto power = [s](const Matrix& y) {
    return std::pow(small_det(y.transpose() * y), s);
  };
  BernsteinResidual r;
  r.fd_value = cayley_laplace_unchecked(power, x, step * std::sqrt(lambda_min));
  const double b = bernstein_poly(1, m, n, alpha).real();
  r.exact_value = b * std::pow(small_det(g), 0.5 * (alpha - n));
  if (std::abs(b) < 1e-8) {
    r.relative = false;
    r.residual = std::abs(r.fd_value - r.exact_value);
  } else {
    r.residual = std::abs(r.fd_value - r.exact_value) / std::abs(r.exact_value);
  }
  return r;
}

std::string to_string(ZetaPath p) { return p == ZetaPath::direct ? "direct" : "continued"; }

MCEstimate bernstein_continuation(const SchwartzTestFunction& f, ComplexParam alpha, int ell,
                                  const QuadratureSpec& spec) {
  const int m = f.m();
  if (ell < 1) throw ConfigError("bernstein_continuation needs ell >= 1");
  if (!(alpha.re() > m - 1 - 2 * ell)) {
    throw ConvergenceDomainError("bernstein_continuation needs Re alpha > m - 1 - 2 ell = " +
                                 std::to_string(m - 1 - 2 * ell));
  }
  const complex b = bernstein_poly(ell, m, f.n(), alpha);
  if (std::abs(b) < 1e-8) {
    throw BernsteinZeroError("alpha is a zero of the Bernstein polynomial B_" + std::to_string(ell));
  }
  const SchwartzTestFunction image = f.cayley_laplace(ell);
  MCEstimate e = zeta_integral(image, alpha.value() + 2.0 * ell, spec);
  e.value /= b;
  e.stderr /= std::abs(b);
  return e;
}

ZetaValue zeta_value(const SchwartzTestFunction& f, ComplexParam alpha, const QuadratureSpec& spec) {
  const int m = f.m();
  ZetaValue out;
  if (alpha.re() > m - 1) {
    out.estimate = zeta_integral(f, alpha, spec);
    return out;
  }
  out.path = ZetaPath::continued;
  out.ell = static_cast<int>(std::floor((m - 1 - alpha.re()) / 2.0)) + 1;
  out.estimate = bernstein_continuation(f, alpha, out.ell, spec);
  return out;
}

namespace {

// Neville interpolation of (xs, ys) evaluated at 0.
double extrapolate_to_zero(const std::vector<double>& xs, std::vector<double> ys) {
  const std::size_t n = xs.size();
  for (std::size_t level = 1; level < n; ++level) {
    for (std::size_t i = 0; i + level < n; ++i) {
      const double xa = xs[i];
      const double xb = xs[i + level];
      ys[i] = (xb * ys[i] - xa * ys[i + 1]) / (xb - xa);
    }
  }
  return ys[0];
}

}  // namespace

LimitResult normalized_zeta_limit(const SchwartzTestFunction& f, const QuadratureSpec& spec,
                                  std::vector<double> alphas) {
  const int n = f.n();
  if (f.m() != 1) throw DimensionError("normalized_zeta_limit is implemented for m = 1");
  if (alphas.size() < 2) throw ConfigError("normalized_zeta_limit needs at least two alphas");
  const SchwartzTestFunction lap = f.cayley_laplace(1);
  QuadratureSpec shared = spec;
  double min_alpha = alphas.front();
  for (double a : alphas) {
    if (!(a > 0.0)) throw ConfigError("normalized_zeta_limit needs positive alphas");
    min_alpha = std::min(min_alpha, a);
  }
  // Z(Delta f, alpha + 2 - n); the proposal is pinned so all alphas reuse draws.
  shared.proposal_alpha = spec.proposal_alpha.value_or(2.0 + min_alpha);

  LimitResult out;
  out.alphas = alphas;
  std::vector<double> values;
  for (double a : alphas) {
    // Z(f, a - n)/Gamma(a/2) = Z(Delta f, a + 2 - n) / (a (a - n + 2) Gamma(a/2))
    //                        = Z(Delta f, a + 2 - n) / (2 (a - n + 2) Gamma(1 + a/2)).
    MCEstimate e;
    double denom = 2.0 * std::tgamma(1.0 + 0.5 * a);
    if (n == 2) {
      // a - n + 2 = a vanishes with the integral (int Delta f dx = 0); divide
      // inside the integrand.
      e = integrate_matrix_space(
          [&](const Matrix& x, double det) {
            return complex(lap(x) * std::expm1(a * std::log(det)) / a, 0.0);
          },
          n, 1, *shared.proposal_alpha, shared);
    } else {
      e = integrate_matrix_space(
          [&](const Matrix& x, double det) {
            return complex(lap(x) * std::pow(det, a + 2.0 - n), 0.0);
          },
          n, 1, *shared.proposal_alpha, shared);
      denom *= a - n + 2.0;
    }
    e.value /= denom;
    e.stderr /= std::abs(denom);
    values.push_back(e.value.real());
    out.samples.push_back(e);
  }
  out.extrapolated = extrapolate_to_zero(alphas, values);
  const Matrix zero = Matrix::Zero(n, 1);
  out.reference = std::pow(kPi, 0.5 * n) / std::tgamma(0.5 * n) * f(zero);
  return out;
}

}  // namespace stiefel::zeta
