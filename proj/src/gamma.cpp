#include "stiefel/gamma.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "stiefel/error.hpp"

namespace stiefel {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczosCoef = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

// Lanczos series for Re z >= 1/2, evaluated at z (not z - 1).
complex lanczos_sum(complex zm1) {
  complex x = kLanczosCoef[0];
  for (std::size_t i = 1; i < kLanczosCoef.size(); ++i) {
    x += kLanczosCoef[i] / (zm1 + static_cast<double>(i));
  }
  return x;
}

complex log_gamma_right(complex z) {
  const complex zm1 = z - 1.0;
  const complex t = zm1 + kLanczosG + 0.5;
  return 0.5 * std::log(2.0 * kPi) + (zm1 + 0.5) * std::log(t) - t +
         std::log(lanczos_sum(zm1));
}

complex gamma_right(complex z) {
  const complex zm1 = z - 1.0;
  const complex t = zm1 + kLanczosG + 0.5;
  return std::sqrt(2.0 * kPi) * std::pow(t, zm1 + 0.5) * std::exp(-t) *
         lanczos_sum(zm1);
}

std::string describe(complex z) {
  return "(" + std::to_string(z.real()) + ", " + std::to_string(z.imag()) + ")";
}

}  // namespace

ComplexParam::ComplexParam(complex v) : value_(v) {
  if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
    throw ConfigError("complex parameter must be finite");
  }
}

double gamma_pole_distance(complex z) {
  if (z.real() > 0.5) return std::abs(z);
  const double k = std::round(z.real());
  return std::abs(z - complex(std::min(k, 0.0), 0.0));
}

complex gamma(complex z) {
  if (gamma_pole_distance(z) <= kPoleEps) {
    throw PoleError("gamma has a pole at " + describe(z));
  }
  if (z.real() < 0.5) {
    return kPi / (std::sin(kPi * z) * gamma_right(1.0 - z));
  }
  // Moderate arguments go through the direct form; larger ones would
  // overflow the power before the exponential tames it.
  if (std::abs(z) < 100.0) return gamma_right(z);
  return std::exp(log_gamma_right(z));
}

complex log_gamma(complex z) {
  if (gamma_pole_distance(z) <= kPoleEps) {
    throw PoleError("log gamma has a pole at " + describe(z));
  }
  if (z.real() < 0.5) {
    return std::log(kPi) - std::log(std::sin(kPi * z)) - log_gamma_right(1.0 - z);
  }
  return log_gamma_right(z);
}

complex reciprocal_gamma(complex z) {
  if (gamma_pole_distance(z) <= kPoleEps) return 0.0;
  if (z.real() < 0.5) {
    return std::sin(kPi * z) * gamma_right(1.0 - z) / kPi;
  }
  if (std::abs(z) < 100.0) return 1.0 / gamma_right(z);
  return std::exp(-log_gamma_right(z));
}

namespace {

double siegel_pole_distance(int m, complex a) {
  double d = std::numeric_limits<double>::infinity();
  for (int j = 0; j < m; ++j) d = std::min(d, gamma_pole_distance(a - 0.5 * j));
  return d;
}

void require_rank(int m) {
  if (m < 1) throw DimensionError("matrix-argument gamma needs m >= 1");
}

}  // namespace

GammaEvalResult siegel_gamma(int m, ComplexParam a) {
  require_rank(m);
  GammaEvalResult out;
  out.pole_distance = siegel_pole_distance(m, a.value());
  if (out.pole_distance <= kPoleEps) {
    out.at_pole = true;
    return out;
  }
  complex value = std::pow(kPi, 0.25 * m * (m - 1));
  for (int j = 0; j < m; ++j) value *= gamma(a.value() - 0.5 * j);
  out.value = value;
  return out;
}

complex siegel_gamma_value(int m, ComplexParam a) {
  const GammaEvalResult r = siegel_gamma(m, a);
  if (r.at_pole) {
    throw PoleError("Gamma_" + std::to_string(m) + " has a pole at " +
                    describe(a.value()));
  }
  return r.value;
}

complex log_siegel_gamma(int m, ComplexParam a) {
  require_rank(m);
  if (siegel_pole_distance(m, a.value()) <= kPoleEps) {
    throw PoleError("log Gamma_" + std::to_string(m) + " has a pole at " +
                    describe(a.value()));
  }
  complex value = 0.25 * m * (m - 1) * std::log(kPi);
  for (int j = 0; j < m; ++j) value += log_gamma(a.value() - 0.5 * j);
  return value;
}

complex reciprocal_siegel_gamma(int m, ComplexParam a) {
  require_rank(m);
  complex value = std::pow(kPi, -0.25 * m * (m - 1));
  for (int j = 0; j < m; ++j) value *= reciprocal_gamma(a.value() - 0.5 * j);
  return value;
}

double stiefel_volume(int n, int m) {
  if (m < 1 || m > n) {
    throw DimensionError("stiefel_volume needs 1 <= m <= n, got n=" +
                         std::to_string(n) + " m=" + std::to_string(m));
  }
  const double log_vol = m * std::log(2.0) + 0.5 * n * m * std::log(kPi) -
                         log_siegel_gamma(m, 0.5 * n).real();
  return std::exp(log_vol);
}

complex bernstein_poly(int ell, int m, int n, ComplexParam a) {
  if (ell < 0) throw ConfigError("bernstein_poly needs ell >= 0");
  const complex x = a.value();
  complex p = 1.0;
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < ell; ++j) {
      p *= (x - static_cast<double>(i) + 2.0 * j) *
           (x - static_cast<double>(n) + 2.0 + 2.0 * j + static_cast<double>(i));
    }
  }
  return p;
}

double funk_const(int n, int m, int k) {
  if (m < 1 || k < 1 || k >= n) {
    throw DimensionError("funk_const needs 1 <= m and 1 <= k < n");
  }
  if (k < m || n - k < m) {
    throw DimensionError("funk_const needs k >= m and n - k >= m so that every "
                         "gamma factor is finite");
  }
  const double l = log_siegel_gamma(m, 0.5 * n).real() -
                   log_siegel_gamma(m, 0.5 * k).real() -
                   log_siegel_gamma(m, 0.5 * (n - k)).real();
  return std::exp(l);
}

complex cosine_const(int n, int m, int k, ComplexParam a) {
  if (m < 1 || m > k || k > n - 1) {
    throw DimensionError("cosine_const needs 1 <= m <= k <= n-1");
  }
  const complex x = a.value();
  return siegel_gamma_value(m, 0.5 * n) * siegel_gamma_value(m, 0.5 * x) /
         siegel_gamma_value(m, 0.5 * k) *
         reciprocal_siegel_gamma(m, 0.5 * (x + static_cast<double>(n - k)));
}

bool near_positive_integer(complex z) {
  const double k = std::round(z.real());
  return k >= 1.0 && std::abs(z - complex(k, 0.0)) <= kPoleEps;
}

complex delta_norm(int n, int m, ComplexParam a) {
  if (m < 1 || m > n) throw DimensionError("delta_norm needs 1 <= m <= n");
  const complex x = a.value();
  if (near_positive_integer(x)) {
    throw ExcludedParamError("delta_norm excludes alpha in {1, 2, ...}, got " +
                             describe(x));
  }
  return siegel_gamma_value(m, 0.5 * m) / siegel_gamma_value(m, 0.5 * n) *
         siegel_gamma_value(m, 0.5 * (static_cast<double>(m) - x)) *
         reciprocal_siegel_gamma(m, 0.5 * x);
}

complex tilde_delta_norm(int n, int m, ComplexParam lam) {
  if (m < 1 || m > n) throw DimensionError("tilde_delta_norm needs 1 <= m <= n");
  const double rho = 0.5 * n;
  const complex l = lam.value();
  if (near_positive_integer(l + static_cast<double>(m) - rho)) {
    throw ExcludedParamError(
        "tilde_delta_norm excludes lambda + m - n/2 in {1, 2, ...}");
  }
  return siegel_gamma_value(m, 0.5 * m) / siegel_gamma_value(m, rho) *
         siegel_gamma_value(m, 0.5 * (rho - l)) *
         reciprocal_siegel_gamma(m, 0.5 * (l + static_cast<double>(m) - rho));
}

complex multiplier_c(int j, ComplexParam lam, int n) {
  if (j < 0) throw ConfigError("multiplier_c needs j >= 0");
  if (j % 2 == 1) return 0.0;
  const double rho = 0.5 * n;
  const complex l = lam.value();
  const complex num_arg = 0.5 * (static_cast<double>(j) + rho - l);
  const complex den_arg = 0.5 * (static_cast<double>(j) + rho + l);
  if (gamma_pole_distance(num_arg) <= kPoleEps) {
    throw PoleError("multiplier_c: Gamma((j + rho - lambda)/2) has a pole");
  }
  const double sign = (j / 2) % 2 == 0 ? 1.0 : -1.0;
  if (gamma_pole_distance(den_arg) <= kPoleEps) return 0.0;
  return sign * std::exp(log_gamma(num_arg) - log_gamma(den_arg));
}

}  // namespace stiefel
