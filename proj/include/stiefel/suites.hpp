#pragma once

// Identity checks packaged as report records. Shared by the CLI and the
// acceptance runner.

#include <complex>
#include <cstdint>
#include <vector>

#include "stiefel/monte_carlo.hpp"
#include "stiefel/report.hpp"

namespace stiefel::suites {

inline constexpr double kSigmaBound = 4.0;

struct Case {
  int n = 3;
  int m = 1;
  int k = 1;
  std::complex<double> alpha{2.0, 0.0};
  std::size_t n_samples = 0;  // 0: module default
  std::uint64_t seed = 0;
  McOptions mc = default_mc_options();
};

/// Cosine transform of f = 1 against the closed-form constant.
CheckRecord closed_form(const Case& c);

/// Gaussian zeta integral against 2^{-m} sigma_{n,m} Gamma_m(alpha/2).
CheckRecord gaussian_zeta(const Case& c);

/// Finite-difference Bernstein identity at `points` random points with
/// lambda_min(x'x) >= 0.1; one record holding the worst residual.
CheckRecord bernstein(const Case& c, int points = 20);

/// Extrapolated alpha -> 0 limit of Z(f, alpha - n)/Gamma(alpha/2) for the
/// Gaussian on R^n, against pi^{n/2}/Gamma(n/2); 1% relative tolerance.
CheckRecord zeta_limit(const Case& c);

/// Funk duality with f = exp_proj on V_{n,m} and phi = exp_proj on V_{n,k}.
CheckRecord duality(const Case& c);

/// Sine/cosine complement and dual-cosine complement kernel identities on
/// shared samples (kernel gap and mean gap <= 1e-10).
std::vector<CheckRecord> complement(const Case& c);

/// Dual cosine of a Funk transform against the Q transform (f = gram_poly:2).
CheckRecord inversion(const Case& c);

/// E[vv'] = (m/n) I entrywise within 5 stderr.
CheckRecord haar_moment(const Case& c);

/// Empirical c_{j,lambda} for j = 0..j_max against the formula (alpha holds
/// lambda). Points where the formula has a pole are marked excluded.
std::vector<CheckRecord> rankone_multiplier(const Case& c, int j_max = 6);

/// max |c_{j,l} c_{j,-l} - 1| over even j <= j_max and the grid; 1e-10.
CheckRecord rankone_compose(int n, int j_max, const std::vector<std::complex<double>>& grid);

/// Funk limit of the rank-one multiplier; two records (algebraic vs
/// c_{1,1} * empirical, and empirical vs C_j(0)/C_j(1)).
std::vector<CheckRecord> rankone_funk(const Case& c, int j);

/// Decay slope of |c_{j,lambda}| against -Re lambda; 0.05.
CheckRecord rankone_decay(int n, std::complex<double> lambda, int j_max);

}  // namespace stiefel::suites
