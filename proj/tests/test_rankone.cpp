#include <doctest.h>

#include <cmath>

#include "stiefel/error.hpp"
#include "stiefel/gamma.hpp"
#include "stiefel/quadrature.hpp"
#include "stiefel/rankone.hpp"

using namespace stiefel;
using namespace stiefel::rankone;

namespace {

bool within(const MCEstimate& e, complex ref) { return sigma_distance(e.value, ref, e.stderr) <= 4.0; }

}  // namespace

TEST_CASE("gauss-legendre") {
  const QuadratureRule r = gauss_legendre(8);
  double s = 0.0, s6 = 0.0;
  for (std::size_t i = 0; i < r.nodes.size(); ++i) {
    s += r.weights[i];
    s6 += r.weights[i] * std::pow(r.nodes[i], 6);
  }
  CHECK(s == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(s6 == doctest::Approx(2.0 / 7.0).epsilon(1e-14));
  const QuadratureRule q = gauss_legendre(6, 0.0, 3.0);
  double area = 0.0;
  for (std::size_t i = 0; i < q.nodes.size(); ++i) area += q.weights[i] * q.nodes[i] * q.nodes[i];
  CHECK(area == doctest::Approx(9.0).epsilon(1e-14));
}

TEST_CASE("gegenbauer polynomials") {
  CHECK(gegenbauer(0, 0.7, 0.3) == 1.0);
  CHECK(gegenbauer(2, 0.5, 0.0) == doctest::Approx(-0.5));
  CHECK(gegenbauer(4, 0.5, 0.0) == doctest::Approx(0.375));
  for (double nu : {0.5, 1.0, 1.5}) CHECK(gegenbauer(1, nu, 0.4) == doctest::Approx(2 * nu * 0.4));
  CHECK(gegenbauer(3, 0.0, 0.2) == doctest::Approx(4 * 0.008 - 3 * 0.2));  // T_3
  CHECK(gegenbauer(2, 1.0, 0.3) == doctest::Approx(4 * 0.09 - 1));         // U_2
  for (int n = 3; n <= 6; ++n)
    for (int j = 0; j <= 8; ++j)
      for (double t : {-0.6, 0.1, 0.8}) CHECK(zonal_eigen_residual(n, j, t) < 1e-5 * std::max(1.0, j * (j + n - 2.0)));
  CHECK_THROWS_AS(gegenbauer(-1, 0.5, 0.0), ConfigError);
}

TEST_CASE("zonal expansion") {
  const HarmonicExpansion sq = expand_zonal([](double t) { return t * t; }, 3, 4);
  CHECK(sq.coefficients[0] == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
  CHECK(sq.coefficients[2] == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
  CHECK(std::abs(sq.coefficients[1]) < 1e-13);
  CHECK(std::abs(sq.coefficients[4]) < 1e-13);
  CHECK(sq.reconstruction_error < 1e-12);
  CHECK(sq(0.3) == doctest::Approx(0.09));

  for (int n = 3; n <= 5; ++n) {
    const ZonalFunction y(n, 3);
    const HarmonicExpansion e = expand_zonal([&y](double t) { return y.at(t); }, n, 6);
    for (int j = 0; j <= 6; ++j) CHECK(std::abs(e.coefficients[j] - (j == 3 ? 1.0 : 0.0)) < 1e-12);
  }

  const HarmonicExpansion odd = expand_zonal([](double t) { return std::sin(2 * t); }, 4, 16);
  for (int j = 0; j <= 16; j += 2) CHECK(std::abs(odd.coefficients[j]) < 1e-13);
  CHECK(odd.reconstruction_error < 1e-8);

  CHECK_THROWS_AS(expand_zonal([](double) { return 1.0; }, 3, 65, 256), QuadratureDegreeError);
  CHECK_NOTHROW(expand_zonal([](double) { return 1.0; }, 3, 64, 256));
}

TEST_CASE("empirical multipliers") {
  const SeededRng rng(4);
  const MCEstimate c2 = cos_lambda_multiplier_mc(2, 1.0, 3, 400'000, rng);
  CHECK(within(c2, -std::tgamma(1.25) / std::tgamma(2.25)));
  const MCEstimate c1 = cos_lambda_multiplier_mc(1, 1.0, 3, 400'000, rng);
  CHECK(within(c1, 0.0));
  const MCEstimate c0 = cos_lambda_multiplier_mc(0, 0.8, 4, 400'000, rng);
  CHECK(within(c0, std::tgamma(0.6) / std::tgamma(1.4)));

  // Continued path below the direct strip.
  const MCEstimate low = cos_lambda_multiplier_mc(2, 0.2, 3, 400'000, rng, MultiplierPath::continued);
  CHECK(within(low, multiplier_c(2, 0.2, 3)));
  CHECK(resolve_multiplier_path(0.2, 3, MultiplierPath::automatic) == MultiplierPath::continued);
  CHECK(resolve_multiplier_path(1.5, 3, MultiplierPath::automatic) == MultiplierPath::direct);
  CHECK_THROWS_AS(resolve_multiplier_path(0.2, 3, MultiplierPath::direct), ConvergenceDomainError);
  CHECK_THROWS_AS(resolve_multiplier_path(-0.6, 3, MultiplierPath::automatic), ConvergenceDomainError);
  CHECK(to_string(MultiplierPath::continued) == "continued");

  // The same ratio at two evaluation points.
  Eigen::VectorXd u1(3), u2(3);
  u1 << 0.0, 0.6, 0.8;
  u2 << 0.28, -0.96, 0.0;
  u2 = 0.3 * u2 + std::sqrt(1 - 0.09) * Eigen::Vector3d(0, 0, 1);
  const MCEstimate a = cos_lambda_multiplier_mc(2, complex(1.2, 0.4), 3, 400'000, SeededRng(5), MultiplierPath::automatic, u1);
  const MCEstimate b = cos_lambda_multiplier_mc(2, complex(1.2, 0.4), 3, 400'000, SeededRng(6), MultiplierPath::automatic, u2);
  CHECK(sigma_distance(a.value, b.value, std::hypot(a.stderr, b.stderr)) <= 4.0);
  CHECK(within(a, multiplier_c(2, complex(1.2, 0.4), 3)));
}

TEST_CASE("composition identity") {
  const CompositionReport r = composition_identity_check(3, 40, {0.3, -0.3, 1.2, -1.2, complex(0.5, 0.5)});
  CHECK(r.max_deviation < 1e-10);
  CHECK(r.checked == 21 * 5);
  const CompositionReport zero = composition_identity_check(4, 20, {0.0});
  CHECK(zero.max_deviation == 0.0);
  CHECK_THROWS_AS(composition_identity_check(3, 10, {1.5}), ExcludedParamError);
}

TEST_CASE("funk limit of the multipliers") {
  CHECK(funk_limit_multiplier(0, 3) == doctest::Approx(0.5));
  CHECK(funk_limit_multiplier(1, 3) == 0.0);
  for (int n = 3; n <= 6; ++n) {
    for (int j = 0; j <= 8; j += 2) {
      const double oracle = gegenbauer(j, 0.5 * (n - 2), 0.0) / gegenbauer(j, 0.5 * (n - 2), 1.0);
      CHECK(funk_limit_multiplier(j, n) == doctest::Approx(funk_const(n, 1, 1) * oracle).epsilon(1e-12));
    }
  }
  const FunkCheckReport r = funk_multiplier_check(2, 3, 200'000, SeededRng(1));
  CHECK(r.pass);
  CHECK(r.funk_oracle == doctest::Approx(-0.5));
  CHECK(r.oracle_sigma <= 4.0);
  const FunkCheckReport r4 = funk_multiplier_check(4, 3, 200'000, SeededRng(2));
  CHECK(r4.funk_oracle == doctest::Approx(0.375));
  CHECK(r4.pass);
  CHECK_THROWS_AS(funk_multiplier_check(3, 3, 10, SeededRng(1)), ConfigError);
}

TEST_CASE("multiplier decay") {
  const DecayReport one = multiplier_decay_check(1.0, 400);
  CHECK(one.pass);
  CHECK(one.slope == doctest::Approx(-1.0).epsilon(0.05));
  const DecayReport zero = multiplier_decay_check(0.0, 400);
  CHECK(std::abs(zero.slope) < 1e-12);
  const DecayReport two = multiplier_decay_check(complex(2.0, 1.0), 400);
  CHECK(two.pass);
  CHECK(two.expected == -2.0);
  CHECK_THROWS_AS(multiplier_decay_check(1.0, 4), ConfigError);
}
