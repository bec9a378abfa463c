#include <doctest.h>

#include <cmath>

#include "stiefel/polynomial.hpp"

using namespace stiefel;

namespace {

struct Oracle {
  int n;
  int m;
  std::vector<double> entries;  // row-major
  double gaussian;              // det(d'd) exp(-tr x'x)
  double trace;                 // det(d'd) (1 + tr x'x) exp(-tr x'x)
};

// Computer-algebra values.
const Oracle kOracles[] = {
    {2, 2, {0.3, -0.7, 0.5, 0.2}, 1.5625216980739943492, 0.45915078830104843817},
    {3, 2, {0.3, -0.7, 0.5, 0.2, -0.4, 0.6}, 1.7236011080511438591, 3.6411820633494309028},
    {3, 1, {1.0, 0.0, 0.0}, -0.73575888234288464319, -2.2072766470286539296},
    {4, 1, {0.2, -0.5, 0.7, 0.1}, -2.1966088091666021790, -3.1694705123338601193},
};

Eigen::MatrixXd point(const Oracle& o) {
  Eigen::MatrixXd x(o.n, o.m);
  for (int i = 0; i < o.n; ++i)
    for (int j = 0; j < o.m; ++j) x(i, j) = o.entries[i * o.m + j];
  return x;
}

Polynomial trace_poly(int n, int m) {
  Polynomial p = Polynomial::constant(n, m, 1.0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j) p += Polynomial::variable(n, m, i, j) * Polynomial::variable(n, m, i, j);
  return p;
}

}  // namespace

TEST_CASE("polynomial arithmetic") {
  const Polynomial x = Polynomial::variable(2, 1, 0, 0);
  const Polynomial y = Polynomial::variable(2, 1, 1, 0);
  const Polynomial p = (x + y) * (x - y) + Polynomial::constant(2, 1, 3.0);
  Eigen::MatrixXd v(2, 1);
  v << 2.0, 0.5;
  CHECK(p(v) == doctest::Approx(4.0 - 0.25 + 3.0));
  CHECK(p.term_count() == 3);
  CHECK((p - p).term_count() == 0);
  CHECK(p.derivative(0)(v) == doctest::Approx(4.0));
  CHECK(p.derivative(1)(v) == doctest::Approx(-1.0));
  CHECK((p * 2.0)(v) == doctest::Approx(2 * p(v)));
  CHECK(x.times_variable(1, 3.0)(v) == doctest::Approx(3.0));
  // d/dx (x e^{-x^2}) = (1 - 2x^2) e^{-x^2}
  CHECK(x.gaussian_derivative(0)(v) == doctest::Approx(1.0 - 8.0));
}

TEST_CASE("cayley-laplace of the gaussian family") {
  for (const Oracle& o : kOracles) {
    const Eigen::MatrixXd x = point(o);
    const double w = std::exp(-(x.transpose() * x).trace());
    const double g = cayley_laplace_gaussian(Polynomial::constant(o.n, o.m, 1.0))(x) * w;
    const double t = cayley_laplace_gaussian(trace_poly(o.n, o.m))(x) * w;
    CHECK(std::abs(g - o.gaussian) < 1e-13 * std::max(1.0, std::abs(o.gaussian)));
    CHECK(std::abs(t - o.trace) < 1e-13 * std::max(1.0, std::abs(o.trace)));
  }
}

TEST_CASE("rank-one cayley-laplace is the laplacian") {
  // Delta exp(-|x|^2) = (4|x|^2 - 2n) exp(-|x|^2)
  const Polynomial q = cayley_laplace_gaussian(Polynomial::constant(5, 1, 1.0));
  Eigen::MatrixXd x(5, 1);
  x << 0.1, 0.2, -0.3, 0.4, 0.5;
  CHECK(q(x) == doctest::Approx(4 * x.squaredNorm() - 10.0).epsilon(1e-14));
}
