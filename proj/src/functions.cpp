#include "stiefel/functions.hpp"

#include <cmath>
#include <string>

#include "stiefel/error.hpp"
#include "stiefel/rankone.hpp"

namespace stiefel {

ManifoldFunction constant_function(int n, int m, double c) {
  return {n, m, [c](const Frame&) { return c; }, true, true, "const"};
}

ManifoldFunction zonal_function(int n, int j, const Eigen::VectorXd& axis) {
  if (n < 2) throw DimensionError("zonal functions need n >= 2");
  if (axis.size() != n) throw DimensionError("zonal axis has the wrong length");
  if (std::abs(axis.norm() - 1.0) > 1e-10) throw FrameError("zonal axis must be a unit vector");
  const double order = 0.5 * (n - 2);
  return {n,
          1,
          [axis, j, order](const Frame& v) {
            return rankone::gegenbauer(j, order, v.matrix().col(0).dot(axis));
          },
          j % 2 == 0,
          true,
          "zonal:" + std::to_string(j)};
}

ManifoldFunction zonal_function(int n, int j) {
  Eigen::VectorXd e = Eigen::VectorXd::Zero(n);
  e(n - 1) = 1.0;
  return zonal_function(n, j, e);
}

Frame gram_poly_anchor(int n, int m) {
  // Columns of a fixed full-rank matrix, orthonormalized; generic position
  // relative to the coordinate frames.
  Matrix a(n, m);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < m; ++j) {
      a(i, j) = std::cos(1.0 + 0.7 * i + 1.9 * j * (i + 1)) + (i == j ? 1.5 : 0.0);
    }
  }
  Eigen::HouseholderQR<Matrix> qr(a);
  Matrix q = qr.householderQ() * Matrix::Identity(n, m);
  return Frame::from_matrix(q, 1e-9);
}

ManifoldFunction gram_poly_function(int n, int m, int degree) {
  if (degree < 0) throw ConfigError("gram_poly degree must be >= 0");
  const Frame anchor = gram_poly_anchor(n, m);
  return {n,
          m,
          [anchor, degree](const Frame& v) {
            const double g = gram_det_cos(anchor, v);
            double p = 1.0;
            double sum = 0.0;
            for (int i = 0; i <= degree; ++i) {
              sum += p / (i + 1);
              p *= g;
            }
            return sum;
          },
          true,
          true,
          "gram_poly:" + std::to_string(degree)};
}

ManifoldFunction exp_projection_function(int n, int m, std::uint64_t seed) {
  Engine e = SeededRng(seed, 0x5eed).engine();
  std::normal_distribution<double> normal(0.0, 0.5);
  Matrix a(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j <= i; ++j) a(i, j) = a(j, i) = normal(e);
  }
  return {n,
          m,
          [a](const Frame& v) {
            const Matrix& x = v.matrix();
            return std::exp((x.transpose() * a * x).trace());
          },
          true,
          true,
          "exp_proj:" + std::to_string(seed)};
}

namespace {
int parse_int_suffix(const std::string& name, std::size_t colon) {
  const std::string tail = name.substr(colon + 1);
  std::size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(tail, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != tail.size() || value < 0) {
    throw ConfigError("function '" + name + "' needs a nonnegative integer after ':'");
  }
  return value;
}
}  // namespace

ManifoldFunction function_from_name(const std::string& name, int n, int m) {
  if (name == "const") return constant_function(n, m);
  const std::size_t colon = name.find(':');
  const std::string head = name.substr(0, colon);
  if (colon == std::string::npos) throw ConfigError("unknown function '" + name + "'");
  const int arg = parse_int_suffix(name, colon);
  if (head == "zonal") {
    if (m != 1) throw ConfigError("zonal:<j> is defined on spheres only (m = 1)");
    return zonal_function(n, arg);
  }
  if (head == "gram_poly") return gram_poly_function(n, m, arg);
  if (head == "exp_proj") return exp_projection_function(n, m, static_cast<std::uint64_t>(arg));
  throw ConfigError("unknown function '" + name + "'");
}

double right_invariance_defect(const ManifoldFunction& f, const SeededRng& rng, int trials) {
  Engine e = rng.engine();
  double worst = 0.0;
  for (int t = 0; t < trials; ++t) {
    const Frame v = haar_frame(e, f.n, f.m);
    const Matrix gamma = haar_orthogonal(e, f.m);
    worst = std::max(worst, std::abs(f(v.right_multiply(gamma)) - f(v)));
  }
  return worst;
}

bool validate_right_invariance(const ManifoldFunction& f, const SeededRng& rng, int trials,
                               double tol) {
  return right_invariance_defect(f, rng, trials) <= tol;
}

}  // namespace stiefel
