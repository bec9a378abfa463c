#pragma once

#include <functional>
#include <string>

#include "stiefel/manifold.hpp"

namespace stiefel {

/// A scalar function on V_{n,m}. Evaluators must be safe to call from
/// several threads at once.
struct ManifoldFunction {
  int n = 0;
  int m = 0;
  std::function<double(const Frame&)> evaluator;
  bool right_o_invariant = false;  // claims f(v gamma) = f(v) for gamma in O(m)
  bool smooth = true;
  std::string name;

  double operator()(const Frame& v) const { return evaluator(v); }
};

ManifoldFunction constant_function(int n, int m, double c = 1.0);

/// v -> C_j^{(n-2)/2}(v . axis) on S^{n-1}. Right invariant (even) only when
/// j is even.
ManifoldFunction zonal_function(int n, int j, const Eigen::VectorXd& axis);
/// Zonal about the last standard basis vector.
ManifoldFunction zonal_function(int n, int j);

/// sum_{i <= degree} det(v'aa'v)^i / (i + 1) for a fixed, generic m-frame a.
ManifoldFunction gram_poly_function(int n, int m, int degree);

/// exp(tr(A vv')) with a symmetric A drawn from seed (entries of size ~1/2).
ManifoldFunction exp_projection_function(int n, int m, std::uint64_t seed);

/// Registry: "const", "zonal:<j>", "gram_poly:<degree>", "exp_proj:<seed>".
ManifoldFunction function_from_name(const std::string& name, int n, int m);

/// Largest |f(v gamma) - f(v)| over random v and gamma in O(m).
double right_invariance_defect(const ManifoldFunction& f, const SeededRng& rng,
                               int trials = 64);
bool validate_right_invariance(const ManifoldFunction& f, const SeededRng& rng,
                               int trials = 64, double tol = 1e-9);

// The fixed frame used by gram_poly_function.
Frame gram_poly_anchor(int n, int m);

}  // namespace stiefel
