#pragma once

// Monte Carlo evaluation of the cosine, sine and Funk transforms on Stiefel
// manifolds, their duals, the k = m specializations M and Q, and residual
// functionals for the identities that relate them.
//
// Conventions: f is a function on V_{n,m}, phi a function on V_{n,k}; every
// integral is against the invariant probability measure. Kernels use the
// real logarithm of a positive Gram determinant, so complex exponents carry
// no branch ambiguity.

#include <cstdint>
#include <optional>
#include <string>

#include "stiefel/functions.hpp"
#include "stiefel/gamma.hpp"
#include "stiefel/manifold.hpp"
#include "stiefel/monte_carlo.hpp"

namespace stiefel {

enum class TransformKind { cosine, dual_cosine, sine, dual_sine, funk, dual_funk, M, Q, M_normalized };

std::string to_string(TransformKind kind);
TransformKind transform_kind_from_string(const std::string& s);

struct TransformRequest {
  TransformKind kind = TransformKind::cosine;
  int n = 3;
  int m = 1;
  int k = 1;
  ComplexParam alpha{2.0};
  std::size_t n_samples = 0;  // 0: default_sample_count(m)
  std::uint64_t seed = 0;
};

/// 10^6 for m = 1, 10^5 otherwise.
std::size_t default_sample_count(int m);

/// base^exponent for a nonnegative base: exp(exponent log base) for base > 0,
/// 0 for base == 0 with Re exponent > 0, 1 for exponent == 0; nullopt for a
/// singular sample (base == 0, Re exponent <= 0).
std::optional<complex> kernel_power(double base, complex exponent);

/// int f(v) det(v'uu'v)^{(alpha-k)/2} d_*v, u in V_{n,k}.
MCEstimate cosine_transform(const ManifoldFunction& f, const Frame& u, ComplexParam alpha,
                            std::size_t n_samples, const SeededRng& rng,
                            const McOptions& opt = default_mc_options());
/// int phi(u) det(v'uu'v)^{(alpha-k)/2} d_*u, v in V_{n,m}.
MCEstimate dual_cosine_transform(const ManifoldFunction& phi, const Frame& v, ComplexParam alpha,
                                 std::size_t n_samples, const SeededRng& rng,
                                 const McOptions& opt = default_mc_options());
/// int f(v) det(I_m - v'uu'v)^{(alpha+k-n)/2} d_*v.
MCEstimate sine_transform(const ManifoldFunction& f, const Frame& u, ComplexParam alpha,
                          std::size_t n_samples, const SeededRng& rng,
                          const McOptions& opt = default_mc_options());
MCEstimate dual_sine_transform(const ManifoldFunction& phi, const Frame& v, ComplexParam alpha,
                               std::size_t n_samples, const SeededRng& rng,
                               const McOptions& opt = default_mc_options());

enum class Completion { deterministic, randomized };

/// Average of f over m-frames orthogonal to u: f(g_u [omega; 0]) with omega
/// Haar on V_{n-k,m}. k + m <= n.
MCEstimate funk_transform(const ManifoldFunction& f, const Frame& u, std::size_t n_samples,
                          const SeededRng& rng, Completion completion = Completion::deterministic,
                          const McOptions& opt = default_mc_options());
MCEstimate dual_funk_transform(const ManifoldFunction& phi, const Frame& v, std::size_t n_samples,
                               const SeededRng& rng,
                               Completion completion = Completion::deterministic,
                               const McOptions& opt = default_mc_options());

/// int f(v) |det(u'v)|^{alpha-m} d_*v, u in V_{n,m}.
MCEstimate M_transform(const ManifoldFunction& f, const Frame& u, ComplexParam alpha,
                       std::size_t n_samples, const SeededRng& rng,
                       const McOptions& opt = default_mc_options());
/// delta_{n,m}(alpha) times M_transform; alpha not in {1, 2, ...}.
MCEstimate M_normalized_transform(const ManifoldFunction& f, const Frame& u, ComplexParam alpha,
                                  std::size_t n_samples, const SeededRng& rng,
                                  const McOptions& opt = default_mc_options());
/// int f(v) det(I_m - v'uu'v)^{(alpha+m-n)/2} d_*v, u in V_{n,m}, 2m <= n.
MCEstimate Q_transform(const ManifoldFunction& f, const Frame& u, ComplexParam alpha,
                       std::size_t n_samples, const SeededRng& rng,
                       const McOptions& opt = default_mc_options());

/// Dispatch on request.kind; point is u (or v for the duals).
MCEstimate evaluate(const TransformRequest& request, const ManifoldFunction& f, const Frame& point,
                    const McOptions& opt = default_mc_options());

struct ResidualEstimate {
  MCEstimate lhs;
  MCEstimate rhs;
  complex residual{0.0, 0.0};  // lhs - rhs
  double stderr = 0.0;         // combined standard error of the residual
  double sigma = 0.0;          // |residual| / stderr (see sigma_distance)
};

struct PathwiseResidual {
  MCEstimate lhs;
  MCEstimate rhs;
  double max_kernel_diff = 0.0;     // max over samples of |base_lhs - base_rhs|
  double max_integrand_diff = 0.0;  // max relative difference of the integrands
  double mean_rel_diff = 0.0;       // |lhs - rhs| / max(1, |lhs|)
};

/// int (F_{m,k} f) phi d_*u  -  int f (dual F phi) d_*v, each side by its own
/// construction of the incidence pair (u Haar then v in the fiber, or v Haar
/// then u in the fiber).
ResidualEstimate duality_residual(const ManifoldFunction& f, const ManifoldFunction& phi,
                                  std::size_t n_samples, const SeededRng& rng,
                                  const McOptions& opt = default_mc_options());

/// Dual cosine of the Funk transform divided by Gamma_m(alpha/2), against
/// Gamma_m((n-m)/2)/Gamma_m(k/2) Q^{alpha+n-k-m} f / Gamma_m((alpha+n-k-m)/2).
/// The left side is a nested estimate with sqrt(n_samples) fiber draws per
/// outer draw.
ResidualEstimate inversion_chain_residual(const ManifoldFunction& f, const Frame& v, int k,
                                          ComplexParam alpha, std::size_t n_samples,
                                          const SeededRng& rng,
                                          const McOptions& opt = default_mc_options());

/// Sine transform at u against the cosine transform of order n-k at the
/// complement of u, on shared samples.
PathwiseResidual sine_cosine_complement_residual(const ManifoldFunction& f, const Frame& u,
                                                 ComplexParam alpha, std::size_t n_samples,
                                                 const SeededRng& rng,
                                                 const McOptions& opt = default_mc_options());

/// Dual cosine transform at v against C^{alpha+n-k-m}_{n-k,n-m} phi_1 at the
/// complement of v, phi_1(u~) = phi(u), on shared samples.
PathwiseResidual dual_cosine_complement_residual(const ManifoldFunction& phi, const Frame& v,
                                                 ComplexParam alpha, std::size_t n_samples,
                                                 const SeededRng& rng,
                                                 const McOptions& opt = default_mc_options());

}  // namespace stiefel
