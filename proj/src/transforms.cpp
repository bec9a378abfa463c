#include "stiefel/transforms.hpp"

#include <cmath>
#include <string>

#include "stiefel/error.hpp"

namespace stiefel {

std::string to_string(TransformKind kind) {
  switch (kind) {
    case TransformKind::cosine: return "cosine";
    case TransformKind::dual_cosine: return "dual_cosine";
    case TransformKind::sine: return "sine";
    case TransformKind::dual_sine: return "dual_sine";
    case TransformKind::funk: return "funk";
    case TransformKind::dual_funk: return "dual_funk";
    case TransformKind::M: return "M";
    case TransformKind::Q: return "Q";
    case TransformKind::M_normalized: return "M_normalized";
  }
  return "unknown";
}

TransformKind transform_kind_from_string(const std::string& s) {
  for (TransformKind k :
       {TransformKind::cosine, TransformKind::dual_cosine, TransformKind::sine,
        TransformKind::dual_sine, TransformKind::funk, TransformKind::dual_funk, TransformKind::M,
        TransformKind::Q, TransformKind::M_normalized}) {
    if (to_string(k) == s) return k;
  }
  throw ConfigError("unknown transform kind '" + s + "'");
}

std::size_t default_sample_count(int m) { return m == 1 ? 1'000'000 : 100'000; }

std::optional<complex> kernel_power(double base, complex exponent) {
  if (exponent == complex(0.0, 0.0)) return complex(1.0, 0.0);
  if (base > 0.0) return std::exp(exponent * std::log(base));
  if (exponent.real() > 0.0) return complex(0.0, 0.0);
  return std::nullopt;
}

namespace {

std::size_t samples_or_default(std::size_t n_samples, int m) {
  return n_samples == 0 ? default_sample_count(m) : n_samples;
}

void require_strip(ComplexParam alpha, int m, const char* what) {
  if (!(alpha.re() > m - 1)) {
    throw ConvergenceDomainError(std::string(what) + " needs Re alpha > m - 1 = " +
                                 std::to_string(m - 1) + ", got " + std::to_string(alpha.re()));
  }
}

void require_ambient(int fn, int pn, const char* what) {
  if (fn != pn) throw DimensionError(std::string(what) + ": function and point live in different R^n");
}

MCEstimate degenerate_zero(std::size_t n) {
  MCEstimate e;
  e.n_samples = n;
  e.degenerate = true;
  return e;
}

MCEstimate scaled(MCEstimate e, complex c) {
  e.value *= c;
  e.stderr *= std::abs(c);
  return e;
}

// Mean of f(draw) * base(draw)^exponent over Haar draws on V_{n, sample_m}.
template <class Base>
MCEstimate kernel_mc(const ManifoldFunction& f, int n, int sample_m, complex exponent,
                     std::size_t n_samples, const SeededRng& rng, const McOptions& opt,
                     Base&& base) {
  auto sampler = [&](Engine& e) {
    SampleValues<1> s;
    const Frame w = haar_frame(e, n, sample_m);
    const std::optional<complex> k = kernel_power(base(w), exponent);
    if (!k) {
      s.rejected = true;
      return s;
    }
    s.values[0] = f(w) * *k;
    return s;
  };
  return monte_carlo_multi<1>(n_samples, rng, sampler, opt).estimates[0];
}

ResidualEstimate combine(MCEstimate lhs, MCEstimate rhs) {
  ResidualEstimate r;
  r.lhs = lhs;
  r.rhs = rhs;
  r.residual = lhs.value - rhs.value;
  r.stderr = std::hypot(lhs.stderr, rhs.stderr);
  r.sigma = sigma_distance(lhs.value, rhs.value, r.stderr);
  return r;
}

double integrand_diff(complex a, complex b) {
  return std::abs(a - b) / std::max({1.0, std::abs(a), std::abs(b)});
}

}  // namespace

MCEstimate cosine_transform(const ManifoldFunction& f, const Frame& u, ComplexParam alpha,
                            std::size_t n_samples, const SeededRng& rng, const McOptions& opt) {
  require_ambient(f.n, u.n(), "cosine_transform");
  const int m = f.m;
  const int k = u.m();
  require_strip(alpha, m, "cosine_transform");
  n_samples = samples_or_default(n_samples, m);
  if (m > k) return degenerate_zero(n_samples);
  const complex e = 0.5 * (alpha.value() - static_cast<double>(k));
  return kernel_mc(f, f.n, m, e, n_samples, rng, opt,
                   [&u](const Frame& v) { return gram_det_cos(u, v); });
}

MCEstimate dual_cosine_transform(const ManifoldFunction& phi, const Frame& v, ComplexParam alpha,
                                 std::size_t n_samples, const SeededRng& rng,
                                 const McOptions& opt) {
  require_ambient(phi.n, v.n(), "dual_cosine_transform");
  const int m = v.m();
  const int k = phi.m;
  require_strip(alpha, m, "dual_cosine_transform");
  n_samples = samples_or_default(n_samples, m);
  if (m > k) return degenerate_zero(n_samples);
  const complex e = 0.5 * (alpha.value() - static_cast<double>(k));
  return kernel_mc(phi, phi.n, k, e, n_samples, rng, opt,
                   [&v](const Frame& u) { return gram_det_cos(u, v); });
}

MCEstimate sine_transform(const ManifoldFunction& f, const Frame& u, ComplexParam alpha,
                          std::size_t n_samples, const SeededRng& rng, const McOptions& opt) {
  require_ambient(f.n, u.n(), "sine_transform");
  const int n = f.n;
  const int m = f.m;
  const int k = u.m();
  require_strip(alpha, m, "sine_transform");
  n_samples = samples_or_default(n_samples, m);
  if (k + m > n) return degenerate_zero(n_samples);
  const complex e = 0.5 * (alpha.value() + static_cast<double>(k - n));
  return kernel_mc(f, n, m, e, n_samples, rng, opt,
                   [&u](const Frame& v) { return gram_det_sin(u, v); });
}

MCEstimate dual_sine_transform(const ManifoldFunction& phi, const Frame& v, ComplexParam alpha,
                               std::size_t n_samples, const SeededRng& rng,
                               const McOptions& opt) {
  require_ambient(phi.n, v.n(), "dual_sine_transform");
  const int n = phi.n;
  const int m = v.m();
  const int k = phi.m;
  require_strip(alpha, m, "dual_sine_transform");
  n_samples = samples_or_default(n_samples, m);
  if (k + m > n) return degenerate_zero(n_samples);
  const complex e = 0.5 * (alpha.value() + static_cast<double>(k - n));
  return kernel_mc(phi, n, k, e, n_samples, rng, opt,
                   [&v](const Frame& u) { return gram_det_sin(u, v); });
}

namespace {

Frame fiber_basis(const Frame& point, const SeededRng& rng, Completion completion) {
  if (completion == Completion::deterministic) return complement_frame(point);
  Engine e = rng.substream(0xc0).engine();
  return complement_frame(point, e);
}

// Mean of fn(basis * omega) with omega Haar on V_{basis.m, dim}.
MCEstimate fiber_average(const ManifoldFunction& fn, const Frame& basis, int dim,
                         std::size_t n_samples, const SeededRng& rng, const McOptions& opt) {
  const int fiber_n = basis.m();
  return monte_carlo(
      n_samples, rng,
      [&](Engine& e) {
        const Frame omega = haar_frame(e, fiber_n, dim);
        return complex(fn(frame_unchecked(basis.matrix() * omega.matrix())), 0.0);
      },
      opt);
}

}  // namespace

MCEstimate funk_transform(const ManifoldFunction& f, const Frame& u, std::size_t n_samples,
                          const SeededRng& rng, Completion completion, const McOptions& opt) {
  require_ambient(f.n, u.n(), "funk_transform");
  if (u.m() + f.m > f.n) {
    throw DimensionError("funk_transform needs k + m <= n, got k=" + std::to_string(u.m()) +
                         " m=" + std::to_string(f.m) + " n=" + std::to_string(f.n));
  }
  n_samples = samples_or_default(n_samples, f.m);
  return fiber_average(f, fiber_basis(u, rng, completion), f.m, n_samples, rng, opt);
}

MCEstimate dual_funk_transform(const ManifoldFunction& phi, const Frame& v, std::size_t n_samples,
                               const SeededRng& rng, Completion completion,
                               const McOptions& opt) {
  require_ambient(phi.n, v.n(), "dual_funk_transform");
  if (v.m() + phi.m > phi.n) {
    throw DimensionError("dual_funk_transform needs k + m <= n");
  }
  n_samples = samples_or_default(n_samples, phi.m);
  return fiber_average(phi, fiber_basis(v, rng, completion), phi.m, n_samples, rng, opt);
}

MCEstimate M_transform(const ManifoldFunction& f, const Frame& u, ComplexParam alpha,
                       std::size_t n_samples, const SeededRng& rng, const McOptions& opt) {
  require_ambient(f.n, u.n(), "M_transform");
  const int m = f.m;
  if (u.m() != m) throw DimensionError("M_transform needs u in V_{n,m}");
  if (m >= f.n) throw DimensionError("M_transform needs m <= n - 1");
  require_strip(alpha, m, "M_transform");
  n_samples = samples_or_default(n_samples, m);
  const complex e = alpha.value() - static_cast<double>(m);
  return kernel_mc(f, f.n, m, e, n_samples, rng, opt,
                   [&u](const Frame& v) { return abs_det_cross(u, v); });
}

MCEstimate M_normalized_transform(const ManifoldFunction& f, const Frame& u, ComplexParam alpha,
                                  std::size_t n_samples, const SeededRng& rng,
                                  const McOptions& opt) {
  const complex delta = delta_norm(f.n, f.m, alpha);
  return scaled(M_transform(f, u, alpha, n_samples, rng, opt), delta);
}

MCEstimate Q_transform(const ManifoldFunction& f, const Frame& u, ComplexParam alpha,
                       std::size_t n_samples, const SeededRng& rng, const McOptions& opt) {
  require_ambient(f.n, u.n(), "Q_transform");
  const int n = f.n;
  const int m = f.m;
  if (u.m() != m) throw DimensionError("Q_transform needs u in V_{n,m}");
  if (2 * m > n) throw DimensionError("Q_transform needs 2m <= n");
  require_strip(alpha, m, "Q_transform");
  n_samples = samples_or_default(n_samples, m);
  const complex e = 0.5 * (alpha.value() + static_cast<double>(m - n));
  return kernel_mc(f, n, m, e, n_samples, rng, opt,
                   [&u](const Frame& v) { return gram_det_sin(u, v); });
}

MCEstimate evaluate(const TransformRequest& r, const ManifoldFunction& f, const Frame& point,
                    const McOptions& opt) {
  const SeededRng rng(r.seed);
  switch (r.kind) {
    case TransformKind::cosine: return cosine_transform(f, point, r.alpha, r.n_samples, rng, opt);
    case TransformKind::dual_cosine:
      return dual_cosine_transform(f, point, r.alpha, r.n_samples, rng, opt);
    case TransformKind::sine: return sine_transform(f, point, r.alpha, r.n_samples, rng, opt);
    case TransformKind::dual_sine:
      return dual_sine_transform(f, point, r.alpha, r.n_samples, rng, opt);
    case TransformKind::funk:
      return funk_transform(f, point, r.n_samples, rng, Completion::deterministic, opt);
    case TransformKind::dual_funk:
      return dual_funk_transform(f, point, r.n_samples, rng, Completion::deterministic, opt);
    case TransformKind::M: return M_transform(f, point, r.alpha, r.n_samples, rng, opt);
    case TransformKind::Q: return Q_transform(f, point, r.alpha, r.n_samples, rng, opt);
    case TransformKind::M_normalized:
      return M_normalized_transform(f, point, r.alpha, r.n_samples, rng, opt);
  }
  throw ConfigError("unknown transform kind");
}

ResidualEstimate duality_residual(const ManifoldFunction& f, const ManifoldFunction& phi,
                                  std::size_t n_samples, const SeededRng& rng,
                                  const McOptions& opt) {
  const int n = f.n;
  const int m = f.m;
  const int k = phi.m;
  if (phi.n != n) throw DimensionError("duality_residual: f and phi live in different R^n");
  if (k + m > n) throw DimensionError("duality_residual needs k + m <= n");
  n_samples = samples_or_default(n_samples, std::max(m, k));

  const MCEstimate lhs = monte_carlo(
      n_samples, rng.substream(1),
      [&](Engine& e) {
        const Frame u = haar_frame(e, n, k);
        const Frame basis = complement_frame(u);
        const Frame omega = haar_frame(e, n - k, m);
        const Frame v = frame_unchecked(basis.matrix() * omega.matrix());
        return complex(f(v) * phi(u), 0.0);
      },
      opt);
  const MCEstimate rhs = monte_carlo(
      n_samples, rng.substream(2),
      [&](Engine& e) {
        const Frame v = haar_frame(e, n, m);
        const Frame basis = complement_frame(v);
        const Frame theta = haar_frame(e, n - m, k);
        const Frame u = frame_unchecked(basis.matrix() * theta.matrix());
        return complex(f(v) * phi(u), 0.0);
      },
      opt);
  return combine(lhs, rhs);
}

ResidualEstimate inversion_chain_residual(const ManifoldFunction& f, const Frame& v, int k,
                                          ComplexParam alpha, std::size_t n_samples,
                                          const SeededRng& rng, const McOptions& opt) {
  const int n = f.n;
  const int m = f.m;
  require_ambient(n, v.n(), "inversion_chain_residual");
  if (v.m() != m) throw DimensionError("inversion_chain_residual needs v in V_{n,m}");
  if (!(m <= k && k <= n - m)) {
    throw DimensionError("inversion_chain_residual needs m <= k <= n - m");
  }
  if (!f.right_o_invariant) {
    throw ConfigError("inversion_chain_residual needs a right O(m)-invariant f");
  }
  const ComplexParam beta(alpha.value() + static_cast<double>(n - k - m));
  require_strip(alpha, m, "inversion_chain_residual (left side)");
  require_strip(beta, m, "inversion_chain_residual (right side, alpha + n - k - m)");
  n_samples = samples_or_default(n_samples, m);
  const auto inner = static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(n_samples))));
  const complex e = 0.5 * (alpha.value() - static_cast<double>(k));

  auto outer = [&](Engine& eng) {
    SampleValues<1> s;
    const Frame u = haar_frame(eng, n, k);
    const std::optional<complex> kern = kernel_power(gram_det_cos(u, v), e);
    if (!kern) {
      s.rejected = true;
      return s;
    }
    const Frame basis = complement_frame(u);
    double funk = 0.0;
    for (std::size_t i = 0; i < inner; ++i) {
      const Frame omega = haar_frame(eng, n - k, m);
      funk += f(frame_unchecked(basis.matrix() * omega.matrix()));
    }
    s.values[0] = (funk / static_cast<double>(inner)) * *kern;
    return s;
  };
  MCEstimate lhs = monte_carlo_multi<1>(n_samples, rng.substream(1), outer, opt).estimates[0];
  lhs = scaled(lhs, 1.0 / siegel_gamma_value(m, 0.5 * alpha.value()));

  MCEstimate q = Q_transform(f, v, beta, n_samples, rng.substream(2), opt);
  const complex rhs_const = siegel_gamma_value(m, 0.5 * (n - m)) / siegel_gamma_value(m, 0.5 * k) /
                            siegel_gamma_value(m, 0.5 * beta.value());
  return combine(lhs, scaled(q, rhs_const));
}

PathwiseResidual sine_cosine_complement_residual(const ManifoldFunction& f, const Frame& u,
                                                 ComplexParam alpha, std::size_t n_samples,
                                                 const SeededRng& rng, const McOptions& opt) {
  const int n = f.n;
  const int m = f.m;
  const int k = u.m();
  require_ambient(n, u.n(), "sine_cosine_complement_residual");
  require_strip(alpha, m, "sine_cosine_complement_residual");
  if (k >= n) throw DimensionError("sine_cosine_complement_residual needs k < n");
  n_samples = samples_or_default(n_samples, m);
  const Frame ut = complement_frame(u);
  const complex e = 0.5 * (alpha.value() + static_cast<double>(k - n));

  auto sampler = [&](Engine& eng) {
    SampleValues<2> s;
    const Frame v = haar_frame(eng, n, m);
    const double b_sin = gram_det_sin(u, v);
    const double b_cos = gram_det_cos(ut, v);
    const auto ks = kernel_power(b_sin, e);
    const auto kc = kernel_power(b_cos, e);
    if (!ks || !kc) {
      s.rejected = true;
      return s;
    }
    const double fv = f(v);
    s.values[0] = fv * *ks;
    s.values[1] = fv * *kc;
    s.aux[0] = std::abs(b_sin - b_cos);
    s.aux[1] = integrand_diff(s.values[0], s.values[1]);
    return s;
  };
  const MultiEstimate<2> est = monte_carlo_multi<2>(n_samples, rng, sampler, opt);
  PathwiseResidual r;
  r.lhs = est.estimates[0];
  r.rhs = est.estimates[1];
  r.max_kernel_diff = est.aux_max[0];
  r.max_integrand_diff = est.aux_max[1];
  r.mean_rel_diff = std::abs(r.lhs.value - r.rhs.value) / std::max(1.0, std::abs(r.lhs.value));
  return r;
}

PathwiseResidual dual_cosine_complement_residual(const ManifoldFunction& phi, const Frame& v,
                                                 ComplexParam alpha, std::size_t n_samples,
                                                 const SeededRng& rng, const McOptions& opt) {
  const int n = phi.n;
  const int k = phi.m;
  const int m = v.m();
  require_ambient(n, v.n(), "dual_cosine_complement_residual");
  if (!(m <= k && k < n)) {
    throw DimensionError("dual_cosine_complement_residual needs m <= k <= n - 1");
  }
  require_strip(alpha, m, "dual_cosine_complement_residual");
  n_samples = samples_or_default(n_samples, m);
  const Frame vt = complement_frame(v);
  const complex e = 0.5 * (alpha.value() - static_cast<double>(k));

  auto sampler = [&](Engine& eng) {
    SampleValues<2> s;
    const Frame u = haar_frame(eng, n, k);
    const Frame ut = complement_frame(u);
    const double b_direct = gram_det_cos(u, v);
    const double b_complement = gram_det_cos(vt, ut);
    const auto kd = kernel_power(b_direct, e);
    const auto kc = kernel_power(b_complement, e);
    if (!kd || !kc) {
      s.rejected = true;
      return s;
    }
    s.values[0] = phi(u) * *kd;
    // phi_1(u~) = phi(u): recover an n x k frame spanning u from u~.
    s.values[1] = phi(complement_frame(ut)) * *kc;
    s.aux[0] = std::abs(b_direct - b_complement);
    s.aux[1] = integrand_diff(s.values[0], s.values[1]);
    return s;
  };
  const MultiEstimate<2> est = monte_carlo_multi<2>(n_samples, rng, sampler, opt);
  PathwiseResidual r;
  r.lhs = est.estimates[0];
  r.rhs = est.estimates[1];
  r.max_kernel_diff = est.aux_max[0];
  r.max_integrand_diff = est.aux_max[1];
  r.mean_rel_diff = std::abs(r.lhs.value - r.rhs.value) / std::max(1.0, std::abs(r.lhs.value));
  return r;
}

}  // namespace stiefel
