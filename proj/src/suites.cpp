#include "stiefel/suites.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "stiefel/error.hpp"
#include "stiefel/functions.hpp"
#include "stiefel/gamma.hpp"
#include "stiefel/manifold.hpp"
#include "stiefel/rankone.hpp"
#include "stiefel/transforms.hpp"
#include "stiefel/zeta.hpp"

namespace stiefel::suites {

namespace {

CheckRecord base_record(const std::string& name, const std::string& tag, const Case& c,
                        bool with_alpha = true) {
  CheckRecord r;
  r.name = name;
  r.tag = tag;
  r.n = c.n;
  r.m = c.m;
  r.k = c.k;
  if (with_alpha) r.alpha = c.alpha;
  return r;
}

void fill_mc(CheckRecord& r, complex value, double stderr, complex reference, double bound = kSigmaBound) {
  r.value = value;
  r.stderr = stderr;
  r.reference = reference;
  r.sigma = sigma_distance(value, reference, stderr);
  r.pass = *r.sigma <= bound;
}

void fill_deterministic(CheckRecord& r, double residual, double tolerance) {
  r.residual = residual;
  r.tolerance = tolerance;
  r.pass = residual <= tolerance;
}

std::string format_complex(complex z) {
  std::ostringstream os;
  os << z.real();
  if (z.imag() != 0.0) os << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag()) << "i";
  return os.str();
}

}  // namespace

CheckRecord closed_form(const Case& c) {
  CheckRecord r = base_record("cosine closed form", "cosine-closed-form", c);
  const auto f = constant_function(c.n, c.m);
  const MCEstimate e =
      cosine_transform(f, Frame::canonical(c.n, c.k), c.alpha, c.n_samples, SeededRng(c.seed), c.mc);
  fill_mc(r, e.value, e.stderr, cosine_const(c.n, c.m, c.k, c.alpha));
  return r;
}

CheckRecord gaussian_zeta(const Case& c) {
  CheckRecord r = base_record("gaussian zeta", "gaussian-zeta", c);
  r.k = 0;
  zeta::QuadratureSpec spec;
  if (c.n_samples != 0) spec.n_samples = c.n_samples;
  spec.seed = c.seed;
  spec.mc = c.mc;
  const MCEstimate e = zeta::zeta_integral(zeta::SchwartzTestFunction::gaussian(c.n, c.m), c.alpha, spec);
  fill_mc(r, e.value, e.stderr, zeta::gaussian_zeta_closed_form(c.n, c.m, c.alpha));
  return r;
}

CheckRecord bernstein(const Case& c, int points) {
  CheckRecord r = base_record("bernstein identity", "bernstein", c);
  r.k = 0;
  if (c.m > 2) throw DimensionError("the Bernstein check supports m <= 2");
  const double alpha = c.alpha.real();
  Engine e = SeededRng(c.seed, 0xbe).engine();
  std::normal_distribution<double> normal;
  double worst = 0.0;
  int accepted = 0;
  bool relative = true;
  while (accepted < points) {
    Matrix x(c.n, c.m);
    for (Eigen::Index i = 0; i < x.size(); ++i) x.data()[i] = normal(e);
    Eigen::SelfAdjointEigenSolver<Matrix> es(x.transpose() * x, Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() < 0.1) continue;
    const zeta::BernsteinResidual b = zeta::bernstein_identity_residual(alpha, 1, zeta::MatrixSpacePoint(x));
    relative = b.relative;
    if (b.residual >= worst) {
      worst = b.residual;
      r.value = b.fd_value;
      r.reference = b.exact_value;
    }
    ++accepted;
  }
  fill_deterministic(r, worst, c.m == 1 ? 1e-4 : 1e-3);
  r.note = std::to_string(points) + " points, " + (relative ? "relative" : "absolute (B_1 = 0)");
  return r;
}

CheckRecord zeta_limit(const Case& c) {
  CheckRecord r = base_record("zeta limit at alpha = 0", "zeta-limit", c, false);
  r.m = 1;
  r.k = 0;
  r.alpha = complex(0.0, 0.0);
  zeta::QuadratureSpec spec;
  spec.n_samples = c.n_samples != 0 ? c.n_samples : 400'000;
  spec.seed = c.seed;
  spec.mc = c.mc;
  const zeta::LimitResult l = zeta::normalized_zeta_limit(zeta::SchwartzTestFunction::gaussian(c.n, 1), spec);
  r.value = l.extrapolated;
  r.reference = l.reference;
  double se = 0.0;
  for (const MCEstimate& s : l.samples) se = std::max(se, s.stderr);
  r.stderr = se;
  fill_deterministic(r, std::abs(l.extrapolated - l.reference) / std::abs(l.reference), 0.01);
  std::ostringstream note;
  note << "alphas";
  for (std::size_t i = 0; i < l.alphas.size(); ++i) {
    note << ' ' << l.alphas[i] << ':' << l.samples[i].value.real();
  }
  r.note = note.str();
  return r;
}

CheckRecord duality(const Case& c) {
  CheckRecord r = base_record("funk duality", "funk-duality", c, false);
  const auto f = exp_projection_function(c.n, c.m, 1);
  const auto phi = exp_projection_function(c.n, c.k, 2);
  const ResidualEstimate e = duality_residual(f, phi, c.n_samples, SeededRng(c.seed), c.mc);
  fill_mc(r, e.lhs.value, e.stderr, e.rhs.value);
  return r;
}

std::vector<CheckRecord> complement(const Case& c) {
  std::vector<CheckRecord> out;
  const SeededRng rng(c.seed);
  {
    CheckRecord r = base_record("sine-cosine complement", "sine-cosine-complement", c);
    const auto f = exp_projection_function(c.n, c.m, 3);
    const Frame u = haar_frame(rng.substream(0xf0), c.n, c.k);
    const PathwiseResidual p = sine_cosine_complement_residual(f, u, c.alpha, c.n_samples, rng, c.mc);
    r.value = p.lhs.value;
    r.stderr = p.lhs.stderr;
    r.reference = p.rhs.value;
    fill_deterministic(r, std::max(p.max_kernel_diff, p.mean_rel_diff), 1e-10);
    out.push_back(r);
  }
  {
    CheckRecord r = base_record("dual cosine complement", "dual-cosine-complement", c);
    const auto phi = exp_projection_function(c.n, c.k, 4);
    const Frame v = haar_frame(rng.substream(0xf1), c.n, c.m);
    const PathwiseResidual p = dual_cosine_complement_residual(phi, v, c.alpha, c.n_samples, rng, c.mc);
    r.value = p.lhs.value;
    r.stderr = p.lhs.stderr;
    r.reference = p.rhs.value;
    fill_deterministic(r, std::max(p.max_kernel_diff, p.mean_rel_diff), 1e-10);
    out.push_back(r);
  }
  return out;
}

CheckRecord inversion(const Case& c) {
  CheckRecord r = base_record("inversion chain", "cosine-funk-inversion", c);
  const auto f = gram_poly_function(c.n, c.m, 2);
  const Frame v = haar_frame(SeededRng(c.seed).substream(0xf2), c.n, c.m);
  const ResidualEstimate e = inversion_chain_residual(f, v, c.k, c.alpha, c.n_samples, SeededRng(c.seed), c.mc);
  fill_mc(r, e.lhs.value, e.stderr, e.rhs.value);
  return r;
}

CheckRecord haar_moment(const Case& c) {
  constexpr int kMaxN = 6;
  if (c.n > kMaxN) throw DimensionError("haar moment check supports n <= 6");
  if (c.m < 1 || c.m > c.n) throw DimensionError("haar moment check needs 1 <= m <= n");
  CheckRecord r = base_record("haar second moment", "haar-moment", c, false);
  r.k = 0;
  const std::size_t n_samples = c.n_samples != 0 ? c.n_samples : 100'000;
  const int n = c.n;
  const int m = c.m;
  auto sampler = [n, m](Engine& e) {
    SampleValues<kMaxN * kMaxN> s;
    const Frame v = haar_frame(e, n, m);
    const Matrix p = v.matrix() * v.matrix().transpose();
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) s.values[static_cast<std::size_t>(i * n + j)] = p(i, j);
    }
    return s;
  };
  const auto est = monte_carlo_multi<kMaxN * kMaxN>(n_samples, SeededRng(c.seed), sampler, c.mc);
  double worst = -1.0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const MCEstimate& e = est.estimates[static_cast<std::size_t>(i * n + j)];
      const double ref = i == j ? static_cast<double>(m) / n : 0.0;
      const double s = sigma_distance(e.value, ref, e.stderr);
      if (s > worst) {
        worst = s;
        fill_mc(r, e.value, e.stderr, ref, 5.0);
        r.note = "worst entry (" + std::to_string(i) + "," + std::to_string(j) + ")";
      }
    }
  }
  return r;
}

std::vector<CheckRecord> rankone_multiplier(const Case& c, int j_max) {
  std::vector<CheckRecord> out;
  for (int j = 0; j <= j_max; ++j) {
    CheckRecord r = base_record("multiplier j=" + std::to_string(j), "rank-one-multiplier", c);
    r.m = 1;
    r.k = 1;
    complex formula;
    try {
      formula = multiplier_c(j, c.alpha, c.n);
    } catch (const PoleError&) {
      r.excluded = true;
      r.pass = true;
      r.note = "formula has a pole at lambda = " + format_complex(c.alpha);
      out.push_back(r);
      continue;
    }
    const rankone::MultiplierPath path =
        rankone::resolve_multiplier_path(c.alpha, c.n, rankone::MultiplierPath::automatic);
    const MCEstimate e = rankone::cos_lambda_multiplier_mc(
        j, c.alpha, c.n, c.n_samples, SeededRng(c.seed, 0x100 + static_cast<std::uint64_t>(j)),
        path, std::nullopt, c.mc);
    fill_mc(r, e.value, e.stderr, formula);
    r.note = rankone::to_string(path) + " path";
    out.push_back(r);
  }
  return out;
}

CheckRecord rankone_compose(int n, int j_max, const std::vector<complex>& grid) {
  CheckRecord r;
  r.name = "composition";
  r.tag = "rank-one-composition";
  r.n = n;
  r.m = 1;
  r.k = 1;
  const rankone::CompositionReport rep = rankone::composition_identity_check(n, j_max, grid);
  r.value = rep.max_deviation;
  r.reference = 0.0;
  fill_deterministic(r, rep.max_deviation, 1e-10);
  r.note = std::to_string(rep.checked) + " pairs, worst j=" + std::to_string(rep.worst_j) +
           " lambda=" + format_complex(rep.worst_lambda);
  return r;
}

std::vector<CheckRecord> rankone_funk(const Case& c, int j) {
  const rankone::FunkCheckReport rep =
      rankone::funk_multiplier_check(j, c.n, c.n_samples, SeededRng(c.seed), 0.95, c.mc);
  CheckRecord a = base_record("funk limit j=" + std::to_string(j), "rank-one-funk-limit", c, false);
  a.m = 1;
  a.k = 1;
  a.alpha = 0.5 * c.n - 1.0;
  fill_mc(a, rep.scaled, rep.scaled_stderr, rep.algebraic);
  CheckRecord b = base_record("funk multiplier j=" + std::to_string(j), "rank-one-funk-multiplier", c, false);
  b.m = 1;
  b.k = 1;
  fill_mc(b, rep.empirical.value, rep.empirical.stderr, rep.funk_oracle);
  return {a, b};
}

CheckRecord rankone_decay(int n, complex lambda, int j_max) {
  CheckRecord r;
  r.name = "multiplier decay";
  r.tag = "rank-one-decay";
  r.n = n;
  r.m = 1;
  r.k = 1;
  r.alpha = lambda;
  const rankone::DecayReport rep = rankone::multiplier_decay_check(lambda, j_max, n);
  r.value = rep.slope;
  r.reference = rep.expected;
  fill_deterministic(r, std::abs(rep.slope - rep.expected), 0.05);
  r.note = "j in [" + std::to_string(j_max / 2) + ", " + std::to_string(j_max) + "]";
  return r;
}

}  // namespace stiefel::suites
