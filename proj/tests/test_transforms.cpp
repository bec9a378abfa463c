#include <doctest.h>

#include <cmath>

#include "stiefel/error.hpp"
#include "stiefel/functions.hpp"
#include "stiefel/gamma.hpp"
#include "stiefel/transforms.hpp"

using namespace stiefel;

namespace {

constexpr double kBound = 4.0;

bool within(const MCEstimate& e, complex ref) { return sigma_distance(e.value, ref, e.stderr) <= kBound; }

}  // namespace

TEST_CASE("kernel power") {
  CHECK(*kernel_power(4.0, 0.5) == complex(2.0, 0.0));
  CHECK(*kernel_power(0.0, 0.5) == complex(0.0, 0.0));
  CHECK(*kernel_power(0.0, 0.0) == complex(1.0, 0.0));
  CHECK_FALSE(kernel_power(0.0, -0.5).has_value());
  const complex z = *kernel_power(2.0, complex(0.0, 1.0));
  CHECK(std::abs(z - std::exp(complex(0.0, std::log(2.0)))) < 1e-15);
}

TEST_CASE("cosine transform of the constant") {
  const ManifoldFunction one = constant_function(3, 1);
  const MCEstimate a = cosine_transform(one, Frame::canonical(3, 1), 2.0, 200'000, SeededRng(1));
  CHECK(within(a, 0.5));
  CHECK(a.stderr < 2e-3);

  const MCEstimate flat = cosine_transform(constant_function(5, 2), Frame::canonical(5, 3), 3.0, 1000, SeededRng(2));
  CHECK(flat.value == complex(1.0, 0.0));
  CHECK(flat.stderr == 0.0);

  const MCEstimate b = cosine_transform(constant_function(4, 2), Frame::canonical(4, 2), 3.0, 100'000, SeededRng(3));
  CHECK(within(b, cosine_const(4, 2, 2, 3.0)));

  const complex alpha(2.5, 0.7);
  const MCEstimate c = cosine_transform(constant_function(4, 1), Frame::canonical(4, 2), alpha, 100'000, SeededRng(4));
  CHECK(within(c, cosine_const(4, 1, 2, alpha)));

  const MCEstimate d = dual_cosine_transform(constant_function(4, 2), Frame::canonical(4, 1), 2.0, 100'000, SeededRng(5));
  CHECK(within(d, cosine_const(4, 1, 2, 2.0)));
}

TEST_CASE("cosine transform domain and degeneracies") {
  const ManifoldFunction one = constant_function(3, 1);
  CHECK_THROWS_AS(cosine_transform(one, Frame::canonical(3, 1), 0.0, 10, SeededRng(1)), ConvergenceDomainError);
  CHECK_THROWS_AS(cosine_transform(constant_function(4, 2), Frame::canonical(4, 2), 0.9, 10, SeededRng(1)),
                  ConvergenceDomainError);
  CHECK_THROWS_AS(cosine_transform(one, Frame::canonical(4, 1), 2.0, 10, SeededRng(1)), DimensionError);

  const MCEstimate z = cosine_transform(constant_function(4, 2), Frame::canonical(4, 1), 2.0, 10, SeededRng(1));
  CHECK(z.degenerate);
  CHECK(z.value == complex(0.0, 0.0));
  const MCEstimate s = sine_transform(constant_function(4, 2), Frame::canonical(4, 3), 2.0, 10, SeededRng(1));
  CHECK(s.degenerate);

  // The kernels themselves vanish, not just their averages.
  const std::vector<Frame> vs = haar_frames(SeededRng(9), 4, 2, 1000);
  const std::vector<Frame> us = haar_frames(SeededRng(10), 4, 1, 1000);
  const std::vector<Frame> ws = haar_frames(SeededRng(11), 4, 3, 1000);
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    worst = std::max({worst, gram_det_cos(us[i], vs[i]), gram_det_sin(ws[i], vs[i])});
  }
  CHECK(worst == 0.0);
}

TEST_CASE("sine transform") {
  const MCEstimate a = sine_transform(constant_function(3, 1), Frame::canonical(3, 1), 2.0, 1000, SeededRng(1));
  CHECK(a.value == complex(1.0, 0.0));
  const MCEstimate b = sine_transform(constant_function(4, 1), Frame::canonical(4, 1), 2.0, 200'000, SeededRng(2));
  CHECK(within(b, cosine_const(4, 1, 3, 2.0)));
  const MCEstimate c = dual_sine_transform(constant_function(5, 2), Frame::canonical(5, 1), 2.5, 100'000, SeededRng(3));
  CHECK(within(c, cosine_const(5, 1, 3, 2.5)));
}

TEST_CASE("funk transform") {
  const Frame e = Frame::canonical(3, 1);
  CHECK(funk_transform(constant_function(3, 1), e, 100, SeededRng(1)).value == complex(1.0, 0.0));
  CHECK(dual_funk_transform(constant_function(5, 2), Frame::canonical(5, 2), 100, SeededRng(1)).value ==
        complex(1.0, 0.0));

  const ManifoldFunction p2 = zonal_function(3, 2);
  const MCEstimate a = funk_transform(p2, e, 100'000, SeededRng(2));
  CHECK(within(a, -0.5));
  // Every point of the great circle gives P_2(0), so the estimate is exact.
  CHECK(std::abs(a.value.real() + 0.5) < 1e-12);

  const ManifoldFunction f = function_from_name("exp_proj:7", 4, 1);
  const Frame u = haar_frame(SeededRng(3), 4, 2);
  const MCEstimate det = funk_transform(f, u, 100'000, SeededRng(4), Completion::deterministic);
  const MCEstimate rnd = funk_transform(f, u, 100'000, SeededRng(4), Completion::randomized);
  CHECK(sigma_distance(det.value, rnd.value, std::hypot(det.stderr, rnd.stderr)) <= kBound);

  Matrix g(2, 2);
  g << std::cos(0.4), -std::sin(0.4), std::sin(0.4), std::cos(0.4);
  const MCEstimate turned = funk_transform(f, u.right_multiply(g), 100'000, SeededRng(5));
  CHECK(sigma_distance(det.value, turned.value, std::hypot(det.stderr, turned.stderr)) <= kBound);

  const MCEstimate dual = dual_funk_transform(p2, e, 100'000, SeededRng(2));
  CHECK(std::abs(dual.value.real() + 0.5) < 1e-12);

  CHECK_THROWS_AS(funk_transform(constant_function(3, 2), Frame::canonical(3, 2), 10, SeededRng(1)), DimensionError);
}

TEST_CASE("M and Q transforms") {
  const MCEstimate m = M_transform(constant_function(3, 1), Frame::canonical(3, 1), 2.0, 200'000, SeededRng(1));
  CHECK(within(m, 0.5));
  const MCEstimate m2 = M_transform(constant_function(5, 2), Frame::canonical(5, 2), 2.5, 100'000, SeededRng(2));
  CHECK(within(m2, cosine_const(5, 2, 2, 2.5)));
  const MCEstimate q = Q_transform(constant_function(5, 2), Frame::canonical(5, 2), 3.0, 1000, SeededRng(3));
  CHECK(q.value == complex(1.0, 0.0));
  CHECK_THROWS_AS(Q_transform(constant_function(3, 2), Frame::canonical(3, 2), 3.0, 10, SeededRng(3)), DimensionError);
  CHECK_THROWS_AS(M_normalized_transform(constant_function(3, 1), Frame::canonical(3, 1), 2.0, 10, SeededRng(3)),
                  ExcludedParamError);
  const MCEstimate mn = M_normalized_transform(constant_function(3, 1), Frame::canonical(3, 1), 1.5, 100'000, SeededRng(4));
  CHECK(within(mn, delta_norm(3, 1, 1.5) * cosine_const(3, 1, 1, 1.5)));
}

TEST_CASE("dispatch") {
  TransformRequest r;
  r.kind = transform_kind_from_string("cosine");
  r.n = 3;
  r.alpha = 2.0;
  r.n_samples = 1000;
  r.seed = 3;
  const MCEstimate a = evaluate(r, constant_function(3, 1), Frame::canonical(3, 1));
  const MCEstimate b = cosine_transform(constant_function(3, 1), Frame::canonical(3, 1), 2.0, 1000, SeededRng(3));
  CHECK(a.value == b.value);
  CHECK(to_string(TransformKind::dual_sine) == "dual_sine");
  CHECK(transform_kind_from_string(to_string(TransformKind::M_normalized)) == TransformKind::M_normalized);
  CHECK_THROWS_AS(transform_kind_from_string("laplace"), ConfigError);
  CHECK(default_sample_count(1) == 1'000'000);
  CHECK(default_sample_count(2) == 100'000);
}

TEST_CASE("duality") {
  const ResidualEstimate trivial =
      duality_residual(constant_function(3, 1), constant_function(3, 1), 1000, SeededRng(1));
  CHECK(std::abs(trivial.residual) < 1e-14);

  for (auto [n, m, k] : {std::array{3, 1, 1}, std::array{4, 1, 2}}) {
    const ResidualEstimate r = duality_residual(function_from_name("exp_proj:1", n, m),
                                                function_from_name("exp_proj:2", n, k), 100'000, SeededRng(n));
    CHECK(r.sigma <= kBound);
  }
  CHECK_THROWS_AS(duality_residual(constant_function(3, 2), constant_function(3, 2), 10, SeededRng(1)),
                  DimensionError);
}

TEST_CASE("complement identities hold pathwise") {
  const ManifoldFunction f = function_from_name("exp_proj:3", 4, 1);
  const Frame u = haar_frame(SeededRng(1), 4, 1);
  const PathwiseResidual s = sine_cosine_complement_residual(f, u, 3.0, 20'000, SeededRng(2));
  CHECK(s.max_kernel_diff < 1e-10);
  CHECK(s.mean_rel_diff < 1e-10);

  const ManifoldFunction phi = function_from_name("exp_proj:4", 4, 2);
  const Frame v = haar_frame(SeededRng(3), 4, 1);
  const PathwiseResidual d = dual_cosine_complement_residual(phi, v, 2.0, 20'000, SeededRng(4));
  CHECK(d.max_kernel_diff < 1e-10);
  CHECK(d.mean_rel_diff < 1e-10);

  const PathwiseResidual one = dual_cosine_complement_residual(constant_function(4, 2), v, 2.0, 1000, SeededRng(4));
  CHECK(std::abs(one.lhs.value - one.rhs.value) < 1e-12);
}

TEST_CASE("inversion chain") {
  const ResidualEstimate one =
      inversion_chain_residual(constant_function(4, 1), Frame::canonical(4, 1), 1, 1.5, 10'000, SeededRng(1));
  CHECK(one.sigma <= kBound);
  CHECK(within(one.lhs, cosine_const(4, 1, 1, 1.5) / siegel_gamma_value(1, 0.75)));

  const ManifoldFunction f = function_from_name("gram_poly:2", 4, 1);
  const ResidualEstimate r = inversion_chain_residual(f, haar_frame(SeededRng(2), 4, 1), 1, 1.5, 10'000, SeededRng(3));
  CHECK(r.sigma <= kBound);

  CHECK_THROWS_AS(inversion_chain_residual(f, Frame::canonical(4, 1), 1, 0.0, 100, SeededRng(1)),
                  ConvergenceDomainError);
  CHECK_THROWS_AS(inversion_chain_residual(zonal_function(4, 1), Frame::canonical(4, 1), 1, 1.5, 100, SeededRng(1)),
                  ConfigError);
}
