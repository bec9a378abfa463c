#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "stiefel/error.hpp"
#include "stiefel/functions.hpp"
#include "stiefel/manifold.hpp"

using namespace stiefel;

TEST_CASE("frame validation") {
  Matrix a = Matrix::Zero(3, 2);
  a(0, 0) = 1.0;
  a(1, 1) = 1.0;
  CHECK_NOTHROW(Frame::from_matrix(a));
  a(1, 1) = 1.0 + 1e-6;
  CHECK_THROWS_AS(Frame::from_matrix(a), FrameError);
  CHECK_THROWS_AS(Frame::from_matrix(Matrix::Identity(2, 3)), FrameError);
  Matrix nan = Matrix::Identity(3, 1);
  nan(2, 0) = std::nan("");
  CHECK_THROWS_AS(Frame::from_matrix(nan), FrameError);

  const Frame c = Frame::canonical(4, 2);
  CHECK(c.matrix()(2, 0) == 1.0);
  CHECK(c.matrix()(3, 1) == 1.0);
  CHECK(c.matrix().topRows(2).norm() == 0.0);
  const Frame l = Frame::leading(4, 2);
  CHECK(l.matrix()(0, 0) == 1.0);
  CHECK(l.matrix()(1, 1) == 1.0);
  CHECK_THROWS(Frame::canonical(2, 3));
}

TEST_CASE("haar frames are orthonormal and reproducible") {
  const SeededRng rng(11, 3);
  const std::vector<Frame> a = haar_frames(rng, 6, 3, 20);
  const std::vector<Frame> b = haar_frames(rng, 6, 3, 20);
  REQUIRE(a.size() == 20);
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(orthonormality_error(a[i].matrix()) < 1e-12);
    CHECK((a[i].matrix() - b[i].matrix()).norm() == 0.0);
  }
  const std::vector<Frame> other = haar_frames(SeededRng(12, 3), 6, 3, 1);
  CHECK((other[0].matrix() - a[0].matrix()).norm() > 1e-3);

  Engine e = rng.engine();
  const Matrix g = haar_orthogonal(e, 5);
  CHECK((g.transpose() * g - Matrix::Identity(5, 5)).cwiseAbs().maxCoeff() < 1e-12);
}

namespace {

// Two-sample Kolmogorov-Smirnov statistic.
double ks_statistic(std::vector<double> a, std::vector<double> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  std::size_t i = 0, j = 0;
  double d = 0.0;
  while (i < a.size() && j < b.size()) {
    if (a[i] <= b[j]) ++i;
    else ++j;
    d = std::max(d, std::abs(static_cast<double>(i) / a.size() - static_cast<double>(j) / b.size()));
  }
  return d;
}

}  // namespace

TEST_CASE("haar measure is left and right invariant") {
  const int n = 5, m = 2, count = 4000;
  const SeededRng rng(5);
  Engine eg = rng.substream(1).engine();
  const Matrix g = haar_orthogonal(eg, n);
  const Matrix h = haar_orthogonal(eg, m);
  const Frame u = Frame::canonical(n, 2);

  std::vector<double> plain, left, right;
  const std::vector<Frame> a = haar_frames(rng.substream(2), n, m, count);
  const std::vector<Frame> b = haar_frames(rng.substream(3), n, m, count);
  const std::vector<Frame> c = haar_frames(rng.substream(4), n, m, count);
  for (int i = 0; i < count; ++i) {
    plain.push_back(gram_det_cos(u, a[i]));
    left.push_back(gram_det_cos(u, frame_unchecked(g * b[i].matrix())));
    right.push_back(gram_det_cos(u, b[i].right_multiply(h)));
    (void)c;
  }
  // 1% critical value of the two-sample statistic with n1 = n2 = 4000.
  const double crit = 1.63 * std::sqrt(2.0 / count);
  CHECK(ks_statistic(plain, left) < crit);
  CHECK(ks_statistic(plain, right) < crit);

  // Mean of det(v'uu'v) for k = m = 2 on V_{5,2}: E = (k/n)((k-1)/(n-1)) = 1/10.
  std::vector<double> cc;
  for (const Frame& v : c) cc.push_back(gram_det_cos(u, v));
  double mean = 0.0;
  for (double x : cc) mean += x;
  mean /= count;
  CHECK(std::abs(mean - 0.1) < 0.01);
}

TEST_CASE("gram determinants") {
  const Frame u = Frame::canonical(4, 1);
  const Frame v = Frame::canonical(4, 2);
  CHECK(gram_det_cos(u, v) == 0.0);  // m > k
  CHECK(gram_det_sin(Frame::canonical(4, 3), v) == 0.0);  // m > n - k
  const Frame w = haar_frame(SeededRng(2), 4, 1);
  CHECK(std::abs(gram_det_cos(u, w) + gram_det_sin(u, w) - 1.0) < 1e-14);
  CHECK(std::abs(abs_det_cross(v, v) - 1.0) < 1e-14);

  Matrix s(2, 2);
  s << 2.0, 1.0, 4.0, 3.0;
  CHECK(small_det(s) == doctest::Approx(2.0));
}

TEST_CASE("complement frames") {
  for (int n = 3; n <= 6; ++n) {
    for (int k = 1; k < n; ++k) {
      const Frame u = haar_frame(SeededRng(n * 10 + k), n, k);
      const Frame c = complement_frame(u);
      CHECK(c.m() == n - k);
      CHECK(orthonormality_error(c.matrix()) < 1e-12);
      CHECK((u.matrix().transpose() * c.matrix()).cwiseAbs().maxCoeff() < 1e-12);
      const Frame again = complement_frame(u);
      CHECK((again.matrix() - c.matrix()).norm() == 0.0);

      Engine e = SeededRng(1).engine();
      const Frame r = complement_frame(u, e);
      CHECK((u.matrix().transpose() * r.matrix()).cwiseAbs().maxCoeff() < 1e-12);

      const Rotation g = rotation_from_frame(u);
      CHECK((g.apply(Frame::canonical(n, k)).matrix() - u.matrix()).cwiseAbs().maxCoeff() < 1e-12);
    }
  }
}

TEST_CASE("polar decomposition") {
  Matrix x(3, 2);
  x << 0.3, -0.7, 0.5, 0.2, -0.4, 0.6;
  const auto [v, r] = polar_decompose(x);
  CHECK(orthonormality_error(v.matrix()) < 1e-13);
  CHECK((v.matrix() * r.sqrt() - x).cwiseAbs().maxCoeff() < 1e-13);
  CHECK((r.matrix() - x.transpose() * x).cwiseAbs().maxCoeff() < 1e-13);
  CHECK((r.inverse_sqrt() * r.sqrt() - Matrix::Identity(2, 2)).cwiseAbs().maxCoeff() < 1e-12);

  Matrix deficient(3, 2);
  deficient << 1.0, 2.0, 1.0, 2.0, 1.0, 2.0;
  CHECK_THROWS_AS(polar_decompose(deficient), RankError);

  Matrix nonsym(2, 2);
  nonsym << 2.0, 0.5, 0.0, 2.0;
  CHECK_THROWS(PosDefMatrix::from_matrix(nonsym));
  CHECK_THROWS(PosDefMatrix::from_matrix(-Matrix::Identity(2, 2)));
}

TEST_CASE("test functions") {
  const Frame v = haar_frame(SeededRng(8), 4, 2);
  CHECK(constant_function(4, 2, 2.5)(v) == 2.5);
  const ManifoldFunction z = zonal_function(3, 2);
  CHECK(z(Frame::canonical(3, 1)) == doctest::Approx(1.0));
  CHECK(z(Frame::leading(3, 1)) == doctest::Approx(-0.5));
  CHECK(z.right_o_invariant);
  CHECK_FALSE(zonal_function(3, 1).right_o_invariant);

  CHECK(validate_right_invariance(function_from_name("gram_poly:2", 5, 2), SeededRng(1)));
  CHECK(validate_right_invariance(function_from_name("exp_proj:3", 5, 2), SeededRng(1)));
  CHECK_FALSE(validate_right_invariance(zonal_function(3, 1), SeededRng(1)));
  CHECK_THROWS(function_from_name("nonsense", 3, 1));
}
