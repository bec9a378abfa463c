#include "stiefel/manifold.hpp"

#include <cmath>
#include <string>

#include "stiefel/error.hpp"

namespace stiefel {

double orthonormality_error(const Matrix& a) {
  const Matrix g = a.transpose() * a - Matrix::Identity(a.cols(), a.cols());
  return g.cwiseAbs().maxCoeff();
}

Frame frame_unchecked(Matrix entries) { return Frame(std::move(entries)); }

Frame Frame::from_matrix(Matrix entries, double tol) {
  if (entries.cols() < 1 || entries.cols() > entries.rows()) {
    throw FrameError("frame needs 1 <= m <= n, got n=" +
                     std::to_string(entries.rows()) +
                     " m=" + std::to_string(entries.cols()));
  }
  if (!entries.allFinite()) throw FrameError("frame entries must be finite");
  const double err = orthonormality_error(entries);
  if (err > tol) {
    throw FrameError("columns are not orthonormal (max |v'v - I| = " +
                     std::to_string(err) + ")");
  }
  return Frame(std::move(entries));
}

Frame Frame::canonical(int n, int k) {
  if (k < 1 || k > n) throw DimensionError("canonical frame needs 1 <= k <= n");
  Matrix e = Matrix::Zero(n, k);
  e.bottomRows(k).setIdentity();
  return Frame(std::move(e));
}

Frame Frame::leading(int n, int k) {
  if (k < 1 || k > n) throw DimensionError("leading frame needs 1 <= k <= n");
  Matrix e = Matrix::Zero(n, k);
  e.topRows(k).setIdentity();
  return Frame(std::move(e));
}

Frame Frame::right_multiply(const Matrix& gamma) const {
  if (gamma.rows() != m() || gamma.cols() != m()) {
    throw DimensionError("right factor must be m x m");
  }
  return from_matrix(entries_ * gamma, 1e-9);
}

Rotation Rotation::from_matrix(Matrix entries, double tol) {
  if (entries.rows() != entries.cols() || entries.rows() < 1) {
    throw FrameError("rotation must be square");
  }
  const double err = orthonormality_error(entries);
  if (err > tol) throw FrameError("rotation is not orthogonal");
  return Rotation(std::move(entries));
}

Frame Rotation::apply(const Frame& v) const {
  if (v.n() != n()) throw DimensionError("rotation and frame dimensions differ");
  return frame_unchecked(entries_ * v.matrix());
}

PosDefMatrix PosDefMatrix::from_matrix(Matrix entries) {
  if (entries.rows() != entries.cols()) throw RankError("matrix must be square");
  const double scale = std::max(1.0, entries.cwiseAbs().maxCoeff());
  if ((entries - entries.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale) {
    throw RankError("matrix is not symmetric");
  }
  Eigen::SelfAdjointEigenSolver<Matrix> es(entries, Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() <= 0.0) {
    throw RankError("matrix is not positive definite");
  }
  return PosDefMatrix(std::move(entries));
}

Matrix PosDefMatrix::sqrt() const {
  Eigen::SelfAdjointEigenSolver<Matrix> es(entries_);
  return es.operatorSqrt();
}

Matrix PosDefMatrix::inverse_sqrt() const {
  Eigen::SelfAdjointEigenSolver<Matrix> es(entries_);
  return es.operatorInverseSqrt();
}

namespace {

// Modified Gram-Schmidt run twice per column; returns false on a numerically
// dependent column.
bool orthonormalize_columns(Matrix& a) {
  for (Eigen::Index j = 0; j < a.cols(); ++j) {
    const double original = a.col(j).norm();
    for (int pass = 0; pass < 2; ++pass) {
      for (Eigen::Index i = 0; i < j; ++i) {
        a.col(j) -= a.col(i).dot(a.col(j)) * a.col(i);
      }
    }
    const double norm = a.col(j).norm();
    if (!(norm > 1e-10 * original) || original == 0.0) return false;
    a.col(j) /= norm;
  }
  return true;
}

Matrix gaussian_matrix(Engine& engine, int rows, int cols) {
  std::normal_distribution<double> normal;
  Matrix g(rows, cols);
  for (int j = 0; j < cols; ++j) {
    for (int i = 0; i < rows; ++i) g(i, j) = normal(engine);
  }
  return g;
}

}  // namespace

Frame haar_frame(Engine& engine, int n, int m) {
  if (m < 1 || m > n) {
    throw DimensionError("haar_frame needs 1 <= m <= n, got n=" +
                         std::to_string(n) + " m=" + std::to_string(m));
  }
  for (int attempt = 0; attempt < 2; ++attempt) {
    Matrix g = gaussian_matrix(engine, n, m);
    if (orthonormalize_columns(g)) return frame_unchecked(std::move(g));
  }
  throw DegenerateSampleError("Gaussian draw was rank deficient twice");
}

Frame haar_frame(const SeededRng& rng, int n, int m) {
  Engine e = rng.engine();
  return haar_frame(e, n, m);
}

std::vector<Frame> haar_frames(const SeededRng& rng, int n, int m, int count) {
  Engine e = rng.engine();
  std::vector<Frame> out;
  out.reserve(static_cast<std::size_t>(std::max(count, 0)));
  for (int i = 0; i < count; ++i) out.push_back(haar_frame(e, n, m));
  return out;
}

Matrix haar_orthogonal(Engine& engine, int n) {
  return haar_frame(engine, n, n).matrix();
}

std::pair<Frame, PosDefMatrix> polar_decompose(const Matrix& x) {
  if (x.cols() < 1 || x.cols() > x.rows()) {
    throw DimensionError("polar_decompose needs an n x m matrix with m <= n");
  }
  Eigen::JacobiSVD<Matrix> svd(x);
  const auto& s = svd.singularValues();
  if (!(s(s.size() - 1) >= 1e-10 * s(0))) {
    throw RankError("polar_decompose needs rank(x) = m");
  }
  Matrix r = x.transpose() * x;
  r = 0.5 * (r + r.transpose()).eval();
  PosDefMatrix pd = PosDefMatrix::from_matrix(r);
  Matrix v = x * pd.inverse_sqrt();
  return {Frame::from_matrix(std::move(v), 1e-9), std::move(pd)};
}

Frame complement_frame(const Frame& u) {
  const int n = u.n();
  const int k = u.m();
  if (k >= n) throw DimensionError("complement_frame needs k < n");
  Eigen::HouseholderQR<Matrix> qr(u.matrix());
  Matrix q = qr.householderQ() * Matrix::Identity(n, n);
  return frame_unchecked(q.rightCols(n - k));
}

Frame complement_frame(const Frame& u, Engine& engine) {
  const Frame base = complement_frame(u);
  return frame_unchecked(base.matrix() * haar_orthogonal(engine, base.m()));
}

Rotation rotation_from_frame(const Frame& u, const Frame& complement) {
  const int n = u.n();
  const int k = u.m();
  if (complement.n() != n || complement.m() != n - k) {
    throw DimensionError("complement has the wrong shape");
  }
  Matrix g(n, n);
  g.leftCols(n - k) = complement.matrix();
  g.rightCols(k) = u.matrix();
  return Rotation::from_matrix(std::move(g), 1e-9);
}

Rotation rotation_from_frame(const Frame& u) {
  if (u.m() == u.n()) return Rotation::from_matrix(u.matrix(), 1e-9);
  return rotation_from_frame(u, complement_frame(u));
}

double small_det(const Matrix& a) {
  switch (a.rows()) {
    case 1:
      return a(0, 0);
    case 2:
      return a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0);
    default:
      return Eigen::FullPivLU<Matrix>(a).determinant();
  }
}

namespace {
void require_same_n(const Frame& u, const Frame& v) {
  if (u.n() != v.n()) throw DimensionError("frames live in different R^n");
}
}  // namespace

double gram_det_cos(const Frame& u, const Frame& v) {
  require_same_n(u, v);
  if (v.m() > u.m()) return 0.0;
  const Matrix c = v.matrix().transpose() * u.matrix();
  return std::max(0.0, small_det(c * c.transpose()));
}

double gram_det_sin(const Frame& u, const Frame& v) {
  require_same_n(u, v);
  if (v.m() > u.n() - u.m()) return 0.0;
  const Matrix c = v.matrix().transpose() * u.matrix();
  const Matrix g = Matrix::Identity(v.m(), v.m()) - c * c.transpose();
  return std::clamp(small_det(g), 0.0, 1.0);
}

double abs_det_cross(const Frame& u, const Frame& v) {
  require_same_n(u, v);
  if (u.m() != v.m()) throw DimensionError("abs_det_cross needs equal frame sizes");
  return std::abs(small_det(u.matrix().transpose() * v.matrix()));
}

}  // namespace stiefel
