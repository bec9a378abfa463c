#pragma once

// Frames on Stiefel manifolds V_{n,m}, invariant sampling, and the Gram
// determinants that the cosine and sine kernels are built from.

#include <Eigen/Dense>
#include <utility>
#include <vector>

#include "stiefel/rng.hpp"

namespace stiefel {

using Matrix = Eigen::MatrixXd;

inline constexpr double kFrameTol = 1e-10;

// max |a'a - I|.
double orthonormality_error(const Matrix& a);

/// An n x m real matrix with orthonormal columns, 1 <= m <= n.
class Frame {
 public:
  /// Validates to kFrameTol; throws FrameError otherwise.
  static Frame from_matrix(Matrix entries, double tol = kFrameTol);
  /// [0; I_k]: the last k standard basis vectors.
  static Frame canonical(int n, int k);
  /// [I_k; 0]: the first k standard basis vectors.
  static Frame leading(int n, int k);

  int n() const { return static_cast<int>(entries_.rows()); }
  int m() const { return static_cast<int>(entries_.cols()); }
  const Matrix& matrix() const { return entries_; }

  // Right action by an m x m orthogonal matrix.
  Frame right_multiply(const Matrix& gamma) const;

 private:
  explicit Frame(Matrix entries) : entries_(std::move(entries)) {}
  friend Frame frame_unchecked(Matrix entries);

  Matrix entries_;
};

// For internal construction from matrices that are orthonormal by
// construction.
Frame frame_unchecked(Matrix entries);

class Rotation {
 public:
  static Rotation from_matrix(Matrix entries, double tol = kFrameTol);
  int n() const { return static_cast<int>(entries_.rows()); }
  const Matrix& matrix() const { return entries_; }
  Frame apply(const Frame& v) const;

 private:
  explicit Rotation(Matrix entries) : entries_(std::move(entries)) {}
  Matrix entries_;
};

class PosDefMatrix {
 public:
  /// Symmetric to 1e-12 (relative to its scale) with positive spectrum.
  static PosDefMatrix from_matrix(Matrix entries);
  int m() const { return static_cast<int>(entries_.rows()); }
  const Matrix& matrix() const { return entries_; }
  Matrix sqrt() const;
  Matrix inverse_sqrt() const;

 private:
  explicit PosDefMatrix(Matrix entries) : entries_(std::move(entries)) {}
  Matrix entries_;
};

/// Frame drawn from the invariant probability measure on V_{n,m}: Gram-Schmidt
/// of an n x m standard Gaussian matrix (positive diagonal in the triangular
/// factor).
Frame haar_frame(Engine& engine, int n, int m);
Frame haar_frame(const SeededRng& rng, int n, int m);
std::vector<Frame> haar_frames(const SeededRng& rng, int n, int m, int count);

/// Haar-distributed element of O(n).
Matrix haar_orthogonal(Engine& engine, int n);

/// x = v r^{1/2} with r = x'x. Throws RankError when x is numerically rank
/// deficient.
std::pair<Frame, PosDefMatrix> polar_decompose(const Matrix& x);

/// An (n-k)-frame orthogonal to span(u). Deterministic (Householder
/// completion).
Frame complement_frame(const Frame& u);
/// A randomized completion (the deterministic one times a Haar element of
/// O(n-k)).
Frame complement_frame(const Frame& u, Engine& engine);

/// g with g u0 = u, u0 = [0; I_k].
Rotation rotation_from_frame(const Frame& u);
Rotation rotation_from_frame(const Frame& u, const Frame& complement);

/// det(v'uu'v). Exactly 0 when m > k.
double gram_det_cos(const Frame& u, const Frame& v);
/// det(I_m - v'uu'v). Exactly 0 when m > n - k.
double gram_det_sin(const Frame& u, const Frame& v);
/// |det(u'v)| for frames of equal size.
double abs_det_cross(const Frame& u, const Frame& v);

// Determinant of a small square matrix (full-pivot LU).
double small_det(const Matrix& a);

}  // namespace stiefel
