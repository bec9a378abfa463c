#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include <Eigen/Dense>

namespace stiefel {

/// Sparse real polynomial in the entries of an n x m matrix; variable
/// (i, j) has index i * m + j.
class Polynomial {
 public:
  using Exponents = std::vector<std::uint8_t>;

  Polynomial(int n, int m);
  static Polynomial constant(int n, int m, double c);
  static Polynomial variable(int n, int m, int i, int j);

  int n() const { return n_; }
  int m() const { return m_; }
  std::size_t term_count() const { return terms_.size(); }
  const std::map<Exponents, double>& terms() const { return terms_; }

  double operator()(const Eigen::MatrixXd& x) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator*(double c) const;

  Polynomial derivative(int var) const;
  Polynomial times_variable(int var, double c = 1.0) const;

  // P -> Q with d/dx_var (P exp(-tr x'x)) = Q exp(-tr x'x).
  Polynomial gaussian_derivative(int var) const;

 private:
  void add_term(const Exponents& e, double c);
  void prune();

  int n_;
  int m_;
  std::map<Exponents, double> terms_;
};

/// Q with det(d'd) (P exp(-tr x'x)) = Q exp(-tr x'x), the determinant expanded
/// over permutations of the commuting operator entries
/// (d'd)_{jk} = sum_i d^2 / dx_ij dx_ik.
Polynomial cayley_laplace_gaussian(const Polynomial& p);

}  // namespace stiefel
