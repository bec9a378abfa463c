#include "stiefel/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "stiefel/error.hpp"

namespace stiefel {

Polynomial::Polynomial(int n, int m) : n_(n), m_(m) {
  if (n < 1 || m < 1) throw DimensionError("polynomial needs n, m >= 1");
}

Polynomial Polynomial::constant(int n, int m, double c) {
  Polynomial p(n, m);
  p.add_term(Exponents(static_cast<std::size_t>(n * m), 0), c);
  return p;
}

Polynomial Polynomial::variable(int n, int m, int i, int j) {
  Polynomial p(n, m);
  Exponents e(static_cast<std::size_t>(n * m), 0);
  e[static_cast<std::size_t>(i * m + j)] = 1;
  p.add_term(e, 1.0);
  return p;
}

void Polynomial::add_term(const Exponents& e, double c) {
  if (c == 0.0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) it->second += c;
}

void Polynomial::prune() {
  std::erase_if(terms_, [](const auto& kv) { return kv.second == 0.0; });
}

double Polynomial::operator()(const Eigen::MatrixXd& x) const {
  if (x.rows() != n_ || x.cols() != m_) throw DimensionError("polynomial evaluated at wrong shape");
  double sum = 0.0;
  for (const auto& [e, c] : terms_) {
    double t = c;
    for (std::size_t v = 0; v < e.size(); ++v) {
      if (e[v] != 0) t *= std::pow(x(static_cast<Eigen::Index>(v) / m_, static_cast<Eigen::Index>(v) % m_), e[v]);
    }
    sum += t;
  }
  return sum;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  prune();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  prune();
  return *this;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  Polynomial r = *this;
  r += o;
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  Polynomial r = *this;
  r -= o;
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  Polynomial r(n_, m_);
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : o.terms_) {
      Exponents e = ea;
      for (std::size_t v = 0; v < e.size(); ++v) e[v] = static_cast<std::uint8_t>(e[v] + eb[v]);
      r.add_term(e, ca * cb);
    }
  }
  r.prune();
  return r;
}

Polynomial Polynomial::operator*(double c) const {
  Polynomial r(n_, m_);
  for (const auto& [e, v] : terms_) r.add_term(e, v * c);
  r.prune();
  return r;
}

Polynomial Polynomial::derivative(int var) const {
  Polynomial r(n_, m_);
  const auto v = static_cast<std::size_t>(var);
  for (const auto& [e, c] : terms_) {
    if (e[v] == 0) continue;
    Exponents d = e;
    d[v] = static_cast<std::uint8_t>(d[v] - 1);
    r.add_term(d, c * e[v]);
  }
  r.prune();
  return r;
}

Polynomial Polynomial::times_variable(int var, double c) const {
  Polynomial r(n_, m_);
  const auto v = static_cast<std::size_t>(var);
  for (const auto& [e, coef] : terms_) {
    Exponents d = e;
    d[v] = static_cast<std::uint8_t>(d[v] + 1);
    r.add_term(d, coef * c);
  }
  return r;
}

Polynomial Polynomial::gaussian_derivative(int var) const {
  Polynomial r = derivative(var);
  r += times_variable(var, -2.0);
  return r;
}

namespace {

// (d'd)_{jk} applied to the polynomial part.
Polynomial apply_gram_entry(const Polynomial& p, int j, int k) {
  Polynomial out(p.n(), p.m());
  for (int i = 0; i < p.n(); ++i) {
    out += p.gaussian_derivative(i * p.m() + k).gaussian_derivative(i * p.m() + j);
  }
  return out;
}

int permutation_sign(const std::vector<int>& perm) {
  int sign = 1;
  for (std::size_t a = 0; a < perm.size(); ++a) {
    for (std::size_t b = a + 1; b < perm.size(); ++b) {
      if (perm[a] > perm[b]) sign = -sign;
    }
  }
  return sign;
}

}  // namespace

Polynomial cayley_laplace_gaussian(const Polynomial& p) {
  const int m = p.m();
  std::vector<int> perm(static_cast<std::size_t>(m));
  std::iota(perm.begin(), perm.end(), 0);
  Polynomial total(p.n(), m);
  do {
    Polynomial term = p;
    for (int j = 0; j < m; ++j) term = apply_gram_entry(term, j, perm[static_cast<std::size_t>(j)]);
    if (permutation_sign(perm) > 0) {
      total += term;
    } else {
      total -= term;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

}  // namespace stiefel
