#pragma once

// Univariate polynomials over Q, coefficients ascending.

#include "hyperspec/error.hpp"
#include "hyperspec/rational.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <complex>
#include <string>
#include <utility>
#include <vector>

namespace hyperspec {

class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Polynomial constant(Rational v) { return Polynomial({std::move(v)}); }
  /// x - r
  static Polynomial linear_root(const Rational& r) { return Polynomial({-r, Rational(1)}); }

  bool is_zero() const noexcept { return c_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }
  const std::vector<Rational>& coeffs() const noexcept { return c_; }
  Rational coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Rational(0); }
  const Rational& leading() const {
    if (c_.empty()) throw Error(ErrorCode::PreconditionFailed, "zero polynomial has no leading coefficient");
    return c_.back();
  }

  Rational operator()(const Rational& x) const {
    Rational acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  Polynomial monic() const {
    Polynomial p = *this;
    if (p.is_zero()) return p;
    Rational lc = p.leading();
    for (auto& v : p.c_) v /= lc;
    return p;
  }

  Polynomial derivative() const {
    std::vector<Rational> d;
    for (std::size_t k = 1; k < c_.size(); ++k) d.push_back(c_[k] * Rational(static_cast<long long>(k)));
    return Polynomial(std::move(d));
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t k = 0; k < r.size(); ++k) r[k] = a.coeff(k) + b.coeff(k);
    return Polynomial(std::move(r));
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t k = 0; k < r.size(); ++k) r[k] = a.coeff(k) - b.coeff(k);
    return Polynomial(std::move(r));
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return Polynomial(std::move(r));
  }
  friend Polynomial operator*(const Rational& s, const Polynomial& p) {
    std::vector<Rational> r = p.c_;
    for (auto& v : r) v *= s;
    return Polynomial(std::move(r));
  }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

  /// Quotient and remainder; throws on division by zero.
  friend std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw Error(ErrorCode::PreconditionFailed, "polynomial division by zero");
    std::vector<Rational> rem = a.c_;
    if (a.degree() < b.degree()) return {Polynomial(), a};
    std::vector<Rational> q(rem.size() - b.c_.size() + 1);
    for (std::size_t k = q.size(); k-- > 0;) {
      Rational f = rem[k + b.c_.size() - 1] / b.c_.back();
      q[k] = f;
      if (f == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) rem[k + j] -= f * b.c_[j];
    }
    return {Polynomial(std::move(q)), Polynomial(std::move(rem))};
  }

  /// Monic greatest common divisor (zero if both are zero).
  friend Polynomial gcd(Polynomial a, Polynomial b) {
    while (!b.is_zero()) {
      auto r = divmod(a, b).second;
      a = std::move(b);
      b = std::move(r);
    }
    return a.monic();
  }

  /// "x^2 - 1" style text with exact coefficients, variable name v.
  std::string to_text(const std::string& v = "x") const {
    if (c_.empty()) return "0";
    std::string out;
    for (std::size_t k = c_.size(); k-- > 0;) {
      const Rational& c = c_[k];
      if (c == 0) continue;
      bool neg = c < 0;
      Rational mag = neg ? Rational(-c) : c;
      if (out.empty()) {
        if (neg) out += "-";
      } else {
        out += neg ? " - " : " + ";
      }
      bool unit = mag == 1;
      if (!unit || k == 0) out += hyperspec::to_string(mag);
      if (k > 0) {
        if (!unit) out += "*";
        out += v;
        if (k > 1) out += "^" + std::to_string(k);
      }
    }
    return out;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Rational> c_;
};

/// Square-free decomposition p = lc * prod_k f_k^k (Yun); returns the
/// nonconstant monic f_k with their multiplicity k.
inline std::vector<std::pair<Polynomial, std::size_t>> squarefree_decomposition(const Polynomial& p) {
  std::vector<std::pair<Polynomial, std::size_t>> out;
  if (p.degree() < 1) return out;
  Polynomial f = p.monic();
  Polynomial df = f.derivative();
  Polynomial a = gcd(f, df);
  Polynomial b = divmod(f, a).first;
  Polynomial c = divmod(df, a).first;
  Polynomial d = c - b.derivative();
  for (std::size_t k = 1; b.degree() >= 1; ++k) {
    Polynomial g = gcd(b, d);
    if (g.degree() >= 1) out.emplace_back(g, k);
    b = divmod(b, g).first;
    c = divmod(d, g).first;
    d = c - b.derivative();
  }
  return out;
}

struct Root {
  std::complex<double> value;
  std::size_t multiplicity = 1;
};

namespace detail {

/// Roots of a square-free polynomial: companion-matrix eigenvalues polished
/// by Newton steps in extended precision.
inline std::vector<std::complex<double>> simple_roots(const Polynomial& p) {
  const long deg = p.degree();
  std::vector<std::complex<double>> roots;
  if (deg < 1) return roots;
  Polynomial q = p.monic();
  std::vector<long double> c(q.coeffs().size());
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = q.coeffs()[k].convert_to<long double>();
  if (deg == 1) {
    roots.emplace_back(static_cast<double>(-c[0]) + 0.0, 0.0);
    return roots;
  }
  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(deg, deg);
  for (long i = 1; i < deg; ++i) companion(i, i - 1) = 1.0;
  for (long i = 0; i < deg; ++i) companion(i, deg - 1) = -static_cast<double>(c[i]);
  Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, false);
  for (long i = 0; i < deg; ++i) {
    std::complex<long double> z(solver.eigenvalues()[i].real(), solver.eigenvalues()[i].imag());
    for (int it = 0; it < 50; ++it) {
      std::complex<long double> f = 0, df = 0;
      for (std::size_t k = c.size(); k-- > 0;) {
        df = df * z + f;
        f = f * z + c[k];
      }
      if (std::abs(df) == 0.0L) break;
      auto step = f / df;
      z -= step;
      if (std::abs(step) <= 1e-19L * std::max(1.0L, std::abs(z))) break;
    }
    double re = static_cast<double>(z.real()) + 0.0, im = static_cast<double>(z.imag());
    if (std::abs(im) <= 1e-14 * std::max(1.0, std::abs(re))) im = 0.0;
    roots.emplace_back(re, im);
  }
  return roots;
}

}  // namespace detail

/// All complex roots with exact multiplicities, sorted by (real, imag).
inline std::vector<Root> polynomial_roots(const Polynomial& p) {
  std::vector<Root> out;
  for (const auto& [factor, k] : squarefree_decomposition(p))
    for (auto z : detail::simple_roots(factor)) out.push_back({z, k});
  std::sort(out.begin(), out.end(), [](const Root& a, const Root& b) {
    if (a.value.real() != b.value.real()) return a.value.real() < b.value.real();
    return a.value.imag() < b.value.imag();
  });
  return out;
}

/// Coefficients of the unique polynomial of degree < xs.size() through the
/// points (xs[k], ys[k]) (Newton divided differences).
inline Polynomial interpolate(const std::vector<Rational>& xs, std::vector<Rational> ys) {
  const std::size_t n = xs.size();
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = n - 1; i >= j; --i) {
      ys[i] = (ys[i] - ys[i - 1]) / (xs[i] - xs[i - j]);
      if (i == j) break;
    }
  Polynomial result = Polynomial::constant(ys[n - 1]);
  for (std::size_t i = n - 1; i-- > 0;)
    result = result * Polynomial::linear_root(xs[i]) + Polynomial::constant(ys[i]);
  return result;
}

/// Determinant by Gaussian elimination over Q.
inline Rational determinant(std::vector<std::vector<Rational>> a) {
  const std::size_t n = a.size();
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      std::swap(a[pivot], a[col]);
      det = -det;
    }
    det *= a[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (a[r][col] == 0) continue;
      Rational f = a[r][col] / a[col][col];
      for (std::size_t k = col; k < n; ++k) a[r][k] -= f * a[col][k];
    }
  }
  return det;
}

}  // namespace hyperspec
