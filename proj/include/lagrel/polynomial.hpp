#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lagrel/matrix.hpp"

namespace lagrel {

using Exponent = std::vector<std::uint32_t>;

/// Graded lexicographic order: total degree first, then lexicographic with
/// x1 > x2 > ... .
struct GrlexLess {
  bool operator()(const Exponent& a, const Exponent& b) const;
};

/// The monomials of one degree in num_vars variables, listed in decreasing
/// grlex order (x1^d first). Instances are cached and shared.
class MonomialBasis {
 public:
  static const MonomialBasis& get(std::size_t num_vars, std::uint32_t degree);

  std::size_t num_vars() const { return num_vars_; }
  std::uint32_t degree() const { return degree_; }
  std::size_t size() const { return monomials_.size(); }
  const Exponent& operator[](std::size_t i) const { return monomials_[i]; }
  std::optional<std::size_t> index(const Exponent& e) const;
  /// index(monomial i + e_var) in the basis of degree + 1.
  std::size_t up(std::size_t i, std::size_t var) const { return up_[i * num_vars_ + var]; }

  MonomialBasis(std::size_t num_vars, std::uint32_t degree);

 private:
  std::size_t num_vars_;
  std::uint32_t degree_;
  std::vector<Exponent> monomials_;
  std::map<Exponent, std::size_t> index_;
  std::vector<std::size_t> up_;
};

/// Number of degree-d monomials in n variables.
std::size_t monomial_count(std::size_t n, std::uint32_t d);

/// Sparse multivariate polynomial with exact coefficients.
class Polynomial {
 public:
  using Terms = std::map<Exponent, Rational, GrlexLess>;

  explicit Polynomial(std::size_t num_vars = 0) : num_vars_(num_vars) {}
  static Polynomial constant(std::size_t num_vars, const Rational& c);
  static Polynomial variable(std::size_t num_vars, std::size_t i);
  /// Linear form sum_i coeffs[i] x_i.
  static Polynomial linear(const Vector& coeffs);
  /// Homogeneous polynomial from coordinates in MonomialBasis::get(n, d).
  static Polynomial from_coefficients(std::size_t num_vars, std::uint32_t degree,
                                      const Vector& coeffs);

  std::size_t num_vars() const { return num_vars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const;
  bool is_homogeneous() const;

  Rational coefficient(const Exponent& e) const;
  void add_term(const Exponent& e, const Rational& c);
  /// Leading term in grlex order; polynomial must be nonzero.
  std::pair<Exponent, Rational> leading_term() const;
  /// Coordinates of the degree-d homogeneous part in MonomialBasis::get(n, d).
  Vector coefficients(std::uint32_t d) const;

  Rational evaluate(const Vector& point) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Rational& s);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  /// f(x) with x_i = sum_j a(j, i) t_j, a polynomial in a.rows() variables.
  Polynomial substitute(const Matrix& a) const;

  std::string to_string() const;

 private:
  std::size_t num_vars_;
  Terms terms_;
};

/// Matrix of the substitution x_i = sum_j a(j, i) t_j on homogeneous degree-d
/// polynomials: column c holds the coordinates (in MonomialBasis::get(a.rows(),
/// d)) of monomial c of MonomialBasis::get(a.cols(), d) after substitution.
Matrix substitution_matrix(const Matrix& a, std::uint32_t degree);

}  // namespace lagrel
