#pragma once

// Exact polynomial algebra over Q and Q(sqrt d).

#include <initializer_list>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "json.hpp"
#include "trisectagon/mpnum.hpp"

namespace trisectagon::poly {

/// Polynomial with exact rational coefficients, ascending degree.
/// Trailing zero coefficients are trimmed; the zero polynomial has no coefficients.
class RatPoly {
 public:
  RatPoly() = default;
  explicit RatPoly(std::vector<mpq_class> ascending);
  RatPoly(std::initializer_list<long> ascending);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<mpq_class>& coefficients() const { return coeffs_; }
  /// Coefficient of x^i (zero beyond the degree).
  mpq_class operator[](int i) const;

  mpq_class eval(const mpq_class& x) const;

  friend RatPoly operator+(const RatPoly& a, const RatPoly& b);
  friend RatPoly operator-(const RatPoly& a, const RatPoly& b);
  friend RatPoly operator*(const RatPoly& a, const RatPoly& b);
  friend RatPoly operator*(const mpq_class& c, const RatPoly& a);
  friend bool operator==(const RatPoly& a, const RatPoly& b) { return a.coeffs_ == b.coeffs_; }

  /// Human readable form, highest degree first, e.g. "r^2 + 3 r + 1".
  std::string to_string(const std::string& variable = "x") const;

 private:
  void trim();
  std::vector<mpq_class> coeffs_;
};

/// a + b sqrt(d) with exact rationals.
struct QuadNumber {
  mpq_class a;
  mpq_class b;
  long d = 13;

  QuadNumber() = default;
  QuadNumber(mpq_class rational, mpq_class surd, long discriminant);

  QuadNumber conj() const { return {a, -b, d}; }
  bool is_rational() const { return b == 0; }
  bool is_zero() const { return a == 0 && b == 0; }

  friend QuadNumber operator+(const QuadNumber& x, const QuadNumber& y);
  friend QuadNumber operator-(const QuadNumber& x, const QuadNumber& y);
  friend QuadNumber operator*(const QuadNumber& x, const QuadNumber& y);
  friend bool operator==(const QuadNumber& x, const QuadNumber& y) { return x.a == y.a && x.b == y.b && x.d == y.d; }

  std::string to_string() const;
};

/// Polynomial over Q(sqrt d), ascending degree.
class QuadPoly {
 public:
  explicit QuadPoly(long discriminant = 13) : d_(discriminant) {}
  QuadPoly(std::vector<QuadNumber> ascending, long discriminant);

  long discriminant() const { return d_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<QuadNumber>& coefficients() const { return coeffs_; }

  /// Applies sqrt(d) -> -sqrt(d) coefficientwise.
  QuadPoly conj() const;

  friend QuadPoly operator*(const QuadPoly& x, const QuadPoly& y);
  friend bool operator==(const QuadPoly& x, const QuadPoly& y) { return x.d_ == y.d_ && x.coeffs_ == y.coeffs_; }

  std::string to_string(const std::string& variable = "x") const;

 private:
  void trim();
  long d_;
  std::vector<QuadNumber> coeffs_;
};

/// P = Q(r + 1/r) r^m for a palindromic P of degree 2m.
struct DescentPair {
  RatPoly P;
  RatPoly Q;
  int m = 0;
};

bool is_palindromic(const RatPoly& P);

/// Q(r + 1/r) r^m expanded exactly. InvalidArgument unless degree(Q) == m.
RatPoly lift_descent(const RatPoly& Q, int m);

/// Inverse of lift_descent. DomainError for non-palindromic or odd-degree input,
/// naming the first mismatched coefficient pair.
DescentPair descend_palindromic(const RatPoly& P);

/// R * conj(R) as a rational polynomial. The sqrt(d) parts cancel identically;
/// an InternalFailure is raised if they do not.
RatPoly expand_conjugate_product(const QuadPoly& R);

mp::PrecComplex eval_poly(const RatPoly& P, const mp::PrecComplex& x, const mp::PrecisionContext& ctx);
mp::PrecComplex eval_poly(const QuadPoly& P, const mp::PrecComplex& x, const mp::PrecisionContext& ctx);

/// Coefficients as high-precision complex values, ascending.
std::vector<mp::PrecComplex> numeric_coefficients(const RatPoly& P, const mp::PrecisionContext& ctx);
std::vector<mp::PrecComplex> numeric_coefficients(const QuadPoly& P, const mp::PrecisionContext& ctx);
mp::PrecReal to_real(const QuadNumber& q, const mp::PrecisionContext& ctx);

/// Numerical roots of a rational polynomial (see mp::poly_roots_numeric).
std::vector<mp::PrecComplex> poly_roots_numeric(const RatPoly& P, const mp::PrecisionContext& ctx);

/// JSON: array of "a/b" strings for RatPoly, array of ["a/b","c/d"] pairs for QuadPoly.
nlohmann::json to_json(const RatPoly& P);
nlohmann::json to_json(const QuadPoly& P);
/// InvalidArgument on malformed input.
RatPoly rat_poly_from_json(const nlohmann::json& j);
QuadPoly quad_poly_from_json(const nlohmann::json& j, long discriminant = 13);

}  // namespace trisectagon::poly
