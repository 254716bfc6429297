#pragma once

// Arbitrary-precision real/complex values on top of MPFR.
//
// Every value carries its own precision in bits; binary operations produce a
// result at the larger of the two operand precisions. There is no global
// default precision, so values may be used freely from several threads.

#include <mpfr.h>

#include <array>
#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace trisectagon::mp {

/// Working precision shared by a computation.
///
/// `digits` significant decimal digits; verification tolerance is
/// 10^(10 - digits), leaving ten guard digits for accumulated rounding.
class PrecisionContext {
 public:
  static constexpr int kDefaultDigits = 50;
  static constexpr int kMinDigits = 16;

  PrecisionContext() : PrecisionContext(kDefaultDigits) {}

  int digits() const { return digits_; }
  mpfr_prec_t bits() const { return bits_; }
  /// Decimal exponent of the tolerance, i.e. tolerance = 10^tolerance_exponent().
  int tolerance_exponent() const { return 10 - digits_; }

  friend PrecisionContext make_context(int digits);
  friend bool operator==(const PrecisionContext&, const PrecisionContext&) = default;

 private:
  explicit PrecisionContext(int digits);
  int digits_;
  mpfr_prec_t bits_;
};

/// Throws InvalidArgument when digits < 16.
PrecisionContext make_context(int digits);

class PrecReal {
 public:
  PrecReal();
  explicit PrecReal(mpfr_prec_t bits);
  PrecReal(long value, const PrecisionContext& ctx);
  PrecReal(long value, mpfr_prec_t bits);
  PrecReal(const mpq_class& value, const PrecisionContext& ctx);
  /// Parses a decimal literal such as "-0.5" or "1.2e-3"; throws InvalidArgument on junk.
  PrecReal(std::string_view decimal, const PrecisionContext& ctx);

  PrecReal(const PrecReal& other);
  PrecReal(PrecReal&& other) noexcept;
  PrecReal& operator=(const PrecReal& other);
  PrecReal& operator=(PrecReal&& other) noexcept;
  ~PrecReal();

  static PrecReal from_double(double value, mpfr_prec_t bits);
  /// Copy rounded (or exactly widened) to `bits` of precision.
  PrecReal round_to(mpfr_prec_t bits) const;

  mpfr_prec_t precision() const { return mpfr_get_prec(value_); }
  mpfr_srcptr get() const { return value_; }
  mpfr_ptr get() { return value_; }

  bool is_finite() const { return mpfr_number_p(value_) != 0; }
  bool is_zero() const { return mpfr_zero_p(value_) != 0; }
  int sign() const { return mpfr_sgn(value_); }
  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }

  /// Scientific notation with exactly `significant` significant digits, e.g. "-7.91e+01".
  std::string to_scientific(int significant) const;

  PrecReal& operator+=(const PrecReal& rhs);
  PrecReal& operator-=(const PrecReal& rhs);
  PrecReal& operator*=(const PrecReal& rhs);
  PrecReal& operator/=(const PrecReal& rhs);

  friend PrecReal operator-(const PrecReal& x);
  friend PrecReal operator+(const PrecReal& a, const PrecReal& b);
  friend PrecReal operator-(const PrecReal& a, const PrecReal& b);
  friend PrecReal operator*(const PrecReal& a, const PrecReal& b);
  friend PrecReal operator/(const PrecReal& a, const PrecReal& b);
  friend PrecReal operator+(const PrecReal& a, long b);
  friend PrecReal operator-(const PrecReal& a, long b);
  friend PrecReal operator*(const PrecReal& a, long b);
  friend PrecReal operator/(const PrecReal& a, long b);
  friend PrecReal operator+(long a, const PrecReal& b) { return b + a; }
  friend PrecReal operator*(long a, const PrecReal& b) { return b * a; }
  friend PrecReal operator-(long a, const PrecReal& b);
  friend PrecReal operator/(long a, const PrecReal& b);

  friend std::partial_ordering operator<=>(const PrecReal& a, const PrecReal& b);
  friend bool operator==(const PrecReal& a, const PrecReal& b);
  friend std::partial_ordering operator<=>(const PrecReal& a, long b);
  friend bool operator==(const PrecReal& a, long b);

 private:
  void raise_precision(mpfr_prec_t bits);
  mpfr_t value_;
};

PrecReal pi(const PrecisionContext& ctx);
PrecReal pi(mpfr_prec_t bits);
/// 10^exponent at the context precision.
PrecReal power_of_ten(int exponent, const PrecisionContext& ctx);
/// 10^(10 - digits).
PrecReal tolerance(const PrecisionContext& ctx);

PrecReal abs(const PrecReal& x);
PrecReal sqrt(const PrecReal& x);
/// Real cube root (sign preserving).
PrecReal cbrt(const PrecReal& x);
PrecReal sin(const PrecReal& x);
PrecReal cos(const PrecReal& x);
PrecReal atan2(const PrecReal& y, const PrecReal& x);
PrecReal hypot(const PrecReal& x, const PrecReal& y);
PrecReal max(const PrecReal& a, const PrecReal& b);
PrecReal min(const PrecReal& a, const PrecReal& b);
PrecReal radians_to_degrees(const PrecReal& radians);
PrecReal degrees_to_radians(const PrecReal& degrees);

struct PrecComplex {
  PrecReal re;
  PrecReal im;

  PrecComplex() = default;
  PrecComplex(PrecReal real, PrecReal imag) : re(std::move(real)), im(std::move(imag)) {}
  explicit PrecComplex(PrecReal real);
  PrecComplex(long real, long imag, const PrecisionContext& ctx);

  mpfr_prec_t precision() const;
  bool is_finite() const { return re.is_finite() && im.is_finite(); }

  PrecComplex& operator+=(const PrecComplex& rhs);
  PrecComplex& operator-=(const PrecComplex& rhs);
  PrecComplex& operator*=(const PrecComplex& rhs);
};

PrecComplex operator-(const PrecComplex& z);
PrecComplex operator+(const PrecComplex& a, const PrecComplex& b);
PrecComplex operator-(const PrecComplex& a, const PrecComplex& b);
PrecComplex operator*(const PrecComplex& a, const PrecComplex& b);
PrecComplex operator/(const PrecComplex& a, const PrecComplex& b);
PrecComplex operator*(const PrecReal& a, const PrecComplex& z);
PrecComplex operator*(const PrecComplex& z, const PrecReal& a);
PrecComplex operator/(const PrecComplex& z, const PrecReal& a);
PrecComplex operator+(const PrecComplex& z, const PrecReal& a);
PrecComplex operator-(const PrecComplex& z, const PrecReal& a);

PrecComplex conj(const PrecComplex& z);
PrecReal abs(const PrecComplex& z);
PrecReal norm(const PrecComplex& z);
/// Principal argument in (-pi, pi].
PrecReal arg(const PrecComplex& z);
PrecComplex polar(const PrecReal& modulus, const PrecReal& angle);
PrecComplex cube(const PrecComplex& z);
/// Principal complex square root (non-negative real part).
PrecComplex sqrt(const PrecComplex& z);
/// Principal complex cube root, argument in (-pi/3, pi/3].
PrecComplex cbrt(const PrecComplex& z);

struct CubeRootsOfUnity {
  std::array<PrecComplex, 3> eps;
  const PrecComplex& operator[](int k) const { return eps[static_cast<std::size_t>(((k % 3) + 3) % 3)]; }
};

CubeRootsOfUnity cube_roots_of_unity(const PrecisionContext& ctx);

/// The three cube roots of a unit complex number. zetas[k] = eps_k * zetas[0] with
/// zetas[0] the principal root; theta is the principal argument of `input`.
struct TrisectionResult {
  PrecComplex input;
  PrecReal theta;
  std::array<PrecComplex, 3> zetas;
  const PrecComplex& operator[](int k) const { return zetas[static_cast<std::size_t>(((k % 3) + 3) % 3)]; }
};

TrisectionResult trisect_unit(const PrecComplex& z, const PrecisionContext& ctx);

/// Three real roots of s^3 + a s^2 + b s + c, ascending, via trisection of the
/// depressed cubic. DomainError when the cubic has a complex pair.
std::array<PrecReal, 3> solve_cubic_trig(const PrecReal& a, const PrecReal& b, const PrecReal& c,
                                         const PrecisionContext& ctx);

/// e^{2 pi i k / p}, k = 0..p-1.
std::vector<PrecComplex> roots_of_unity(int p, const PrecisionContext& ctx);

/// All complex roots of the polynomial with the given ascending coefficients
/// (Weierstrass iteration followed by Newton polishing). Sorted by real part,
/// then imaginary part. InvalidArgument for the zero polynomial; InternalFailure
/// when the iteration stalls, as it does at a multiple root.
std::vector<PrecComplex> poly_roots_numeric(std::span<const PrecComplex> coeffs_ascending,
                                            const PrecisionContext& ctx);

/// Horner evaluation with ascending coefficients.
PrecComplex horner(std::span<const PrecComplex> coeffs_ascending, const PrecComplex& x);
/// max(1, sum |c_i| |x|^i): the magnitude scale a residual |p(x)| is compared against.
PrecReal evaluation_scale(std::span<const PrecComplex> coeffs_ascending, const PrecComplex& x);

}  // namespace trisectagon::mp
