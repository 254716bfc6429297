#include "trisectagon/mpnum.hpp"

#include <cmath>
#include <cstdio>
#include <string>
#include <utility>

#include "trisectagon/errors.hpp"

namespace trisectagon::mp {

namespace {

constexpr double kLog2Of10 = 3.32192809488736234787;
constexpr mpfr_rnd_t kRound = MPFR_RNDN;

mpfr_prec_t widest(mpfr_prec_t a, mpfr_prec_t b) { return a > b ? a : b; }

}  // namespace

PrecisionContext::PrecisionContext(int digits)
    : digits_(digits),
      bits_(static_cast<mpfr_prec_t>(std::ceil(digits * kLog2Of10)) + 4) {}

PrecisionContext make_context(int digits) {
  if (digits < PrecisionContext::kMinDigits) {
    throw InvalidArgument("precision must be at least " + std::to_string(PrecisionContext::kMinDigits) +
                          " digits, got " + std::to_string(digits));
  }
  return PrecisionContext(digits);
}

// ---- PrecReal ---------------------------------------------------------------

PrecReal::PrecReal() {
  mpfr_init2(value_, MPFR_PREC_MIN);
  mpfr_set_zero(value_, 1);
}

PrecReal::PrecReal(mpfr_prec_t bits) {
  mpfr_init2(value_, bits);
  mpfr_set_zero(value_, 1);
}

PrecReal::PrecReal(long value, mpfr_prec_t bits) {
  mpfr_init2(value_, bits);
  mpfr_set_si(value_, value, kRound);
}

PrecReal::PrecReal(long value, const PrecisionContext& ctx) : PrecReal(value, ctx.bits()) {}

PrecReal::PrecReal(const mpq_class& value, const PrecisionContext& ctx) {
  mpfr_init2(value_, ctx.bits());
  mpfr_set_q(value_, value.get_mpq_t(), kRound);
}

PrecReal::PrecReal(std::string_view decimal, const PrecisionContext& ctx) {
  mpfr_init2(value_, ctx.bits());
  const std::string text(decimal);
  if (text.empty() || mpfr_set_str(value_, text.c_str(), 10, kRound) != 0) {
    mpfr_clear(value_);
    throw InvalidArgument("not a decimal number: '" + text + "'");
  }
}

PrecReal::PrecReal(const PrecReal& other) {
  mpfr_init2(value_, other.precision());
  mpfr_set(value_, other.value_, kRound);
}

PrecReal::PrecReal(PrecReal&& other) noexcept {
  mpfr_init2(value_, MPFR_PREC_MIN);
  mpfr_swap(value_, other.value_);
}

PrecReal& PrecReal::operator=(const PrecReal& other) {
  if (this != &other) {
    mpfr_set_prec(value_, other.precision());
    mpfr_set(value_, other.value_, kRound);
  }
  return *this;
}

PrecReal& PrecReal::operator=(PrecReal&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

PrecReal::~PrecReal() { mpfr_clear(value_); }

PrecReal PrecReal::from_double(double value, mpfr_prec_t bits) {
  PrecReal out(bits);
  mpfr_set_d(out.value_, value, kRound);
  return out;
}

PrecReal PrecReal::round_to(mpfr_prec_t bits) const {
  PrecReal out(bits);
  mpfr_set(out.value_, value_, kRound);
  return out;
}

std::string PrecReal::to_scientific(int significant) const {
  if (significant < 1) significant = 1;
  if (is_zero()) {
    // MPFR keeps the sign of zero; reports never show "-0".
    std::string mantissa = significant > 1 ? "0." + std::string(static_cast<std::size_t>(significant - 1), '0') : "0";
    return mantissa + "e+00";
  }
  char* buffer = nullptr;
  const int n = mpfr_asprintf(&buffer, "%.*Re", significant - 1, value_);
  if (n < 0 || buffer == nullptr) throw InternalFailure("mpfr_asprintf failed");
  std::string text(buffer, static_cast<std::size_t>(n));
  mpfr_free_str(buffer);
  return text;
}

void PrecReal::raise_precision(mpfr_prec_t bits) {
  if (bits > precision()) mpfr_prec_round(value_, bits, kRound);
}

PrecReal& PrecReal::operator+=(const PrecReal& rhs) {
  raise_precision(rhs.precision());
  mpfr_add(value_, value_, rhs.value_, kRound);
  return *this;
}

PrecReal& PrecReal::operator-=(const PrecReal& rhs) {
  raise_precision(rhs.precision());
  mpfr_sub(value_, value_, rhs.value_, kRound);
  return *this;
}

PrecReal& PrecReal::operator*=(const PrecReal& rhs) {
  raise_precision(rhs.precision());
  mpfr_mul(value_, value_, rhs.value_, kRound);
  return *this;
}

PrecReal& PrecReal::operator/=(const PrecReal& rhs) {
  raise_precision(rhs.precision());
  mpfr_div(value_, value_, rhs.value_, kRound);
  return *this;
}

PrecReal operator-(const PrecReal& x) {
  PrecReal out(x.precision());
  mpfr_neg(out.value_, x.value_, kRound);
  return out;
}

PrecReal operator+(const PrecReal& a, const PrecReal& b) {
  PrecReal out(widest(a.precision(), b.precision()));
  mpfr_add(out.value_, a.value_, b.value_, kRound);
  return out;
}

PrecReal operator-(const PrecReal& a, const PrecReal& b) {
  PrecReal out(widest(a.precision(), b.precision()));
  mpfr_sub(out.value_, a.value_, b.value_, kRound);
  return out;
}

PrecReal operator*(const PrecReal& a, const PrecReal& b) {
  PrecReal out(widest(a.precision(), b.precision()));
  mpfr_mul(out.value_, a.value_, b.value_, kRound);
  return out;
}

PrecReal operator/(const PrecReal& a, const PrecReal& b) {
  PrecReal out(widest(a.precision(), b.precision()));
  mpfr_div(out.value_, a.value_, b.value_, kRound);
  return out;
}

PrecReal operator+(const PrecReal& a, long b) {
  PrecReal out(a.precision());
  mpfr_add_si(out.value_, a.value_, b, kRound);
  return out;
}

PrecReal operator-(const PrecReal& a, long b) {
  PrecReal out(a.precision());
  mpfr_sub_si(out.value_, a.value_, b, kRound);
  return out;
}

PrecReal operator-(long a, const PrecReal& b) {
  PrecReal out(b.precision());
  mpfr_si_sub(out.value_, a, b.value_, kRound);
  return out;
}

PrecReal operator*(const PrecReal& a, long b) {
  PrecReal out(a.precision());
  mpfr_mul_si(out.value_, a.value_, b, kRound);
  return out;
}

PrecReal operator/(const PrecReal& a, long b) {
  PrecReal out(a.precision());
  mpfr_div_si(out.value_, a.value_, b, kRound);
  return out;
}

PrecReal operator/(long a, const PrecReal& b) {
  PrecReal out(b.precision());
  mpfr_si_div(out.value_, a, b.value_, kRound);
  return out;
}

std::partial_ordering operator<=>(const PrecReal& a, const PrecReal& b) {
  if (mpfr_unordered_p(a.value_, b.value_)) return std::partial_ordering::unordered;
  const int c = mpfr_cmp(a.value_, b.value_);
  if (c < 0) return std::partial_ordering::less;
  if (c > 0) return std::partial_ordering::greater;
  return std::partial_ordering::equivalent;
}

bool operator==(const PrecReal& a, const PrecReal& b) { return mpfr_equal_p(a.value_, b.value_) != 0; }

std::partial_ordering operator<=>(const PrecReal& a, long b) {
  if (mpfr_nan_p(a.value_)) return std::partial_ordering::unordered;
  const int c = mpfr_cmp_si(a.value_, b);
  if (c < 0) return std::partial_ordering::less;
  if (c > 0) return std::partial_ordering::greater;
  return std::partial_ordering::equivalent;
}

bool operator==(const PrecReal& a, long b) { return !mpfr_nan_p(a.value_) && mpfr_cmp_si(a.value_, b) == 0; }

// ---- free functions -----------------------------------------------------------

PrecReal pi(mpfr_prec_t bits) {
  PrecReal out(bits);
  mpfr_const_pi(out.get(), kRound);
  return out;
}

PrecReal pi(const PrecisionContext& ctx) { return pi(ctx.bits()); }

PrecReal power_of_ten(int exponent, const PrecisionContext& ctx) {
  PrecReal out(ctx.bits());
  const unsigned long magnitude = static_cast<unsigned long>(exponent < 0 ? -exponent : exponent);
  mpfr_ui_pow_ui(out.get(), 10, magnitude, kRound);
  if (exponent < 0) mpfr_ui_div(out.get(), 1, out.get(), kRound);
  return out;
}

PrecReal tolerance(const PrecisionContext& ctx) { return power_of_ten(ctx.tolerance_exponent(), ctx); }

PrecReal abs(const PrecReal& x) {
  PrecReal out(x.precision());
  mpfr_abs(out.get(), x.get(), kRound);
  return out;
}

PrecReal sqrt(const PrecReal& x) {
  PrecReal out(x.precision());
  mpfr_sqrt(out.get(), x.get(), kRound);
  return out;
}

PrecReal cbrt(const PrecReal& x) {
  PrecReal out(x.precision());
  mpfr_cbrt(out.get(), x.get(), kRound);
  return out;
}

PrecReal sin(const PrecReal& x) {
  PrecReal out(x.precision());
  mpfr_sin(out.get(), x.get(), kRound);
  return out;
}

PrecReal cos(const PrecReal& x) {
  PrecReal out(x.precision());
  mpfr_cos(out.get(), x.get(), kRound);
  return out;
}

PrecReal atan2(const PrecReal& y, const PrecReal& x) {
  PrecReal out(widest(y.precision(), x.precision()));
  mpfr_atan2(out.get(), y.get(), x.get(), kRound);
  return out;
}

PrecReal hypot(const PrecReal& x, const PrecReal& y) {
  PrecReal out(widest(x.precision(), y.precision()));
  mpfr_hypot(out.get(), x.get(), y.get(), kRound);
  return out;
}

PrecReal max(const PrecReal& a, const PrecReal& b) { return a < b ? b : a; }
PrecReal min(const PrecReal& a, const PrecReal& b) { return b < a ? b : a; }

PrecReal radians_to_degrees(const PrecReal& radians) { return radians * 180 / pi(radians.precision()); }
PrecReal degrees_to_radians(const PrecReal& degrees) { return degrees * pi(degrees.precision()) / 180; }

// ---- PrecComplex --------------------------------------------------------------

PrecComplex::PrecComplex(PrecReal real) : re(std::move(real)), im(re.precision()) {}

PrecComplex::PrecComplex(long real, long imag, const PrecisionContext& ctx) : re(real, ctx), im(imag, ctx) {}

mpfr_prec_t PrecComplex::precision() const { return widest(re.precision(), im.precision()); }

PrecComplex& PrecComplex::operator+=(const PrecComplex& rhs) {
  re += rhs.re;
  im += rhs.im;
  return *this;
}

PrecComplex& PrecComplex::operator-=(const PrecComplex& rhs) {
  re -= rhs.re;
  im -= rhs.im;
  return *this;
}

PrecComplex& PrecComplex::operator*=(const PrecComplex& rhs) {
  *this = *this * rhs;
  return *this;
}

PrecComplex operator-(const PrecComplex& z) { return {-z.re, -z.im}; }
PrecComplex operator+(const PrecComplex& a, const PrecComplex& b) { return {a.re + b.re, a.im + b.im}; }
PrecComplex operator-(const PrecComplex& a, const PrecComplex& b) { return {a.re - b.re, a.im - b.im}; }

PrecComplex operator*(const PrecComplex& a, const PrecComplex& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

PrecComplex operator/(const PrecComplex& a, const PrecComplex& b) {
  const PrecReal denom = norm(b);
  return {(a.re * b.re + a.im * b.im) / denom, (a.im * b.re - a.re * b.im) / denom};
}

PrecComplex operator*(const PrecReal& a, const PrecComplex& z) { return {a * z.re, a * z.im}; }
PrecComplex operator*(const PrecComplex& z, const PrecReal& a) { return {z.re * a, z.im * a}; }
PrecComplex operator/(const PrecComplex& z, const PrecReal& a) { return {z.re / a, z.im / a}; }
PrecComplex operator+(const PrecComplex& z, const PrecReal& a) { return {z.re + a, z.im.round_to(widest(z.im.precision(), a.precision()))}; }
PrecComplex operator-(const PrecComplex& z, const PrecReal& a) { return {z.re - a, z.im.round_to(widest(z.im.precision(), a.precision()))}; }

PrecComplex conj(const PrecComplex& z) { return {z.re, -z.im}; }
PrecReal abs(const PrecComplex& z) { return hypot(z.re, z.im); }
PrecReal norm(const PrecComplex& z) { return z.re * z.re + z.im * z.im; }

PrecReal arg(const PrecComplex& z) {
  PrecReal theta = atan2(z.im, z.re);
  // atan2(-0, x<0) = -pi; the principal range is (-pi, pi].
  if (z.im.is_zero() && z.re.sign() < 0) return pi(theta.precision());
  return theta;
}

PrecComplex polar(const PrecReal& modulus, const PrecReal& angle) {
  const mpfr_prec_t bits = widest(modulus.precision(), angle.precision());
  PrecReal s(bits);
  PrecReal c(bits);
  mpfr_sin_cos(s.get(), c.get(), angle.round_to(bits).get(), kRound);
  return {modulus * c, modulus * s};
}

PrecComplex cube(const PrecComplex& z) { return z * z * z; }

PrecComplex sqrt(const PrecComplex& z) {
  if (z.re.is_zero() && z.im.is_zero()) return z;
  return polar(sqrt(abs(z)), arg(z) / 2);
}

PrecComplex cbrt(const PrecComplex& z) {
  if (z.re.is_zero() && z.im.is_zero()) return z;
  return polar(cbrt(abs(z)), arg(z) / 3);
}

}  // namespace trisectagon::mp
