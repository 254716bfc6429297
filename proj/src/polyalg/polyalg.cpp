#include "trisectagon/polyalg.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "trisectagon/errors.hpp"

namespace trisectagon::poly {

namespace {

mpz_class binomial(int n, int k) {
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

std::string rational_text(const mpq_class& q) { return q.get_str(); }

// Appends " + c x^i" style terms, highest degree first.
template <typename Coeff, typename Render>
std::string render_terms(const std::vector<Coeff>& coeffs, const std::string& variable, Render render) {
  if (coeffs.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    auto [sign, body] = render(coeffs[i]);
    if (sign == 0) continue;
    const bool unit = body == "1";
    if (first) {
      if (sign < 0) out << "-";
    } else {
      out << (sign < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      out << body;
      continue;
    }
    if (!unit) out << body << " ";
    out << variable;
    if (i > 1) out << "^" << i;
  }
  return first ? "0" : out.str();
}

}  // namespace

// ---- RatPoly ------------------------------------------------------------------

RatPoly::RatPoly(std::vector<mpq_class> ascending) : coeffs_(std::move(ascending)) {
  for (auto& c : coeffs_) c.canonicalize();
  trim();
}

RatPoly::RatPoly(std::initializer_list<long> ascending) {
  coeffs_.reserve(ascending.size());
  for (long c : ascending) coeffs_.emplace_back(c);
  trim();
}

void RatPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

mpq_class RatPoly::operator[](int i) const {
  if (i < 0 || i > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(i)];
}

mpq_class RatPoly::eval(const mpq_class& x) const {
  mpq_class acc = 0;
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
  return acc;
}

RatPoly operator+(const RatPoly& a, const RatPoly& b) {
  std::vector<mpq_class> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a[static_cast<int>(i)] + b[static_cast<int>(i)];
  return RatPoly(std::move(out));
}

RatPoly operator-(const RatPoly& a, const RatPoly& b) { return a + mpq_class(-1) * b; }

RatPoly operator*(const RatPoly& a, const RatPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<mpq_class> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return RatPoly(std::move(out));
}

RatPoly operator*(const mpq_class& c, const RatPoly& a) {
  std::vector<mpq_class> out = a.coeffs_;
  for (auto& x : out) x *= c;
  return RatPoly(std::move(out));
}

std::string RatPoly::to_string(const std::string& variable) const {
  return render_terms(coeffs_, variable, [](const mpq_class& c) {
    const int sign = sgn(c);
    return std::pair<int, std::string>(sign, rational_text(abs(c)));
  });
}

// ---- QuadNumber / QuadPoly -------------------------------------------------------

QuadNumber::QuadNumber(mpq_class rational, mpq_class surd, long discriminant)
    : a(std::move(rational)), b(std::move(surd)), d(discriminant) {
  a.canonicalize();
  b.canonicalize();
}

namespace {

void require_same_field(const QuadNumber& x, const QuadNumber& y) {
  if (x.d != y.d) throw InvalidArgument("Q(sqrt d) arithmetic across different d");
}

}  // namespace

QuadNumber operator+(const QuadNumber& x, const QuadNumber& y) {
  require_same_field(x, y);
  return {x.a + y.a, x.b + y.b, x.d};
}

QuadNumber operator-(const QuadNumber& x, const QuadNumber& y) {
  require_same_field(x, y);
  return {x.a - y.a, x.b - y.b, x.d};
}

QuadNumber operator*(const QuadNumber& x, const QuadNumber& y) {
  require_same_field(x, y);
  return {x.a * y.a + x.b * y.b * x.d, x.a * y.b + x.b * y.a, x.d};
}

std::string QuadNumber::to_string() const {
  const std::string root = "sqrt(" + std::to_string(d) + ")";
  if (b == 0) return rational_text(a);
  mpz_class denom;
  mpz_lcm(denom.get_mpz_t(), a.get_den_mpz_t(), b.get_den_mpz_t());
  const mpz_class A = a.get_num() * (denom / a.get_den());
  const mpz_class B = b.get_num() * (denom / b.get_den());
  std::string body;
  if (A != 0) {
    body = A.get_str() + (B < 0 ? " - " : " + ");
  } else if (B < 0) {
    body = "-";
  }
  const mpz_class absB = abs(B);
  body += (absB == 1 ? std::string() : absB.get_str() + " ") + root;
  if (denom == 1) return A != 0 ? "(" + body + ")" : body;
  return "(" + body + ")/" + denom.get_str();
}

QuadPoly::QuadPoly(std::vector<QuadNumber> ascending, long discriminant)
    : d_(discriminant), coeffs_(std::move(ascending)) {
  for (const auto& c : coeffs_) {
    if (c.d != d_) throw InvalidArgument("QuadPoly coefficient from a different quadratic field");
  }
  trim();
}

void QuadPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

QuadPoly QuadPoly::conj() const {
  std::vector<QuadNumber> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(c.conj());
  return QuadPoly(std::move(out), d_);
}

QuadPoly operator*(const QuadPoly& x, const QuadPoly& y) {
  if (x.d_ != y.d_) throw InvalidArgument("QuadPoly product across different quadratic fields");
  if (x.coeffs_.empty() || y.coeffs_.empty()) return QuadPoly(x.d_);
  std::vector<QuadNumber> out(x.coeffs_.size() + y.coeffs_.size() - 1, QuadNumber(0, 0, x.d_));
  for (std::size_t i = 0; i < x.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < y.coeffs_.size(); ++j) out[i + j] = out[i + j] + x.coeffs_[i] * y.coeffs_[j];
  return QuadPoly(std::move(out), x.d_);
}

std::string QuadPoly::to_string(const std::string& variable) const {
  return render_terms(coeffs_, variable, [](const QuadNumber& c) {
    if (c.is_zero()) return std::pair<int, std::string>(0, "");
    if (c.is_rational()) return std::pair<int, std::string>(sgn(c.a), rational_text(abs(c.a)));
    return std::pair<int, std::string>(1, c.to_string());
  });
}

// ---- palindromic descent ----------------------------------------------------------

bool is_palindromic(const RatPoly& P) {
  const auto& c = P.coefficients();
  return std::equal(c.begin(), c.end(), c.rbegin());
}

RatPoly lift_descent(const RatPoly& Q, int m) {
  if (m < 1 || Q.degree() != m) {
    throw InvalidArgument("lift_descent: degree(Q) = " + std::to_string(Q.degree()) + " but m = " + std::to_string(m));
  }
  // Q(r + 1/r) r^m = sum_k q_k (r^2 + 1)^k r^(m - k).
  std::vector<mpq_class> out(static_cast<std::size_t>(2 * m + 1));
  for (int k = 0; k <= m; ++k) {
    const mpq_class qk = Q[k];
    if (qk == 0) continue;
    for (int j = 0; j <= k; ++j) {
      out[static_cast<std::size_t>(2 * j + m - k)] += qk * binomial(k, j);
    }
  }
  return RatPoly(std::move(out));
}

DescentPair descend_palindromic(const RatPoly& P) {
  if (P.is_zero()) throw DomainError("descend_palindromic: zero polynomial");
  const int n = P.degree();
  for (int i = 0; i <= n / 2; ++i) {
    if (P[i] != P[n - i]) {
      throw DomainError("descend_palindromic: not palindromic, coefficient of x^" + std::to_string(i) + " is " +
                        rational_text(P[i]) + " but coefficient of x^" + std::to_string(n - i) + " is " +
                        rational_text(P[n - i]));
    }
  }
  if (n % 2 != 0 || n == 0) {
    throw DomainError("descend_palindromic: degree " + std::to_string(n) + " is not a positive even number");
  }
  const int m = n / 2;

  // P / r^m = p_m + sum_j p_{m+j} (r^j + r^-j), and r^j + r^-j = T_j(s) with
  // T_0 = 2, T_1 = s, T_j = s T_{j-1} - T_{j-2}.
  const RatPoly s{0, 1};
  RatPoly previous{2};
  RatPoly current = s;
  RatPoly Q{0};
  Q = Q + RatPoly(std::vector<mpq_class>{P[m]});
  for (int j = 1; j <= m; ++j) {
    if (j > 1) {
      RatPoly next = s * current - previous;
      previous = std::move(current);
      current = std::move(next);
    }
    Q = Q + P[m + j] * current;
  }
  if (lift_descent(Q, m) != P) throw InternalFailure("descend_palindromic: lift of the descent does not reproduce P");
  return {P, Q, m};
}

RatPoly expand_conjugate_product(const QuadPoly& R) {
  const QuadPoly product = R * R.conj();
  std::vector<mpq_class> out;
  out.reserve(product.coefficients().size());
  for (std::size_t i = 0; i < product.coefficients().size(); ++i) {
    const auto& c = product.coefficients()[i];
    if (!c.is_rational()) {
      throw InternalFailure("conjugate product kept a sqrt(" + std::to_string(R.discriminant()) +
                            ") part in degree " + std::to_string(i));
    }
    out.push_back(c.a);
  }
  return RatPoly(std::move(out));
}

// ---- numerics -----------------------------------------------------------------------

mp::PrecReal to_real(const QuadNumber& q, const mp::PrecisionContext& ctx) {
  return mp::PrecReal(q.a, ctx) + mp::PrecReal(q.b, ctx) * mp::sqrt(mp::PrecReal(q.d, ctx));
}

std::vector<mp::PrecComplex> numeric_coefficients(const RatPoly& P, const mp::PrecisionContext& ctx) {
  std::vector<mp::PrecComplex> out;
  out.reserve(P.coefficients().size());
  for (const auto& c : P.coefficients()) out.emplace_back(mp::PrecReal(c, ctx), mp::PrecReal(0, ctx));
  return out;
}

std::vector<mp::PrecComplex> numeric_coefficients(const QuadPoly& P, const mp::PrecisionContext& ctx) {
  std::vector<mp::PrecComplex> out;
  out.reserve(P.coefficients().size());
  for (const auto& c : P.coefficients()) out.emplace_back(to_real(c, ctx), mp::PrecReal(0, ctx));
  return out;
}

mp::PrecComplex eval_poly(const RatPoly& P, const mp::PrecComplex& x, const mp::PrecisionContext& ctx) {
  return mp::horner(numeric_coefficients(P, ctx), x);
}

mp::PrecComplex eval_poly(const QuadPoly& P, const mp::PrecComplex& x, const mp::PrecisionContext& ctx) {
  return mp::horner(numeric_coefficients(P, ctx), x);
}

std::vector<mp::PrecComplex> poly_roots_numeric(const RatPoly& P, const mp::PrecisionContext& ctx) {
  if (P.is_zero()) throw InvalidArgument("poly_roots_numeric: zero polynomial");
  return mp::poly_roots_numeric(numeric_coefficients(P, ctx), ctx);
}

// ---- JSON ---------------------------------------------------------------------------

namespace {

std::string fraction_text(const mpq_class& q) { return q.get_num().get_str() + "/" + q.get_den().get_str(); }

mpq_class parse_fraction(const nlohmann::json& j) {
  if (!j.is_string()) throw InvalidArgument("polynomial coefficient must be a string, got " + j.dump());
  const std::string text = j.get<std::string>();
  const auto slash = text.find('/');
  mpz_class num;
  mpz_class den = 1;
  const std::string num_text = text.substr(0, slash);
  if (num_text.empty() || num.set_str(num_text, 10) != 0) throw InvalidArgument("bad rational '" + text + "'");
  if (slash != std::string::npos) {
    const std::string den_text = text.substr(slash + 1);
    if (den_text.empty() || den.set_str(den_text, 10) != 0 || den == 0) {
      throw InvalidArgument("bad rational '" + text + "'");
    }
  }
  mpq_class q(num, den);
  q.canonicalize();
  return q;
}

}  // namespace

nlohmann::json to_json(const RatPoly& P) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& c : P.coefficients()) out.push_back(fraction_text(c));
  return out;
}

nlohmann::json to_json(const QuadPoly& P) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& c : P.coefficients()) out.push_back(nlohmann::json::array({fraction_text(c.a), fraction_text(c.b)}));
  return out;
}

RatPoly rat_poly_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw InvalidArgument("rational polynomial JSON must be an array");
  std::vector<mpq_class> coeffs;
  for (const auto& item : j) coeffs.push_back(parse_fraction(item));
  return RatPoly(std::move(coeffs));
}

QuadPoly quad_poly_from_json(const nlohmann::json& j, long discriminant) {
  if (!j.is_array()) throw InvalidArgument("quadratic-field polynomial JSON must be an array");
  std::vector<QuadNumber> coeffs;
  for (const auto& item : j) {
    if (!item.is_array() || item.size() != 2) {
      throw InvalidArgument("quadratic-field coefficient must be a pair [\"a/b\", \"c/d\"], got " + item.dump());
    }
    coeffs.emplace_back(parse_fraction(item[0]), parse_fraction(item[1]), discriminant);
  }
  return QuadPoly(std::move(coeffs), discriminant);
}

}  // namespace trisectagon::poly
