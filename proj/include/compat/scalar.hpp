#pragma once

#include <gmpxx.h>

#include <complex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace compat {

inline constexpr double kDefaultTolerance = 1e-9;
inline constexpr double kAbsoluteFloor = 1e-12;

struct DivisionByZero : std::domain_error {
  DivisionByZero() : std::domain_error("division by zero") {}
};

// Element of Q(zeta_N) kept as a reduced polynomial in zeta, or a complex
// double compared with a relative tolerance. Exact values of different
// orders combine only when one of them is rational.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long value) : coeffs_{mpq_class(value)} { trim(); }  // NOLINT
  Scalar(int value) : Scalar(static_cast<long>(value)) {}     // NOLINT
  Scalar(mpq_class value);                                     // NOLINT

  static Scalar fraction(long num, long den);
  // Reduces the polynomial sum coeffs[k] * zeta_order^k.
  static Scalar cyclotomic(int order, std::vector<mpq_class> coeffs);
  static Scalar complex(std::complex<double> value, double tol = kDefaultTolerance);

  bool is_float() const { return float_; }
  bool is_rational() const { return !float_ && coeffs_.size() <= 1; }
  int order() const { return order_; }
  const std::vector<mpq_class>& coefficients() const { return coeffs_; }
  double tolerance() const { return tol_; }

  bool is_zero() const;
  bool is_one() const;
  std::optional<mpq_class> rational() const;
  std::complex<double> to_complex() const;
  double magnitude() const { return std::abs(to_complex()); }

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& other);
  Scalar& operator-=(const Scalar& other);
  Scalar& operator*=(const Scalar& other);
  Scalar& operator/=(const Scalar& other);

  std::optional<Scalar> try_inverse() const;
  Scalar inverse() const;  // throws DivisionByZero
  Scalar pow(long exponent) const;

  // Re-expresses an exact value of order N inside Q(zeta_M), N | M.
  Scalar embed(int order) const;

  // Rationals print as "p/q", cyclotomics as "c0 + c1*z + c2*z^2".
  std::string str() const;

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b) { return (a - b).is_zero(); }

 private:
  void trim();
  void reduce();
  void to_float(double tol);

  int order_ = 1;
  std::vector<mpq_class> coeffs_;  // empty means zero
  bool float_ = false;
  std::complex<double> z_{};
  double scale_ = 0.0;  // size of the operands that produced z_
  double tol_ = kDefaultTolerance;
};

using Vector = std::vector<Scalar>;

// Minimal polynomial of zeta_N, integer coefficients from x^0 upward.
const std::vector<mpz_class>& cyclotomic_polynomial(int order);

// Primitive N-th root of unity in the exact backend.
Scalar root_of_unity(int order);

// Numeric context shared by a computation: exact Q(zeta_N) or complex floats.
struct Field {
  enum class Kind { cyclotomic, floating };
  Kind kind = Kind::cyclotomic;
  int order = 1;
  double tol = kDefaultTolerance;

  static Field rationals() { return {}; }
  static Field cyclotomic(int order) { return {Kind::cyclotomic, order, kDefaultTolerance}; }
  static Field floating(double tol = kDefaultTolerance) { return {Kind::floating, 1, tol}; }

  bool exact() const { return kind == Kind::cyclotomic; }
  // Brings an exact value into this field (converting to float if needed).
  Scalar lift(const Scalar& value) const;
  Scalar root() const;  // primitive root of unity of `order`
  Scalar root(int order) const;
  Scalar parse(const std::string& text) const;  // throws std::invalid_argument
  std::string describe() const;                 // "cyclotomic:N" or "float:tol"
  static Field from_spec(const std::string& spec);
};

}  // namespace compat
