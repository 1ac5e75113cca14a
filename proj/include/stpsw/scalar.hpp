#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <variant>

namespace stpsw {

using Rational = mpq_class;

enum class NumericMode { Rational, Float };

/// Zero tolerance applied to every float-mode equality and pivot test.
double float_tolerance() noexcept;
void set_float_tolerance(double tol);

inline bool is_zero(const Rational& v) { return sgn(v) == 0; }
bool is_zero(double v) noexcept;

/// A single matrix entry in either numeric mode.
class Scalar {
 public:
  Scalar() : value_(Rational(0)) {}
  Scalar(Rational v) : value_(std::move(v)) {}  // NOLINT(google-explicit-constructor)
  Scalar(double v) : value_(v) {}               // NOLINT(google-explicit-constructor)
  Scalar(long v) : value_(Rational(v)) {}       // NOLINT(google-explicit-constructor)
  Scalar(int v) : value_(Rational(v)) {}        // NOLINT(google-explicit-constructor)

  static Scalar zero(NumericMode mode);
  static Scalar one(NumericMode mode);

  NumericMode mode() const noexcept {
    return std::holds_alternative<Rational>(value_) ? NumericMode::Rational : NumericMode::Float;
  }
  bool is_zero() const;
  double to_double() const;
  const Rational& rational() const { return std::get<Rational>(value_); }
  Scalar converted(NumericMode mode) const;

  /// "p/q" (or "p") in rational mode, shortest round-trip decimal in float mode.
  std::string str() const;

  /// Parses "p", "p/q" or (float mode only) a decimal literal.
  static Scalar parse(std::string_view text, NumericMode mode);

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  Scalar operator-() const;
  friend bool operator==(const Scalar& a, const Scalar& b);

 private:
  std::variant<Rational, double> value_;
};

}  // namespace stpsw
