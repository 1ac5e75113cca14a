#include "stpsw/scalar.hpp"

#include <atomic>
#include <charconv>
#include <cmath>
#include <stdexcept>

namespace stpsw {

namespace {
std::atomic<double> g_tolerance{1e-9};

Rational parse_integer_ratio(std::string_view text) {
  Rational v;
  std::string s(text);
  if (s.empty() || v.set_str(s, 10) != 0) throw std::invalid_argument("not a rational literal: '" + s + "'");
  if (v.get_den() == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
  v.canonicalize();
  return v;
}
}  // namespace

double float_tolerance() noexcept { return g_tolerance.load(std::memory_order_relaxed); }

void set_float_tolerance(double tol) {
  if (!(tol > 0.0) || !std::isfinite(tol)) throw std::invalid_argument("tolerance must be a positive finite number");
  g_tolerance.store(tol, std::memory_order_relaxed);
}

bool is_zero(double v) noexcept { return std::fabs(v) < float_tolerance(); }

Scalar Scalar::zero(NumericMode mode) { return mode == NumericMode::Rational ? Scalar(Rational(0)) : Scalar(0.0); }
Scalar Scalar::one(NumericMode mode) { return mode == NumericMode::Rational ? Scalar(Rational(1)) : Scalar(1.0); }

bool Scalar::is_zero() const {
  return std::visit([](const auto& v) { return stpsw::is_zero(v); }, value_);
}

double Scalar::to_double() const {
  if (auto* q = std::get_if<Rational>(&value_)) return q->get_d();
  return std::get<double>(value_);
}

Scalar Scalar::converted(NumericMode mode) const {
  if (mode == this->mode()) return *this;
  if (mode == NumericMode::Float) return Scalar(to_double());
  return Scalar(Rational(std::get<double>(value_)));
}

std::string Scalar::str() const {
  if (auto* q = std::get_if<Rational>(&value_)) return q->get_str();
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, std::get<double>(value_));
  return std::string(buf, res.ptr);
}

Scalar Scalar::parse(std::string_view text, NumericMode mode) {
  if (text.empty()) throw std::invalid_argument("empty numeric literal");
  bool decimal = text.find_first_of(".eE") != std::string_view::npos;
  if (mode == NumericMode::Rational) {
    if (decimal) throw std::invalid_argument("decimal literal '" + std::string(text) + "' requires float mode");
    return Scalar(parse_integer_ratio(text));
  }
  if (!decimal) return Scalar(parse_integer_ratio(text).get_d());
  double v = 0.0;
  const char* first = text.data();
  if (*first == '+') ++first;
  auto res = std::from_chars(first, text.data() + text.size(), v);
  if (res.ec != std::errc() || res.ptr != text.data() + text.size())
    throw std::invalid_argument("not a decimal literal: '" + std::string(text) + "'");
  return Scalar(v);
}

namespace {
template <class Op>
Scalar combine(const Scalar& a, const Scalar& b, Op op) {
  if (a.mode() != b.mode()) throw std::invalid_argument("scalar operands use different numeric modes");
  if (a.mode() == NumericMode::Rational) return Scalar(Rational(op(a.rational(), b.rational())));
  return Scalar(static_cast<double>(op(a.to_double(), b.to_double())));
}
}  // namespace

Scalar operator+(const Scalar& a, const Scalar& b) {
  return combine(a, b, [](const auto& x, const auto& y) { return x + y; });
}
Scalar operator-(const Scalar& a, const Scalar& b) {
  return combine(a, b, [](const auto& x, const auto& y) { return x - y; });
}
Scalar operator*(const Scalar& a, const Scalar& b) {
  return combine(a, b, [](const auto& x, const auto& y) { return x * y; });
}
Scalar operator/(const Scalar& a, const Scalar& b) {
  if (b.is_zero()) throw std::domain_error("division by zero");
  return combine(a, b, [](const auto& x, const auto& y) { return x / y; });
}

Scalar Scalar::operator-() const {
  if (auto* q = std::get_if<Rational>(&value_)) return Scalar(Rational(-*q));
  return Scalar(-std::get<double>(value_));
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.mode() != b.mode()) return false;
  if (a.mode() == NumericMode::Rational) return a.rational() == b.rational();
  return is_zero(a.to_double() - b.to_double());
}

}  // namespace stpsw
