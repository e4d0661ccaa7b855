#pragma once
// Exact rational scalar used throughout the symbolic layer.
// Backed by GMP; always stored reduced with positive denominator.

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>

namespace oscint {

struct BadInput : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class Rat {
 public:
  Rat() : v_(0) {}
  Rat(long n) : v_(n) {}  // NOLINT: implicit on purpose, mirrors int literals
  Rat(long n, long d);
  explicit Rat(const mpq_class& q) : v_(q) { v_.canonicalize(); }

  // Parses "p", "-p", "p/q" with q > 0. Whitespace is not accepted.
  static Rat parse(const std::string& s);

  const mpq_class& raw() const { return v_; }
  mpz_class num() const { return v_.get_num(); }
  mpz_class den() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  Rat operator-() const { return Rat(mpq_class(-v_)); }
  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
  Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
  Rat& operator/=(const Rat& o);

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

  friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rat& a, const Rat& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rat& a, const Rat& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rat& a, const Rat& b) { return a.v_ >= b.v_; }

  Rat abs() const { return sign() < 0 ? -*this : *this; }
  Rat pow(unsigned e) const;
  Rat inv() const;

  double to_double() const { return v_.get_d(); }
  // "p" for integers, "p/q" otherwise; '-' sits on the numerator.
  std::string str() const;

 private:
  mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rat& r);

inline Rat rat(long n, long d = 1) { return Rat(n, d); }

}  // namespace oscint
