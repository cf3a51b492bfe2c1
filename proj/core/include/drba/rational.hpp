#pragma once

#include <cstddef>
#include <cstdint>
#include <gmpxx.h>
#include <iosfwd>
#include <string>
#include <string_view>

namespace drba {

// Exact rational scalar: the base ring of every algebra in this library and
// the home of the weight λ.  Thin value wrapper around GMP's mpq_class that
// guarantees the canonical-form invariant (lowest terms, positive
// denominator) on every path in, including parsing.
class Scalar {
 public:
  Scalar() : v_(0) {}
  Scalar(int n) : v_(n) {}
  Scalar(long n) : v_(n) {}
  Scalar(long num, long den);

  // Accepts "p/q" or "p" with optional sign and surrounding whitespace.
  // Throws std::invalid_argument on anything else or on a zero denominator.
  static Scalar parse(std::string_view text);

  // C(n, k) as an exact scalar; zero when k > n.
  static Scalar binomial(unsigned long n, unsigned long k);

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  int sign() const { return sgn(v_); }

  // Integer power; throws std::domain_error on 0 raised to a negative power.
  Scalar pow(long e) const;

  std::string str() const { return v_.get_str(); }

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o) { v_ += o.v_; return *this; }
  Scalar& operator-=(const Scalar& o) { v_ -= o.v_; return *this; }
  Scalar& operator*=(const Scalar& o) { v_ *= o.v_; return *this; }
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return a.v_ != b.v_; }
  friend bool operator<(const Scalar& a, const Scalar& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Scalar& a, const Scalar& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Scalar& a, const Scalar& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Scalar& a, const Scalar& b) { return a.v_ >= b.v_; }

  friend std::ostream& operator<<(std::ostream& os, const Scalar& s);

 private:
  explicit Scalar(mpq_class v) : v_(std::move(v)) {}
  mpq_class v_;
};

}  // namespace drba
