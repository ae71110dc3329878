#pragma once

#include <gmpxx.h>

#include <string>

namespace incdec {

// Exact rational scalar used for every function value, parameter and ratio.
// Floating point enters only where a bound involves e^c, and those
// comparisons are relaxed explicitly at the call site.
class Value {
 public:
  Value() : q_(0) {}
  Value(int v) : q_(v) {}
  Value(long v) : q_(mpz_class(v)) {}
  Value(long num, long den);
  explicit Value(const mpq_class& q) : q_(q) { q_.canonicalize(); }

  // Accepts "p", "-p" and "p/q" with positive q; reduced on construction.
  static Value parse(const std::string& text);
  // Exact conversion; every finite double is a dyadic rational.
  static Value from_double(double d);
  static Value ipow(long base, unsigned long exp);

  // Canonical rendering: "p" when the denominator is 1, else "p/q".
  std::string str() const;
  double to_double() const { return q_.get_d(); }
  bool is_zero() const { return sgn(q_) == 0; }
  bool is_negative() const { return sgn(q_) < 0; }
  bool is_positive() const { return sgn(q_) > 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  long to_long() const;

  Value& operator+=(const Value& o) { q_ += o.q_; return *this; }
  Value& operator-=(const Value& o) { q_ -= o.q_; return *this; }
  Value& operator*=(const Value& o) { q_ *= o.q_; return *this; }
  Value& operator/=(const Value& o);

  friend Value operator+(Value a, const Value& b) { return a += b; }
  friend Value operator-(Value a, const Value& b) { return a -= b; }
  friend Value operator*(Value a, const Value& b) { return a *= b; }
  friend Value operator/(Value a, const Value& b) { return a /= b; }
  friend Value operator-(const Value& a) { return Value(mpq_class(-a.q_)); }

  friend bool operator==(const Value& a, const Value& b) { return mpq_equal(a.q_.get_mpq_t(), b.q_.get_mpq_t()) != 0; }
  friend bool operator!=(const Value& a, const Value& b) { return !(a == b); }
  friend bool operator<(const Value& a, const Value& b) { return mpq_cmp(a.q_.get_mpq_t(), b.q_.get_mpq_t()) < 0; }
  friend bool operator<=(const Value& a, const Value& b) { return mpq_cmp(a.q_.get_mpq_t(), b.q_.get_mpq_t()) <= 0; }
  friend bool operator>(const Value& a, const Value& b) { return b < a; }
  friend bool operator>=(const Value& a, const Value& b) { return b <= a; }

 private:
  mpq_class q_;
};

inline Value min(const Value& a, const Value& b) { return b < a ? b : a; }
inline Value max(const Value& a, const Value& b) { return a < b ? b : a; }

// A ratio that may be infinite (a prefix of value zero against a positive
// optimum). Finite zero by default.
class ValueOrInf {
 public:
  ValueOrInf() = default;
  explicit ValueOrInf(Value v) : infinite_(false), v_(std::move(v)) {}
  static ValueOrInf infinity() {
    ValueOrInf r;
    r.infinite_ = true;
    return r;
  }

  bool is_infinite() const { return infinite_; }
  const Value& finite() const;  // input error when infinite
  std::string str() const { return infinite_ ? "inf" : v_.str(); }

  friend bool operator==(const ValueOrInf& a, const ValueOrInf& b) {
    if (a.infinite_ || b.infinite_) return a.infinite_ == b.infinite_;
    return a.v_ == b.v_;
  }
  friend bool operator!=(const ValueOrInf& a, const ValueOrInf& b) { return !(a == b); }
  friend bool operator<(const ValueOrInf& a, const ValueOrInf& b) {
    if (a.infinite_) return false;
    if (b.infinite_) return true;
    return a.v_ < b.v_;
  }
  friend bool operator<=(const ValueOrInf& a, const ValueOrInf& b) { return a < b || a == b; }
  friend bool operator>(const ValueOrInf& a, const ValueOrInf& b) { return b < a; }
  friend bool operator>=(const ValueOrInf& a, const ValueOrInf& b) { return b <= a; }

 private:
  bool infinite_ = false;
  Value v_;
};

}  // namespace incdec
