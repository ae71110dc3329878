#include "core/value.hpp"

#include <cctype>
#include <cmath>

#include "core/errors.hpp"

namespace incdec {

Value::Value(long num, long den) {
  if (den == 0) fail(ErrorKind::Input, "rational with zero denominator");
  q_ = mpq_class(mpz_class(num), mpz_class(den));
  q_.canonicalize();
}

Value Value::parse(const std::string& text) {
  const auto bad = [&]() {
    fail(ErrorKind::Parse, "invalid rational literal: \"" + text + "\"");
  };
  std::size_t start = 0;
  if (start < text.size() && text[start] == '+') ++start;  // gmp rejects a leading plus
  std::size_t i = start;
  if (i < text.size() && text[i] == '-') ++i;
  std::size_t num_digits = 0;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
    ++i;
    ++num_digits;
  }
  if (num_digits == 0) bad();
  std::string num = text.substr(start, i - start);
  std::string den = "1";
  if (i < text.size()) {
    if (text[i] != '/') bad();
    den = text.substr(i + 1);
    if (den.empty()) bad();
    for (char ch : den) {
      if (!std::isdigit(static_cast<unsigned char>(ch))) bad();
    }
  }
  mpz_class n(num, 10), d(den, 10);
  if (d == 0) fail(ErrorKind::Parse, "rational with zero denominator: \"" + text + "\"");
  mpq_class q(n, d);
  q.canonicalize();
  return Value(q);
}

Value Value::from_double(double d) {
  if (!std::isfinite(d)) fail(ErrorKind::Input, "non-finite double");
  mpq_class q;
  mpq_set_d(q.get_mpq_t(), d);
  return Value(q);
}

Value Value::ipow(long base, unsigned long exp) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), mpz_class(base).get_mpz_t(), exp);
  return Value(mpq_class(r));
}

std::string Value::str() const {
  if (q_.get_den() == 1) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

long Value::to_long() const {
  if (!is_integer() || !q_.get_num().fits_slong_p()) {
    fail(ErrorKind::Input, "value " + str() + " is not a machine integer");
  }
  return q_.get_num().get_si();
}

Value& Value::operator/=(const Value& o) {
  if (o.is_zero()) fail(ErrorKind::Input, "division by zero");
  q_ /= o.q_;
  return *this;
}

const Value& ValueOrInf::finite() const {
  if (infinite_) fail(ErrorKind::Input, "infinite ratio has no finite value");
  return v_;
}

}  // namespace incdec
