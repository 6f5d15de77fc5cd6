#include "srkit/rational.hpp"

#include "srkit/errors.hpp"

namespace srkit {

Rational rational_from_string(const std::string& s) {
  const auto slash = s.find('/');
  try {
    if (slash == std::string::npos) {
      Integer num(s, 10);
      return Rational(num);
    }
    Integer num(s.substr(0, slash), 10);
    Integer den(s.substr(slash + 1), 10);
    if (den == 0) throw UsageError("zero denominator in \"" + s + "\"");
    Rational q;
    q.get_num() = num;
    q.get_den() = den;
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    throw UsageError("malformed rational \"" + s + "\"");
  }
}

std::string rational_to_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational pow_rational(const Rational& q, long e) {
  if (e == 0) return Rational(1);
  if (q == 0 && e < 0) throw DivisionByZero();
  const unsigned long k = static_cast<unsigned long>(e < 0 ? -e : e);
  Rational r;
  mpz_pow_ui(r.get_num().get_mpz_t(), q.get_num().get_mpz_t(), k);
  mpz_pow_ui(r.get_den().get_mpz_t(), q.get_den().get_mpz_t(), k);
  // num/den coprime implies num^k/den^k coprime; no canonicalize needed,
  // but the sign lives in the numerator already.
  if (e < 0) {
    Rational inv;
    inv.get_num() = r.get_den();
    inv.get_den() = r.get_num();
    inv.canonicalize();
    return inv;
  }
  return r;
}

Integer pow_integer(const Integer& base, unsigned long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

}  // namespace srkit
