#include "oscint/rational.hpp"

#include <cctype>
#include <ostream>

namespace oscint {

Rat::Rat(long n, long d) {
  if (d == 0) throw BadInput("rational with zero denominator");
  v_ = mpq_class(n, d);
  v_.canonicalize();
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw BadInput("division by zero rational");
  v_ /= o.v_;
  return *this;
}

Rat Rat::parse(const std::string& s) {
  if (s.empty()) throw BadInput("empty rational literal");
  auto is_int = [](const std::string& t) {
    if (t.empty()) return false;
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
  };
  auto slash = s.find('/');
  if (slash == std::string::npos) {
    if (!is_int(s)) throw BadInput("bad integer literal: " + s);
    return Rat(mpq_class(mpz_class(s)));
  }
  std::string num = s.substr(0, slash), den = s.substr(slash + 1);
  if (!is_int(num) || !is_int(den) || den[0] == '-')
    throw BadInput("bad rational literal: " + s);
  mpz_class d(den);
  if (d == 0) throw BadInput("zero denominator: " + s);
  mpq_class q(mpz_class(num), d);
  q.canonicalize();
  return Rat(q);
}

Rat Rat::pow(unsigned e) const {
  mpq_class r(1);
  mpq_class base = v_;
  unsigned k = e;
  while (k) {
    if (k & 1) r *= base;
    base *= base;
    k >>= 1;
  }
  return Rat(r);
}

Rat Rat::inv() const {
  if (is_zero()) throw BadInput("inverse of zero");
  return Rat(mpq_class(1) / v_);
}

std::string Rat::str() const {
  if (is_integer()) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rat& r) {
  return os << r.str();
}

}  // namespace oscint
