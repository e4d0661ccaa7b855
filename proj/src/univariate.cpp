#include "oscint/univariate.hpp"

#include <sstream>

namespace oscint {

void UniPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

UniPoly UniPoly::constant(const Rat& a) {
  return UniPoly(std::vector<Rat>{a});
}

UniPoly UniPoly::monomial(const Rat& a, int deg) {
  std::vector<Rat> v(static_cast<std::size_t>(deg) + 1, Rat(0));
  v.back() = a;
  return UniPoly(std::move(v));
}

Rat UniPoly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return Rat(0);
  return c_[static_cast<std::size_t>(k)];
}

Rat UniPoly::leading() const {
  if (is_zero()) throw BadInput("leading coefficient of zero polynomial");
  return c_.back();
}

UniPoly UniPoly::operator-() const {
  std::vector<Rat> v = c_;
  for (auto& x : v) x = -x;
  return UniPoly(std::move(v));
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
  std::vector<Rat> v(std::max(a.c_.size(), b.c_.size()), Rat(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) v[i] += b.c_[i];
  return UniPoly(std::move(v));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return UniPoly();
  std::vector<Rat> v(a.c_.size() + b.c_.size() - 1, Rat(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
  return UniPoly(std::move(v));
}

UniPoly UniPoly::scaled(const Rat& s) const {
  std::vector<Rat> v = c_;
  for (auto& x : v) x *= s;
  return UniPoly(std::move(v));
}

UniPoly UniPoly::pow(unsigned e) const {
  UniPoly r = constant(Rat(1));
  UniPoly base = *this;
  while (e) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

UniPoly UniPoly::derivative() const {
  if (c_.size() <= 1) return UniPoly();
  std::vector<Rat> v(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i)
    v[i - 1] = c_[i] * Rat(static_cast<long>(i));
  return UniPoly(std::move(v));
}

Rat UniPoly::eval(const Rat& t) const {
  Rat acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

double UniPoly::eval(double t) const {
  double acc = 0.0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it)
    acc = acc * t + it->to_double();
  return acc;
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& d) const {
  if (d.is_zero()) throw BadInput("polynomial division by zero");
  UniPoly r = *this;
  std::vector<Rat> q(
      degree() >= d.degree() ? static_cast<std::size_t>(degree() - d.degree()) + 1
                             : 0,
      Rat(0));
  Rat dl = d.leading();
  while (!r.is_zero() && r.degree() >= d.degree()) {
    int k = r.degree() - d.degree();
    Rat f = r.leading() / dl;
    q[static_cast<std::size_t>(k)] = f;
    r = r - (d * UniPoly::monomial(f, k));
  }
  return {UniPoly(std::move(q)), r};
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return *this;
  return scaled(leading().inv());
}

UniPoly UniPoly::gcd(UniPoly a, UniPoly b) {
  while (!b.is_zero()) {
    UniPoly r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

std::string UniPoly::str(char var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    Rat a = coeff(k);
    if (a.is_zero()) continue;
    Rat mag = a.abs();
    if (first) {
      if (a.sign() < 0) os << "-";
      first = false;
    } else {
      os << (a.sign() < 0 ? " - " : " + ");
    }
    bool unit = (mag == Rat(1));
    if (k == 0) {
      os << mag.str();
    } else {
      if (!unit) os << mag.str() << "*";
      os << var;
      if (k > 1) os << "^" << k;
    }
  }
  return os.str();
}

std::vector<SquareFreePart> square_free_decompose(const UniPoly& p) {
  std::vector<SquareFreePart> out;
  if (p.is_zero() || p.degree() == 0) return out;
  UniPoly f = p.monic();
  UniPoly fp = f.derivative();
  UniPoly a = UniPoly::gcd(f, fp);
  UniPoly b = f.divmod(a).first;          // product of distinct factors
  UniPoly c = fp.divmod(a).first;
  UniPoly d = c - b.derivative();
  int m = 1;
  while (b.degree() > 0) {
    UniPoly g = UniPoly::gcd(b, d);
    if (g.degree() > 0) out.push_back({g.monic(), m});
    b = b.divmod(g).first;
    c = d.divmod(g).first;
    d = c - b.derivative();
    ++m;
  }
  return out;
}

}  // namespace oscint
