#include "oscint/bivariate.hpp"

#include <cctype>
#include <sstream>

namespace oscint {

void BiPoly::add_term(const Monomial& m, const Rat& c) {
  if (c.is_zero()) return;
  auto it = t_.find(m);
  if (it == t_.end()) {
    t_.emplace(m, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
  }
}

BiPoly BiPoly::term(const Rat& c, int dx, int dy) {
  if (dx < 0 || dy < 0) throw BadInput("negative exponent");
  BiPoly p;
  p.add_term({dx, dy}, c);
  return p;
}

Rat BiPoly::coeff(int dx, int dy) const {
  auto it = t_.find({dx, dy});
  return it == t_.end() ? Rat(0) : it->second;
}

int BiPoly::total_degree() const {
  return t_.empty() ? -1 : t_.begin()->first.total();
}

BiPoly BiPoly::operator-() const {
  BiPoly r;
  for (const auto& [m, c] : t_) r.t_.emplace(m, -c);
  return r;
}

BiPoly operator+(const BiPoly& a, const BiPoly& b) {
  BiPoly r = a;
  for (const auto& [m, c] : b.t_) r.add_term(m, c);
  return r;
}

BiPoly operator-(const BiPoly& a, const BiPoly& b) { return a + (-b); }

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  BiPoly r;
  for (const auto& [ma, ca] : a.t_)
    for (const auto& [mb, cb] : b.t_)
      r.add_term({ma.dx + mb.dx, ma.dy + mb.dy}, ca * cb);
  return r;
}

BiPoly BiPoly::scaled(const Rat& s) const {
  BiPoly r;
  if (s.is_zero()) return r;
  for (const auto& [m, c] : t_) r.t_.emplace(m, c * s);
  return r;
}

BiPoly BiPoly::dx() const {
  BiPoly r;
  for (const auto& [m, c] : t_)
    if (m.dx > 0) r.add_term({m.dx - 1, m.dy}, c * Rat(m.dx));
  return r;
}

BiPoly BiPoly::dy() const {
  BiPoly r;
  for (const auto& [m, c] : t_)
    if (m.dy > 0) r.add_term({m.dx, m.dy - 1}, c * Rat(m.dy));
  return r;
}

Rat BiPoly::eval(const Rat& x, const Rat& y) const {
  Rat acc(0);
  for (const auto& [m, c] : t_)
    acc += c * x.pow(static_cast<unsigned>(m.dx)) *
           y.pow(static_cast<unsigned>(m.dy));
  return acc;
}

double BiPoly::eval(double x, double y) const {
  double acc = 0.0;
  for (const auto& [m, c] : t_) {
    double v = c.to_double();
    for (int i = 0; i < m.dx; ++i) v *= x;
    for (int i = 0; i < m.dy; ++i) v *= y;
    acc += v;
  }
  return acc;
}

std::optional<int> BiPoly::homogeneous_degree() const {
  if (t_.empty()) return std::nullopt;
  int d = t_.begin()->first.total();
  for (const auto& [m, c] : t_)
    if (m.total() != d) return std::nullopt;
  return d;
}

std::string BiPoly::str() const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : t_) {
    Rat mag = c.abs();
    if (first) {
      if (c.sign() < 0) os << "-";
      first = false;
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    bool has_vars = m.dx > 0 || m.dy > 0;
    bool unit = (mag == Rat(1));
    if (!has_vars) {
      os << mag.str();
      continue;
    }
    bool star = false;
    if (!unit) {
      os << mag.str();
      star = true;
    }
    if (m.dx > 0) {
      if (star) os << "*";
      os << "x";
      if (m.dx > 1) os << "^" << m.dx;
      star = true;
    }
    if (m.dy > 0) {
      if (star) os << "*";
      os << "y";
      if (m.dy > 1) os << "^" << m.dy;
    }
  }
  return os.str();
}

namespace {

struct Lexer {
  std::string s;
  std::size_t i = 0;
  explicit Lexer(const std::string& text) {
    s.reserve(text.size());
    for (char ch : text)
      if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  }
  bool done() const { return i >= s.size(); }
  char peek() const { return done() ? '\0' : s[i]; }
  char take() { return s[i++]; }

  std::string integer(bool allow_sign) {
    std::string out;
    if (allow_sign && (peek() == '-' || peek() == '+')) out.push_back(take());
    if (!std::isdigit(static_cast<unsigned char>(peek())))
      throw BadInput("expected digit at position " + std::to_string(i) +
                     " in polynomial text");
    while (std::isdigit(static_cast<unsigned char>(peek())))
      out.push_back(take());
    return out;
  }
};

}  // namespace

BiPoly BiPoly::parse(const std::string& text) {
  Lexer lx(text);
  if (lx.done()) throw BadInput("empty polynomial text");
  BiPoly acc;
  bool first = true;
  while (!lx.done() || first) {
    int sign = 1;
    if (lx.peek() == '+' || lx.peek() == '-') {
      if (lx.take() == '-') sign = -1;
    } else if (!first) {
      throw BadInput("expected '+' or '-' between terms");
    }
    if (lx.done()) throw BadInput("dangling sign in polynomial text");
    first = false;

    Rat coeff(1);
    bool saw_coeff = false, want_factors = true;
    if (std::isdigit(static_cast<unsigned char>(lx.peek()))) {
      std::string lit = lx.integer(false);
      if (lx.peek() == '/') {
        lx.take();
        lit += "/" + lx.integer(false);
      }
      coeff = Rat::parse(lit);
      saw_coeff = true;
      if (lx.peek() == '*')
        lx.take();  // coeff '*' factors
      else
        want_factors = false;  // bare constant term
    }
    int dx = 0, dy = 0;
    while (want_factors) {
      if (lx.peek() != 'x' && lx.peek() != 'y')
        throw BadInput("expected factor at position " + std::to_string(lx.i));
      char v = lx.take();
      int e = 1;
      if (lx.peek() == '^') {
        lx.take();
        e = std::stoi(lx.integer(false));
        if (e < 1) throw BadInput("exponent must be positive");
      }
      (v == 'x' ? dx : dy) += e;
      if (lx.peek() == '*')
        lx.take();  // '*' separates factors
      else
        break;
    }
    if (!saw_coeff && dx == 0 && dy == 0)
      throw BadInput("expected term at position " + std::to_string(lx.i));
    acc = acc + BiPoly::term(sign < 0 ? -coeff : coeff, dx, dy);
    if (!lx.done() && lx.peek() != '+' && lx.peek() != '-')
      throw BadInput("unexpected character '" + std::string(1, lx.peek()) +
                     "' in polynomial text");
  }
  return acc;
}

Dehomogenized dehomogenize(const BiPoly& p) {
  if (p.is_zero()) throw BadInput("dehomogenize of zero polynomial");
  int gamma = -1, beta = -1;
  for (const auto& [m, c] : p.terms()) {
    gamma = (gamma < 0) ? m.dx : std::min(gamma, m.dx);
    beta = (beta < 0) ? m.dy : std::min(beta, m.dy);
  }
  int degt = 0;
  for (const auto& [m, c] : p.terms()) degt = std::max(degt, m.dy - beta);
  std::vector<Rat> g(static_cast<std::size_t>(degt) + 1, Rat(0));
  for (const auto& [m, c] : p.terms())
    g[static_cast<std::size_t>(m.dy - beta)] += c;
  return {gamma, beta, UniPoly(std::move(g))};
}

Phase Phase::from_poly(const BiPoly& p) {
  auto d = p.homogeneous_degree();
  if (!d || *d < 2)
    throw NonHomogeneous("phase must be homogeneous of degree >= 2, got: " +
                         p.str());
  return Phase(p, *d);
}

Phase Phase::parse(const std::string& text) {
  return from_poly(BiPoly::parse(text));
}

Phase Phase::transposed() const {
  BiPoly r;
  for (const auto& [m, c] : s_.terms()) r = r + BiPoly::term(c, m.dy, m.dx);
  return Phase(r, n_);
}

KExtremes k_extremes(const Phase& S) {
  int n = S.n();
  int kmin = -1, kmax = -1;
  for (int k = 1; k <= n - 1; ++k) {
    if (!S.a(k).is_zero()) {
      if (kmin < 0) kmin = k;
      kmax = k;
    }
  }
  if (kmin < 0)
    throw DegeneratePhase("phase has no mixed monomial: " + S.str());
  return {kmin, kmax};
}

BiPoly mixed_hessian(const Phase& S) { return S.poly().dx().dy(); }

}  // namespace oscint
