#pragma once
// Sparse bivariate polynomials over exact rationals, plus the homogeneous
// phase wrapper used by the analysis pipeline.
//
// Text format (both directions):
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := coeff | [coeff '*'] factor ('*' factor)*
//   factor := ('x'|'y') ['^' posint]
//   coeff  := int | int '/' posint
// Whitespace is ignored. Canonical printing is graded-lex (total degree
// descending, then x-degree descending) with explicit '*' and '^'.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "oscint/rational.hpp"
#include "oscint/univariate.hpp"

namespace oscint {

struct Monomial {
  int dx = 0;  // exponent of x
  int dy = 0;  // exponent of y
  int total() const { return dx + dy; }
  bool operator==(const Monomial&) const = default;
};

struct MonomialOrder {  // graded-lex, largest first, so map iteration prints
  bool operator()(const Monomial& a, const Monomial& b) const {
    if (a.total() != b.total()) return a.total() > b.total();
    return a.dx > b.dx;
  }
};

class BiPoly {
 public:
  using Terms = std::map<Monomial, Rat, MonomialOrder>;

  BiPoly() = default;
  static BiPoly term(const Rat& c, int dx, int dy);
  static BiPoly parse(const std::string& text);

  bool is_zero() const { return t_.empty(); }
  const Terms& terms() const { return t_; }
  Rat coeff(int dx, int dy) const;
  int total_degree() const;  // -1 for zero

  BiPoly operator-() const;
  friend BiPoly operator+(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator-(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  BiPoly scaled(const Rat& s) const;
  friend bool operator==(const BiPoly& a, const BiPoly& b) {
    return a.t_ == b.t_;
  }

  BiPoly dx() const;
  BiPoly dy() const;
  Rat eval(const Rat& x, const Rat& y) const;
  double eval(double x, double y) const;

  // All terms share one total degree? (zero polynomial -> nullopt)
  std::optional<int> homogeneous_degree() const;

  std::string str() const;

 private:
  void add_term(const Monomial& m, const Rat& c);
  Terms t_;
};

// gamma/beta are the largest powers of x resp. y dividing the polynomial;
// g is what remains after stripping them and setting x = 1 (so g(y/x) scaled
// by x^deg recovers the stripped part). g(0) != 0 and deg g is exact.
struct Dehomogenized {
  int gamma = 0;
  int beta = 0;
  UniPoly g;
};
Dehomogenized dehomogenize(const BiPoly& p);

struct DegeneratePhase : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NonHomogeneous : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Real homogeneous phase S(x,y) = sum_k a_k x^{n-k} y^k of degree n >= 2.
class Phase {
 public:
  static Phase from_poly(const BiPoly& p);      // throws NonHomogeneous
  static Phase parse(const std::string& text);  // parse + from_poly

  const BiPoly& poly() const { return s_; }
  int n() const { return n_; }
  Rat a(int k) const { return s_.coeff(n_ - k, k); }
  std::string str() const { return s_.str(); }

  // Swaps the roles of x and y (coefficients reversed).
  Phase transposed() const;

 private:
  Phase(BiPoly s, int n) : s_(std::move(s)), n_(n) {}
  BiPoly s_;
  int n_ = 0;
};

// Smallest/largest k in [1, n-1] with a_k != 0; throws DegeneratePhase if
// the phase has no mixed monomial at all.
struct KExtremes {
  int k_min = 0;
  int k_max = 0;
};
KExtremes k_extremes(const Phase& S);

// d^2 S / dx dy, the object every factorization below starts from.
BiPoly mixed_hessian(const Phase& S);

}  // namespace oscint
