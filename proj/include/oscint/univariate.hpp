#pragma once
// Dense univariate polynomials over exact rationals, coefficients in
// ascending degree order (empty vector = zero polynomial).

#include <string>
#include <utility>
#include <vector>

#include "oscint/rational.hpp"

namespace oscint {

class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }
  static UniPoly constant(const Rat& a);
  static UniPoly monomial(const Rat& a, int deg);

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 if zero
  const std::vector<Rat>& coeffs() const { return c_; }
  Rat coeff(int k) const;
  Rat leading() const;

  UniPoly operator-() const;
  friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  UniPoly scaled(const Rat& s) const;
  UniPoly pow(unsigned e) const;
  friend bool operator==(const UniPoly& a, const UniPoly& b) {
    return a.c_ == b.c_;
  }

  UniPoly derivative() const;
  Rat eval(const Rat& t) const;
  double eval(double t) const;

  // Exact Euclidean division; throws BadInput on zero divisor.
  std::pair<UniPoly, UniPoly> divmod(const UniPoly& d) const;
  UniPoly monic() const;

  // Monic gcd via Euclid over the rationals (exact).
  static UniPoly gcd(UniPoly a, UniPoly b);

  // Prints in the variable `var`, descending powers, e.g. "t^2 - 2".
  std::string str(char var = 't') const;

 private:
  void trim();
  std::vector<Rat> c_;
};

// Yun square-free decomposition: poly = lead * prod f_i^{m_i} with the f_i
// monic, square-free, pairwise coprime, listed with increasing m_i.
struct SquareFreePart {
  UniPoly factor;  // monic, degree >= 1
  int multiplicity = 1;
};
std::vector<SquareFreePart> square_free_decompose(const UniPoly& p);

}  // namespace oscint
