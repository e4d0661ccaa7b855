#pragma once
// Exact real-root bookkeeping for univariate rational polynomials: Sturm
// counts, bisection isolation, interval refinement. Roots are never floats;
// each one is carried as (square-free factor, isolating rational interval).

#include <stdexcept>
#include <vector>

#include "oscint/univariate.hpp"

namespace oscint {

struct EndpointIsRoot : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Distinct real roots of p in the half-open interval (a, b]. Endpoints must
// not be roots, so the count is unambiguous for the open interval too.
int sturm_count(const UniPoly& p, const Rat& a, const Rat& b);

// Distinct real roots of p on the whole line.
int count_real_roots(const UniPoly& p);

// Cauchy bound: every real root of p lies in [-M, M].
Rat root_bound(const UniPoly& p);

struct RootInterval {
  UniPoly factor;       // monic square-free factor this root belongs to
  Rat lo, hi;           // lo <= root <= hi; lo == hi means root is exact
  int multiplicity = 1; // multiplicity in the polynomial that was isolated
  bool exact() const { return lo == hi; }
  double approx() const { return (lo.to_double() + hi.to_double()) / 2; }
};

// All real roots of p with multiplicities, sorted increasing, intervals
// pairwise disjoint, factor nonzero at non-degenerate endpoints.
std::vector<RootInterval> isolate_real_roots(const UniPoly& p);

// Bisects until hi - lo <= width. Degenerate intervals pass through.
RootInterval refine_root(RootInterval r, const Rat& width);

}  // namespace oscint
