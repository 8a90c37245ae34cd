#pragma once

// Chebyshev polynomials and their radical-free bivariate forms.
//
// With E_0 = 1, E_1 = a and D_0 = 2, D_1 = a, both following
// X_n = a X_{n-1} - b X_{n-2}, one has
//   b^{n/2} U_n(a / (2 sqrt b)) = E_n(a, b)
//   b^{n/2} T_n(a / (2 sqrt b)) = D_n(a, b) / 2
// so half-integer powers of b never have to be formed.

#include <cstdint>
#include <string>
#include <vector>

#include "trident/polyring.hpp"

namespace trident {

enum class ChebKind { FirstKind, SecondKind };

UniPoly chebyshev(ChebKind kind, unsigned n);
/// T_0..T_n or U_0..U_n.
std::vector<UniPoly> chebyshev_table(ChebKind kind, unsigned n);
/// Value of T_n(v) or U_n(v) by the three-term recurrence.
double chebyshev_value(ChebKind kind, unsigned n, double v);

namespace detail {

template <class Ring>
std::vector<Ring> bivariate_sequence(unsigned n, Ring first, const Ring& a, const Ring& b) {
  std::vector<Ring> seq{std::move(first)};
  if (n >= 1) seq.push_back(a);
  for (unsigned k = 2; k <= n; ++k) seq.push_back(a * seq[k - 1] - b * seq[k - 2]);
  return seq;
}

}  // namespace detail

MultiPoly dickson_E(unsigned n, const MultiPoly& a, const MultiPoly& b);
MultiPoly dickson_D(unsigned n, const MultiPoly& a, const MultiPoly& b);
UniPoly dickson_E(unsigned n, const UniPoly& a, const UniPoly& b);
UniPoly dickson_D(unsigned n, const UniPoly& a, const UniPoly& b);
std::vector<MultiPoly> dickson_E_table(unsigned n, const MultiPoly& a, const MultiPoly& b);
std::vector<MultiPoly> dickson_D_table(unsigned n, const MultiPoly& a, const MultiPoly& b);

struct ChebyshevFormReport {
  unsigned n = 0;
  bool q_exact = false;  // Q_{n+1} == E_n(W1, W2)
  bool r_exact = false;  // 2 R_n == D_n(W1, W2) + (w+x+y-wxy-wz-xz) Q_n
  double worst_q_relative = 0.0;
  double worst_r_relative = 0.0;
  int spot_points = 0;
  double spot_tolerance = 1e-9;
  std::vector<std::string> failures;

  bool passed() const { return failures.empty(); }
};

/// Exact check of the Chebyshev representations of Q_{n+1} and R_n, plus
/// floating-point evaluation of the radical forms at `points` random real
/// points with all variables in (0.5, 2).
ChebyshevFormReport verify_chebyshev_forms(unsigned n, int points = 20, std::uint64_t seed = 42,
                           double rel_tol = 1e-9);

}  // namespace trident
