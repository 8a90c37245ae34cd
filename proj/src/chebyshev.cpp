#include "trident/chebyshev.hpp"

#include <cmath>
#include <random>
#include <sstream>

#include "trident/sequence_engine.hpp"

namespace trident {

std::vector<UniPoly> chebyshev_table(ChebKind kind, unsigned n) {
  const UniPoly two_v{0, 2};
  std::vector<UniPoly> seq{UniPoly{1}};
  if (n >= 1) seq.push_back(kind == ChebKind::FirstKind ? UniPoly{0, 1} : two_v);
  for (unsigned k = 2; k <= n; ++k) seq.push_back(two_v * seq[k - 1] - seq[k - 2]);
  return seq;
}

UniPoly chebyshev(ChebKind kind, unsigned n) { return chebyshev_table(kind, n).back(); }

double chebyshev_value(ChebKind kind, unsigned n, double v) {
  double prev = 1.0;
  if (n == 0) return prev;
  double cur = kind == ChebKind::FirstKind ? v : 2.0 * v;
  for (unsigned k = 2; k <= n; ++k) {
    double next = 2.0 * v * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

std::vector<MultiPoly> dickson_E_table(unsigned n, const MultiPoly& a, const MultiPoly& b) {
  return detail::bivariate_sequence(n, MultiPoly::constant(1), a, b);
}

std::vector<MultiPoly> dickson_D_table(unsigned n, const MultiPoly& a, const MultiPoly& b) {
  return detail::bivariate_sequence(n, MultiPoly::constant(2), a, b);
}

MultiPoly dickson_E(unsigned n, const MultiPoly& a, const MultiPoly& b) {
  return dickson_E_table(n, a, b).back();
}

MultiPoly dickson_D(unsigned n, const MultiPoly& a, const MultiPoly& b) {
  return dickson_D_table(n, a, b).back();
}

UniPoly dickson_E(unsigned n, const UniPoly& a, const UniPoly& b) {
  return detail::bivariate_sequence(n, UniPoly{1}, a, b).back();
}

UniPoly dickson_D(unsigned n, const UniPoly& a, const UniPoly& b) {
  return detail::bivariate_sequence(n, UniPoly{2}, a, b).back();
}

ChebyshevFormReport verify_chebyshev_forms(unsigned n, int points, std::uint64_t seed, double rel_tol) {
  ChebyshevFormReport rep;
  rep.n = n;
  rep.spot_points = points;
  rep.spot_tolerance = rel_tol;

  const auto& wp = WPair::get();
  const auto qs = q_poly_table(n + 1);
  const auto rs = r_poly_table(n);
  const MultiPoly correction = sum_wxy() - mixed_cubic();

  rep.q_exact = qs[n + 1] == dickson_E(n, wp.w1, wp.w2);
  rep.r_exact = MultiPoly::constant(2) * rs[n] ==
                dickson_D(n, wp.w1, wp.w2) + correction * qs[n];
  if (!rep.q_exact) rep.failures.push_back("Q_{n+1} != E_n(W1, W2)");
  if (!rep.r_exact) rep.failures.push_back("2 R_n != D_n(W1, W2) + (w+x+y-wxy-wz-xz) Q_n");

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(0.5, 2.0);
  for (int p = 0; p < points; ++p) {
    std::array<double, 4> pt{dist(rng), dist(rng), dist(rng), dist(rng)};
    const double w1 = wp.w1.eval(pt);
    const double w2 = wp.w2.eval(pt);
    const double root = std::sqrt(w2);
    const double arg = w1 / (2.0 * root);
    const double scale = std::pow(w2, 0.5 * n);

    const double q_rad = scale * chebyshev_value(ChebKind::SecondKind, n, arg);
    const double q_val = qs[n + 1].eval(pt);
    const double r_rad = scale * chebyshev_value(ChebKind::FirstKind, n, arg) +
                         0.5 * correction.eval(pt) * qs[n].eval(pt);
    const double r_val = rs[n].eval(pt);

    const double q_rel = std::abs(q_rad - q_val) / std::max(std::abs(q_val), 1e-300);
    const double r_rel = std::abs(r_rad - r_val) / std::max(std::abs(r_val), 1e-300);
    rep.worst_q_relative = std::max(rep.worst_q_relative, q_rel);
    rep.worst_r_relative = std::max(rep.worst_r_relative, r_rel);
    if (!(q_rel <= rel_tol) || !(r_rel <= rel_tol)) {
      std::ostringstream os;
      os << "spot check " << p << " at (" << pt[0] << ", " << pt[1] << ", " << pt[2]
         << ", " << pt[3] << "): rel err Q " << q_rel << ", R " << r_rel;
      rep.failures.push_back(os.str());
    }
  }
  return rep;
}

}  // namespace trident
