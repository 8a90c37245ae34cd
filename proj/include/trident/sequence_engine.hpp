#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "trident/polyring.hpp"

namespace trident {

/// Coefficients of a power series in the formal variable q, truncated after
/// q^N; coefficient k is a MultiPoly.
class TruncatedSeries {
 public:
  explicit TruncatedSeries(std::size_t degree);

  std::size_t degree() const noexcept { return coeffs_.size() - 1; }
  const MultiPoly& operator[](std::size_t k) const { return coeffs_.at(k); }
  MultiPoly& operator[](std::size_t k) { return coeffs_.at(k); }

  /// Multiplies in place by sum_i factor_i * q^{shift_i}.
  void multiply_sparse(const std::vector<std::pair<std::size_t, MultiPoly>>& factor);
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);

 private:
  std::vector<MultiPoly> coeffs_;
};

/// The two recurrence coefficients, W1 = wxy+wz+xz+w+x+y and
/// W2 = w^2xy+w^2z+wx^2y+wxy^2+wxz+wyz+x^2z+xyz.
struct WPair {
  MultiPoly w1;
  MultiPoly w2;

  static const WPair& get();
};

/// Frequently used building blocks.
const MultiPoly& sum_wxy();      // w+x+y
const MultiPoly& s2_poly();      // wx+wy+xy+z
const MultiPoly& mixed_cubic();  // wxy+wz+xz
const MultiPoly& wxz();          // wxz

/// S(n;Z) from the base-3 recurrence, memoized per call.
MultiPoly s_poly(std::uint64_t n);

inline constexpr std::uint64_t kDefaultProductCap = 500;

/// S(n;Z) as the q^n coefficient of the truncated generating product.
/// Throws CapExceeded for n above `cap`.
MultiPoly s_poly_product(std::uint64_t n, std::uint64_t cap = kDefaultProductCap);

/// The truncated generating product through q^n.
TruncatedSeries generating_product(std::uint64_t n);

/// S(k-1;Z) * S(2;Z)^n, which equals S(k*3^n - 1;Z).
MultiPoly closed_form_k3n(std::uint64_t k, unsigned n);

/// Q_n(Z) and R_n(Z) from the shared three-term recurrence.
MultiPoly q_poly(unsigned n);
MultiPoly r_poly(unsigned n);
/// Q_0..Q_n (resp. R_0..R_n).
std::vector<MultiPoly> q_poly_table(unsigned n);
std::vector<MultiPoly> r_poly_table(unsigned n);

/// Q_n and R_n from their definitions S((3^n-3)/2) and S((3^n-1)/2).
MultiPoly q_poly_by_definition(unsigned n);
MultiPoly r_poly_by_definition(unsigned n);

/// (3^n - 3)/2 and (3^n - 1)/2.
std::uint64_t q_index(unsigned n);
std::uint64_t r_index(unsigned n);

struct ScalarQR {
  BigInt q;
  BigInt r;
};

/// (2^{n-1}(2^n-1), 2^{n-1}(2^n+1)) for n >= 1, (0, 1) for n = 0.
ScalarQR scalar_qr(unsigned n);

struct GfMismatch {
  char family;  // 'Q' or 'R'
  std::size_t degree;
  std::string expected;
  std::string actual;
};

struct GfReport {
  std::size_t max_degree = 0;
  std::vector<GfMismatch> mismatches;

  bool passed() const { return mismatches.empty(); }
};

/// Multiplies the Q and R series by 1 - W1 q + W2 q^2 and compares with the
/// numerators q and 1 - (wxy+wz+xz) q through q^N.
GfReport gf_check(std::size_t max_degree);

}  // namespace trident
