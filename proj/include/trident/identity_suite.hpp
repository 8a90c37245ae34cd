#pragma once

// Exact verification of the cross-sequence identities, telescoping sums,
// divisibility and the Z1 sum/difference relations.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "trident/polyring.hpp"
#include "trident/specializations.hpp"

namespace trident {

struct IdentityStatus {
  unsigned parameter = 0;  // n (or N); for divisibility the pair is encoded in `note`
  bool passed = false;
  std::string note;
};

struct IdentityReport {
  std::string id;
  unsigned from = 0;
  unsigned to = 0;
  std::vector<IdentityStatus> statuses;
  /// Serialized polynomials of the first failure (JSON text), if any.
  std::optional<std::string> witness;

  bool passed() const;
};

/// Where the verifiers take Q_n and R_n from. The defaults use the
/// recurrence; tests swap in perturbed sources to check the harness.
struct PolySource {
  std::function<MultiPoly(unsigned)> q;
  std::function<MultiPoly(unsigned)> r;

  static PolySource recurrence();
};

struct UniSource {
  std::function<UniPoly(SpecId, Family, unsigned)> family;

  static UniSource recurrence();
};

/// wxz Q_n = R_{n+1} - (w+x+y) R_n and R_n = Q_{n+1} - (wxy+wz+xz) Q_n.
IdentityReport verify_cross_sequence(unsigned n_max, const PolySource& src = PolySource::recurrence());

/// R_N = (w+x+y)^N + wxz sum (w+x+y)^{N-n} Q_{n-1} and
/// Q_N = sum (wxy+wz+xz)^{N-n} R_{n-1}.
IdentityReport verify_telescoping(unsigned n_max, const PolySource& src = PolySource::recurrence());

/// Q_m | Q_n for every m | n <= n_max under Z1, Z2 or Z3; for Z1 also the
/// R_6 partial-divisibility fixture.
IdentityReport verify_divisibility(SpecId spec, unsigned n_max,
                                   const UniSource& src = UniSource::recurrence());

/// R-Q = (z+1)^n, R^2-Q^2 = ((z+1)(z+3))^n, R+Q = (z+3)^n under Z1.
IdentityReport verify_sum_difference(unsigned n_max, const UniSource& src = UniSource::recurrence());

}  // namespace trident
