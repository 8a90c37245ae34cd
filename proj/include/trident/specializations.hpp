#pragma once

// Single-variable specializations of Q_n(Z) and R_n(Z).

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "trident/partition_oracle.hpp"
#include "trident/polyring.hpp"

namespace trident {

/// Z0=(1,1,1,1), Z1=(1,1,z,1), Z2=(z,z,z,z^2), Z3=(1,1,z,z) and the presets
/// P1=(z,z,1,1), P2=(z,z,z,z), P3=(1,1,z,z^2), P4=(z,z,z,1), P5=(1,z,z,z^2),
/// P6=(z,1,z,z^2).
enum class SpecId { Z0, Z1, Z2, Z3, P1, P2, P3, P4, P5, P6 };

inline constexpr std::array<SpecId, 10> kAllSpecs = {
    SpecId::Z0, SpecId::Z1, SpecId::Z2, SpecId::Z3, SpecId::P1,
    SpecId::P2, SpecId::P3, SpecId::P4, SpecId::P5, SpecId::P6};

enum class Family { Q, R };

std::string_view spec_name(SpecId s);   // "z0", ..., "p6"
std::optional<SpecId> parse_spec(std::string_view name);
char family_char(Family f);             // 'Q' or 'R'

const SpecMap& spec_map(SpecId s);

/// W1 and W2 under the specialization, by substitution.
struct SpecCoefficients {
  UniPoly w1;
  UniPoly w2;
  UniPoly r1;  // image of w+x+y
};
SpecCoefficients spec_coefficients(SpecId s);

/// Q_n or R_n under the spec, by the three-term recurrence.
UniPoly spec_family(SpecId s, Family f, unsigned n);
std::vector<UniPoly> spec_family_table(SpecId s, Family f, unsigned n);

/// ((z+3)^n - (z+1)^n)/2 and ((z+3)^n + (z+1)^n)/2 by binomial expansion.
struct ClosedPair {
  UniPoly q;
  UniPoly r;
};
ClosedPair q1_r1_closed(unsigned n);
/// The same pair evaluated at z - 2: sums of binomial(n, odd) resp.
/// binomial(n, even) times powers of z.
ClosedPair q1_r1_shifted_closed(unsigned n);

/// Q_n under z2 divided by z^(n-1), n >= 1.
UniPoly reduced_q2(unsigned n);

/// Coefficient k of the specialized polynomial.
struct CoefficientProfile {
  Family family = Family::Q;
  SpecId spec = SpecId::Z1;
  unsigned n = 0;
  std::map<unsigned, BigInt> coeffs;

  friend bool operator==(const CoefficientProfile&, const CoefficientProfile&) = default;
};

CoefficientProfile profile(SpecId s, Family f, unsigned n);

/// The partition statistic counted by the exponent of z under each spec,
/// computed from the partition itself.
unsigned partition_statistic(SpecId s, const ColoredPartition& p);

/// Recount of `profile` by filtering the enumerated partitions of
/// (3^n-3)/2 (Q) or (3^n-1)/2 (R) on `partition_statistic`.
CoefficientProfile profile_from_oracle(SpecId s, Family f, unsigned n,
                                       const OracleOptions& opts = {});

struct StructuralReport {
  SpecId spec = SpecId::Z1;
  unsigned n = 0;
  std::vector<std::string> checks;    // every assertion made
  std::vector<std::string> failures;  // the ones that did not hold

  bool passed() const { return failures.empty(); }
};

/// Degree, extreme coefficient, parity and palindromicity claims for Q_n
/// under the spec (Z1 also covers R_n).
StructuralReport structural_check(SpecId s, unsigned n);

}  // namespace trident
