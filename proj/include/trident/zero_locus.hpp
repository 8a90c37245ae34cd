#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "trident/chebyshev.hpp"
#include "trident/polyring.hpp"
#include "trident/specializations.hpp"

namespace trident {

using Complex = std::complex<double>;

/// Families whose zeros come from an explicit map of Chebyshev zeros.
enum class ExplicitFamily { Z1Q, Z1R, Z2, Z3 };

std::string_view explicit_family_name(ExplicitFamily f);  // "z1q", "z1r", "z2", "z3"

/// The curve on which a family's zeros are claimed to lie.
enum class LocusKind {
  None,
  VerticalLineMinus2,      // Re z = -2
  UnitCircle,              // |z| = 1, and |Im z| > 1/3 for Z2
  Circle3_8Radius7_8,      // |z - 3/8| = 7/8, Re z < 1/2
  UnitCircleOrNegativeReal // |z| = 1 or z < 0
};

LocusKind locus_for(SpecId s);
double locus_distance(LocusKind kind, Complex z);
/// JSON object describing the locus (type and parameters).
std::string locus_json(LocusKind kind);

struct ZeroReport {
  std::string family;  // "Q" or "R"
  SpecId spec = SpecId::Z1;
  unsigned n = 0;
  /// The polynomial the points are zeros of (z^k stripped for Z2).
  UniPoly polynomial;
  /// Multiplicity of z = 0 removed before `polynomial` (Z2: n-1).
  unsigned origin_multiplicity = 0;
  std::vector<Complex> points;
  std::vector<double> residuals;           // |P(z)|
  std::vector<double> relative_residuals;  // |P(z)| / sum |c_k| |z|^k
  std::vector<double> locus_metrics;       // distance to the claimed locus
  LocusKind locus = LocusKind::None;
  int iterations = 0;                      // root finder sweeps, 0 if explicit
};

/// Zeros of U_n (descending cos((k+1)pi/(n+1))) or T_n (cos((2k+1)pi/(2n))).
/// Symmetric pairs are exact negatives and the middle zero is exactly 0.
std::vector<double> chebyshev_zeros(ChebKind kind, unsigned n);

/// Zeros of Q_n and R_n under z1, Q_n under z2 (nonzero part) or Q_n under z3, from
/// the explicit images of Chebyshev zeros.
ZeroReport zeros_explicit(ExplicitFamily fam, unsigned n);

struct RootFinderOptions {
  double tolerance = 1e-13;
  int max_iterations = 500;
  std::uint64_t seed = 42;
};

/// All complex zeros with multiplicity. Exact square-free splitting first,
/// then Aberth-Ehrlich simultaneous iteration on each factor and a
/// multiprecision Newton polish.
ZeroReport zeros_general(const UniPoly& p, const RootFinderOptions& opts = {});

/// Largest distance in a nearest-neighbour matching of two equal-size
/// multisets; infinity if the sizes differ.
double match_distance(const std::vector<Complex>& a, const std::vector<Complex>& b);

struct LocusReport {
  SpecId spec = SpecId::Z1;
  unsigned n = 0;
  double tolerance = 1e-9;
  std::vector<ZeroReport> zeros;
  double worst_locus_distance = 0.0;
  double worst_relative_residual = 0.0;
  /// Worst explicit-versus-general matching distance; absent for presets.
  std::optional<double> path_agreement;
  /// Strict-inequality margin: min |Im z| - 1/3 (Z2) or 1/2 - max Re z (Z3).
  std::optional<double> strict_margin;
  /// Observed real zeros for the presets, as [min, max].
  std::optional<std::pair<double, double>> real_zero_range;
  std::vector<std::string> failures;

  bool passed() const { return failures.empty(); }
};

inline constexpr double kPathAgreementTolerance = 1e-8;

/// Checks every zero lies on the claimed locus for spec in
/// {Z1, Z2, Z3, P3, P5, P6}, with relative residuals below tol.
LocusReport verify_locus(SpecId spec, unsigned n, double tol = 1e-9,
                         const RootFinderOptions& opts = {});

}  // namespace trident
