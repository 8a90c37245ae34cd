#include "trident/specializations.hpp"

#include <stdexcept>

#include "trident/errors.hpp"
#include "trident/sequence_engine.hpp"

namespace trident {

namespace {

constexpr std::array<std::string_view, 10> kSpecNames = {
    "z0", "z1", "z2", "z3", "p1", "p2", "p3", "p4", "p5", "p6"};

// Exponent of z assigned to each of w, x, y, z.
constexpr std::array<std::array<unsigned, 4>, 10> kSpecDegrees = {{
    {0, 0, 0, 0},  // Z0
    {0, 0, 1, 0},  // Z1
    {1, 1, 1, 2},  // Z2
    {0, 0, 1, 1},  // Z3
    {1, 1, 0, 0},  // P1
    {1, 1, 1, 1},  // P2
    {0, 0, 1, 2},  // P3
    {1, 1, 1, 0},  // P4
    {0, 1, 1, 2},  // P5
    {1, 0, 1, 2},  // P6
}};

BigInt pow_ui(unsigned long base, unsigned long e) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, e);
  return r;
}

BigInt binomial(unsigned long n, unsigned long k) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

}  // namespace

std::string_view spec_name(SpecId s) { return kSpecNames[static_cast<int>(s)]; }

std::optional<SpecId> parse_spec(std::string_view name) {
  for (std::size_t i = 0; i < kSpecNames.size(); ++i) {
    if (kSpecNames[i] == name) return static_cast<SpecId>(i);
  }
  return std::nullopt;
}

char family_char(Family f) { return f == Family::Q ? 'Q' : 'R'; }

const SpecMap& spec_map(SpecId s) {
  static const std::array<SpecMap, 10> maps = [] {
    std::array<SpecMap, 10> out;
    for (std::size_t i = 0; i < out.size(); ++i) {
      for (int v = 0; v < 4; ++v) out[i].images[v] = UniPoly::monomial(kSpecDegrees[i][v]);
    }
    return out;
  }();
  return maps[static_cast<int>(s)];
}

SpecCoefficients spec_coefficients(SpecId s) {
  const auto& m = spec_map(s);
  const auto& wp = WPair::get();
  return {poly_substitute(wp.w1, m), poly_substitute(wp.w2, m),
          poly_substitute(sum_wxy(), m)};
}

std::vector<UniPoly> spec_family_table(SpecId s, Family f, unsigned n) {
  const auto c = spec_coefficients(s);
  std::vector<UniPoly> seq;
  if (f == Family::Q) {
    seq = {UniPoly{}, UniPoly{1}};
  } else {
    seq = {UniPoly{1}, c.r1};
  }
  for (unsigned k = 2; k <= n; ++k) seq.push_back(c.w1 * seq[k - 1] - c.w2 * seq[k - 2]);
  seq.resize(n + 1);
  return seq;
}

UniPoly spec_family(SpecId s, Family f, unsigned n) {
  return spec_family_table(s, f, n).back();
}

ClosedPair q1_r1_closed(unsigned n) {
  std::vector<BigInt> q(n + 1), r(n + 1);
  for (unsigned j = 0; j <= n; ++j) {
    const BigInt b = binomial(n, j);
    const BigInt p = pow_ui(3, n - j);
    q[j] = b * (p - 1) / 2;
    r[j] = b * (p + 1) / 2;
  }
  return {UniPoly(std::move(q)), UniPoly(std::move(r))};
}

ClosedPair q1_r1_shifted_closed(unsigned n) {
  std::vector<BigInt> q(n + 1), r(n + 1);
  for (unsigned k = 0; k <= n; ++k) {
    // Coefficient of z^{n-k} is binomial(n, k); k odd feeds Q, k even feeds R.
    (k % 2 == 1 ? q : r)[n - k] = binomial(n, k);
  }
  return {UniPoly(std::move(q)), UniPoly(std::move(r))};
}

UniPoly reduced_q2(unsigned n) {
  if (n == 0) throw std::invalid_argument("reduced_q2 requires n >= 1");
  return spec_family(SpecId::Z2, Family::Q, n).shift_down(n - 1);
}

CoefficientProfile profile(SpecId s, Family f, unsigned n) {
  CoefficientProfile prof{f, s, n, {}};
  const auto p = spec_family(s, f, n);
  for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
    if (p.coeffs()[k] != 0) prof.coeffs[static_cast<unsigned>(k)] = p.coeffs()[k];
  }
  return prof;
}

unsigned partition_statistic(SpecId s, const ColoredPartition& p) {
  unsigned k = 0;
  for (const auto& d : p.digits) {
    const unsigned single = d.plain == 1 ? 1 : 0;
    const unsigned pair = d.plain == 2 ? 1 : 0;
    switch (s) {
      case SpecId::Z0: break;
      case SpecId::Z1: k += single; break;                           // single unmarked parts
      case SpecId::Z2: k += d.count(); break;                        // all parts
      case SpecId::Z3: k += single + pair; break;                    // singles plus pairs
      case SpecId::P1: k += d.over + d.tilde; break;                 // marked parts
      case SpecId::P2: k += d.over + d.tilde + single + pair; break; // pairs once
      case SpecId::P3: k += d.plain; break;                          // unmarked parts
      case SpecId::P4: k += d.over + d.tilde + single; break;        // pairs excluded
      case SpecId::P5: k += d.tilde + d.plain; break;                // not overlined
      case SpecId::P6: k += d.over + d.plain; break;                 // no tilde
    }
  }
  return k;
}

CoefficientProfile profile_from_oracle(SpecId s, Family f, unsigned n,
                                       const OracleOptions& opts) {
  CoefficientProfile prof{f, s, n, {}};
  if (f == Family::Q && n == 0) return prof;
  const std::uint64_t index = f == Family::Q ? q_index(n) : r_index(n);
  for (const auto& p : enumerate_partitions(index, opts)) {
    prof.coeffs[partition_statistic(s, p)] += 1;
  }
  return prof;
}

namespace {

class Checker {
 public:
  explicit Checker(StructuralReport& rep) : rep_(rep) {}

  void expect(bool ok, std::string what) {
    if (!ok) rep_.failures.push_back(what);
    rep_.checks.push_back(std::move(what));
  }

 private:
  StructuralReport& rep_;
};

bool single_parity(const UniPoly& p, unsigned parity) {
  for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
    if (p.coeffs()[k] != 0 && k % 2 != parity) return false;
  }
  return true;
}

}  // namespace

StructuralReport structural_check(SpecId s, unsigned n) {
  if (n == 0) throw std::invalid_argument("structural_check requires n >= 1");
  StructuralReport rep{s, n, {}, {}};
  Checker check(rep);
  const UniPoly q = spec_family(s, Family::Q, n);
  const int d = static_cast<int>(n) - 1;

  switch (s) {
    case SpecId::Z1: {
      const UniPoly r = spec_family(s, Family::R, n);
      check.expect(q.degree() == d, "Q degree n-1");
      check.expect(q.coeff(0) == (pow_ui(3, n) - 1) / 2, "Q constant (3^n-1)/2");
      check.expect(q.leading() == n, "Q leading coefficient n");
      check.expect(r.degree() == static_cast<int>(n), "R degree n");
      check.expect(r.coeff(0) == (pow_ui(3, n) + 1) / 2, "R constant (3^n+1)/2");
      check.expect(r.leading() == 1, "R leading coefficient 1");
      break;
    }
    case SpecId::Z2: {
      check.expect(q.degree() == 3 * d, "degree 3(n-1)");
      check.expect(q.lowest_degree() == d, "lowest degree n-1");
      check.expect(q.leading() == pow_ui(3, n - 1), "leading coefficient 3^(n-1)");
      check.expect(is_palindromic(q.shift_down(n - 1)), "palindromic after reduction");
      check.expect(single_parity(q, (n - 1) % 2), "only powers of the parity of n-1");
      break;
    }
    case SpecId::Z3: {
      check.expect(q.degree() == d, "degree n-1");
      check.expect(q.leading() == (pow_ui(3, n) - 1) / 2, "leading (3^n-1)/2");
      check.expect(q.coeff(0) == pow_ui(2, n - 1), "constant 2^(n-1)");
      break;
    }
    case SpecId::P1:
    case SpecId::P3:
    case SpecId::P5:
    case SpecId::P6:
      check.expect(is_palindromic(q), "palindromic");
      break;
    default:
      break;
  }
  return rep;
}

}  // namespace trident
