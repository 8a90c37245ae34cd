#include <doctest.h>

#include "oracles.hpp"
#include "trident/chebyshev.hpp"
#include "trident/reference_tables.hpp"
#include "trident/sequence_engine.hpp"
#include "trident/specializations.hpp"

using namespace trident;

namespace {

// z-degree of the image of w, x, y, z under each spec.
std::array<unsigned, 4> degrees(SpecId s) {
  switch (s) {
    case SpecId::Z0: return {0, 0, 0, 0};
    case SpecId::Z1: return {0, 0, 1, 0};
    case SpecId::Z2: return {1, 1, 1, 2};
    case SpecId::Z3: return {0, 0, 1, 1};
    case SpecId::P1: return {1, 1, 0, 0};
    case SpecId::P2: return {1, 1, 1, 1};
    case SpecId::P3: return {0, 0, 1, 2};
    case SpecId::P4: return {1, 1, 1, 0};
    case SpecId::P5: return {0, 1, 1, 2};
    case SpecId::P6: return {1, 0, 1, 2};
  }
  return {};
}

UniPoly collapse(const oracle::Dict& d, SpecId s) {
  const auto deg = degrees(s);
  std::vector<BigInt> c;
  for (const auto& [k, v] : d) {
    const unsigned e = k[0] * deg[0] + k[1] * deg[1] + k[2] * deg[2] + k[3] * deg[3];
    if (c.size() <= e) c.resize(e + 1, 0);
    c[e] += v;
  }
  return UniPoly(std::move(c));
}

const std::vector<oracle::Dict>& series() {
  static const auto s = oracle::generating_series(r_index(5));
  return s;
}

}  // namespace

TEST_CASE("spec names round trip") {
  for (SpecId s : kAllSpecs) CHECK(parse_spec(spec_name(s)) == s);
  CHECK_FALSE(parse_spec("z9").has_value());
  CHECK(family_char(Family::R) == 'R');
}

TEST_CASE("recurrence path matches substituted generating series") {
  for (SpecId s : kAllSpecs) {
    for (unsigned n = 0; n <= 5; ++n) {
      CAPTURE(spec_name(s));
      CAPTURE(n);
      CHECK(spec_family(s, Family::R, n) == collapse(series()[r_index(n)], s));
      if (n >= 1) CHECK(spec_family(s, Family::Q, n) == collapse(series()[q_index(n)], s));
    }
  }
}

TEST_CASE("spec coefficients") {
  const auto z1 = spec_coefficients(SpecId::Z1);
  CHECK(z1.w1 == UniPoly{4, 2});
  CHECK(z1.w2 == UniPoly{3, 4, 1});  // (z+1)(z+3)
  const auto t = spec_family_table(SpecId::Z3, Family::Q, 4);
  CHECK(t.size() == 5);
  CHECK(t[4] == spec_family(SpecId::Z3, Family::Q, 4));
}

TEST_CASE("published tables") {
  for (const auto& row : check_reference_tables()) {
    CAPTURE(row.table);
    CAPTURE(row.n);
    CHECK(row.matches);
  }
}

TEST_CASE("binomial coefficient formulas") {
  for (unsigned n = 0; n <= 40; ++n) {
    std::vector<BigInt> c(n + 1), d(n + 1);
    for (unsigned j = 0; j <= n; ++j) {
      c[j] = oracle::binomial(n, j) * (oracle::pow_ui(3, n - j) - 1) / 2;
      d[j] = oracle::binomial(n, j) * (oracle::pow_ui(3, n - j) + 1) / 2;
    }
    CHECK(spec_family(SpecId::Z1, Family::Q, n) == UniPoly(c));
    CHECK(spec_family(SpecId::Z1, Family::R, n) == UniPoly(d));
    const auto closed = q1_r1_closed(n);
    CHECK(closed.q == UniPoly(c));
    CHECK(closed.r == UniPoly(d));
    if (n >= 1 && n <= 4) {
      const auto qp = profile_from_oracle(SpecId::Z1, Family::Q, n);
      const auto rp = profile_from_oracle(SpecId::Z1, Family::R, n);
      for (unsigned j = 0; j <= n; ++j) {
        CHECK((qp.coeffs.count(j) ? qp.coeffs.at(j) : BigInt(0)) == c[j]);
        CHECK((rp.coeffs.count(j) ? rp.coeffs.at(j) : BigInt(0)) == d[j]);
      }
    }
  }
}

TEST_CASE("shifted closed forms") {
  for (unsigned n = 0; n <= 20; ++n) {
    const auto s = q1_r1_shifted_closed(n);
    std::vector<BigInt> odd(n + 1, 0), even(n + 1, 0);
    for (unsigned k = 0; k <= n; ++k) ((n - k) % 2 ? odd : even)[k] = oracle::binomial(n, k);
    CHECK(s.q == UniPoly(odd));
    CHECK(s.r == UniPoly(even));
  }
}

TEST_CASE("profiles agree with the partition statistics") {
  for (SpecId s : kAllSpecs) {
    for (Family f : {Family::Q, Family::R}) {
      for (unsigned n = 1; n <= 4; ++n) {
        CAPTURE(spec_name(s));
        CAPTURE(n);
        CHECK(profile(s, f, n) == profile_from_oracle(s, f, n));
      }
    }
  }
}

TEST_CASE("Z2 reduction") {
  for (unsigned n = 1; n <= 10; ++n) {
    const auto q = spec_family(SpecId::Z2, Family::Q, n);
    const auto red = reduced_q2(n);
    CHECK(q == red * UniPoly::monomial(n - 1));
    CHECK(q.degree() == static_cast<int>(3 * (n - 1)));
    CHECK(q.leading() == oracle::pow_ui(3, n - 1));
    CHECK(is_palindromic(red));
  }
}

TEST_CASE("structural claims") {
  for (SpecId s : {SpecId::Z1, SpecId::Z2, SpecId::Z3, SpecId::P1, SpecId::P3, SpecId::P5, SpecId::P6}) {
    for (unsigned n = 1; n <= 15; ++n) {
      const auto rep = structural_check(s, n);
      CAPTURE(spec_name(s));
      CAPTURE(n);
      CHECK(rep.passed());
      CHECK_FALSE(rep.checks.empty());
    }
  }
  for (unsigned n = 1; n <= 15; ++n) {
    const auto q3 = spec_family(SpecId::Z3, Family::Q, n);
    CHECK(q3.degree() == static_cast<int>(n - 1));
    CHECK(q3.leading() == (oracle::pow_ui(3, n) - 1) / 2);
    CHECK(q3.coeff(0) == oracle::pow_ui(2, n - 1));
  }
}

TEST_CASE("factorization fixtures") {
  const UniPoly q6 = spec_family(SpecId::Z3, Family::Q, 6);
  CHECK(q6 == BigInt(2) * UniPoly{1, 2} * UniPoly{4, 1, 7} * UniPoly{4, 11, 13});
  CHECK(up_divide_exact(q6, spec_family(SpecId::Z3, Family::Q, 2)) * spec_family(SpecId::Z3, Family::Q, 2) == q6);
  const UniPoly r6 = spec_family(SpecId::Z1, Family::R, 6);
  CHECK(r6 == UniPoly{5, 4, 1} * UniPoly{73, 88, 38, 8, 1});
}

TEST_CASE("Dickson forms specialize to Chebyshev") {
  const UniPoly two_v{0, 2};
  for (unsigned n = 0; n <= 12; ++n) {
    CHECK(dickson_E(n, two_v, UniPoly{1}) == chebyshev(ChebKind::SecondKind, n));
    CHECK(dickson_D(n, two_v, UniPoly{1}) == BigInt(2) * chebyshev(ChebKind::FirstKind, n));
  }
  CHECK(chebyshev(ChebKind::FirstKind, 3) == UniPoly{0, -3, 0, 4});
  CHECK(chebyshev(ChebKind::SecondKind, 3) == UniPoly{0, -4, 0, 8});
  for (unsigned n = 0; n <= 10; ++n) {
    const double t = 0.3;
    CHECK(chebyshev_value(ChebKind::FirstKind, n, std::cos(t)) == doctest::Approx(std::cos(n * t)));
    CHECK(chebyshev_value(ChebKind::SecondKind, n, std::cos(t)) ==
          doctest::Approx(std::sin((n + 1) * t) / std::sin(t)));
  }
}

TEST_CASE("Q and R as Dickson forms") {
  const auto& wp = WPair::get();
  const auto e = dickson_E_table(8, wp.w1, wp.w2);
  for (unsigned n = 0; n <= 8; ++n) CHECK(e[n] == q_poly(n + 1));
  for (unsigned n = 0; n <= 8; ++n) {
    const auto rep = verify_chebyshev_forms(n);
    CHECK(rep.passed());
    CHECK(rep.q_exact);
    CHECK(rep.r_exact);
    CHECK(rep.spot_points == 20);
    CHECK(rep.worst_q_relative < 1e-9);
  }
}
