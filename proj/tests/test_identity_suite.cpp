#include <doctest.h>

#include "trident/identity_suite.hpp"
#include "trident/sequence_engine.hpp"
#include "trident/serialize.hpp"

using namespace trident;

TEST_CASE("identities hold for the recurrence") {
  CHECK(verify_cross_sequence(10).passed());
  CHECK(verify_telescoping(10).passed());
  CHECK(verify_sum_difference(30).passed());
  for (SpecId s : {SpecId::Z1, SpecId::Z2, SpecId::Z3}) CHECK(verify_divisibility(s, 20).passed());
  CHECK_THROWS(verify_divisibility(SpecId::P1, 4));
}

TEST_CASE("divisibility report covers every divisor pair") {
  const auto rep = verify_divisibility(SpecId::Z3, 12);
  std::size_t pairs = 0;
  for (unsigned n = 1; n <= 12; ++n) {
    for (unsigned m = 1; m < n; ++m) pairs += n % m == 0;
  }
  CHECK(rep.statuses.size() == pairs);
  // Z1 adds the three R_6 fixtures.
  CHECK(verify_divisibility(SpecId::Z1, 12).statuses.size() == pairs + 3);
}

TEST_CASE("a perturbed Q is caught with a witness") {
  PolySource bad = PolySource::recurrence();
  bad.q = [](unsigned n) {
    auto q = q_poly(n);
    if (n == 4) q += MultiPoly::parse("wxyz");
    return q;
  };
  for (const auto& rep : {verify_cross_sequence(6, bad), verify_telescoping(6, bad)}) {
    CHECK_FALSE(rep.passed());
    REQUIRE(rep.witness.has_value());
    const auto w = json::parse(*rep.witness);
    CHECK(w.contains("lhs"));
    CHECK(w["parameter"].get<unsigned>() >= 3);
  }
}

TEST_CASE("a perturbed specialization is caught") {
  UniSource bad = UniSource::recurrence();
  bad.family = [](SpecId s, Family f, unsigned n) {
    auto p = spec_family(s, f, n);
    if (n == 6 && f == Family::Q) p += UniPoly{1};
    return p;
  };
  const auto div = verify_divisibility(SpecId::Z2, 12, bad);
  CHECK_FALSE(div.passed());
  CHECK(div.witness.has_value());
  CHECK_FALSE(verify_sum_difference(8, bad).passed());

  UniSource bad_r = UniSource::recurrence();
  bad_r.family = [](SpecId s, Family f, unsigned n) {
    auto p = spec_family(s, f, n);
    if (n == 6 && f == Family::R) p = p * spec_family(s, f, 1);
    return p;
  };
  CHECK_FALSE(verify_divisibility(SpecId::Z1, 6, bad_r).passed());
}
