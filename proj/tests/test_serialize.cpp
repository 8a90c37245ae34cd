#include <doctest.h>

#include "trident/sequence_engine.hpp"
#include "trident/serialize.hpp"

using namespace trident;

TEST_CASE("polynomial json round trip") {
  for (unsigned n : {0u, 5u, 40u, 364u}) {
    const auto p = s_poly(n);
    CHECK(multipoly_from_json(to_json(p)) == p);
  }
  const UniPoly big(std::vector<BigInt>{BigInt("123456789012345678901234567890"), -3, 0, 1});
  const auto j = to_json(big);
  CHECK(j[0] == "123456789012345678901234567890");
  CHECK(unipoly_from_json(j) == big);
  CHECK(to_json(UniPoly{}).empty());
  CHECK(to_json(MultiPoly::parse("2wxz"))[0] == json::array({1, 1, 0, 1, "2"}));
}

TEST_CASE("reports serialize") {
  const auto gf = to_json(gf_check(4));
  CHECK(gf["passed"] == true);
  const auto locus = to_json(verify_locus(SpecId::Z2, 5));
  CHECK(locus["passed"] == true);
  CHECK(locus.contains("strict_margin"));
  const auto prof = to_json(profile(SpecId::Z1, Family::Q, 3));
  CHECK(prof.contains("coeffs"));
}
