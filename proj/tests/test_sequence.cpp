#include <doctest.h>

#include "oracles.hpp"
#include "trident/errors.hpp"
#include "trident/partition_oracle.hpp"
#include "trident/sequence_engine.hpp"

using namespace trident;

namespace {
const std::array<BigInt, 4> kOnes{1, 1, 1, 1};
}

TEST_CASE("partition counts for small n") {
  const long expected[] = {1, 3, 4, 6, 10, 12, 13, 15, 16, 18, 22, 24, 28, 36, 40, 42};
  const auto series = oracle::count_series(15);
  for (unsigned n = 0; n < 16; ++n) {
    CAPTURE(n);
    CHECK(series[n] == expected[n]);
    CHECK(count_partitions(n) == expected[n]);
    CHECK(count_by_enumeration(n) == static_cast<std::uint64_t>(expected[n]));
    CHECK(s_poly(n).eval(kOnes) == expected[n]);
  }
}

TEST_CASE("enumeration of small n") {
  const auto three = enumerate_partitions(3);
  CHECK(three.size() == 6);
  for (const auto& p : three) {
    CHECK(p.is_valid_for(3));
    CHECK(p.value() == 3);
  }
  CHECK(enumerate_partitions(12).size() == 28);
  CHECK(enumerate_partitions(0).size() == 1);
  CHECK(enumerate_partitions(0)[0].render() == "0");

  std::vector<std::string> rendered;
  for (const auto& p : three) rendered.push_back(p.render());
  std::sort(rendered.begin(), rendered.end());
  CHECK(std::adjacent_find(rendered.begin(), rendered.end()) == rendered.end());
}

TEST_CASE("enumeration cap") {
  CHECK_THROWS_AS((enumerate_partitions(1000, OracleOptions{10})), CapExceeded);
  CHECK_THROWS_AS((oracle_poly(1000, OracleOptions{10})), CapExceeded);
  CHECK_NOTHROW(enumerate_partitions(12, OracleOptions{28}));
}

TEST_CASE("partition statistics give the monomial") {
  for (unsigned n = 0; n <= 30; ++n) {
    for (const auto& p : enumerate_partitions(n)) {
      const auto st = PartitionStats::of(p);
      const auto e = st.exponents();
      CHECK(e.e[0] == st.overlined);
      CHECK(e.e[3] == st.paired_plain);
      CHECK(st.overlined + st.tilde + st.single_plain + 2 * st.paired_plain == p.total_parts());
    }
  }
}

TEST_CASE("recurrence, product and enumeration agree") {
  const auto series = oracle::generating_series(40);
  for (unsigned n = 0; n <= 40; ++n) {
    CAPTURE(n);
    const auto rec = s_poly(n);
    CHECK(oracle::to_dict(rec) == series[n]);
    CHECK(rec == s_poly_product(n));
    CHECK(rec == oracle_poly(n));
  }
  CHECK_THROWS_AS(s_poly_product(501), CapExceeded);
}

TEST_CASE("counts agree with the series oracle") {
  const auto series = oracle::count_series(400);
  for (unsigned n = 0; n <= 400; ++n) CHECK(count_partitions(n) == series[n]);
  CHECK(count_partitions(80) == 256);
  CHECK(count_partitions(120) == 496);
}

TEST_CASE("recurrence building blocks") {
  CHECK(s_poly(1) == sum_wxy());
  CHECK(s_poly(2) == s2_poly());
  const auto& wp = WPair::get();
  CHECK(wp.w1 == mixed_cubic() + sum_wxy());
  CHECK(wp.w2 == MultiPoly::parse("w^2xy+w^2z+wx^2y+wxy^2+wxz+wyz+x^2z+xyz"));
  CHECK(wp.w2 == mixed_cubic() * sum_wxy() - wxz());
  CHECK(s_poly(3) == wp.w1);
}

TEST_CASE("Q and R") {
  for (unsigned n = 0; n <= 7; ++n) {
    CAPTURE(n);
    CHECK(q_poly(n) == q_poly_by_definition(n));
    CHECK(r_poly(n) == r_poly_by_definition(n));
    const auto qr = scalar_qr(n);
    CHECK(q_poly(n).eval(kOnes) == qr.q);
    CHECK(r_poly(n).eval(kOnes) == qr.r);
    if (n >= 1) {
      CHECK(qr.q == oracle::pow_ui(2, n - 1) * (oracle::pow_ui(2, n) - 1));
      CHECK(qr.r == oracle::pow_ui(2, n - 1) * (oracle::pow_ui(2, n) + 1));
    }
  }
  CHECK(q_index(5) == 120);
  CHECK(r_index(3) == 13);
  const auto qt = q_poly_table(6);
  const auto rt = r_poly_table(6);
  CHECK(qt.size() == 7);
  CHECK(qt[6] == q_poly(6));
  CHECK(rt[4] == r_poly(4));
}

TEST_CASE("closed form k 3^n - 1") {
  for (std::uint64_t k = 1; k <= 5; ++k) {
    for (unsigned n = 0; n <= 3; ++n) {
      std::uint64_t idx = k;
      for (unsigned i = 0; i < n; ++i) idx *= 3;
      CHECK(closed_form_k3n(k, n) == s_poly(idx - 1));
    }
  }
}

TEST_CASE("generating functions of Q and R") {
  const auto rep = gf_check(12);
  CHECK(rep.passed());
  CHECK(rep.max_degree == 12);
}

TEST_CASE("truncated series product") {
  TruncatedSeries a(3), b(3);
  a[0] = MultiPoly::constant(1);
  a[1] = MultiPoly::variable(Var::w);
  b[0] = MultiPoly::constant(1);
  b[2] = MultiPoly::variable(Var::z);
  const auto c = a * b;
  CHECK(c[1] == MultiPoly::variable(Var::w));
  CHECK(c[2] == MultiPoly::variable(Var::z));
  CHECK(c[3] == MultiPoly::parse("wz"));
}
