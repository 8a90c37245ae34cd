#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "trident/errors.hpp"
#include "trident/polyring.hpp"

using namespace trident;

namespace {

MultiPoly random_poly(std::mt19937_64& rng, int terms, int max_exp) {
  std::uniform_int_distribution<int> e(0, max_exp);
  std::uniform_int_distribution<int> c(-9, 9);
  std::vector<Monomial4> t;
  for (int i = 0; i < terms; ++i) {
    t.push_back({Exponents{{std::uint32_t(e(rng)), std::uint32_t(e(rng)), std::uint32_t(e(rng)),
                            std::uint32_t(e(rng))}},
                 BigInt(c(rng))});
  }
  return MultiPoly::from_terms(std::move(t));
}

UniPoly random_uni(std::mt19937_64& rng, int degree) {
  std::uniform_int_distribution<int> c(-20, 20);
  std::vector<BigInt> v;
  for (int i = 0; i <= degree; ++i) v.emplace_back(c(rng));
  return UniPoly(std::move(v));
}

bool canonical(const MultiPoly& p) {
  for (std::size_t i = 0; i < p.terms().size(); ++i) {
    if (p.terms()[i].coeff == 0) return false;
    if (i > 0 && !(p.terms()[i - 1].exps < p.terms()[i].exps)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("multipoly parse and print") {
  const auto p = MultiPoly::parse("w^2xy+2wxz-3z^2+7");
  CHECK(p.size() == 4);
  CHECK(p.coeff(Exponents{{2, 1, 1, 0}}) == 1);
  CHECK(p.coeff(Exponents{{1, 1, 0, 1}}) == 2);
  CHECK(p.coeff(Exponents{{0, 0, 0, 2}}) == -3);
  CHECK(p.coeff(Exponents{{0, 0, 0, 0}}) == 7);
  CHECK(MultiPoly::parse(p.to_string()) == p);
  CHECK(MultiPoly().to_string() == "0");
  CHECK(MultiPoly::parse("-w").to_string() == "-w");
  CHECK(p.total_degree() == 4);
}

TEST_CASE("multipoly product matches naive convolution") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const auto a = random_poly(rng, 8, 4);
    const auto b = random_poly(rng, 8, 4);
    const auto prod = a * b;
    CHECK(canonical(prod));
    CHECK(oracle::to_dict(prod) == oracle::mul(oracle::to_dict(a), oracle::to_dict(b)));
    CHECK(oracle::to_dict(a + b) == oracle::add(oracle::to_dict(a), oracle::to_dict(b)));
    CHECK(poly_mul(a, b) == prod);
  }
}

TEST_CASE("multipoly ring axioms") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const auto a = random_poly(rng, 5, 3);
    const auto b = random_poly(rng, 5, 3);
    const auto c = random_poly(rng, 5, 3);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == MultiPoly());
    CHECK(a * MultiPoly::constant(1) == a);
    CHECK((a * MultiPoly()).is_zero());
    CHECK(a.pow(3) == a * a * a);
  }
}

TEST_CASE("multipoly evaluation is a homomorphism") {
  std::mt19937_64 rng(3);
  const std::array<BigInt, 4> pt{2, -3, 5, 7};
  for (int trial = 0; trial < 30; ++trial) {
    const auto a = random_poly(rng, 6, 3);
    const auto b = random_poly(rng, 6, 3);
    CHECK((a * b).eval(pt) == a.eval(pt) * b.eval(pt));
    CHECK((a + b).eval(pt) == a.eval(pt) + b.eval(pt));
    const std::array<double, 4> dp{0.5, 1.25, -0.75, 2.0};
    CHECK((a * b).eval(dp) == doctest::Approx(a.eval(dp) * b.eval(dp)).epsilon(1e-12));
  }
}

TEST_CASE("unipoly arithmetic and division") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const auto a = random_uni(rng, 6);
    auto b = random_uni(rng, 3);
    if (b.is_zero()) continue;
    const auto prod = a * b;
    CHECK(up_divide_exact(prod, b) == a);
    const auto [q, r] = up_divmod_rational(a, b);
    // a == b q + r over the rationals
    for (int k = 0; k <= a.degree(); ++k) {
      BigRational acc = k < static_cast<int>(r.size()) ? r[k] : BigRational(0);
      for (int i = 0; i <= b.degree(); ++i) {
        const int j = k - i;
        if (j >= 0 && j < static_cast<int>(q.size())) acc += BigRational(b.coeff(i)) * q[j];
      }
      CHECK(acc == BigRational(a.coeff(k)));
    }
    CHECK(static_cast<int>(r.size()) - 1 < b.degree());
  }
  CHECK_THROWS_AS((up_divide_exact(UniPoly{1, 0, 1}, UniPoly{1, 1})), NotDivisible);
  CHECK_THROWS_AS((up_divide_exact(UniPoly{1, 1}, UniPoly{})), DivisionByZeroPolynomial);
  try {
    up_divide_exact(UniPoly{1, 2}, UniPoly{2});
    FAIL("expected NotDivisible");
  } catch (const NotDivisible& e) {
    CHECK(e.remainder_degree() == -1);
  }
}

TEST_CASE("unipoly helpers") {
  const UniPoly p = UniPoly::parse("3z^2+12z+13");
  CHECK(p == UniPoly{13, 12, 3});
  CHECK(p.to_string() == "3z^2+12z+13");
  CHECK(p.eval(2) == 49);
  CHECK(p.derivative() == UniPoly{12, 6});
  CHECK(p.compose(UniPoly{-2, 1}) == UniPoly{1, 0, 3});
  CHECK(UniPoly{0, 0, 5, 1}.shift_down(2) == UniPoly{5, 1});
  CHECK_THROWS_AS((UniPoly{1, 0, 5}.shift_down(1)), NotDivisible);
  CHECK(UniPoly{0, 0, 5, 1}.lowest_degree() == 2);
  CHECK(UniPoly{}.degree() == -1);
  CHECK(is_palindromic(UniPoly{1, 3, 3, 1}));
  CHECK_FALSE(is_palindromic(UniPoly{1, 3, 2}));
  CHECK(content(UniPoly{6, 4, -2}) == 2);
  CHECK(primitive_part(UniPoly{-6, -4, -2}) == UniPoly{3, 2, 1});
  CHECK(up_eval_complex(UniPoly{1, 0, 1}, {0.0, 1.0}) == std::complex<double>(0.0, 0.0));
}

TEST_CASE("gcd and square-free decomposition") {
  const UniPoly a{1, 1};   // z+1
  const UniPoly b{-2, 1};  // z-2
  const UniPoly c{1, 0, 1};
  CHECK(up_gcd(a * a * b, a * c) == a);
  CHECK(up_gcd(b * c, a) == UniPoly{1});
  const UniPoly p = BigInt(3) * a.pow(3) * b * c.pow(2);
  const auto parts = squarefree_decomposition(p);
  UniPoly rebuilt{1};
  for (const auto& [f, m] : parts) rebuilt = rebuilt * f.pow(m);
  CHECK(primitive_part(rebuilt) == primitive_part(p));
  bool saw_triple = false;
  for (const auto& [f, m] : parts) {
    if (m == 3) saw_triple = f == a;
  }
  CHECK(saw_triple);
}

TEST_CASE("substitution is a ring homomorphism") {
  std::mt19937_64 rng(13);
  const SpecMap s{{UniPoly{0, 1}, UniPoly{1}, UniPoly{2, 0, 1}, UniPoly{0, 0, 1}}};
  for (int trial = 0; trial < 30; ++trial) {
    const auto a = random_poly(rng, 5, 3);
    const auto b = random_poly(rng, 5, 3);
    CHECK(poly_substitute(a * b, s) == poly_substitute(a, s) * poly_substitute(b, s));
    CHECK(poly_substitute(a + b, s) == poly_substitute(a, s) + poly_substitute(b, s));
    const BigInt t = 3;
    CHECK(poly_substitute(a, s).eval(t) ==
          a.eval({s.images[0].eval(t), s.images[1].eval(t), s.images[2].eval(t),
                  s.images[3].eval(t)}));
  }
}
