#include "trident/identity_suite.hpp"

#include <algorithm>

#include "trident/errors.hpp"
#include "trident/sequence_engine.hpp"
#include "trident/serialize.hpp"

namespace trident {

bool IdentityReport::passed() const {
  return std::all_of(statuses.begin(), statuses.end(),
                     [](const IdentityStatus& s) { return s.passed; });
}

PolySource PolySource::recurrence() {
  return {[](unsigned n) { return q_poly(n); }, [](unsigned n) { return r_poly(n); }};
}

UniSource UniSource::recurrence() {
  return {[](SpecId s, Family f, unsigned n) { return spec_family(s, f, n); }};
}

namespace {

template <class Poly>
void record(IdentityReport& rep, unsigned n, const std::string& label, const Poly& lhs,
            const Poly& rhs) {
  const bool ok = lhs == rhs;
  rep.statuses.push_back({n, ok, label});
  if (!ok && !rep.witness) {
    json w = {{"parameter", n}, {"identity", label}, {"lhs", to_json(lhs)}, {"rhs", to_json(rhs)}};
    rep.witness = w.dump();
  }
}

}  // namespace

IdentityReport verify_cross_sequence(unsigned n_max, const PolySource& src) {
  IdentityReport rep{"cross_sequence", 1, n_max, {}, std::nullopt};
  std::vector<MultiPoly> q, r;
  for (unsigned k = 0; k <= n_max + 1; ++k) {
    q.push_back(src.q(k));
    r.push_back(src.r(k));
  }
  for (unsigned n = 1; n <= n_max; ++n) {
    record(rep, n, "wxz*Q_n = R_{n+1} - (w+x+y)*R_n", wxz() * q[n], r[n + 1] - sum_wxy() * r[n]);
    record(rep, n, "R_n = Q_{n+1} - (wxy+wz+xz)*Q_n", r[n], q[n + 1] - mixed_cubic() * q[n]);
  }
  return rep;
}

IdentityReport verify_telescoping(unsigned n_max, const PolySource& src) {
  IdentityReport rep{"telescoping", 1, n_max, {}, std::nullopt};
  std::vector<MultiPoly> q, r, s_pow, m_pow;
  for (unsigned k = 0; k <= n_max; ++k) {
    q.push_back(src.q(k));
    r.push_back(src.r(k));
    s_pow.push_back(k == 0 ? MultiPoly::constant(1) : s_pow.back() * sum_wxy());
    m_pow.push_back(k == 0 ? MultiPoly::constant(1) : m_pow.back() * mixed_cubic());
  }
  for (unsigned big_n = 1; big_n <= n_max; ++big_n) {
    MultiPoly r_sum, q_sum;
    for (unsigned n = 1; n <= big_n; ++n) {
      r_sum += s_pow[big_n - n] * q[n - 1];
      q_sum += m_pow[big_n - n] * r[n - 1];
    }
    record(rep, big_n, "R_N telescoped", r[big_n], s_pow[big_n] + wxz() * r_sum);
    record(rep, big_n, "Q_N telescoped", q[big_n], q_sum);
  }
  return rep;
}

namespace {

bool divides(const UniPoly& d, const UniPoly& p) {
  try {
    (void)up_divide_exact(p, d);
    return true;
  } catch (const NotDivisible&) {
    return false;
  }
}

}  // namespace

IdentityReport verify_divisibility(SpecId spec, unsigned n_max, const UniSource& src) {
  if (spec != SpecId::Z1 && spec != SpecId::Z2 && spec != SpecId::Z3) {
    throw std::invalid_argument("divisibility is claimed only for z1, z2, z3");
  }
  IdentityReport rep{"divisibility_" + std::string(spec_name(spec)), 1, n_max, {}, std::nullopt};
  std::vector<UniPoly> q;
  for (unsigned k = 0; k <= n_max; ++k) q.push_back(src.family(spec, Family::Q, k));
  for (unsigned n = 1; n <= n_max; ++n) {
    for (unsigned m = 1; m < n; ++m) {
      if (n % m != 0) continue;
      const bool ok = divides(q[m], q[n]);
      const std::string note = "Q_" + std::to_string(m) + " | Q_" + std::to_string(n);
      rep.statuses.push_back({n, ok, note});
      if (!ok && !rep.witness) {
        rep.witness = json{{"parameter", n}, {"identity", note},
                           {"divisor", to_json(q[m])}, {"dividend", to_json(q[n])}}.dump();
      }
    }
  }
  if (spec == SpecId::Z1) {
    // Only a partial divisibility sequence on the R side.
    const UniPoly r6 = src.family(spec, Family::R, 6);
    const std::pair<unsigned, bool> expected[] = {{1, false}, {2, true}, {3, false}};
    for (auto [m, should] : expected) {
      const UniPoly rm = src.family(spec, Family::R, m);
      const bool ok = divides(rm, r6) == should;
      const std::string note = std::string("R_") + std::to_string(m) + (should ? " | " : " does not divide ") + "R_6";
      rep.statuses.push_back({6, ok, note});
      if (!ok && !rep.witness) {
        rep.witness = json{{"parameter", 6}, {"identity", note},
                           {"divisor", to_json(rm)}, {"dividend", to_json(r6)}}.dump();
      }
    }
  }
  return rep;
}

IdentityReport verify_sum_difference(unsigned n_max, const UniSource& src) {
  IdentityReport rep{"z1_sum_difference", 0, n_max, {}, std::nullopt};
  const UniPoly zp1{1, 1};
  const UniPoly zp3{3, 1};
  for (unsigned n = 0; n <= n_max; ++n) {
    const UniPoly q = src.family(SpecId::Z1, Family::Q, n);
    const UniPoly r = src.family(SpecId::Z1, Family::R, n);
    const UniPoly diff = zp1.pow(n);
    const UniPoly sum = zp3.pow(n);
    record(rep, n, "R-Q = (z+1)^n", r - q, diff);
    record(rep, n, "R^2-Q^2 = ((z+1)(z+3))^n", r * r - q * q, (zp1 * zp3).pow(n));
    record(rep, n, "R+Q = (z+3)^n", r + q, sum);
    record(rep, n, "(R^2-Q^2) = (R-Q)(R+Q)", r * r - q * q, (r - q) * (r + q));
  }
  return rep;
}

}  // namespace trident
