#pragma once

// Test-side reference computations written without the library's
// polynomial types, so agreement is evidence rather than tautology.

#include <array>
#include <cstdint>
#include <map>
#include <vector>

#include <gmpxx.h>

#include "trident/polyring.hpp"

namespace oracle {

using Key = std::array<std::uint32_t, 4>;
using Dict = std::map<Key, mpz_class>;

inline Dict to_dict(const trident::MultiPoly& p) {
  Dict d;
  for (const auto& t : p.terms()) d[t.exps.e] = t.coeff;
  return d;
}

inline void prune(Dict& d) {
  for (auto it = d.begin(); it != d.end();) {
    it = it->second == 0 ? d.erase(it) : std::next(it);
  }
}

inline Dict mul(const Dict& a, const Dict& b) {
  Dict out;
  for (const auto& [ka, ca] : a) {
    for (const auto& [kb, cb] : b) {
      Key k;
      for (int i = 0; i < 4; ++i) k[i] = ka[i] + kb[i];
      out[k] += ca * cb;
    }
  }
  prune(out);
  return out;
}

inline Dict add(Dict a, const Dict& b) {
  for (const auto& [k, c] : b) a[k] += c;
  prune(a);
  return a;
}

// Coefficients of prod_{a = 3^k <= n} (1 + w q^a)(1 + x q^a)(1 + y q^a + z q^2a)
// through q^n, each a Dict in (w, x, y, z).
inline std::vector<Dict> generating_series(std::size_t n) {
  std::vector<Dict> series(n + 1);
  series[0][{0, 0, 0, 0}] = 1;
  for (std::size_t a = 1; a <= n; a *= 3) {
    const std::vector<std::pair<std::size_t, Key>> factors[3] = {
        {{0, {0, 0, 0, 0}}, {a, {1, 0, 0, 0}}},
        {{0, {0, 0, 0, 0}}, {a, {0, 1, 0, 0}}},
        {{0, {0, 0, 0, 0}}, {a, {0, 0, 1, 0}}, {2 * a, {0, 0, 0, 1}}},
    };
    for (const auto& f : factors) {
      std::vector<Dict> next(n + 1);
      for (std::size_t d = 0; d <= n; ++d) {
        for (const auto& [shift, mono] : f) {
          if (d + shift > n) continue;
          for (const auto& [k, c] : series[d]) {
            Key e;
            for (int i = 0; i < 4; ++i) e[i] = k[i] + mono[i];
            next[d + shift][e] += c;
          }
        }
      }
      series = std::move(next);
    }
  }
  return series;
}

// Partition counts through q^n from prod (1 + q^a)^2 (1 + q^a + q^2a).
inline std::vector<mpz_class> count_series(std::size_t n) {
  std::vector<mpz_class> s(n + 1, 0);
  s[0] = 1;
  for (std::size_t a = 1; a <= n; a *= 3) {
    for (const std::vector<std::size_t>& shifts :
         {std::vector<std::size_t>{0, a}, std::vector<std::size_t>{0, a},
          std::vector<std::size_t>{0, a, 2 * a}}) {
      std::vector<mpz_class> next(n + 1, 0);
      for (std::size_t d = 0; d <= n; ++d) {
        for (auto sh : shifts) {
          if (d + sh <= n) next[d + sh] += s[d];
        }
      }
      s = std::move(next);
    }
  }
  return s;
}

inline mpz_class binomial(unsigned n, unsigned k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

inline mpz_class pow_ui(unsigned long base, unsigned long e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, e);
  return r;
}

}  // namespace oracle
