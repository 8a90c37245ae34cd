#include "trident/sequence_engine.hpp"

#include <stdexcept>
#include <unordered_map>

#include "trident/errors.hpp"

namespace trident {

namespace {

const MultiPoly& var(Var v) {
  static const std::array<MultiPoly, 4> vars = {
      MultiPoly::variable(Var::w), MultiPoly::variable(Var::x),
      MultiPoly::variable(Var::y), MultiPoly::variable(Var::z)};
  return vars[static_cast<int>(v)];
}

MultiPoly build_w1() {
  const auto &w = var(Var::w), &x = var(Var::x), &y = var(Var::y), &z = var(Var::z);
  return w * x * y + w * z + x * z + w + x + y;
}

MultiPoly build_w2() {
  const auto &w = var(Var::w), &x = var(Var::x), &y = var(Var::y), &z = var(Var::z);
  return w * w * x * y + w * w * z + w * x * x * y + w * x * y * y + w * x * z +
         w * y * z + x * x * z + x * y * z;
}

}  // namespace

TruncatedSeries::TruncatedSeries(std::size_t degree) : coeffs_(degree + 1) {}

void TruncatedSeries::multiply_sparse(
    const std::vector<std::pair<std::size_t, MultiPoly>>& factor) {
  std::vector<MultiPoly> out(coeffs_.size());
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    for (const auto& [shift, c] : factor) {
      if (shift > k || coeffs_[k - shift].is_zero()) continue;
      out[k] += c * coeffs_[k - shift];
    }
  }
  coeffs_ = std::move(out);
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  const std::size_t deg = std::min(a.degree(), b.degree());
  TruncatedSeries out(deg);
  for (std::size_t i = 0; i <= deg; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; i + j <= deg; ++j) {
      if (!b[j].is_zero()) out[i + j] += a[i] * b[j];
    }
  }
  return out;
}

const WPair& WPair::get() {
  static const WPair pair = [] {
    WPair p{build_w1(), build_w2()};
    if (p.w1 != MultiPoly::parse("wxy+wz+xz+w+x+y") ||
        p.w2 != MultiPoly::parse("w^2xy+w^2z+wx^2y+wxy^2+wxz+wyz+x^2z+xyz")) {
      throw std::logic_error("W1/W2 construction disagrees with literal term lists");
    }
    return p;
  }();
  return pair;
}

const MultiPoly& sum_wxy() {
  static const MultiPoly p = var(Var::w) + var(Var::x) + var(Var::y);
  return p;
}

const MultiPoly& s2_poly() {
  static const MultiPoly p = var(Var::w) * var(Var::x) + var(Var::w) * var(Var::y) +
                             var(Var::x) * var(Var::y) + var(Var::z);
  return p;
}

const MultiPoly& mixed_cubic() {
  static const MultiPoly p = var(Var::w) * var(Var::x) * var(Var::y) +
                             var(Var::w) * var(Var::z) + var(Var::x) * var(Var::z);
  return p;
}

const MultiPoly& wxz() {
  static const MultiPoly p = var(Var::w) * var(Var::x) * var(Var::z);
  return p;
}

namespace {

using Memo = std::unordered_map<std::uint64_t, MultiPoly>;

MultiPoly s_rec(std::uint64_t n, Memo& memo) {
  if (n == 0) return MultiPoly::constant(1);
  if (n == 1) return sum_wxy();
  if (n == 2) return s2_poly();
  if (auto it = memo.find(n); it != memo.end()) return it->second;
  const std::uint64_t m = n / 3;
  MultiPoly result;
  switch (n % 3) {
    case 0:
      result = s_rec(m, memo) + mixed_cubic() * s_rec(m - 1, memo);
      break;
    case 1:
      result = sum_wxy() * s_rec(m, memo) + wxz() * s_rec(m - 1, memo);
      break;
    default:
      result = s2_poly() * s_rec(m, memo);
      break;
  }
  memo.emplace(n, result);
  return result;
}

}  // namespace

MultiPoly s_poly(std::uint64_t n) {
  Memo memo;
  return s_rec(n, memo);
}

TruncatedSeries generating_product(std::uint64_t n) {
  TruncatedSeries series(n);
  series[0] = MultiPoly::constant(1);
  const MultiPoly one = MultiPoly::constant(1);
  for (std::uint64_t power = 1; power <= n; power *= 3) {
    series.multiply_sparse({{0, one}, {power, var(Var::w)}});
    series.multiply_sparse({{0, one}, {power, var(Var::x)}});
    series.multiply_sparse({{0, one}, {power, var(Var::y)}, {2 * power, var(Var::z)}});
  }
  return series;
}

MultiPoly s_poly_product(std::uint64_t n, std::uint64_t cap) {
  if (n > cap) throw CapExceeded("product expansion degree", n, cap);
  return generating_product(n)[n];
}

MultiPoly closed_form_k3n(std::uint64_t k, unsigned n) {
  if (k == 0) throw std::invalid_argument("closed_form_k3n requires k >= 1");
  return s_poly(k - 1) * s2_poly().pow(n);
}

namespace {

std::vector<MultiPoly> three_term(unsigned n, MultiPoly first, MultiPoly second) {
  const auto& w = WPair::get();
  std::vector<MultiPoly> seq{std::move(first)};
  if (n >= 1) seq.push_back(std::move(second));
  for (unsigned k = 2; k <= n; ++k) {
    seq.push_back(w.w1 * seq[k - 1] - w.w2 * seq[k - 2]);
  }
  return seq;
}

}  // namespace

std::vector<MultiPoly> q_poly_table(unsigned n) {
  return three_term(n, MultiPoly{}, MultiPoly::constant(1));
}

std::vector<MultiPoly> r_poly_table(unsigned n) {
  return three_term(n, MultiPoly::constant(1), sum_wxy());
}

MultiPoly q_poly(unsigned n) { return q_poly_table(n).back(); }
MultiPoly r_poly(unsigned n) { return r_poly_table(n).back(); }

std::uint64_t q_index(unsigned n) {
  if (n == 0) throw std::invalid_argument("Q_0 has no partition index");
  if (n > 40) throw std::overflow_error("index (3^n-3)/2 exceeds 64 bits");
  std::uint64_t p = 1;
  for (unsigned i = 0; i < n; ++i) p *= 3;
  return (p - 3) / 2;
}

std::uint64_t r_index(unsigned n) {
  if (n > 40) throw std::overflow_error("index (3^n-1)/2 exceeds 64 bits");
  std::uint64_t p = 1;
  for (unsigned i = 0; i < n; ++i) p *= 3;
  return (p - 1) / 2;
}

MultiPoly q_poly_by_definition(unsigned n) {
  if (n == 0) return MultiPoly{};
  return s_poly(q_index(n));
}

MultiPoly r_poly_by_definition(unsigned n) { return s_poly(r_index(n)); }

ScalarQR scalar_qr(unsigned n) {
  if (n == 0) return {0, 1};
  BigInt half;  // 2^{n-1}
  BigInt full;  // 2^n
  mpz_ui_pow_ui(half.get_mpz_t(), 2, n - 1);
  mpz_ui_pow_ui(full.get_mpz_t(), 2, n);
  return {half * (full - 1), half * (full + 1)};
}

GfReport gf_check(std::size_t max_degree) {
  if (max_degree < 1) throw std::invalid_argument("gf_check requires N >= 1");
  const auto& w = WPair::get();
  const auto qs = q_poly_table(static_cast<unsigned>(max_degree));
  const auto rs = r_poly_table(static_cast<unsigned>(max_degree));

  TruncatedSeries denom(max_degree);
  denom[0] = MultiPoly::constant(1);
  denom[1] = -w.w1;
  if (max_degree >= 2) denom[2] = w.w2;

  TruncatedSeries qser(max_degree), rser(max_degree);
  for (std::size_t k = 0; k <= max_degree; ++k) {
    qser[k] = qs[k];
    rser[k] = rs[k];
  }
  TruncatedSeries qnum(max_degree), rnum(max_degree);
  qnum[1] = MultiPoly::constant(1);
  rnum[0] = MultiPoly::constant(1);
  rnum[1] = -mixed_cubic();

  GfReport report;
  report.max_degree = max_degree;
  const auto qprod = qser * denom;
  const auto rprod = rser * denom;
  for (std::size_t k = 0; k <= max_degree; ++k) {
    if (qprod[k] != qnum[k]) {
      report.mismatches.push_back({'Q', k, qnum[k].to_string(), qprod[k].to_string()});
    }
    if (rprod[k] != rnum[k]) {
      report.mismatches.push_back({'R', k, rnum[k].to_string(), rprod[k].to_string()});
    }
  }
  return report;
}

}  // namespace trident
