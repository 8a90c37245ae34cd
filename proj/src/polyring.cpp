#include "trident/polyring.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "trident/errors.hpp"

namespace trident {

namespace {

constexpr std::uint32_t kMaxPackedExponent = 0xFFFF;

std::uint64_t pack(const Exponents& x) {
  for (auto v : x.e) {
    if (v > kMaxPackedExponent) {
      throw std::overflow_error("monomial exponent exceeds 65535");
    }
  }
  return (std::uint64_t{x.e[0]} << 48) | (std::uint64_t{x.e[1]} << 32) |
         (std::uint64_t{x.e[2]} << 16) | std::uint64_t{x.e[3]};
}

Exponents unpack(std::uint64_t k) {
  return Exponents{{static_cast<std::uint32_t>(k >> 48),
                    static_cast<std::uint32_t>((k >> 32) & 0xFFFF),
                    static_cast<std::uint32_t>((k >> 16) & 0xFFFF),
                    static_cast<std::uint32_t>(k & 0xFFFF)}};
}

std::vector<Monomial4> canonical_from_map(
    std::unordered_map<std::uint64_t, BigInt>& acc) {
  std::vector<Monomial4> out;
  out.reserve(acc.size());
  for (auto& [key, c] : acc) {
    if (c != 0) out.push_back(Monomial4{unpack(key), std::move(c)});
  }
  std::sort(out.begin(), out.end(),
            [](const Monomial4& a, const Monomial4& b) { return a.exps < b.exps; });
  return out;
}

// One parsed summand: coefficient and exponent per variable letter.
struct RawTerm {
  BigInt coeff;
  std::map<char, std::uint32_t> powers;
};

std::vector<RawTerm> parse_sum(std::string_view text) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch)) && ch != '*') s += ch;
  }
  if (s.empty()) throw std::invalid_argument("empty polynomial text");

  std::vector<RawTerm> out;
  std::size_t i = 0;
  auto read_int = [&](std::size_t& pos) {
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    return s.substr(start, pos - start);
  };
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    } else if (!out.empty()) {
      throw std::invalid_argument("expected '+' or '-' in polynomial text");
    }
    RawTerm t;
    std::string digits = read_int(i);
    t.coeff = digits.empty() ? BigInt(1) : BigInt(digits);
    bool any = !digits.empty();
    while (i < s.size() && std::islower(static_cast<unsigned char>(s[i]))) {
      char v = s[i++];
      std::uint32_t e = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        std::string ed = read_int(i);
        if (ed.empty()) throw std::invalid_argument("missing exponent after '^'");
        e = static_cast<std::uint32_t>(std::stoul(ed));
      }
      t.powers[v] += e;
      any = true;
    }
    if (!any) throw std::invalid_argument("malformed term in polynomial text");
    t.coeff *= sign;
    out.push_back(std::move(t));
  }
  return out;
}

void append_coeff(std::ostringstream& os, const BigInt& c, bool first,
                  bool has_vars) {
  BigInt mag = abs(c);
  if (c < 0) {
    os << "-";
  } else if (!first) {
    os << "+";
  }
  if (mag != 1 || !has_vars) os << mag.get_str();
}

}  // namespace

Exponents operator+(const Exponents& a, const Exponents& b) {
  Exponents r;
  for (int i = 0; i < 4; ++i) r.e[i] = a.e[i] + b.e[i];
  return r;
}

// --- MultiPoly ---------------------------------------------------------------

MultiPoly MultiPoly::constant(const BigInt& c) {
  return monomial(Exponents{}, c);
}

MultiPoly MultiPoly::variable(Var v) {
  Exponents e;
  e.e[static_cast<int>(v)] = 1;
  return monomial(e, 1);
}

MultiPoly MultiPoly::monomial(const Exponents& exps, const BigInt& c) {
  if (c == 0) return MultiPoly{};
  pack(exps);
  return MultiPoly(std::vector<Monomial4>{Monomial4{exps, c}});
}

MultiPoly MultiPoly::from_terms(std::vector<Monomial4> terms) {
  std::unordered_map<std::uint64_t, BigInt> acc;
  for (auto& t : terms) acc[pack(t.exps)] += t.coeff;
  return MultiPoly(canonical_from_map(acc));
}

MultiPoly MultiPoly::parse(std::string_view text) {
  std::vector<Monomial4> terms;
  for (auto& raw : parse_sum(text)) {
    Exponents e;
    for (auto [v, k] : raw.powers) {
      auto it = std::find(kVarNames.begin(), kVarNames.end(), v);
      if (it == kVarNames.end()) {
        throw std::invalid_argument(std::string("unknown variable '") + v + "'");
      }
      e.e[it - kVarNames.begin()] += k;
    }
    terms.push_back(Monomial4{e, raw.coeff});
  }
  return from_terms(std::move(terms));
}

BigInt MultiPoly::coeff(const Exponents& exps) const {
  auto it = std::lower_bound(
      terms_.begin(), terms_.end(), exps,
      [](const Monomial4& t, const Exponents& e) { return t.exps < e; });
  if (it != terms_.end() && it->exps == exps) return it->coeff;
  return 0;
}

std::uint64_t MultiPoly::total_degree() const {
  return terms_.empty() ? 0 : terms_.back().exps.total();
}

BigInt MultiPoly::eval(const std::array<BigInt, 4>& point) const {
  BigInt sum = 0;
  for (const auto& t : terms_) {
    BigInt term = t.coeff;
    for (int v = 0; v < 4; ++v) {
      BigInt pw;
      mpz_pow_ui(pw.get_mpz_t(), point[v].get_mpz_t(), t.exps.e[v]);
      term *= pw;
    }
    sum += term;
  }
  return sum;
}

double MultiPoly::eval(const std::array<double, 4>& point) const {
  double sum = 0.0;
  for (const auto& t : terms_) {
    double term = t.coeff.get_d();
    for (int v = 0; v < 4; ++v) term *= std::pow(point[v], t.exps.e[v]);
    sum += term;
  }
  return sum;
}

MultiPoly MultiPoly::pow(unsigned k) const {
  MultiPoly result = constant(1);
  MultiPoly base = *this;
  while (k > 0) {
    if (k & 1U) result = result * base;
    k >>= 1U;
    if (k > 0) base = base * base;
  }
  return result;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  std::vector<Monomial4> merged;
  merged.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  while (a != terms_.end() || b != o.terms_.end()) {
    if (b == o.terms_.end() || (a != terms_.end() && a->exps < b->exps)) {
      merged.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->exps < a->exps) {
      merged.push_back(*b++);
    } else {
      BigInt c = a->coeff + b->coeff;
      if (c != 0) merged.push_back(Monomial4{a->exps, std::move(c)});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) { return *this += -o; }

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) {
  *this = *this * o;
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  if (a.is_zero() || b.is_zero()) return MultiPoly{};
  std::unordered_map<std::uint64_t, BigInt> acc;
  acc.reserve(a.size() * b.size());
  BigInt prod;
  for (const auto& ta : a.terms_) {
    for (const auto& tb : b.terms_) {
      mpz_mul(prod.get_mpz_t(), ta.coeff.get_mpz_t(), tb.coeff.get_mpz_t());
      acc[pack(ta.exps + tb.exps)] += prod;
    }
  }
  return MultiPoly(canonical_from_map(acc));
}

MultiPoly operator*(const BigInt& c, const MultiPoly& p) {
  if (c == 0) return MultiPoly{};
  MultiPoly r = p;
  for (auto& t : r.terms_) t.coeff *= c;
  return r;
}

MultiPoly poly_mul(const MultiPoly& a, const MultiPoly& b) { return a * b; }

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<const Monomial4*> order;
  for (const auto& t : terms_) order.push_back(&t);
  std::sort(order.begin(), order.end(), [](const Monomial4* a, const Monomial4* b) {
    return a->exps.e > b->exps.e;
  });
  std::ostringstream os;
  bool first = true;
  for (const auto* t : order) {
    bool has_vars = t->exps.total() > 0;
    append_coeff(os, t->coeff, first, has_vars);
    for (int v = 0; v < 4; ++v) {
      if (t->exps.e[v] == 0) continue;
      os << kVarNames[v];
      if (t->exps.e[v] > 1) os << '^' << t->exps.e[v];
    }
    first = false;
  }
  return os.str();
}

// --- UniPoly -----------------------------------------------------------------

UniPoly::UniPoly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }

UniPoly::UniPoly(std::initializer_list<long> coeffs) {
  for (long c : coeffs) c_.emplace_back(c);
  trim();
}

void UniPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

UniPoly UniPoly::constant(const BigInt& c) { return UniPoly(std::vector<BigInt>{c}); }

UniPoly UniPoly::monomial(std::size_t degree, const BigInt& c) {
  std::vector<BigInt> v(degree + 1);
  v[degree] = c;
  return UniPoly(std::move(v));
}

UniPoly UniPoly::parse(std::string_view text) {
  std::vector<BigInt> coeffs;
  char var = 0;
  for (auto& raw : parse_sum(text)) {
    std::uint32_t deg = 0;
    for (auto [v, k] : raw.powers) {
      if (var != 0 && v != var) {
        throw std::invalid_argument("univariate text uses two variables");
      }
      var = v;
      deg += k;
    }
    if (coeffs.size() <= deg) coeffs.resize(deg + 1);
    coeffs[deg] += raw.coeff;
  }
  return UniPoly(std::move(coeffs));
}

BigInt UniPoly::coeff(std::size_t k) const { return k < c_.size() ? c_[k] : BigInt(0); }

const BigInt& UniPoly::leading() const {
  if (c_.empty()) throw std::domain_error("zero polynomial has no leading coefficient");
  return c_.back();
}

int UniPoly::lowest_degree() const {
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (c_[k] != 0) return static_cast<int>(k);
  }
  return -1;
}

BigInt UniPoly::eval(const BigInt& t) const {
  BigInt acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

UniPoly UniPoly::derivative() const {
  if (c_.size() <= 1) return UniPoly{};
  std::vector<BigInt> d(c_.size() - 1);
  for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * static_cast<unsigned long>(k);
  return UniPoly(std::move(d));
}

UniPoly UniPoly::compose(const UniPoly& inner) const {
  UniPoly acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * inner + constant(*it);
  return acc;
}

UniPoly UniPoly::pow(unsigned k) const {
  UniPoly result = constant(1);
  UniPoly base = *this;
  while (k > 0) {
    if (k & 1U) result = result * base;
    k >>= 1U;
    if (k > 0) base = base * base;
  }
  return result;
}

UniPoly UniPoly::shift_down(std::size_t k) const {
  if (k == 0 || c_.empty()) return *this;
  for (std::size_t i = 0; i < std::min(k, c_.size()); ++i) {
    if (c_[i] != 0) throw NotDivisible(static_cast<int>(i));
  }
  if (k >= c_.size()) return UniPoly{};
  return UniPoly(std::vector<BigInt>(c_.begin() + static_cast<std::ptrdiff_t>(k), c_.end()));
}

UniPoly UniPoly::operator-() const {
  UniPoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
  trim();
  return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return UniPoly{};
  std::vector<BigInt> r(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      mpz_addmul(r[i + j].get_mpz_t(), a.c_[i].get_mpz_t(), b.c_[j].get_mpz_t());
    }
  }
  return UniPoly(std::move(r));
}

UniPoly operator*(const BigInt& c, const UniPoly& p) {
  std::vector<BigInt> r = p.c_;
  for (auto& x : r) x *= c;
  return UniPoly(std::move(r));
}

std::string UniPoly::to_string(char var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = c_.size(); k-- > 0;) {
    if (c_[k] == 0) continue;
    append_coeff(os, c_[k], first, k > 0);
    if (k > 0) os << var;
    if (k > 1) os << '^' << k;
    first = false;
  }
  return os.str();
}

bool is_palindromic(const UniPoly& p) {
  const auto& c = p.coeffs();
  return std::equal(c.begin(), c.end(), c.rbegin());
}

std::pair<std::vector<BigRational>, std::vector<BigRational>> up_divmod_rational(
    const UniPoly& num, const UniPoly& den) {
  if (den.is_zero()) throw DivisionByZeroPolynomial();
  std::vector<BigRational> rem(num.coeffs().begin(), num.coeffs().end());
  const int dd = den.degree();
  const BigRational lead(den.leading());
  std::vector<BigRational> quot;
  if (num.degree() >= dd) quot.resize(static_cast<std::size_t>(num.degree() - dd + 1));
  for (int k = num.degree(); k >= dd; --k) {
    BigRational q = rem[k] / lead;
    q.canonicalize();
    quot[k - dd] = q;
    if (q == 0) continue;
    for (int j = 0; j <= dd; ++j) rem[k - dd + j] -= q * BigRational(den.coeffs()[j]);
  }
  while (!rem.empty() && rem.back() == 0) rem.pop_back();
  return {std::move(quot), std::move(rem)};
}

UniPoly up_divide_exact(const UniPoly& num, const UniPoly& den) {
  auto [quot, rem] = up_divmod_rational(num, den);
  if (!rem.empty()) throw NotDivisible(static_cast<int>(rem.size()) - 1);
  std::vector<BigInt> q;
  q.reserve(quot.size());
  for (auto& c : quot) {
    if (c.get_den() != 1) throw NotDivisible(-1);
    q.push_back(c.get_num());
  }
  return UniPoly(std::move(q));
}

std::complex<double> up_eval_complex(const UniPoly& p, std::complex<double> z) {
  std::complex<double> acc = 0.0;
  const auto& c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + it->get_d();
  return acc;
}

BigInt content(const UniPoly& p) {
  BigInt g = 0;
  for (const auto& c : p.coeffs()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

UniPoly primitive_part(const UniPoly& p) {
  if (p.is_zero()) return p;
  BigInt g = content(p);
  if (p.leading() < 0) g = -g;
  std::vector<BigInt> r = p.coeffs();
  for (auto& c : r) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  return UniPoly(std::move(r));
}

namespace {

UniPoly primitive_from_rational(const std::vector<BigRational>& r) {
  BigInt l = 1;
  for (const auto& c : r) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  std::vector<BigInt> out;
  out.reserve(r.size());
  for (const auto& c : r) {
    BigInt v = c.get_num() * (l / c.get_den());
    out.push_back(v);
  }
  return primitive_part(UniPoly(std::move(out)));
}

}  // namespace

UniPoly up_gcd(const UniPoly& a, const UniPoly& b) {
  UniPoly u = primitive_part(a);
  UniPoly v = primitive_part(b);
  if (u.degree() < v.degree()) std::swap(u, v);
  while (!v.is_zero()) {
    auto rem = up_divmod_rational(u, v).second;
    u = std::move(v);
    v = primitive_from_rational(rem);
  }
  return u;
}

std::vector<std::pair<UniPoly, int>> squarefree_decomposition(const UniPoly& p) {
  std::vector<std::pair<UniPoly, int>> out;
  if (p.degree() < 1) return out;
  // Yun's algorithm; every division is by a primitive divisor of an integral
  // dividend, so the quotients stay integral.
  UniPoly f = primitive_part(p);
  UniPoly fp = f.derivative();
  UniPoly a = up_gcd(f, fp);
  UniPoly b = up_divide_exact(f, a);
  UniPoly c = up_divide_exact(fp, a);
  UniPoly d = c - b.derivative();
  for (int i = 1; b.degree() >= 1; ++i) {
    UniPoly g = d.is_zero() ? b : up_gcd(b, d);
    if (g.degree() >= 1) out.emplace_back(g, i);
    b = up_divide_exact(b, g);
    c = up_divide_exact(d, g);
    d = c - b.derivative();
  }
  return out;
}

UniPoly poly_substitute(const MultiPoly& p, const SpecMap& s) {
  std::array<std::vector<UniPoly>, 4> powers;
  for (int v = 0; v < 4; ++v) powers[v].push_back(UniPoly::constant(1));
  auto power_of = [&](int v, std::uint32_t k) -> const UniPoly& {
    auto& cache = powers[v];
    while (cache.size() <= k) cache.push_back(cache.back() * s.images[v]);
    return cache[k];
  };
  UniPoly acc;
  for (const auto& t : p.terms()) {
    UniPoly term = UniPoly::constant(t.coeff);
    for (int v = 0; v < 4; ++v) {
      if (t.exps.e[v] > 0) term = term * power_of(v, t.exps.e[v]);
    }
    acc += term;
  }
  return acc;
}

}  // namespace trident
