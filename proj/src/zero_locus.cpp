#include "trident/zero_locus.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>
#include <stdexcept>

#include "trident/errors.hpp"

namespace trident {

namespace {

using LComplex = std::complex<long double>;

long double to_long_double(const BigInt& c) {
  const double hi = c.get_d();
  const BigInt rest = c - BigInt(hi);
  return static_cast<long double>(hi) + static_cast<long double>(rest.get_d());
}

std::vector<long double> to_long_double(const UniPoly& p) {
  std::vector<long double> out;
  out.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) out.push_back(to_long_double(c));
  return out;
}

LComplex horner(const std::vector<long double>& c, LComplex z) {
  LComplex acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
  return acc;
}

// Multiprecision complex arithmetic for residuals and root polishing.
constexpr mp_bitcnt_t kPolishBits = 320;

struct MpComplex {
  mpf_class re{0, kPolishBits};
  mpf_class im{0, kPolishBits};
};

MpComplex mp_from(Complex z) {
  MpComplex out;
  out.re = z.real();
  out.im = z.imag();
  return out;
}

double mp_abs(const MpComplex& z) {
  mpf_class m(0, kPolishBits);
  m = sqrt(z.re * z.re + z.im * z.im);
  return m.get_d();
}

// p(z) and p'(z) by Horner with exact integer coefficients.
std::pair<MpComplex, MpComplex> mp_eval(const UniPoly& p, const MpComplex& z) {
  MpComplex v, dv;
  mpf_class t(0, kPolishBits), c(0, kPolishBits);
  const auto& coeffs = p.coeffs();
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    t = dv.re * z.re - dv.im * z.im + v.re;
    dv.im = dv.re * z.im + dv.im * z.re + v.im;
    dv.re = t;
    c = *it;
    t = v.re * z.re - v.im * z.im + c;
    v.im = v.re * z.im + v.im * z.re;
    v.re = t;
  }
  return {v, dv};
}

// sum |c_k| |z|^k, the scale against which |p(z)| is a backward error.
long double evaluation_scale(const std::vector<long double>& c, long double az) {
  long double s = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) s = s * az + std::abs(*it);
  return s;
}

void fill_metrics(ZeroReport& rep) {
  const auto c = to_long_double(rep.polynomial);
  rep.residuals.clear();
  rep.relative_residuals.clear();
  rep.locus_metrics.clear();
  for (const auto& z : rep.points) {
    // Points at the stripped origin are exact zeros of the full polynomial.
    const bool stripped_origin = rep.origin_multiplicity > 0 && z == Complex(0.0, 0.0);
    const double r = stripped_origin ? 0.0 : mp_abs(mp_eval(rep.polynomial, mp_from(z)).first);
    const long double scale = evaluation_scale(c, std::abs(LComplex(z.real(), z.imag())));
    rep.residuals.push_back(r);
    rep.relative_residuals.push_back(scale > 0 ? static_cast<double>(r / scale) : 0.0);
    rep.locus_metrics.push_back(locus_distance(rep.locus, z));
  }
}

// Newton steps in multiprecision on a square-free factor; a step that would
// move a root further than a third of the way to its nearest neighbour is
// refused.
void polish(const UniPoly& p, std::vector<LComplex>& roots) {
  const mpf_class stop(std::ldexp(1.0, -200), kPolishBits);
  for (std::size_t i = 0; i < roots.size(); ++i) {
    double gap = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < roots.size(); ++j) {
      if (j != i) gap = std::min(gap, static_cast<double>(std::abs(roots[i] - roots[j])));
    }
    MpComplex z;
    z.re = static_cast<double>(roots[i].real());
    z.im = static_cast<double>(roots[i].imag());
    mpf_class lo(static_cast<double>(roots[i].real() - static_cast<double>(roots[i].real())), kPolishBits);
    mpf_class li(static_cast<double>(roots[i].imag() - static_cast<double>(roots[i].imag())), kPolishBits);
    z.re += lo;
    z.im += li;
    const MpComplex start = z;
    bool ok = true;
    mpf_class den(0, kPolishBits), sr(0, kPolishBits), si(0, kPolishBits);
    for (int it = 0; it < 12; ++it) {
      const auto [v, dv] = mp_eval(p, z);
      den = dv.re * dv.re + dv.im * dv.im;
      if (den == 0) {
        ok = false;
        break;
      }
      sr = (v.re * dv.re + v.im * dv.im) / den;
      si = (v.im * dv.re - v.re * dv.im) / den;
      z.re -= sr;
      z.im -= si;
      if (sqrt(sr * sr + si * si) <= stop * (1 + sqrt(z.re * z.re + z.im * z.im))) break;
    }
    MpComplex moved;
    moved.re = z.re - start.re;
    moved.im = z.im - start.im;
    if (ok && mp_abs(moved) < gap / 3) {
      roots[i] = LComplex(static_cast<long double>(z.re.get_d()) +
                              static_cast<long double>(mpf_class(z.re - z.re.get_d()).get_d()),
                          static_cast<long double>(z.im.get_d()) +
                              static_cast<long double>(mpf_class(z.im - z.im.get_d()).get_d()));
    }
  }
}

}  // namespace

std::string_view explicit_family_name(ExplicitFamily f) {
  switch (f) {
    case ExplicitFamily::Z1Q: return "z1q";
    case ExplicitFamily::Z1R: return "z1r";
    case ExplicitFamily::Z2: return "z2";
    case ExplicitFamily::Z3: return "z3";
  }
  return "?";
}

LocusKind locus_for(SpecId s) {
  switch (s) {
    case SpecId::Z1: return LocusKind::VerticalLineMinus2;
    case SpecId::Z2: return LocusKind::UnitCircle;
    case SpecId::Z3: return LocusKind::Circle3_8Radius7_8;
    case SpecId::P3:
    case SpecId::P5:
    case SpecId::P6: return LocusKind::UnitCircleOrNegativeReal;
    default: return LocusKind::None;
  }
}

double locus_distance(LocusKind kind, Complex z) {
  switch (kind) {
    case LocusKind::None: return 0.0;
    case LocusKind::VerticalLineMinus2: return std::abs(z.real() + 2.0);
    case LocusKind::UnitCircle: return std::abs(std::abs(z) - 1.0);
    case LocusKind::Circle3_8Radius7_8: return std::abs(std::abs(z - 0.375) - 0.875);
    case LocusKind::UnitCircleOrNegativeReal: {
      const double circle = std::abs(std::abs(z) - 1.0);
      const double axis = z.real() < 0 ? std::abs(z.imag()) : std::numeric_limits<double>::infinity();
      return std::min(circle, axis);
    }
  }
  return 0.0;
}

std::string locus_json(LocusKind kind) {
  switch (kind) {
    case LocusKind::None: return R"({"type":"none"})";
    case LocusKind::VerticalLineMinus2: return R"({"type":"line","re":-2})";
    case LocusKind::UnitCircle:
      return R"({"type":"circle_segments","center":[0,0],"radius":1,"abs_im_greater_than":0.3333333333333333})";
    case LocusKind::Circle3_8Radius7_8:
      return R"({"type":"circle_segment","center":[0.375,0],"radius":0.875,"re_less_than":0.5})";
    case LocusKind::UnitCircleOrNegativeReal:
      return R"({"type":"circle_or_negative_axis","center":[0,0],"radius":1})";
  }
  return "{}";
}

std::vector<double> chebyshev_zeros(ChebKind kind, unsigned n) {
  if (n == 0) throw std::invalid_argument("chebyshev_zeros requires n >= 1");
  std::vector<double> v(n);
  for (unsigned k = 0; k < n; ++k) {
    const unsigned mirror = n - 1 - k;
    if (mirror < k) {
      v[k] = -v[mirror];
      continue;
    }
    const double angle = kind == ChebKind::SecondKind
                             ? std::numbers::pi * (k + 1) / (n + 1)
                             : std::numbers::pi * (2 * k + 1) / (2.0 * n);
    v[k] = mirror == k ? 0.0 : std::cos(angle);
  }
  return v;
}

ZeroReport zeros_explicit(ExplicitFamily fam, unsigned n) {
  if (n == 0) throw std::invalid_argument("zeros_explicit requires n >= 1");
  ZeroReport rep;
  rep.n = n;
  rep.family = fam == ExplicitFamily::Z1R ? "R" : "Q";
  auto check = [](double v) {
    if (!(std::abs(v) < 1.0)) throw DomainError("Chebyshev zero outside (-1, 1)");
  };

  switch (fam) {
    case ExplicitFamily::Z1Q:
    case ExplicitFamily::Z1R: {
      rep.spec = SpecId::Z1;
      const bool is_q = fam == ExplicitFamily::Z1Q;
      rep.polynomial = spec_family(SpecId::Z1, is_q ? Family::Q : Family::R, n);
      const auto vs = is_q ? (n >= 2 ? chebyshev_zeros(ChebKind::SecondKind, n - 1)
                                     : std::vector<double>{})
                           : chebyshev_zeros(ChebKind::FirstKind, n);
      for (double v : vs) {
        check(v);
        rep.points.emplace_back(-2.0, v / std::sqrt(1.0 - v * v));
      }
      break;
    }
    case ExplicitFamily::Z2: {
      rep.spec = SpecId::Z2;
      rep.origin_multiplicity = n - 1;
      rep.polynomial = reduced_q2(n);
      if (n >= 2) {
        const double k = 2.0 * std::numbers::sqrt2 / 3.0;
        for (double v : chebyshev_zeros(ChebKind::SecondKind, n - 1)) {
          check(v);
          const double im = std::sqrt(1.0 - 8.0 / 9.0 * v * v);
          rep.points.emplace_back(k * v, im);
          rep.points.emplace_back(k * v, -im);
        }
      }
      break;
    }
    case ExplicitFamily::Z3: {
      rep.spec = SpecId::Z3;
      rep.polynomial = spec_family(SpecId::Z3, Family::Q, n);
      if (n >= 2) {
        for (double v : chebyshev_zeros(ChebKind::SecondKind, n - 1)) {
          check(v);
          const double u = v * v;
          const double den = 8.0 - 6.0 * u;
          const double re = -(4.0 - 5.0 * u) / den;
          const double im = std::sqrt(std::max(0.0, 28.0 * u - 25.0 * u * u)) / den;
          rep.points.emplace_back(re, v > 0 ? im : (v < 0 ? -im : 0.0));
        }
      }
      break;
    }
  }
  rep.locus = locus_for(rep.spec);
  fill_metrics(rep);
  return rep;
}

namespace {

struct AberthResult {
  std::vector<LComplex> roots;
  int iterations = 0;
};

AberthResult aberth(const UniPoly& p, const RootFinderOptions& opts) {
  const auto c = to_long_double(p);
  const int d = p.degree();
  AberthResult out;
  if (d == 1) {
    out.roots.push_back(LComplex(-c[0] / c[1], 0.0L));
    return out;
  }
  std::vector<long double> dc(d);
  for (int k = 1; k <= d; ++k) dc[k - 1] = c[k] * k;
  std::vector<long double> abs_c(c.size());
  for (std::size_t k = 0; k < c.size(); ++k) abs_c[k] = std::abs(c[k]);

  long double ratio = 0;
  for (int k = 0; k < d; ++k) ratio = std::max(ratio, std::abs(c[k] / c[d]));
  const long double radius = std::pow(1.0L + ratio, 1.0L / d);

  std::mt19937_64 rng(opts.seed);
  std::uniform_real_distribution<double> jitter(0.0, 0.5);
  std::vector<LComplex> z(d);
  const long double step = 2.0L * std::numbers::pi_v<long double> / d;
  for (int k = 0; k < d; ++k) {
    const long double angle = step * (k + 0.25L + jitter(rng));
    z[k] = std::polar(radius, angle);
  }

  std::vector<bool> done(d, false);
  std::vector<double> trace;
  const long double eps = LDBL_EPSILON;
  for (int it = 1; it <= opts.max_iterations; ++it) {
    long double worst = 0;
    bool all_done = true;
    for (int i = 0; i < d; ++i) {
      if (done[i]) continue;
      const LComplex pv = horner(c, z[i]);
      const long double az = std::abs(z[i]);
      long double bound = 0;
      for (auto a = abs_c.rbegin(); a != abs_c.rend(); ++a) bound = bound * az + *a;
      if (std::abs(pv) <= 8 * eps * bound) {
        done[i] = true;
        continue;
      }
      const LComplex ratio_i = pv / horner(dc, z[i]);
      LComplex sum = 0;
      for (int j = 0; j < d; ++j) {
        if (j != i) sum += 1.0L / (z[i] - z[j]);
      }
      const LComplex w = ratio_i / (1.0L - ratio_i * sum);
      z[i] -= w;
      const long double aw = std::abs(w);
      worst = std::max(worst, aw);
      if (aw < opts.tolerance * std::max(1.0L, std::abs(z[i]))) {
        done[i] = true;
      } else {
        all_done = false;
      }
    }
    trace.push_back(static_cast<double>(worst));
    if (all_done) {
      out.roots = std::move(z);
      out.iterations = it;
      return out;
    }
  }
  throw NoConvergence(opts.max_iterations, std::move(trace));
}

}  // namespace

ZeroReport zeros_general(const UniPoly& p, const RootFinderOptions& opts) {
  if (p.degree() < 1) throw std::invalid_argument("zeros_general requires degree >= 1");
  ZeroReport rep;
  rep.polynomial = p;
  const int low = p.lowest_degree();
  const UniPoly core = p.shift_down(static_cast<std::size_t>(low));
  for (const auto& [factor, mult] : squarefree_decomposition(core)) {
    auto res = aberth(factor, opts);
    polish(factor, res.roots);
    rep.iterations = std::max(rep.iterations, res.iterations);
    for (const auto& r : res.roots) {
      for (int m = 0; m < mult; ++m) {
        rep.points.emplace_back(static_cast<double>(r.real()), static_cast<double>(r.imag()));
      }
    }
  }
  for (int k = 0; k < low; ++k) rep.points.emplace_back(0.0, 0.0);
  std::sort(rep.points.begin(), rep.points.end(), [](Complex a, Complex b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  });
  fill_metrics(rep);
  return rep;
}

double match_distance(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
  std::vector<bool> used(b.size(), false);
  double worst = 0.0;
  for (const auto& p : a) {
    std::size_t best = b.size();
    double best_d = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (used[j]) continue;
      const double dist = std::abs(p - b[j]);
      if (dist < best_d) {
        best_d = dist;
        best = j;
      }
    }
    used[best] = true;
    worst = std::max(worst, best_d);
  }
  return worst;
}

namespace {

void absorb(LocusReport& rep, const ZeroReport& z, const std::string& label) {
  for (std::size_t i = 0; i < z.points.size(); ++i) {
    rep.worst_locus_distance = std::max(rep.worst_locus_distance, z.locus_metrics[i]);
    rep.worst_relative_residual = std::max(rep.worst_relative_residual, z.relative_residuals[i]);
    if (!(z.locus_metrics[i] < rep.tolerance)) {
      std::ostringstream os;
      os << label << ": zero " << z.points[i] << " is " << z.locus_metrics[i]
         << " from the locus";
      rep.failures.push_back(os.str());
    }
    if (!(z.relative_residuals[i] < rep.tolerance)) {
      std::ostringstream os;
      os << label << ": residual " << z.residuals[i] << " at " << z.points[i]
         << " exceeds the relative tolerance";
      rep.failures.push_back(os.str());
    }
  }
}

void compare_paths(LocusReport& rep, const ZeroReport& z, const RootFinderOptions& opts,
                   const std::string& label) {
  if (z.polynomial.degree() < 1) return;
  const auto general = zeros_general(z.polynomial, opts);
  const double dist = match_distance(z.points, general.points);
  rep.path_agreement = std::max(rep.path_agreement.value_or(0.0), dist);
  if (!(dist < kPathAgreementTolerance)) {
    std::ostringstream os;
    os << label << ": explicit and general zeros differ by " << dist;
    rep.failures.push_back(os.str());
  }
}

}  // namespace

LocusReport verify_locus(SpecId spec, unsigned n, double tol, const RootFinderOptions& opts) {
  if (n < 1) throw std::invalid_argument("verify_locus requires n >= 1");
  LocusReport rep;
  rep.spec = spec;
  rep.n = n;
  rep.tolerance = tol;

  switch (spec) {
    case SpecId::Z1: {
      for (auto fam : {ExplicitFamily::Z1Q, ExplicitFamily::Z1R}) {
        const auto z = zeros_explicit(fam, n);
        const bool is_q = fam == ExplicitFamily::Z1Q;
        const std::string label = is_q ? "Q1" : "R1";
        absorb(rep, z, label);
        compare_paths(rep, z, opts, label);
        const bool expect_real = is_q ? n % 2 == 0 : n % 2 == 1;
        const auto real_count = std::count_if(z.points.begin(), z.points.end(),
                                              [&](Complex p) { return std::abs(p.imag()) < tol; });
        if (real_count != (expect_real ? 1 : 0)) {
          rep.failures.push_back(label + ": unexpected number of real zeros " +
                                 std::to_string(real_count));
        }
        if ((z.polynomial.eval(-2) == 0) != expect_real) {
          rep.failures.push_back(label + ": exact value at -2 contradicts the parity rule");
        }
        rep.zeros.push_back(z);
      }
      break;
    }
    case SpecId::Z2:
    case SpecId::Z3: {
      const auto z = zeros_explicit(spec == SpecId::Z2 ? ExplicitFamily::Z2 : ExplicitFamily::Z3, n);
      const std::string label = spec == SpecId::Z2 ? "Q2" : "Q3";
      absorb(rep, z, label);
      compare_paths(rep, z, opts, label);
      double margin = std::numeric_limits<double>::infinity();
      for (const auto& p : z.points) {
        margin = std::min(margin, spec == SpecId::Z2 ? std::abs(p.imag()) - 1.0 / 3.0
                                                     : 0.5 - p.real());
      }
      rep.strict_margin = margin;
      if (!(margin > 0.0)) {
        rep.failures.push_back(label + ": strict inequality violated, margin " +
                               std::to_string(margin));
      }
      rep.zeros.push_back(z);
      break;
    }
    case SpecId::P3:
    case SpecId::P5:
    case SpecId::P6: {
      const auto poly = spec_family(spec, Family::Q, n);
      if (poly.degree() < 1) break;
      auto z = zeros_general(poly, opts);
      z.family = "Q";
      z.spec = spec;
      z.n = n;
      z.locus = locus_for(spec);
      fill_metrics(z);
      absorb(rep, z, std::string(spec_name(spec)));
      for (const auto& p : z.points) {
        if (std::abs(p.imag()) < tol && p.real() < 0) {
          if (!rep.real_zero_range) {
            rep.real_zero_range = std::make_pair(p.real(), p.real());
          } else {
            rep.real_zero_range->first = std::min(rep.real_zero_range->first, p.real());
            rep.real_zero_range->second = std::max(rep.real_zero_range->second, p.real());
          }
        }
      }
      rep.zeros.push_back(std::move(z));
      break;
    }
    default:
      throw std::invalid_argument("no locus is claimed for spec " + std::string(spec_name(spec)));
  }
  return rep;
}

}  // namespace trident
