#include "trident/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "trident/chebyshev.hpp"
#include "trident/errors.hpp"
#include "trident/identity_suite.hpp"
#include "trident/partition_oracle.hpp"
#include "trident/reference_tables.hpp"
#include "trident/sequence_engine.hpp"
#include "trident/serialize.hpp"
#include "trident/specializations.hpp"
#include "trident/zero_locus.hpp"

namespace trident::cli {

namespace {

std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

struct Options {
  Config cfg;
  std::string format = "pretty";
  std::optional<std::uint64_t> n;
  std::optional<std::uint64_t> upto;
  std::string spec = "z1";
  std::string family = "q";
  bool list = false;
  bool locus = false;
  bool general = false;
  bool all = false;
  bool quick = false;
  bool check = false;
  std::vector<std::string> only;
  std::optional<std::uint64_t> cap;
  std::optional<double> tol;
  std::optional<std::uint64_t> seed;
  std::string out_file;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Indices requested by --n / --upto: a single value, or 0..upto.
std::vector<std::uint64_t> indices(const Options& o, std::uint64_t first = 0) {
  if (o.n && o.upto) throw UsageError("--n and --upto are mutually exclusive");
  if (o.n) return {*o.n};
  if (o.upto) {
    std::vector<std::uint64_t> v;
    for (std::uint64_t k = first; k <= *o.upto; ++k) v.push_back(k);
    return v;
  }
  throw UsageError("one of --n or --upto is required");
}

SpecId spec_of(const Options& o) {
  auto s = parse_spec(o.spec);
  if (!s) throw UsageError("unknown --spec " + o.spec);
  return *s;
}

Family family_of(const Options& o) {
  if (o.family == "q") return Family::Q;
  if (o.family == "r") return Family::R;
  throw UsageError("unknown --family " + o.family);
}

// --- polynomial sequences --------------------------------------------------

int cmd_multipoly(const Options& o, std::ostream& out, const std::string& name,
                  const std::function<MultiPoly(std::uint64_t)>& compute) {
  const auto ns = indices(o);
  if (o.cfg.format == OutputFormat::Json) {
    if (o.n) {
      out << to_json(compute(*o.n)).dump() << '\n';
    } else {
      json rows = json::array();
      for (auto n : ns) rows.push_back({{"n", n}, {"terms", to_json(compute(n))}});
      out << rows.dump() << '\n';
    }
    return kExitOk;
  }
  if (o.cfg.format == OutputFormat::Csv) {
    out << "n,exp_w,exp_x,exp_y,exp_z,coeff\n";
    for (auto n : ns) {
      for (const auto& t : compute(n).terms()) {
        out << n << ',' << t.exps.e[0] << ',' << t.exps.e[1] << ',' << t.exps.e[2] << ','
            << t.exps.e[3] << ',' << t.coeff.get_str() << '\n';
      }
    }
    return kExitOk;
  }
  out << "n | " << name << "\n";
  for (auto n : ns) out << n << " | " << compute(n).to_string() << '\n';
  return kExitOk;
}

int cmd_scalar(const Options& o, std::ostream& out) {
  const auto ns = indices(o);
  json rows = json::array();
  if (o.cfg.format == OutputFormat::Csv) out << "n,q,r\n";
  if (o.cfg.format == OutputFormat::Pretty) out << "n | q_n | r_n\n";
  for (auto n : ns) {
    const auto qr = scalar_qr(static_cast<unsigned>(n));
    switch (o.cfg.format) {
      case OutputFormat::Json:
        rows.push_back({{"n", n}, {"q", qr.q.get_str()}, {"r", qr.r.get_str()}});
        break;
      case OutputFormat::Csv:
        out << n << ',' << qr.q.get_str() << ',' << qr.r.get_str() << '\n';
        break;
      case OutputFormat::Pretty:
        out << n << " | " << qr.q.get_str() << " | " << qr.r.get_str() << '\n';
        break;
    }
  }
  if (o.cfg.format == OutputFormat::Json) out << (o.n ? rows[0] : rows).dump() << '\n';
  return kExitOk;
}

int cmd_enumerate(const Options& o, std::ostream& out) {
  if (!o.n) throw UsageError("enumerate requires --n");
  const std::uint64_t n = *o.n;
  const BigInt count = count_partitions(n);
  std::vector<ColoredPartition> parts;
  if (o.list) parts = enumerate_partitions(n, OracleOptions{o.cfg.list_cap});

  if (o.cfg.format == OutputFormat::Json) {
    json j = {{"n", n}, {"count", count.get_str()}};
    if (o.list) {
      json arr = json::array();
      for (const auto& p : parts) arr.push_back(p.render());
      j["partitions"] = std::move(arr);
    }
    out << j.dump() << '\n';
    return kExitOk;
  }
  if (o.list) {
    for (const auto& p : parts) out << p.render() << '\n';
  } else {
    out << (o.cfg.format == OutputFormat::Csv ? "n,count\n" : "");
    out << n << (o.cfg.format == OutputFormat::Csv ? "," : " ") << count.get_str() << '\n';
  }
  return kExitOk;
}

int cmd_spec(const Options& o, std::ostream& out) {
  const SpecId s = spec_of(o);
  const Family f = family_of(o);
  const auto ns = indices(o);
  if (o.cfg.format == OutputFormat::Json) {
    if (o.n) {
      out << to_json(spec_family(s, f, static_cast<unsigned>(*o.n))).dump() << '\n';
    } else {
      json rows = json::array();
      for (auto n : ns) {
        rows.push_back({{"n", n}, {"coeffs", to_json(spec_family(s, f, static_cast<unsigned>(n)))}});
      }
      out << rows.dump() << '\n';
    }
    return kExitOk;
  }
  if (o.cfg.format == OutputFormat::Csv) {
    out << "n,k,coeff\n";
    for (auto n : ns) {
      const auto p = spec_family(s, f, static_cast<unsigned>(n));
      for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
        out << n << ',' << k << ',' << p.coeffs()[k].get_str() << '\n';
      }
    }
    return kExitOk;
  }
  out << "n | " << family_char(f) << "_n(" << spec_name(s) << ")\n";
  for (auto n : ns) out << n << " | " << spec_family(s, f, static_cast<unsigned>(n)).to_string() << '\n';
  return kExitOk;
}

int cmd_profile(const Options& o, std::ostream& out) {
  if (!o.n) throw UsageError("profile requires --n");
  const SpecId s = spec_of(o);
  const Family f = family_of(o);
  const unsigned n = static_cast<unsigned>(*o.n);
  const auto prof = profile(s, f, n);
  int code = kExitOk;
  if (o.check) {
    if (profile_from_oracle(s, f, n, OracleOptions{o.cfg.list_cap}) != prof) {
      code = kExitVerificationFailed;
    }
  }
  if (o.cfg.format == OutputFormat::Json) {
    json j = to_json(prof);
    if (o.check) j["oracle_agrees"] = code == kExitOk;
    out << j.dump() << '\n';
  } else {
    out << "k,count\n";
    for (const auto& [k, c] : prof.coeffs) out << k << ',' << c.get_str() << '\n';
  }
  return code;
}

int cmd_zeros(const Options& o, std::ostream& out) {
  if (!o.n) throw UsageError("zeros requires --n");
  const SpecId s = spec_of(o);
  const Family f = family_of(o);
  const unsigned n = static_cast<unsigned>(*o.n);
  if (n < 1) throw UsageError("zeros requires --n >= 1");
  RootFinderOptions ro{o.cfg.zero_tolerance, 500, o.cfg.seed};

  ZeroReport rep;
  const bool explicit_ok = !o.general && (s == SpecId::Z1 || (f == Family::Q && (s == SpecId::Z2 || s == SpecId::Z3)));
  if (explicit_ok) {
    ExplicitFamily fam = s == SpecId::Z1 ? (f == Family::Q ? ExplicitFamily::Z1Q : ExplicitFamily::Z1R)
                         : s == SpecId::Z2 ? ExplicitFamily::Z2
                                           : ExplicitFamily::Z3;
    rep = zeros_explicit(fam, n);
  } else {
    const UniPoly p = spec_family(s, f, n);
    if (p.degree() < 1) throw UsageError("polynomial has no zeros (degree < 1)");
    rep = zeros_general(p, ro);
    rep.spec = s;
    rep.n = n;
    rep.family = std::string(1, family_char(f));
    rep.locus = f == Family::Q ? locus_for(s) : (s == SpecId::Z1 ? locus_for(s) : LocusKind::None);
    for (std::size_t i = 0; i < rep.points.size(); ++i) {
      rep.locus_metrics[i] = locus_distance(rep.locus, rep.points[i]);
    }
  }
  const std::string label = std::string(spec_name(s)) + (f == Family::Q ? "q" : "r");

  if (o.cfg.format == OutputFormat::Json) {
    json pts = json::array();
    for (std::size_t i = 0; i < rep.points.size(); ++i) {
      pts.push_back({{"re", rep.points[i].real()},
                     {"im", rep.points[i].imag()},
                     {"residual", rep.residuals[i]},
                     {"locus_distance", rep.locus_metrics[i]}});
    }
    json j = {{"family", label}, {"n", n}, {"origin_multiplicity", rep.origin_multiplicity},
              {"zeros", std::move(pts)}};
    if (o.locus) j["locus"] = json::parse(locus_json(rep.locus));
    out << j.dump() << '\n';
    return kExitOk;
  }
  if (o.locus) {
    json header = {{"locus", json::parse(locus_json(rep.locus))},
                   {"origin_multiplicity", rep.origin_multiplicity}};
    out << "# " << header.dump() << '\n';
  }
  out << "family,n,re,im,residual,locus_distance\n";
  for (std::size_t i = 0; i < rep.points.size(); ++i) {
    out << label << ',' << n << ',' << fmt_double(rep.points[i].real()) << ','
        << fmt_double(rep.points[i].imag()) << ',' << fmt_double(rep.residuals[i]) << ','
        << fmt_double(rep.locus_metrics[i]) << '\n';
  }
  return kExitOk;
}

// --- verify -----------------------------------------------------------------

const std::array<BigInt, 4> kOnes{1, 1, 1, 1};

struct Suite {
  std::string id;
  std::function<json(bool quick, const Config&)> run;  // must set "passed"
};

json suite_sequence(bool, const Config&) {
  const long expected[] = {1, 3, 4, 6, 10, 12, 13, 15, 16, 18, 22, 24, 28, 36, 40, 42};
  json mism = json::array();
  for (unsigned n = 0; n < 16; ++n) {
    const BigInt v = s_poly(n).eval(kOnes);
    if (v != expected[n] || count_partitions(n) != expected[n]) mism.push_back(n);
  }
  return {{"passed", mism.empty()}, {"mismatches", mism}};
}

json suite_oracle(bool quick, const Config& cfg) {
  const unsigned poly_max = quick ? 20 : 60;
  const unsigned count_max = quick ? 80 : 200;
  json mism = json::array();
  for (unsigned n = 0; n <= poly_max; ++n) {
    const MultiPoly a = s_poly(n);
    if (a != s_poly_product(n, cfg.product_cap) || a != oracle_poly(n, OracleOptions{cfg.list_cap})) {
      mism.push_back(n);
    }
  }
  const TruncatedSeries series = generating_product(count_max);
  for (unsigned n = poly_max + 1; n <= count_max; ++n) {
    const BigInt c = count_partitions(n);
    if (s_poly(n).eval(kOnes) != c || series[n].eval(kOnes) != c ||
        BigInt(std::to_string(count_by_enumeration(n))) != c) {
      mism.push_back(n);
    }
  }
  return {{"passed", mism.empty()}, {"poly_max", poly_max}, {"count_max", count_max},
          {"mismatches", mism}};
}

bool is_perfect(const BigInt& v) {
  BigInt sum = 1;
  for (BigInt d = 2; d * d <= v; ++d) {
    if (v % d == 0) {
      sum += d;
      if (d * d != v) sum += v / d;
    }
  }
  return v > 1 && sum == v;
}

json suite_perfect(bool, const Config&) {
  json rows = json::array();
  bool ok = true;
  const long perfect[] = {6, 28, 496, 8128};
  const unsigned primes[] = {2, 3, 5, 7};
  for (int i = 0; i < 4; ++i) {
    const BigInt c = count_partitions(q_index(primes[i]));
    const bool good = c == perfect[i] && is_perfect(c);
    ok = ok && good;
    rows.push_back({{"p", primes[i]}, {"count", c.get_str()}, {"passed", good}});
  }
  for (unsigned n = 1; n <= 20; ++n) {
    const BigInt c = count_partitions(r_index(n));
    if (c != scalar_qr(n).r) ok = false;
  }
  return {{"passed", ok}, {"perfect", rows}};
}

json suite_chebyshev(bool quick, const Config& cfg) {
  const unsigned n_max = quick ? 6 : 12;
  json reps = json::array();
  bool ok = true;
  for (unsigned n = 0; n <= n_max; ++n) {
    const auto r = verify_chebyshev_forms(n, 20, cfg.seed);
    ok = ok && r.passed();
    reps.push_back(to_json(r));
  }
  const UniPoly two_v{0, 2};
  const UniPoly one{1};
  for (unsigned n = 0; n <= n_max; ++n) {
    if (dickson_E(n, two_v, one) != chebyshev(ChebKind::SecondKind, n) ||
        dickson_D(n, two_v, one) != BigInt(2) * chebyshev(ChebKind::FirstKind, n)) {
      ok = false;
    }
  }
  return {{"passed", ok}, {"reports", reps}};
}

json suite_gf(bool quick, const Config&) {
  const auto r = gf_check(quick ? 8 : 15);
  json j = to_json(r);
  return j;
}

json suite_z1(bool quick, const Config&) {
  const unsigned n_max = quick ? 15 : 40;
  json j = to_json(verify_sum_difference(n_max));
  bool ok = j["passed"];
  json closed = json::array();
  for (unsigned n = 0; n <= n_max; ++n) {
    const auto c = q1_r1_closed(n);
    const auto s = q1_r1_shifted_closed(n);
    const UniPoly shift{-2, 1};
    const UniPoly q = spec_family(SpecId::Z1, Family::Q, n);
    const UniPoly r = spec_family(SpecId::Z1, Family::R, n);
    if (c.q != q || c.r != r || q.compose(shift) != s.q || r.compose(shift) != s.r) {
      ok = false;
      closed.push_back(n);
    }
  }
  j["closed_form_mismatches"] = closed;
  j["passed"] = ok;
  return j;
}

json suite_structure(bool quick, const Config&) {
  const unsigned n_max = quick ? 8 : 15;
  json fails = json::array();
  for (SpecId s : {SpecId::Z1, SpecId::Z2, SpecId::Z3, SpecId::P1, SpecId::P3, SpecId::P5, SpecId::P6}) {
    for (unsigned n = 1; n <= n_max; ++n) {
      const auto r = structural_check(s, n);
      if (!r.passed()) fails.push_back(to_json(r));
    }
  }
  return {{"passed", fails.empty()}, {"failures", fails}};
}

json suite_locus(bool quick, const Config& cfg) {
  const unsigned n_max = quick ? 10 : 20;
  const unsigned preset_max = quick ? 6 : 10;
  RootFinderOptions ro{cfg.zero_tolerance, 500, cfg.seed};
  json fails = json::array();
  double worst_path = 0.0;
  for (SpecId s : {SpecId::Z1, SpecId::Z2, SpecId::Z3, SpecId::P3, SpecId::P5, SpecId::P6}) {
    const unsigned top = (s == SpecId::P3 || s == SpecId::P5 || s == SpecId::P6) ? preset_max : n_max;
    for (unsigned n = 1; n <= top; ++n) {
      const auto r = verify_locus(s, n, 1e-9, ro);
      if (r.path_agreement) worst_path = std::max(worst_path, *r.path_agreement);
      if (!r.passed()) fails.push_back(to_json(r));
    }
  }
  return {{"passed", fails.empty()}, {"worst_path_agreement", worst_path}, {"failures", fails}};
}

json suite_profiles(bool quick, const Config& cfg) {
  const unsigned n_max = quick ? 3 : 4;
  json fails = json::array();
  for (SpecId s : kAllSpecs) {
    for (Family f : {Family::Q, Family::R}) {
      for (unsigned n = 1; n <= n_max; ++n) {
        if (profile(s, f, n) != profile_from_oracle(s, f, n, OracleOptions{cfg.list_cap})) {
          fails.push_back({{"spec", std::string(spec_name(s))},
                           {"family", std::string(1, family_char(f))},
                           {"n", n}});
        }
      }
    }
  }
  return {{"passed", fails.empty()}, {"failures", fails}};
}

const std::vector<Suite>& suites() {
  static const std::vector<Suite> all = {
      {"sequence", suite_sequence},
      {"oracle", suite_oracle},
      {"perfect", suite_perfect},
      {"chebyshev", suite_chebyshev},
      {"generating_functions", suite_gf},
      {"z1_identities", suite_z1},
      {"structure", suite_structure},
      {"profiles", suite_profiles},
      {"zero_locus", suite_locus},
      {"cross_sequence", [](bool q, const Config&) { return to_json(verify_cross_sequence(q ? 6 : 12)); }},
      {"telescoping", [](bool q, const Config&) { return to_json(verify_telescoping(q ? 6 : 12)); }},
      {"divisibility",
       [](bool q, const Config&) {
         json reps = json::array();
         bool ok = true;
         for (SpecId s : {SpecId::Z1, SpecId::Z2, SpecId::Z3}) {
           auto r = verify_divisibility(s, q ? 12 : 24);
           ok = ok && r.passed();
           reps.push_back(to_json(r));
         }
         return json{{"passed", ok}, {"reports", reps}};
       }},
  };
  return all;
}

int cmd_verify(const Options& o, std::ostream& out) {
  std::vector<const Suite*> chosen;
  for (const auto& s : suites()) {
    const bool wanted = o.all || o.only.empty() ||
                        std::find(o.only.begin(), o.only.end(), s.id) != o.only.end();
    if (wanted) chosen.push_back(&s);
  }
  for (const auto& id : o.only) {
    const bool known = std::any_of(suites().begin(), suites().end(),
                                   [&](const Suite& s) { return s.id == id; });
    if (!known) throw UsageError("unknown suite '" + id + "'");
  }
  json results = json::array();
  bool all_ok = true;
  for (const auto* s : chosen) {
    json r = s->run(o.quick, o.cfg);
    r["id"] = s->id;
    all_ok = all_ok && r["passed"].get<bool>();
    results.push_back(std::move(r));
  }
  if (o.cfg.format == OutputFormat::Json) {
    out << json{{"passed", all_ok}, {"quick", o.quick}, {"suites", results}}.dump(2) << '\n';
  } else {
    for (const auto& r : results) {
      out << (r["passed"].get<bool>() ? "PASS " : "FAIL ") << r["id"].get<std::string>() << '\n';
    }
    out << (all_ok ? "all suites passed" : "some suites failed") << '\n';
  }
  return all_ok ? kExitOk : kExitVerificationFailed;
}

int cmd_tables(const Options& o, std::ostream& out) {
  const auto rows = check_reference_tables();
  bool ok = true;
  for (const auto& r : rows) ok = ok && r.matches;
  if (o.cfg.format == OutputFormat::Json) {
    json arr = json::array();
    for (const auto& r : rows) {
      arr.push_back({{"table", r.table}, {"n", r.n}, {"expected", r.expected},
                     {"computed", r.computed}, {"matches", r.matches}});
    }
    out << json{{"passed", ok}, {"rows", arr}}.dump() << '\n';
  } else {
    std::string current;
    for (const auto& r : rows) {
      if (r.table != current) {
        current = r.table;
        out << "== " << current << " ==\n";
      }
      out << (r.matches ? "  ok  " : "  BAD ") << r.n << " | " << r.computed << '\n';
    }
    out << (ok ? "all rows match" : "mismatch against the published tables") << '\n';
  }
  return ok ? kExitOk : kExitVerificationFailed;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Restricted colored base-3 partition polynomials", "trident"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "Output format")
        ->check(CLI::IsMember({"pretty", "json", "csv"}));
    sub->add_option("--out", o.out_file, "Write output to FILE");
    sub->add_option("--cap", o.cap, "Enumeration list cap (default 10000, or $TRIDENT_CAP)");
    sub->add_option("--tol", o.tol, "Zero-finder tolerance");
    sub->add_option("--seed", o.seed, "Root-finder initialization seed");
  };
  auto index_opts = [&](CLI::App* sub) {
    sub->add_option("--n", o.n, "Index");
    sub->add_option("--upto", o.upto, "Emit all indices 0..N");
  };
  auto spec_opts = [&](CLI::App* sub) {
    sub->add_option("--spec", o.spec, "Specialization")
        ->check(CLI::IsMember({"z0", "z1", "z2", "z3", "p1", "p2", "p3", "p4", "p5", "p6"}));
    sub->add_option("--family", o.family, "Q or R family")->check(CLI::IsMember({"q", "r"}));
  };

  auto* s_cmd = app.add_subcommand("s-poly", "S(n;Z) from the base-3 recurrence");
  auto* q_cmd = app.add_subcommand("q-poly", "Q_n(Z)");
  auto* r_cmd = app.add_subcommand("r-poly", "R_n(Z)");
  auto* sc_cmd = app.add_subcommand("scalar", "q_n and r_n");
  auto* en_cmd = app.add_subcommand("enumerate", "Count or list the partitions of n");
  auto* sp_cmd = app.add_subcommand("spec", "Single-variable specializations");
  auto* pr_cmd = app.add_subcommand("profile", "Coefficient profile as CSV (k,count)");
  auto* ze_cmd = app.add_subcommand("zeros", "Complex zeros as CSV");
  auto* ve_cmd = app.add_subcommand("verify", "Run the identity and locus suites");
  auto* ta_cmd = app.add_subcommand("tables", "Recompute and check the published tables");

  for (auto* sub : {s_cmd, q_cmd, r_cmd, sc_cmd, en_cmd, sp_cmd, pr_cmd, ze_cmd, ve_cmd, ta_cmd}) {
    common(sub);
  }
  for (auto* sub : {s_cmd, q_cmd, r_cmd, sc_cmd, en_cmd, sp_cmd, pr_cmd, ze_cmd}) index_opts(sub);
  for (auto* sub : {sp_cmd, pr_cmd, ze_cmd}) spec_opts(sub);
  en_cmd->add_flag("--list", o.list, "List the partitions instead of counting");
  pr_cmd->add_flag("--check", o.check, "Recount from the partition enumeration");
  ze_cmd->add_flag("--locus", o.locus, "Prefix a JSON comment describing the claimed locus");
  ze_cmd->add_flag("--general", o.general, "Use the general root finder even when explicit zeros exist");
  ve_cmd->add_flag("--all", o.all, "Run every suite");
  ve_cmd->add_flag("--quick", o.quick, "Use reduced parameter ranges");
  ve_cmd->add_option("--only", o.only, "Run only the named suites");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  if (const char* env = std::getenv("TRIDENT_CAP")) {
    try {
      o.cfg.list_cap = std::stoull(env);
    } catch (const std::exception&) {
      err << "error: TRIDENT_CAP must be a positive integer\n";
      return kExitUsage;
    }
  }
  if (o.cap) o.cfg.list_cap = *o.cap;
  if (o.tol) o.cfg.zero_tolerance = *o.tol;
  if (o.seed) o.cfg.seed = *o.seed;
  o.cfg.format = o.format == "json" ? OutputFormat::Json
                 : o.format == "csv" ? OutputFormat::Csv
                                     : OutputFormat::Pretty;
  if (o.cfg.list_cap == 0 || !(o.cfg.zero_tolerance > 0)) {
    err << "error: caps and tolerances must be positive\n";
    return kExitUsage;
  }
  if (ve_cmd->parsed() && o.format == "pretty" && ve_cmd->count("--format") == 0) {
    o.cfg.format = OutputFormat::Json;
  }

  std::ofstream file;
  std::ostream* sink = &out;
  if (!o.out_file.empty()) {
    file.open(o.out_file);
    if (!file) {
      err << "error: cannot open " << o.out_file << '\n';
      return kExitUsage;
    }
    sink = &file;
  }

  try {
    if (s_cmd->parsed()) {
      return cmd_multipoly(o, *sink, "S(n;Z)", [](std::uint64_t n) { return s_poly(n); });
    }
    if (q_cmd->parsed()) {
      return cmd_multipoly(o, *sink, "Q_n(Z)", [](std::uint64_t n) { return q_poly(static_cast<unsigned>(n)); });
    }
    if (r_cmd->parsed()) {
      return cmd_multipoly(o, *sink, "R_n(Z)", [](std::uint64_t n) { return r_poly(static_cast<unsigned>(n)); });
    }
    if (sc_cmd->parsed()) return cmd_scalar(o, *sink);
    if (en_cmd->parsed()) return cmd_enumerate(o, *sink);
    if (sp_cmd->parsed()) return cmd_spec(o, *sink);
    if (pr_cmd->parsed()) return cmd_profile(o, *sink);
    if (ze_cmd->parsed()) return cmd_zeros(o, *sink);
    if (ve_cmd->parsed()) return cmd_verify(o, *sink);
    if (ta_cmd->parsed()) return cmd_tables(o, *sink);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kExitLimit;
  } catch (const NoConvergence& e) {
    err << "error: " << e.what() << '\n';
    return kExitLimit;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace trident::cli
