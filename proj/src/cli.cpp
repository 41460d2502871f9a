#include "klsum/cli.hpp"

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "klsum/chars.hpp"
#include "klsum/error.hpp"
#include "klsum/flags.hpp"
#include "klsum/gf.hpp"
#include "klsum/glq.hpp"
#include "klsum/klscalar.hpp"
#include "klsum/symfunc.hpp"
#include "klsum/verify.hpp"

namespace klsum::cli {

namespace {

using json = nlohmann::ordered_json;
using symfunc::BigInt;
using symfunc::Partition;
using verify::cplx;

enum class Format { Json, Csv, Pretty };

struct Options {
  std::vector<std::string> fields;
  std::vector<int> ns, as, bs, ks;
  std::vector<std::uint64_t> qas;
  int m = 1;
  std::string alpha;
  gf::Elem psi = 1;
  std::string xi, poly, matrix, matrix2, mu, lambda, rho;
  std::optional<std::int64_t> theta, chi;
  std::string format = "json";
  unsigned workers = 1;
  std::optional<std::uint64_t> budget;
  std::optional<double> rel_tol, abs_tol;
  bool timing = false;
  bool bruteforce = false;
};

void add_common(CLI::App* app, Options& o) {
  app->add_option("--field", o.fields, "field descriptor: p, p^d[:coeffs], tower .../m[:coeffs]; repeatable");
  app->add_option("--n", o.ns, "matrix sizes")->delimiter(',');
  app->add_option("--a", o.as, "eigenvalue degrees")->delimiter(',');
  app->add_option("--b", o.bs, "Jordan sizes or HD powers")->delimiter(',');
  app->add_option("--k", o.ks, "number of factors")->delimiter(',');
  app->add_option("--qa", o.qas, "prime powers q^a")->delimiter(',');
  app->add_option("--m", o.m, "extension degree for kl-scalar");
  app->add_option("--alpha", o.alpha, "multiplicative exponents, e.g. 0,1");
  app->add_option("--psi", o.psi, "additive character twist (element index)");
  app->add_option("--xi", o.xi, "element of the field");
  app->add_option("--poly", o.poly, "monic irreducible polynomial c0,...,1");
  app->add_option("--matrix", o.matrix, "element as companion:<poly> / jordan:<poly>:<mu>, blocks joined by +");
  app->add_option("--matrix2", o.matrix2, "second element for MULTIPLICATIVITY");
  app->add_option("--mu", o.mu, "partition");
  app->add_option("--lambda", o.lambda, "partition");
  app->add_option("--rho", o.rho, "partition");
  app->add_option("--theta", o.theta, "exponent of theta on F_{q^a}");
  app->add_option("--chi", o.chi, "exponent of chi on F_q");
  app->add_option("--format", o.format, "json, csv or pretty")->check(CLI::IsMember({"json", "csv", "pretty"}));
  app->add_option("--workers", o.workers, "worker threads")->check(CLI::Range(1u, 256u));
  app->add_option("--budget", o.budget, "enumeration budget (default from KLSUM_BUDGET)");
  app->add_option("--rel-tol", o.rel_tol, "relative tolerance");
  app->add_option("--abs-tol", o.abs_tol, "absolute tolerance per brute-force term");
  app->add_flag("--timing", o.timing, "report elapsed_ms");
}

Format format_of(const Options& o) {
  if (o.format == "csv") return Format::Csv;
  if (o.format == "pretty") return Format::Pretty;
  return Format::Json;
}

std::uint64_t budget_of(const Options& o) {
  if (o.budget) return *o.budget;
  if (const char* env = std::getenv("KLSUM_BUDGET")) {
    try {
      return std::stoull(env);
    } catch (const std::logic_error&) {
      throw Error(ErrorCode::ParseError, "KLSUM_BUDGET is not an integer");
    }
  }
  return kl::kDefaultBudget;
}

std::vector<std::int64_t> parse_exponents(std::string text) {
  if (text.rfind("alpha=", 0) == 0) text = text.substr(6);
  std::vector<std::int64_t> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      std::size_t pos = 0;
      out.push_back(std::stoll(tok, &pos));
      if (pos != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::logic_error&) {
      throw Error(ErrorCode::ParseError, "bad exponent list '" + text + "'");
    }
  }
  return out;
}

gf::FieldPtr single_field(const Options& o) {
  if (o.fields.size() > 1) throw Error(ErrorCode::ParseError, "compute takes a single --field");
  return gf::parse_field_descriptor(o.fields.empty() ? "2" : o.fields.front());
}

int single_k(const Options& o) { return o.ks.empty() ? 2 : o.ks.front(); }

std::optional<Partition> opt_partition(const std::string& s) {
  if (s.empty()) return std::nullopt;
  return Partition::parse(s);
}

Partition need_partition(const std::string& s, const char* name) {
  if (s.empty()) throw Error(ErrorCode::ParseError, std::string("--") + name + " is required");
  return Partition::parse(s);
}

chars::CharacterTuple alpha_tuple(const gf::FieldPtr& F, const Options& o, int k) {
  if (o.alpha.empty()) return chars::CharacterTuple::trivial(F, k);
  const auto e = parse_exponents(o.alpha);
  if (static_cast<int>(e.size()) != k) {
    throw Error(ErrorCode::InvalidHypothesis, "alpha needs exactly k = " + std::to_string(k) + " exponents");
  }
  return chars::CharacterTuple::from_exponents(F, e);
}

kl::EnumOptions enum_opts(const Options& o) { return {o.workers, budget_of(o)}; }

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", verify::round12(v));
  return buf;
}

std::string cplx_text(cplx v) {
  v = verify::snap(v);
  const double im = v.imag();
  if (im == 0.0) return fmt(v.real());
  return fmt(v.real()) + (im < 0 ? " - " : " + ") + fmt(std::abs(im)) + "i";
}

json cplx_json(cplx v) {
  const cplx z = verify::snap(v);
  return {{"re", z.real()}, {"im", z.imag()}};
}

json big_json(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max()) {
    return v.convert_to<std::int64_t>();
  }
  return v.str();
}

// ---------------------------------------------------------------------------
// compute

struct ComputeResult {
  json params = json::object();
  json value;
  std::string text;  // pretty form of value
  std::uint64_t terms = 0;
};

gf::FieldElement eigenvalue(const gf::FieldPtr& F, const Options& o) {
  if (!o.poly.empty()) return verify::canonical_eigenvalue(F, glq::parse_poly(o.poly));
  if (o.xi.empty()) throw Error(ErrorCode::ParseError, "--xi or --poly is required");
  return gf::parse_element(F, o.xi);
}

ComputeResult compute(const std::string& what, const Options& o) {
  ComputeResult r;
  if (what == "kl-scalar" || what == "kl-matrix" || what == "roots" || what == "gauss") {
    const gf::FieldPtr F = single_field(o);
    const chars::AdditiveCharacter psi(F, o.psi);
    r.params["field"] = F->descriptor();
    r.params["psi"] = o.psi;
    if (what == "gauss") {
      const int a = o.as.empty() ? 1 : o.as.front();
      const gf::FieldPtr Ea = gf::extension_of_degree(F, a);
      const chars::MultiplicativeCharacter theta(Ea, o.theta.value_or(0));
      const chars::MultiplicativeCharacter chi(F, o.chi.value_or(0));
      r.params["a"] = a;
      r.params["theta"] = theta.exponent();
      r.params["chi"] = chi.exponent();
      const cplx v = chars::gauss_sum(theta, chi, psi);
      r.value = cplx_json(v);
      r.text = cplx_text(v);
      r.terms = Ea->size() - 1;
      return r;
    }
    const int k = single_k(o);
    const chars::CharacterTuple alpha = alpha_tuple(F, o, k);
    r.params["k"] = k;
    r.params["alpha"] = alpha.exponents();
    if (what == "kl-matrix") {
      if (o.matrix.empty()) throw Error(ErrorCode::ParseError, "--matrix is required");
      const glq::MatrixFq x = glq::parse_datum(o.matrix).matrix(F);
      r.params["matrix"] = o.matrix;
      const kl::SumResult s = glq::matrix_kloosterman_bruteforce(alpha, psi, x, enum_opts(o));
      r.value = cplx_json(s.value);
      r.text = cplx_text(s.value);
      r.terms = s.terms;
      return r;
    }
    const gf::FieldElement xi = eigenvalue(F, o);
    r.params["xi"] = xi.to_string();
    if (what == "kl-scalar") {
      r.params["m"] = o.m;
      const gf::FieldPtr ext = gf::extension_of_degree(xi.field(), o.m);
      const kl::SumResult s = kl::kloosterman_scalar(ext, alpha, psi, xi, enum_opts(o));
      r.value = cplx_json(s.value);
      r.text = cplx_text(s.value);
      r.terms = s.terms;
      return r;
    }
    const kl::FrobeniusRoots fr = kl::frobenius_roots(alpha, psi, xi, enum_opts(o));
    json roots = json::array();
    std::string text;
    for (const auto& w : fr.roots) {
      roots.push_back(cplx_json(w));
      text += (text.empty() ? "" : ", ") + cplx_text(w);
    }
    json lc = json::array();
    for (const auto& c : fr.l_coeffs) lc.push_back(cplx_json(c));
    r.value = {{"roots", roots}, {"l_coeffs", lc}, {"expected_modulus", verify::round12(fr.expected_modulus())}};
    r.text = text;
    r.terms = fr.terms;
    return r;
  }
  if (what == "hl") {
    const Partition mu = need_partition(o.mu, "mu");
    const int k = single_k(o);
    const std::uint64_t t = o.qas.empty() ? 2 : o.qas.front();
    r.params["mu"] = mu.to_string();
    r.params["k"] = k;
    r.params["t"] = t;
    const auto coeffs = symfunc::modified_hl_monomial_coeffs(mu, k, t);
    const auto lambda = opt_partition(o.lambda);
    r.value = json::object();
    for (const auto& [l, c] : coeffs) {
      if (lambda && *lambda != l) continue;
      r.value[l.to_string()] = big_json(c);
      r.text += (r.text.empty() ? "" : "\n") + ("m[" + l.to_string() + "] " + c.str());
    }
    return r;
  }
  if (what == "green" || what == "kostka-foulkes") {
    const bool green = what == "green";
    const Partition first = need_partition(green ? o.lambda : o.rho, green ? "lambda" : "rho");
    const Partition mu = need_partition(o.mu, "mu");
    r.params[green ? "lambda" : "rho"] = first.to_string();
    r.params["mu"] = mu.to_string();
    const auto p = green ? symfunc::green_polynomial(first, mu) : symfunc::kostka_foulkes(first, mu);
    r.value = p.to_string();
    r.text = p.to_string();
    return r;
  }
  if (what == "flags") {
    const Partition mu = need_partition(o.mu, "mu");
    const Partition lambda = need_partition(o.lambda, "lambda");
    const std::uint64_t qa = o.qas.empty() ? 2 : o.qas.front();
    r.params["mu"] = mu.to_string();
    r.params["lambda"] = lambda.to_string();
    r.params["qa"] = qa;
    const BigInt count = flags::count_fixed_flags_formula(mu, lambda, qa);
    r.value = big_json(count);
    r.text = count.str();
    if (o.bruteforce) {
      const gf::FieldPtr F = verify::field_of_size(qa);
      const glq::MatrixFq g = glq::jordan_matrix(glq::MatrixFq::scalar(F, 1, F->generator()), mu);
      const BigInt brute =
          flags::count_fixed_weak_flags_bruteforce(symfunc::WeakComposition(lambda.parts()), g, o.workers);
      r.params["bruteforce"] = big_json(brute);
    }
    return r;
  }
  throw Error(ErrorCode::ParseError, "unknown quantity '" + what + "'");
}

void print_compute(const std::string& what, const ComputeResult& r, Format f, std::ostream& out) {
  switch (f) {
    case Format::Json: {
      json j;
      j["quantity"] = what;
      j["params"] = r.params;
      j["value"] = r.value;
      j["terms"] = r.terms;
      out << j.dump() << '\n';
      break;
    }
    case Format::Csv: {
      out << "quantity,params,value,terms\n";
      std::string params;
      for (auto it = r.params.begin(); it != r.params.end(); ++it) {
        if (!params.empty()) params += ';';
        params += it.key() + '=' + (it.value().is_string() ? it.value().get<std::string>() : it.value().dump());
      }
      const std::string value = r.value.is_string() ? r.value.get<std::string>() : r.value.dump();
      auto quote = [](const std::string& s) {
        std::string q = "\"";
        for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
        return q + "\"";
      };
      out << what << ',' << quote(params) << ',' << quote(value) << ',' << r.terms << '\n';
      break;
    }
    case Format::Pretty:
      out << r.text << '\n';
      break;
  }
}

// ---------------------------------------------------------------------------
// verify / sweep

verify::Grid grid_of(const Options& o, std::vector<verify::CheckId> checks) {
  verify::Grid g;
  g.checks = std::move(checks);
  const std::vector<std::string> fields = o.fields.empty() ? std::vector<std::string>{"2"} : o.fields;
  for (const auto& f : fields) g.fields.push_back(gf::parse_field_descriptor(f));
  g.ns = o.ns;
  g.as = o.as;
  g.bs = o.bs;
  g.ks = o.ks;
  g.qas = o.qas;
  if (!o.alpha.empty()) g.alpha = parse_exponents(o.alpha);
  g.psi = o.psi;
  if (!o.poly.empty()) g.poly = glq::parse_poly(o.poly);
  g.mu = opt_partition(o.mu);
  g.lambda = opt_partition(o.lambda);
  if (!o.matrix.empty()) g.x = glq::parse_datum(o.matrix);
  if (!o.matrix2.empty()) g.x2 = glq::parse_datum(o.matrix2);
  g.theta = o.theta;
  g.chi = o.chi;
  if (o.rel_tol) g.tol.rel = *o.rel_tol;
  if (o.abs_tol) g.tol.abs_per_term = *o.abs_tol;
  g.enumeration = enum_opts(o);
  return g;
}

std::string pretty_line(const verify::VerificationReport& r) {
  std::string params;
  for (auto it = r.params.begin(); it != r.params.end(); ++it) {
    params += ' ' + it.key() + '=' + (it.value().is_string() ? it.value().get<std::string>() : it.value().dump());
  }
  std::string head = r.status != "ok" ? (r.status == "skipped" ? "SKIP" : "INVALID") : (r.pass ? "PASS" : "FAIL");
  std::string line = head + ' ' + verify::to_string(r.check) + params;
  if (r.status != "ok") return line + " error=\"" + r.error + '"';
  return line + " lhs=" + cplx_text(r.lhs) + " rhs=" + cplx_text(r.rhs) + " rel_err=" + fmt(r.rel_err) +
         " terms=" + std::to_string(r.terms);
}

void print_reports(const std::vector<verify::VerificationReport>& reports, Format f, bool timing, bool summary,
                   std::ostream& out) {
  const verify::SweepSummary s = verify::summarize(reports);
  switch (f) {
    case Format::Json:
      if (summary) {
        json j;
        j["reports"] = json::array();
        for (const auto& r : reports) j["reports"].push_back(verify::to_json(r, timing));
        j["summary"] = {{"total", s.total},
                        {"passed", s.passed},
                        {"failed", s.failed},
                        {"skipped", s.skipped},
                        {"invalid", s.invalid},
                        {"max_rel_err", verify::round12(s.max_rel_err)},
                        {"total_terms", s.total_terms}};
        out << j.dump() << '\n';
      } else {
        for (const auto& r : reports) out << verify::to_json(r, timing).dump() << '\n';
      }
      break;
    case Format::Csv:
      out << verify::csv_header() << '\n';
      for (const auto& r : reports) out << verify::to_csv(r, timing) << '\n';
      break;
    case Format::Pretty:
      for (const auto& r : reports) out << pretty_line(r) << '\n';
      if (summary) {
        out << "total=" << s.total << " passed=" << s.passed << " failed=" << s.failed << " skipped=" << s.skipped
            << " invalid=" << s.invalid << " max_rel_err=" << fmt(s.max_rel_err) << " total_terms=" << s.total_terms
            << '\n';
      }
      break;
  }
}

int exit_code_of(const std::vector<verify::VerificationReport>& reports) {
  bool failed = false, invalid = false, skipped = false;
  for (const auto& r : reports) {
    if (r.status == "invalid") invalid = true;
    else if (r.status == "skipped") skipped = true;
    else if (!r.pass) failed = true;
  }
  if (failed) return kExitIdentityFailed;
  if (invalid) return kExitUsage;
  if (skipped) return kExitScale;
  return kExitOk;
}

std::vector<verify::VerificationReport> run_specs(std::vector<verify::CheckSpec> specs, const Options& o) {
  // Parallelize across points when there are several, inside the enumeration otherwise.
  const unsigned outer = specs.size() > 1 ? o.workers : 1;
  if (outer > 1) {
    for (auto& s : specs) s.enumeration.workers = 1;
  }
  return verify::sweep(specs, outer);
}

int run_verify(const std::vector<std::string>& ids, const std::string& suite, const Options& o, bool sweep_mode,
               std::ostream& out) {
  if (!suite.empty()) {
    if (suite != "acceptance") throw Error(ErrorCode::ParseError, "unknown suite '" + suite + "'");
    std::vector<verify::CheckSpec> specs;
    std::vector<int> criteria;
    for (auto& [c, s] : verify::acceptance_specs()) {
      s.enumeration = enum_opts(o);
      criteria.push_back(c);
      specs.push_back(std::move(s));
    }
    auto reports = run_specs(std::move(specs), o);
    for (std::size_t i = 0; i < reports.size(); ++i) reports[i].params["criterion"] = criteria[i];
    print_reports(reports, format_of(o), o.timing, sweep_mode, out);
    return exit_code_of(reports);
  }
  std::vector<verify::CheckId> checks;
  for (const auto& id : ids) checks.push_back(verify::parse_check_id(id));
  if (checks.empty()) {
    if (!sweep_mode) throw Error(ErrorCode::ParseError, "no check given");
    checks = verify::all_checks();
  }
  const auto specs = verify::expand(grid_of(o, checks));
  const auto reports = run_specs(specs, o);
  print_reports(reports, format_of(o), o.timing, sweep_mode, out);
  return exit_code_of(reports);
}

int code_of(const Error& e) { return e.code() == ErrorCode::ScaleExceeded ? kExitScale : kExitUsage; }

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Twisted Kloosterman sums over finite fields and GL_n: computation and identity checks", "klsum"};
  app.require_subcommand(1);
  Options opts;

  std::string what;
  auto* compute_cmd = app.add_subcommand("compute", "compute a single quantity");
  compute_cmd->add_option("what", what, "kl-scalar, kl-matrix, gauss, roots, hl, green, kostka-foulkes, flags")
      ->required()
      ->check(CLI::IsMember({"kl-scalar", "kl-matrix", "gauss", "roots", "hl", "green", "kostka-foulkes", "flags"}));
  compute_cmd->add_flag("--bruteforce", opts.bruteforce, "flags: also count chains by enumeration");
  add_common(compute_cmd, opts);

  std::vector<std::string> ids;
  std::string suite;
  auto* verify_cmd = app.add_subcommand("verify", "run identity checks, one report per point");
  verify_cmd->add_option("checks", ids, "check ids, e.g. REG_ELLIPTIC");
  verify_cmd->add_option("--suite", suite, "named suite (acceptance)");
  add_common(verify_cmd, opts);

  std::vector<std::string> sweep_ids;
  auto* sweep_cmd = app.add_subcommand("sweep", "run checks over a grid and summarize");
  sweep_cmd->add_option("--checks", sweep_ids, "check ids (default all)")->delimiter(',');
  sweep_cmd->add_option("--suite", suite, "named suite (acceptance)");
  add_common(sweep_cmd, opts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (compute_cmd->parsed()) {
      print_compute(what, compute(what, opts), format_of(opts), out);
      return kExitOk;
    }
    if (verify_cmd->parsed()) return run_verify(ids, suite, opts, false, out);
    return run_verify(sweep_ids, suite, opts, true, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return code_of(e);
  }
}

}  // namespace klsum::cli
