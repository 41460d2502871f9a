#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "klsum/chars.hpp"
#include "klsum/glq.hpp"
#include "klsum/klscalar.hpp"
#include "klsum/symfunc.hpp"

namespace klsum::verify {

using cplx = std::complex<double>;
using symfunc::Partition;

enum class CheckId {
  RegElliptic,
  Semisimple,
  Multiplicativity,
  JordanGreen,
  JordanHl,
  SymPower,
  GeneralElement,
  KLambda,
  Bound,
  BoundGeneral,
  HdRelation,
  QBinom,
  HlFlags,
  Purity,
};

/// Upper-case catalog names, e.g. "REG_ELLIPTIC".
std::string to_string(CheckId id);
CheckId parse_check_id(const std::string& name);
std::vector<CheckId> all_checks();
/// Integer-valued checks pass only on exact equality.
bool is_exact_check(CheckId id);

struct Tolerances {
  double rel = 1e-6;
  /// Absolute tolerance per brute-force term.
  double abs_per_term = 1e-9;
};

struct CheckSpec {
  CheckId check = CheckId::RegElliptic;
  gf::FieldPtr field;  // F_q
  int k = 2;
  /// Exponents of alpha_1..alpha_k; empty means all trivial.
  std::vector<std::int64_t> alpha;
  gf::Elem psi = 1;

  /// The element x (or x_1) as a canonical block datum.
  std::optional<glq::ConjugacyDatum> x;
  /// Second block for MULTIPLICATIVITY.
  std::optional<glq::ConjugacyDatum> x2;

  // HD_RELATION: extension degrees and optional characters (all when unset).
  int a = 1;
  int b = 1;
  std::optional<std::int64_t> theta;
  std::optional<std::int64_t> chi;

  // HL_FLAGS / QBINOM.
  std::optional<Partition> mu;
  std::optional<Partition> lambda;
  std::uint64_t qa = 0;

  Tolerances tol;
  kl::EnumOptions enumeration;
};

struct VerificationReport {
  CheckId check = CheckId::RegElliptic;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  cplx lhs = 0.0;
  cplx rhs = 0.0;
  double abs_err = 0.0;
  double rel_err = 0.0;
  bool pass = false;
  std::uint64_t terms = 0;
  double elapsed_ms = 0.0;
  /// "ok", or "skipped" / "invalid" when the point could not be run.
  std::string status = "ok";
  std::string error;
};

/// Validates hypotheses (InvalidHypothesis) and computes both sides.
VerificationReport run_check(const CheckSpec& spec);

/// Runs each spec, isolating failures: ScaleExceeded marks a report
/// "skipped", any other library error marks it "invalid". Output order
/// follows the input.
std::vector<VerificationReport> sweep(const std::vector<CheckSpec>& specs, unsigned workers = 1);

struct SweepSummary {
  std::size_t total = 0;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t skipped = 0;
  std::size_t invalid = 0;
  double max_rel_err = 0.0;
  std::uint64_t total_terms = 0;
};
SweepSummary summarize(const std::vector<VerificationReport>& reports);

/// Parameter ranges; each check expands over the points that satisfy its
/// hypotheses. Empty lists take the defaults noted.
struct Grid {
  std::vector<CheckId> checks;
  std::vector<gf::FieldPtr> fields;
  std::vector<int> ns;               // matrix sizes, default {2}
  std::vector<int> as;               // eigenvalue degrees, default {1}
  std::vector<int> bs;               // Jordan sizes / HD powers, default {2}
  std::vector<int> ks;               // default {2}
  std::vector<std::uint64_t> qas;    // HL_FLAGS and QBINOM, default {2}
  std::optional<std::vector<std::int64_t>> alpha;
  gf::Elem psi = 1;
  std::optional<gf::Poly> poly;
  std::optional<Partition> mu;
  std::optional<Partition> lambda;
  std::optional<glq::ConjugacyDatum> x;
  std::optional<glq::ConjugacyDatum> x2;
  std::optional<std::int64_t> theta;
  std::optional<std::int64_t> chi;
  Tolerances tol;
  kl::EnumOptions enumeration;
};
std::vector<CheckSpec> expand(const Grid& grid);

/// Every conjugacy class of GL_n(F_q) as a block datum (polynomials other
/// than T, in lexicographic order).
std::vector<glq::ConjugacyDatum> conjugacy_classes(const gf::FieldPtr& field, int n);

/// Monic irreducibles of degree d other than T.
std::vector<gf::Poly> unit_irreducibles(const gf::FieldPtr& field, int d);

/// Class of T in F_q[T]/(f), inside the cached eigenvalue field.
gf::FieldElement canonical_eigenvalue(const gf::FieldPtr& field, const gf::Poly& f);

/// The field with qa elements (prime power), default defining polynomial.
gf::FieldPtr field_of_size(std::uint64_t qa);

/// K_lambda(J_mu(x)) in closed form for lambda |- n = a|mu|; zero unless
/// every part of lambda is divisible by a.
cplx k_lambda_jordan(const Partition& lambda, const Partition& mu, const chars::CharacterTuple& alpha,
                     const chars::AdditiveCharacter& psi, const gf::FieldElement& xi,
                     const kl::EnumOptions& opts = {});

/// Specs of the acceptance suite, tagged with the criterion number (1-9).
std::vector<std::pair<int, CheckSpec>> acceptance_specs();

/// Canonical JSON form (floats at 12 significant digits). elapsed_ms is
/// emitted as 0 unless include_timing.
nlohmann::ordered_json to_json(const VerificationReport& r, bool include_timing);
/// Rounds to 12 significant digits; -0 becomes 0.
double round12(double v);
/// Zeroes a component below 1e-12 max(1, |z|), then rounds both to 12 digits.
cplx snap(cplx z);
/// CSV header and row; params are flattened as key=value pairs joined by ';'.
std::string csv_header();
std::string to_csv(const VerificationReport& r, bool include_timing);

}  // namespace klsum::verify
