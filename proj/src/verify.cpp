#include "klsum/verify.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>

#include "klsum/error.hpp"
#include "klsum/flags.hpp"
#include "klsum/parallel.hpp"

namespace klsum::verify {

namespace {

using symfunc::BigInt;

struct CheckName {
  CheckId id;
  const char* name;
};

constexpr CheckName kNames[] = {
    {CheckId::RegElliptic, "REG_ELLIPTIC"},   {CheckId::Semisimple, "SEMISIMPLE"},
    {CheckId::Multiplicativity, "MULTIPLICATIVITY"}, {CheckId::JordanGreen, "JORDAN_GREEN"},
    {CheckId::JordanHl, "JORDAN_HL"},         {CheckId::SymPower, "SYM_POWER"},
    {CheckId::GeneralElement, "GENERAL_ELEMENT"}, {CheckId::KLambda, "K_LAMBDA"},
    {CheckId::Bound, "BOUND"},                {CheckId::BoundGeneral, "BOUND_GENERAL"},
    {CheckId::HdRelation, "HD_RELATION"},     {CheckId::QBinom, "QBINOM"},
    {CheckId::HlFlags, "HL_FLAGS"},           {CheckId::Purity, "PURITY"},
};

double sign(long long e) { return e % 2 == 0 ? 1.0 : -1.0; }

long long choose2(long long n) { return n * (n - 1) / 2; }

double qpow(std::uint64_t q, double e) { return std::pow(static_cast<double>(q), e); }

[[noreturn]] void invalid(const std::string& what) { throw Error(ErrorCode::InvalidHypothesis, what); }

chars::CharacterTuple alpha_of(const CheckSpec& s) {
  if (s.k < 1) invalid("k must be at least 1");
  if (s.alpha.empty()) return chars::CharacterTuple::trivial(s.field, s.k);
  if (static_cast<int>(s.alpha.size()) != s.k) {
    invalid("alpha has " + std::to_string(s.alpha.size()) + " entries but k = " + std::to_string(s.k));
  }
  return chars::CharacterTuple::from_exponents(s.field, s.alpha);
}

chars::AdditiveCharacter psi_of(const CheckSpec& s) {
  if (s.psi == 0 || !s.field->is_valid(s.psi)) invalid("psi twist must be a nonzero field element");
  return chars::AdditiveCharacter(s.field, s.psi);
}

void require_k_above_one(const CheckSpec& s) {
  if (s.k < 2) invalid(to_string(s.check) + " requires k > 1");
}

const glq::ConjugacyDatum& require_x(const CheckSpec& s) {
  if (!s.x) invalid(to_string(s.check) + " needs an element");
  s.x->validate(s.field);
  return *s.x;
}

// Single block (f, mu) for the Jordan family.
const std::pair<gf::Poly, Partition>& require_single_block(const CheckSpec& s) {
  const auto& x = require_x(s);
  if (x.blocks.size() != 1) invalid(to_string(s.check) + " needs a single block J_mu(x)");
  return x.blocks.front();
}

void fill_errors(VerificationReport& r, const Tolerances& tol) {
  r.abs_err = std::abs(r.lhs - r.rhs);
  const double mx = std::max(std::abs(r.lhs), std::abs(r.rhs));
  // Floor at 1 so that two noisy zeros do not report a large ratio.
  r.rel_err = r.abs_err / std::max(mx, 1.0);
  const double abs_tol = tol.abs_per_term * static_cast<double>(std::max<std::uint64_t>(r.terms, 1));
  r.pass = r.abs_err <= std::max(abs_tol, tol.rel * mx);
}

void fill_exact(VerificationReport& r, const BigInt& lhs, const BigInt& rhs) {
  r.lhs = lhs.convert_to<double>();
  r.rhs = rhs.convert_to<double>();
  const BigInt diff = lhs > rhs ? BigInt(lhs - rhs) : BigInt(rhs - lhs);
  r.abs_err = diff.convert_to<double>();
  const double mx = std::max(std::abs(r.lhs), std::abs(r.rhs));
  r.rel_err = mx > 0.0 ? r.abs_err / mx : 0.0;
  r.pass = lhs == rhs;
}

nlohmann::ordered_json cplx_json(cplx v) {
  const cplx z = snap(v);
  return {{"re", z.real()}, {"im", z.imag()}};
}

std::string big_str(const BigInt& v) { return v.str(); }

kl::SumResult kl_matrix(const CheckSpec& s, const glq::MatrixFq& m) {
  return glq::matrix_kloosterman_bruteforce(alpha_of(s), psi_of(s), m, s.enumeration);
}

cplx kl_scalar(const CheckSpec& s, const gf::FieldElement& xi, int m, std::uint64_t* terms) {
  const gf::FieldPtr ext = gf::extension_of_degree(xi.field(), m);
  const kl::SumResult r = kl::kloosterman_scalar(ext, alpha_of(s), psi_of(s), xi, s.enumeration);
  if (terms) *terms += r.terms;
  return r.value;
}

double purity_deviation(const kl::FrobeniusRoots& roots) {
  const double s = roots.expected_modulus();
  double dev = 0.0;
  for (const auto& w : roots.roots) dev = std::max(dev, std::abs(std::abs(w) - s) / s);
  return dev;
}

// Frobenius roots at the canonical eigenvalue of f, with the purity
// deviation recorded into params.
kl::FrobeniusRoots roots_at(const CheckSpec& s, const gf::Poly& f, VerificationReport& r, const std::string& key) {
  const gf::FieldElement xi = canonical_eigenvalue(s.field, f);
  kl::FrobeniusRoots roots = kl::frobenius_roots(alpha_of(s), psi_of(s), xi, s.enumeration);
  r.params[key] = round12(purity_deviation(roots));
  return roots;
}

// ---------------------------------------------------------------------------

void run_reg_elliptic(const CheckSpec& s, VerificationReport& r) {
  require_k_above_one(s);
  const auto& [f, mu] = require_single_block(s);
  if (mu != Partition{1}) invalid("REG_ELLIPTIC needs a block with partition (1)");
  const glq::MatrixFq x = s.x->matrix(s.field);
  if (!glq::is_regular_elliptic(x)) invalid("element is not regular elliptic");
  const int n = x.dim();
  const kl::SumResult lhs = kl_matrix(s, x);
  const gf::FieldElement xi = canonical_eigenvalue(s.field, f);
  std::uint64_t scalar_terms = 0;
  const cplx kl_n = kl_scalar(s, xi, 1, &scalar_terms);
  // Every conjugate xi^{q^i} gives the same scalar sum.
  double conj_dev = 0.0;
  for (int i = 1; i < n; ++i) {
    const gf::FieldElement xc = gf::frobenius(xi, *s.field, static_cast<std::uint64_t>(i));
    conj_dev = std::max(conj_dev, std::abs(kl_scalar(s, xc, 1, &scalar_terms) - kl_n));
  }
  r.lhs = lhs.value;
  r.rhs = sign(static_cast<long long>(n + 1) * (s.k - 1)) * qpow(s.field->size(), (s.k - 1) * choose2(n)) * kl_n;
  r.terms = lhs.terms;
  r.params["kl_n"] = cplx_json(kl_n);
  r.params["conjugate_dev"] = round12(conj_dev);
  fill_errors(r, s.tol);
  if (conj_dev > s.tol.abs_per_term * static_cast<double>(scalar_terms) + s.tol.rel * std::abs(kl_n)) {
    r.pass = false;
  }
}

void run_semisimple(const CheckSpec& s, VerificationReport& r) {
  require_k_above_one(s);
  const auto& x = require_x(s);
  for (const auto& [f, mu] : x.blocks) {
    if (mu != Partition{1}) invalid("SEMISIMPLE needs every block with partition (1)");
  }
  const glq::MatrixFq m = x.matrix(s.field);
  const int n = m.dim();
  const long long blocks = static_cast<long long>(x.blocks.size());
  const kl::SumResult lhs = kl_matrix(s, m);
  cplx prod = 1.0;
  for (const auto& [f, mu] : x.blocks) prod *= kl_scalar(s, canonical_eigenvalue(s.field, f), 1, nullptr);
  r.lhs = lhs.value;
  r.rhs = sign((n + blocks) * (s.k - 1)) * qpow(s.field->size(), (s.k - 1) * choose2(n)) * prod;
  r.terms = lhs.terms;
  fill_errors(r, s.tol);
}

void run_multiplicativity(const CheckSpec& s, VerificationReport& r) {
  if (!s.x || !s.x2) invalid("MULTIPLICATIVITY needs two elements");
  s.x->validate(s.field);
  s.x2->validate(s.field);
  const glq::MatrixFq x1 = s.x->matrix(s.field);
  const glq::MatrixFq x2 = s.x2->matrix(s.field);
  if (!glq::eigen_disjoint(x1, x2)) invalid("the two blocks share an eigenvalue");
  const kl::SumResult whole = kl_matrix(s, glq::block_diag(x1, x2));
  const kl::SumResult k1 = kl_matrix(s, x1);
  const kl::SumResult k2 = kl_matrix(s, x2);
  r.lhs = whole.value;
  r.rhs = qpow(s.field->size(), static_cast<double>(s.k - 1) * x1.dim() * x2.dim()) * k1.value * k2.value;
  r.terms = whole.terms;
  r.params["n1"] = x1.dim();
  r.params["n2"] = x2.dim();
  r.params["rhs_terms"] = k1.terms + k2.terms;
  fill_errors(r, s.tol);
}

struct JordanSetup {
  gf::Poly f;
  Partition mu;
  int a = 0;
  int b = 0;
  int n = 0;
  glq::MatrixFq matrix;
  gf::FieldElement xi;
  double prefactor = 0.0;  // (-1)^{(k-1)n} q^{(k-1)C(n,2)}
};

JordanSetup jordan_setup(const CheckSpec& s) {
  require_k_above_one(s);
  const auto& [f, mu] = require_single_block(s);
  const glq::MatrixFq m = s.x->matrix(s.field);
  const int a = gf::poly_degree(f);
  const int n = m.dim();
  return {f,
          mu,
          a,
          mu.size(),
          n,
          m,
          canonical_eigenvalue(s.field, f),
          sign(static_cast<long long>(s.k - 1) * n) * qpow(s.field->size(), (s.k - 1) * choose2(n))};
}

void note_jordan(const JordanSetup& j, VerificationReport& r) {
  r.params["a"] = j.a;
  r.params["b"] = j.b;
  r.params["n"] = j.n;
  r.params["mu"] = j.mu.to_string();
}

// Green-polynomial route, without the prefactor.
cplx green_route(const CheckSpec& s, const JordanSetup& j) {
  std::vector<cplx> kl(j.b + 1);
  for (int m = 1; m <= j.b; ++m) kl[m] = kl_scalar(s, j.xi, m, nullptr);
  BigInt qa = 1;
  for (int i = 0; i < j.a; ++i) qa *= s.field->size();
  cplx sum = 0.0;
  for (const auto& lambda : symfunc::partitions_of(j.b)) {
    const BigInt green = symfunc::green_polynomial(lambda, j.mu).eval(qa);
    if (green == 0) continue;
    cplx term = sign(static_cast<long long>(lambda.length()) * (s.k - 1)) * green.convert_to<double>() /
                static_cast<double>(lambda.z());
    for (int part : lambda.parts()) term *= kl[part];
    sum += term;
  }
  return sum;
}

double rel_dev(cplx u, cplx v) {
  const double mx = std::max(std::abs(u), std::abs(v));
  return mx > 0.0 ? std::abs(u - v) / mx : 0.0;
}

void run_jordan_green(const CheckSpec& s, VerificationReport& r) {
  const JordanSetup j = jordan_setup(s);
  note_jordan(j, r);
  const kl::SumResult lhs = kl_matrix(s, j.matrix);
  r.lhs = lhs.value;
  r.rhs = j.prefactor * green_route(s, j);
  r.terms = lhs.terms;
  fill_errors(r, s.tol);
}

void run_jordan_hl(const CheckSpec& s, VerificationReport& r, bool sym_power) {
  const JordanSetup j = jordan_setup(s);
  if (sym_power && j.mu != Partition{j.b}) invalid("SYM_POWER needs mu = (b)");
  note_jordan(j, r);
  const kl::SumResult lhs = kl_matrix(s, j.matrix);
  const kl::FrobeniusRoots roots = roots_at(s, j.f, r, "purity_dev");
  const cplx t(qpow(s.field->size(), j.a), 0.0);
  const cplx hl = symfunc::modified_hl_eval(j.mu, roots.roots, t);
  r.lhs = lhs.value;
  r.terms = lhs.terms;
  bool side_ok = true;
  if (sym_power) {
    // h_b by power sums against the Schur-route value of H~_(b).
    const cplx h = kl::sym_power_trace(roots, j.b);
    const double dev = rel_dev(h, hl);
    r.params["schur_route_dev"] = round12(dev);
    side_ok = dev <= 1e-9;
    r.rhs = j.prefactor * h;
  } else {
    r.rhs = j.prefactor * hl;
    const cplx green = j.prefactor * green_route(s, j);
    const double dev = std::abs(green - r.rhs);
    r.params["green_route_dev"] = round12(rel_dev(green, r.rhs));
    side_ok = dev <= std::max(s.tol.abs_per_term * static_cast<double>(r.terms),
                              s.tol.rel * std::max(std::abs(green), std::abs(r.rhs)));
    if (j.b == 1) {
      // Same element seen as regular elliptic.
      const cplx reg = sign(static_cast<long long>(j.n + 1) * (s.k - 1)) *
                       qpow(s.field->size(), (s.k - 1) * choose2(j.n)) * kl_scalar(s, j.xi, 1, nullptr);
      r.params["reg_elliptic_dev"] = round12(rel_dev(reg, r.rhs));
      side_ok = side_ok && std::abs(reg - r.rhs) <= std::max(1e-9, s.tol.rel * std::abs(reg));
    }
  }
  fill_errors(r, s.tol);
  r.pass = r.pass && side_ok;
}

void run_general_element(const CheckSpec& s, VerificationReport& r) {
  require_k_above_one(s);
  const auto& x = require_x(s);
  const glq::MatrixFq m = x.matrix(s.field);
  const int n = m.dim();
  const kl::SumResult lhs = kl_matrix(s, m);
  cplx prod = 1.0;
  double purity = 0.0;
  for (const auto& [f, mu] : x.blocks) {
    const gf::FieldElement xi = canonical_eigenvalue(s.field, f);
    const kl::FrobeniusRoots roots = kl::frobenius_roots(alpha_of(s), psi_of(s), xi, s.enumeration);
    purity = std::max(purity, purity_deviation(roots));
    prod *= symfunc::modified_hl_eval(mu, roots.roots, cplx(qpow(s.field->size(), gf::poly_degree(f)), 0.0));
  }
  r.params["n"] = n;
  r.params["purity_dev"] = round12(purity);
  r.lhs = lhs.value;
  r.rhs = sign(static_cast<long long>(s.k - 1) * n) * qpow(s.field->size(), (s.k - 1) * choose2(n)) * prod;
  r.terms = lhs.terms;
  fill_errors(r, s.tol);
}

void run_k_lambda(const CheckSpec& s, VerificationReport& r) {
  const JordanSetup j = jordan_setup(s);
  note_jordan(j, r);
  const kl::SumResult lhs = kl_matrix(s, j.matrix);
  cplx sum = 0.0;
  std::size_t vanishing = 0;
  for (const auto& lambda : symfunc::partitions_of(j.n)) {
    const cplx v = k_lambda_jordan(lambda, j.mu, alpha_of(s), psi_of(s), j.xi, s.enumeration);
    const bool admissible =
        std::all_of(lambda.parts().begin(), lambda.parts().end(), [&](int p) { return p % j.a == 0; });
    if (!admissible) {
      if (v != cplx(0.0)) r.pass = false;
      ++vanishing;
    }
    sum += v;
  }
  r.params["vanishing_lambdas"] = vanishing;
  r.lhs = lhs.value;
  r.rhs = sign(static_cast<long long>(s.k - 1) * j.n) * sum;
  r.terms = lhs.terms;
  fill_errors(r, s.tol);
}

void finish_bound(const CheckSpec& s, VerificationReport& r, const kl::SumResult& lhs, int n, const BigInt& flags,
                  bool regular, const BigInt& binomial) {
  r.lhs = std::abs(lhs.value);
  r.rhs = qpow(s.field->size(), (s.k - 1) * n * n / 2.0) * flags.convert_to<double>();
  r.terms = lhs.terms;
  r.params["n"] = n;
  r.params["flag_count"] = big_str(flags);
  if (regular) r.params["binomial"] = big_str(binomial);
  r.abs_err = std::max(0.0, r.lhs.real() - r.rhs.real());
  r.rel_err = r.rhs.real() > 0.0 ? r.abs_err / r.rhs.real() : 0.0;
  const double slack = s.tol.abs_per_term * static_cast<double>(std::max<std::uint64_t>(r.terms, 1));
  r.pass = r.lhs.real() <= r.rhs.real() + slack && (!regular || flags == binomial);
}

void run_bound(const CheckSpec& s, VerificationReport& r) {
  const JordanSetup j = jordan_setup(s);
  note_jordan(j, r);
  const kl::SumResult lhs = kl_matrix(s, j.matrix);
  BigInt qa = 1;
  for (int i = 0; i < j.a; ++i) qa *= s.field->size();
  const BigInt flags = flags::count_fixed_length_k_weak_flags(j.mu, qa, s.k);
  const bool regular = j.mu == Partition{j.b};
  finish_bound(s, r, lhs, j.n, flags, regular, symfunc::binomial(j.b + s.k - 1, j.b));
}

void run_bound_general(const CheckSpec& s, VerificationReport& r) {
  require_k_above_one(s);
  const auto& x = require_x(s);
  const glq::MatrixFq m = x.matrix(s.field);
  const kl::SumResult lhs = kl_matrix(s, m);
  BigInt flags = 1;
  BigInt binom = 1;
  bool regular = true;
  for (const auto& [f, mu] : x.blocks) {
    BigInt qa = 1;
    for (int i = 0; i < gf::poly_degree(f); ++i) qa *= s.field->size();
    flags *= flags::count_fixed_length_k_weak_flags(mu, qa, s.k);
    binom *= symfunc::binomial(mu.size() + s.k - 1, mu.size());
    regular = regular && mu == Partition{mu.size()};
  }
  finish_bound(s, r, lhs, m.dim(), flags, regular, binom);
}

void run_hd(const CheckSpec& s, VerificationReport& r) {
  if (s.a < 1 || s.b < 1) invalid("HD_RELATION needs a, b >= 1");
  const chars::AdditiveCharacter psi = psi_of(s);
  const gf::FieldPtr Ea = gf::extension_of_degree(s.field, s.a);
  const gf::FieldPtr Eab = gf::extension_of_degree(Ea, s.b);
  std::vector<std::int64_t> thetas, chis;
  if (s.theta) {
    thetas.push_back(*s.theta);
  } else {
    for (std::uint64_t c = 0; c + 1 < Ea->size(); ++c) thetas.push_back(static_cast<std::int64_t>(c));
  }
  if (s.chi) {
    chis.push_back(*s.chi);
  } else {
    for (std::uint64_t c = 0; c + 1 < s.field->size(); ++c) chis.push_back(static_cast<std::int64_t>(c));
  }
  bool all_pass = true;
  double worst = -1.0;
  VerificationReport best;
  std::int64_t worst_theta = 0, worst_chi = 0;
  std::uint64_t terms = 0;
  for (auto th : thetas) {
    for (auto c : chis) {
      const chars::MultiplicativeCharacter theta(Ea, th);
      const chars::MultiplicativeCharacter chi(s.field, c);
      VerificationReport p;
      p.lhs = std::pow(chars::gauss_sum(theta, chi, psi), s.b);
      p.rhs = chars::gauss_sum(chars::compose_with_norm(theta, Eab), chi, psi);
      p.terms = (Ea->size() - 1) + (Eab->size() - 1);
      terms += p.terms;
      fill_errors(p, s.tol);
      all_pass = all_pass && p.pass;
      if (p.rel_err > worst) {
        worst = p.rel_err;
        best = p;
        worst_theta = th;
        worst_chi = c;
      }
    }
  }
  r.params["a"] = s.a;
  r.params["b"] = s.b;
  r.params["points"] = thetas.size() * chis.size();
  r.params["worst_theta"] = worst_theta;
  r.params["worst_chi"] = worst_chi;
  r.lhs = best.lhs;
  r.rhs = best.rhs;
  r.abs_err = best.abs_err;
  r.rel_err = best.rel_err;
  r.terms = terms;
  r.pass = all_pass;
}

void run_qbinom(const CheckSpec& s, VerificationReport& r) {
  if (s.qa < 2) invalid("QBINOM needs q^a >= 2");
  if (s.b < 1) invalid("QBINOM needs b >= 1");
  const BigInt t = s.qa;
  BigInt lhs = 0;
  for (int j = 0; j <= s.b - 1; ++j) {
    BigInt term = symfunc::q_binomial(s.b - 1, j).eval(t);
    for (int e = 0; e < (j + 1) * j / 2; ++e) term *= t;
    lhs += (j % 2 == 0) ? term : BigInt(-term);
  }
  BigInt rhs = (s.b - 1) % 2 == 0 ? 1 : -1;
  BigInt tj = 1;
  for (int j = 1; j <= s.b - 1; ++j) {
    tj *= t;
    rhs *= tj - 1;
  }
  r.params["qa"] = s.qa;
  r.params["b"] = s.b;
  r.params["lhs_exact"] = big_str(lhs);
  r.params["rhs_exact"] = big_str(rhs);
  fill_exact(r, lhs, rhs);
}

void run_hl_flags(const CheckSpec& s, VerificationReport& r) {
  if (!s.mu || !s.lambda) invalid("HL_FLAGS needs mu and lambda");
  if (s.mu->size() != s.lambda->size() || s.mu->empty()) invalid("HL_FLAGS needs |mu| = |lambda| > 0");
  const gf::FieldPtr F = field_of_size(s.qa);
  const glq::MatrixFq g = glq::jordan_matrix(glq::MatrixFq::scalar(F, 1, F->generator()), *s.mu);
  const BigInt brute = flags::count_fixed_weak_flags_bruteforce(symfunc::WeakComposition(s.lambda->parts()), g,
                                                                s.enumeration.workers);
  const BigInt formula = flags::count_fixed_flags_formula(*s.mu, *s.lambda, s.qa);
  const auto coeffs = symfunc::modified_hl_monomial_coeffs(*s.mu, s.lambda->length(), s.qa);
  const BigInt hl = coeffs.at(*s.lambda);
  r.params["mu"] = s.mu->to_string();
  r.params["lambda"] = s.lambda->to_string();
  r.params["qa"] = s.qa;
  r.params["formula"] = big_str(formula);
  r.params["hl_coeff"] = big_str(hl);
  fill_exact(r, brute, formula);
  r.pass = r.pass && hl == formula;
}

void run_purity(const CheckSpec& s, VerificationReport& r) {
  const auto& [f, mu] = require_single_block(s);
  const gf::FieldElement xi = canonical_eigenvalue(s.field, f);
  const kl::FrobeniusRoots roots = kl::frobenius_roots(alpha_of(s), psi_of(s), xi, s.enumeration);
  const double expect = roots.expected_modulus();
  double worst = 0.0;
  cplx worst_root = roots.roots.front();
  for (const auto& w : roots.roots) {
    const double dev = std::abs(std::abs(w) - expect);
    if (dev > worst) {
      worst = dev;
      worst_root = w;
    }
  }
  // Power sums recomputed from the returned roots.
  double newton = 0.0;
  for (int m = 1; m <= roots.k; ++m) {
    const cplx pm = symfunc::power_sum(m, roots.roots);
    const double scale = std::max(std::abs(roots.power_sums[m]), std::pow(expect, m));
    newton = std::max(newton, std::abs(pm - roots.power_sums[m]) / scale);
  }
  r.params["a"] = gf::poly_degree(f);
  r.params["newton_dev"] = round12(newton);
  r.params["roots"] = nlohmann::ordered_json::array();
  for (const auto& w : roots.roots) r.params["roots"].push_back(cplx_json(w));
  r.lhs = std::abs(worst_root);
  r.rhs = expect;
  r.terms = roots.terms;
  r.abs_err = worst;
  r.rel_err = worst / expect;
  r.pass = r.rel_err <= s.tol.rel && newton <= s.tol.rel;
}

nlohmann::ordered_json base_params(const CheckSpec& s) {
  nlohmann::ordered_json p = nlohmann::ordered_json::object();
  switch (s.check) {
    case CheckId::QBinom:
    case CheckId::HlFlags:
      return p;
    default:
      break;
  }
  if (s.field) {
    p["field"] = s.field->descriptor();
    p["q"] = s.field->size();
  }
  if (s.check != CheckId::HdRelation) {
    p["k"] = s.k;
    std::vector<std::int64_t> alpha = s.alpha.empty() ? std::vector<std::int64_t>(std::max(s.k, 0), 0) : s.alpha;
    p["alpha"] = alpha;
  }
  p["psi"] = s.psi;
  if (s.x) p["x"] = s.x->to_string();
  if (s.x2) p["x2"] = s.x2->to_string();
  if (s.theta) p["theta"] = *s.theta;
  if (s.chi) p["chi"] = *s.chi;
  return p;
}

}  // namespace

std::string to_string(CheckId id) {
  for (const auto& n : kNames) {
    if (n.id == id) return n.name;
  }
  return "UNKNOWN";
}

CheckId parse_check_id(const std::string& name) {
  for (const auto& n : kNames) {
    if (name == n.name) return n.id;
  }
  throw Error(ErrorCode::ParseError, "unknown check '" + name + "'");
}

std::vector<CheckId> all_checks() {
  std::vector<CheckId> out;
  for (const auto& n : kNames) out.push_back(n.id);
  return out;
}

bool is_exact_check(CheckId id) { return id == CheckId::QBinom || id == CheckId::HlFlags; }

gf::FieldPtr field_of_size(std::uint64_t qa) {
  for (std::uint64_t p = 2; p <= qa; ++p) {
    if (qa % p != 0) continue;
    if (!gf::is_prime(p)) invalid(std::to_string(qa) + " is not a prime power");
    std::uint64_t v = qa;
    int d = 0;
    while (v % p == 0) {
      v /= p;
      ++d;
    }
    if (v != 1) invalid(std::to_string(qa) + " is not a prime power");
    if (qa > gf::kMaxFieldSize) throw Error(ErrorCode::ScaleExceeded, "field too large");
    return gf::extension_of_degree(gf::prime_field(static_cast<std::uint32_t>(p)), d);
  }
  invalid(std::to_string(qa) + " is not a prime power");
}

std::vector<gf::Poly> unit_irreducibles(const gf::FieldPtr& field, int d) {
  std::vector<gf::Poly> out;
  for (auto& f : gf::irreducible_polynomials(*field, d)) {
    if (f[0] != 0) out.push_back(std::move(f));
  }
  return out;
}

gf::FieldElement canonical_eigenvalue(const gf::FieldPtr& field, const gf::Poly& f) {
  const gf::FieldPtr E = gf::eigen_field(field, f);
  if (gf::poly_degree(f) == 1) {
    const gf::Elem root[] = {field->neg(f[0])};
    return gf::FieldElement::from_coefficients(E, root);
  }
  const gf::Elem t[] = {0, 1};
  return gf::FieldElement::from_coefficients(E, t);
}

cplx k_lambda_jordan(const Partition& lambda, const Partition& mu, const chars::CharacterTuple& alpha,
                     const chars::AdditiveCharacter& psi, const gf::FieldElement& xi, const kl::EnumOptions& opts) {
  const gf::FieldPtr& F = alpha.field();
  const int a = xi.field()->degree_over(*F);
  const int n = a * mu.size();
  if (lambda.size() != n) throw Error(ErrorCode::SizeMismatch, "|lambda| must equal a |mu|");
  std::vector<int> reduced;
  for (int p : lambda.parts()) {
    if (p % a != 0) return 0.0;
    reduced.push_back(p / a);
  }
  const Partition lp(reduced);
  const int k = alpha.size();
  BigInt qa = 1;
  for (int i = 0; i < a; ++i) qa *= F->size();
  const BigInt green = symfunc::green_polynomial(lp, mu).eval(qa);
  cplx v = sign(static_cast<long long>(lambda.length()) * (k - 1)) * qpow(F->size(), (k - 1) * choose2(n)) *
           green.convert_to<double>() / static_cast<double>(lp.z());
  for (int part : lp.parts()) {
    const gf::FieldPtr ext = gf::extension_of_degree(xi.field(), part);
    v *= kl::kloosterman_scalar(ext, alpha, psi, xi, opts).value;
  }
  return v;
}

VerificationReport run_check(const CheckSpec& spec) {
  const auto start = std::chrono::steady_clock::now();
  VerificationReport r;
  r.check = spec.check;
  r.params = base_params(spec);
  if (!spec.field && spec.check != CheckId::QBinom && spec.check != CheckId::HlFlags) {
    invalid("no field given");
  }
  switch (spec.check) {
    case CheckId::RegElliptic: run_reg_elliptic(spec, r); break;
    case CheckId::Semisimple: run_semisimple(spec, r); break;
    case CheckId::Multiplicativity: run_multiplicativity(spec, r); break;
    case CheckId::JordanGreen: run_jordan_green(spec, r); break;
    case CheckId::JordanHl: run_jordan_hl(spec, r, false); break;
    case CheckId::SymPower: run_jordan_hl(spec, r, true); break;
    case CheckId::GeneralElement: run_general_element(spec, r); break;
    case CheckId::KLambda: {
      r.pass = true;
      run_k_lambda(spec, r);
      break;
    }
    case CheckId::Bound: run_bound(spec, r); break;
    case CheckId::BoundGeneral: run_bound_general(spec, r); break;
    case CheckId::HdRelation: run_hd(spec, r); break;
    case CheckId::QBinom: run_qbinom(spec, r); break;
    case CheckId::HlFlags: run_hl_flags(spec, r); break;
    case CheckId::Purity: run_purity(spec, r); break;
  }
  r.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::vector<VerificationReport> sweep(const std::vector<CheckSpec>& specs, unsigned workers) {
  std::vector<VerificationReport> out(specs.size());
  parallel_for(specs.size(), workers, [&](std::uint64_t i) {
    try {
      out[i] = run_check(specs[i]);
    } catch (const Error& e) {
      VerificationReport r;
      r.check = specs[i].check;
      try {
        r.params = base_params(specs[i]);
      } catch (const std::exception&) {
      }
      r.status = e.code() == ErrorCode::ScaleExceeded ? "skipped" : "invalid";
      r.error = e.what();
      out[i] = std::move(r);
    }
  });
  return out;
}

SweepSummary summarize(const std::vector<VerificationReport>& reports) {
  SweepSummary s;
  for (const auto& r : reports) {
    ++s.total;
    if (r.status != "ok") {
      r.status == "skipped" ? ++s.skipped : ++s.invalid;
      continue;
    }
    r.pass ? ++s.passed : ++s.failed;
    s.max_rel_err = std::max(s.max_rel_err, r.rel_err);
    s.total_terms += r.terms;
  }
  return s;
}

std::vector<glq::ConjugacyDatum> conjugacy_classes(const gf::FieldPtr& field, int n) {
  std::vector<gf::Poly> polys;
  for (int d = 1; d <= n; ++d) {
    for (auto& f : unit_irreducibles(field, d)) polys.push_back(std::move(f));
  }
  std::vector<glq::ConjugacyDatum> out;
  glq::ConjugacyDatum cur;
  std::function<void(std::size_t, int)> rec = [&](std::size_t start, int remaining) {
    if (remaining == 0) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = start; i < polys.size(); ++i) {
      const int d = gf::poly_degree(polys[i]);
      for (int size = 1; size * d <= remaining; ++size) {
        for (const auto& mu : symfunc::partitions_of(size)) {
          cur.blocks.emplace_back(polys[i], mu);
          rec(i + 1, remaining - size * d);
          cur.blocks.pop_back();
        }
      }
    }
  };
  rec(0, n);
  return out;
}

std::vector<CheckSpec> expand(const Grid& grid) {
  const std::vector<int> ns = grid.ns.empty() ? std::vector<int>{2} : grid.ns;
  const std::vector<int> as = grid.as.empty() ? std::vector<int>{1} : grid.as;
  const std::vector<int> bs = grid.bs.empty() ? std::vector<int>{2} : grid.bs;
  const std::vector<std::uint64_t> qas = grid.qas.empty() ? std::vector<std::uint64_t>{2} : grid.qas;
  std::vector<int> ks = grid.ks;
  if (ks.empty()) ks = {grid.alpha ? static_cast<int>(grid.alpha->size()) : 2};

  std::vector<CheckSpec> out;
  auto base = [&](CheckId id, const gf::FieldPtr& F, int k) {
    CheckSpec s;
    s.check = id;
    s.field = F;
    s.k = k;
    if (grid.alpha) s.alpha = *grid.alpha;
    s.psi = grid.psi;
    s.tol = grid.tol;
    s.enumeration = grid.enumeration;
    s.theta = grid.theta;
    s.chi = grid.chi;
    return s;
  };
  auto polys_of_degree = [&](const gf::FieldPtr& F, int d) {
    if (grid.poly) {
      if (gf::poly_degree(*grid.poly) != d) return std::vector<gf::Poly>{};
      return std::vector<gf::Poly>{*grid.poly};
    }
    return unit_irreducibles(F, d);
  };
  auto mus_of = [&](int b) {
    if (grid.mu) return grid.mu->size() == b ? std::vector<Partition>{*grid.mu} : std::vector<Partition>{};
    return symfunc::partitions_of(b);
  };

  for (CheckId id : grid.checks) {
    if (id == CheckId::QBinom) {
      for (auto qa : qas) {
        for (int b : bs) {
          CheckSpec s = base(id, nullptr, 0);
          s.qa = qa;
          s.b = b;
          out.push_back(s);
        }
      }
      continue;
    }
    if (id == CheckId::HlFlags) {
      for (auto qa : qas) {
        for (int b : bs) {
          for (const auto& mu : mus_of(b)) {
            for (const auto& lambda : symfunc::partitions_of(b)) {
              if (grid.lambda && *grid.lambda != lambda) continue;
              CheckSpec s = base(id, nullptr, 0);
              s.qa = qa;
              s.mu = mu;
              s.lambda = lambda;
              out.push_back(s);
            }
          }
        }
      }
      continue;
    }
    for (const auto& F : grid.fields) {
      if (id == CheckId::HdRelation) {
        for (int a : as) {
          for (int b : bs) {
            CheckSpec s = base(id, F, 0);
            s.a = a;
            s.b = b;
            out.push_back(s);
          }
        }
        continue;
      }
      for (int k : ks) {
        if (grid.x) {
          CheckSpec s = base(id, F, k);
          s.x = grid.x;
          s.x2 = grid.x2;
          out.push_back(s);
          continue;
        }
        switch (id) {
          case CheckId::RegElliptic:
            for (int n : ns) {
              for (const auto& f : polys_of_degree(F, n)) {
                CheckSpec s = base(id, F, k);
                s.x = glq::ConjugacyDatum{{{f, Partition{1}}}};
                out.push_back(s);
              }
            }
            break;
          case CheckId::Purity:
            for (int a : as) {
              for (const auto& f : polys_of_degree(F, a)) {
                CheckSpec s = base(id, F, k);
                s.x = glq::ConjugacyDatum{{{f, Partition{1}}}};
                out.push_back(s);
              }
            }
            break;
          case CheckId::JordanGreen:
          case CheckId::JordanHl:
          case CheckId::SymPower:
          case CheckId::KLambda:
          case CheckId::Bound:
            for (int a : as) {
              for (int b : bs) {
                for (const auto& f : polys_of_degree(F, a)) {
                  for (const auto& mu : mus_of(b)) {
                    if (id == CheckId::SymPower && mu != Partition{b}) continue;
                    CheckSpec s = base(id, F, k);
                    s.x = glq::ConjugacyDatum{{{f, mu}}};
                    out.push_back(s);
                  }
                }
              }
            }
            break;
          case CheckId::Semisimple:
          case CheckId::GeneralElement:
          case CheckId::BoundGeneral:
            for (int n : ns) {
              for (const auto& c : conjugacy_classes(F, n)) {
                if (id == CheckId::Semisimple &&
                    !std::all_of(c.blocks.begin(), c.blocks.end(),
                                 [](const auto& blk) { return blk.second == Partition{1}; })) {
                  continue;
                }
                CheckSpec s = base(id, F, k);
                s.x = c;
                out.push_back(s);
              }
            }
            break;
          case CheckId::Multiplicativity:
            for (int n : ns) {
              for (int n1 = 1; 2 * n1 <= n; ++n1) {
                const auto c1 = conjugacy_classes(F, n1);
                const auto c2 = conjugacy_classes(F, n - n1);
                for (const auto& x1 : c1) {
                  for (const auto& x2 : c2) {
                    bool disjoint = true;
                    for (const auto& b1 : x1.blocks) {
                      for (const auto& b2 : x2.blocks) disjoint = disjoint && b1.first != b2.first;
                    }
                    if (!disjoint) continue;
                    CheckSpec s = base(id, F, k);
                    s.x = x1;
                    s.x2 = x2;
                    out.push_back(s);
                  }
                }
              }
            }
            break;
          default:
            break;
        }
      }
    }
  }
  return out;
}

std::vector<std::pair<int, CheckSpec>> acceptance_specs() {
  std::vector<std::pair<int, CheckSpec>> out;
  auto add = [&](int criterion, CheckSpec s) { out.emplace_back(criterion, std::move(s)); };
  const gf::FieldPtr F2 = gf::prime_field(2);

  // 1: regular elliptic elements, every irreducible of degree n.
  struct RegPoint {
    std::uint32_t q;
    int n;
    int k;
    std::vector<std::int64_t> alpha;
  };
  const std::vector<RegPoint> reg = {{2, 2, 2, {}}, {2, 3, 2, {}}, {3, 2, 2, {}},
                                     {2, 2, 3, {}}, {3, 2, 2, {1, 0}}, {5, 2, 2, {}}};
  for (const auto& p : reg) {
    const gf::FieldPtr F = gf::prime_field(p.q);
    for (const auto& f : unit_irreducibles(F, p.n)) {
      CheckSpec s;
      s.check = CheckId::RegElliptic;
      s.field = F;
      s.k = p.k;
      s.alpha = p.alpha;
      s.x = glq::ConjugacyDatum{{{f, Partition{1}}}};
      add(1, s);
      s.check = CheckId::Bound;
      add(6, s);
    }
  }

  // 2, 3: Jordan blocks.
  struct JordanPoint {
    std::uint32_t q;
    int a;
    int b;
    int k;
  };
  const std::vector<JordanPoint> jordan = {{2, 1, 2, 2}, {2, 1, 3, 2}, {3, 1, 2, 2}, {2, 2, 2, 2}, {2, 1, 2, 3}};
  for (const auto& p : jordan) {
    const gf::FieldPtr F = gf::prime_field(p.q);
    for (const auto& f : unit_irreducibles(F, p.a)) {
      for (const auto& mu : symfunc::partitions_of(p.b)) {
        CheckSpec s;
        s.field = F;
        s.k = p.k;
        s.x = glq::ConjugacyDatum{{{f, mu}}};
        for (CheckId id : {CheckId::JordanGreen, CheckId::JordanHl, CheckId::KLambda}) {
          s.check = id;
          add(2, s);
        }
        if (mu == Partition{p.b}) {
          s.check = CheckId::SymPower;
          add(3, s);
        }
        s.check = CheckId::Bound;
        add(6, s);
      }
      CheckSpec pur;
      pur.check = CheckId::Purity;
      pur.field = F;
      pur.k = p.k;
      pur.x = glq::ConjugacyDatum{{{f, Partition{1}}}};
      add(8, pur);
    }
  }

  // 4: multiplicativity over F_2 with k = 2.
  const gf::Poly t1{1, 1}, t2{1, 1, 1};
  const std::vector<std::pair<glq::ConjugacyDatum, glq::ConjugacyDatum>> pairs = {
      {glq::ConjugacyDatum{{{t1, Partition{1}}}}, glq::ConjugacyDatum{{{t2, Partition{1}}}}},
      {glq::ConjugacyDatum{{{t1, Partition{2}}}}, glq::ConjugacyDatum{{{t2, Partition{1}}}}},
      {glq::ConjugacyDatum{{{t1, Partition{1, 1}}}}, glq::ConjugacyDatum{{{t2, Partition{1}}}}},
  };
  for (const auto& [x1, x2] : pairs) {
    CheckSpec s;
    s.check = CheckId::Multiplicativity;
    s.field = F2;
    s.k = 2;
    s.x = x1;
    s.x2 = x2;
    add(4, s);
    CheckSpec bound = s;
    bound.check = CheckId::BoundGeneral;
    bound.x2.reset();
    bound.x->blocks.push_back(x2.blocks.front());
    add(6, bound);
  }

  // 5: general element diag(J_(2)(T+1), companion(T^2+T+1)).
  {
    CheckSpec s;
    s.check = CheckId::GeneralElement;
    s.field = F2;
    s.k = 2;
    s.x = glq::ConjugacyDatum{{{t1, Partition{2}}, {t2, Partition{1}}}};
    add(5, s);
    s.check = CheckId::BoundGeneral;
    add(6, s);
    for (const auto& f : {t1, t2}) {
      CheckSpec pur;
      pur.check = CheckId::Purity;
      pur.field = F2;
      pur.k = 2;
      pur.x = glq::ConjugacyDatum{{{f, Partition{1}}}};
      add(8, pur);
    }
  }

  // 7: flag counts.
  for (std::uint64_t qa : {2, 3, 4}) {
    for (int b = 1; b <= 4; ++b) {
      for (const auto& mu : symfunc::partitions_of(b)) {
        for (const auto& lambda : symfunc::partitions_of(b)) {
          CheckSpec s;
          s.check = CheckId::HlFlags;
          s.qa = qa;
          s.mu = mu;
          s.lambda = lambda;
          add(7, s);
        }
      }
    }
  }

  // 8: Hasse-Davenport at relative tolerance 1e-9.
  const std::vector<std::array<int, 3>> hd = {{2, 1, 2}, {2, 1, 3}, {3, 1, 2}, {2, 2, 2}, {3, 2, 2}};
  for (const auto& [q, a, b] : hd) {
    CheckSpec s;
    s.check = CheckId::HdRelation;
    s.field = gf::prime_field(static_cast<std::uint32_t>(q));
    s.a = a;
    s.b = b;
    s.tol.rel = 1e-9;
    add(8, s);
  }

  // 9: q-binomial identity.
  for (std::uint64_t qa : {2, 3, 4, 5, 8, 9}) {
    for (int b = 1; b <= 6; ++b) {
      CheckSpec s;
      s.check = CheckId::QBinom;
      s.qa = qa;
      s.b = b;
      add(9, s);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Serialization

double round12(double v) {
  if (v == 0.0 || !std::isfinite(v)) return v == 0.0 ? 0.0 : v;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  const double r = std::strtod(buf, nullptr);
  return r == 0.0 ? 0.0 : r;
}

cplx snap(cplx z) {
  const double floor = 1e-12 * std::max(1.0, std::abs(z));
  const double re = std::abs(z.real()) < floor ? 0.0 : z.real();
  const double im = std::abs(z.imag()) < floor ? 0.0 : z.imag();
  return {round12(re), round12(im)};
}

nlohmann::ordered_json to_json(const VerificationReport& r, bool include_timing) {
  nlohmann::ordered_json j;
  j["check"] = to_string(r.check);
  j["params"] = r.params;
  j["lhs"] = cplx_json(r.lhs);
  j["rhs"] = cplx_json(r.rhs);
  j["abs_err"] = round12(r.abs_err);
  j["rel_err"] = round12(r.rel_err);
  j["pass"] = r.pass;
  j["terms"] = r.terms;
  j["elapsed_ms"] = include_timing ? round12(r.elapsed_ms) : 0.0;
  if (r.status != "ok") {
    j["status"] = r.status;
    j["error"] = r.error;
  }
  return j;
}

namespace {

std::string fmt12(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", round12(v));
  return buf;
}

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string csv_header() {
  return "check,params,lhs_re,lhs_im,rhs_re,rhs_im,abs_err,rel_err,pass,terms,elapsed_ms,status,error";
}

std::string to_csv(const VerificationReport& r, bool include_timing) {
  std::string params;
  for (auto it = r.params.begin(); it != r.params.end(); ++it) {
    if (!params.empty()) params += ';';
    params += it.key() + '=' + (it.value().is_string() ? it.value().get<std::string>() : it.value().dump());
  }
  std::string row = to_string(r.check) + ',' + csv_quote(params);
  const cplx lhs = snap(r.lhs), rhs = snap(r.rhs);
  for (double v : {lhs.real(), lhs.imag(), rhs.real(), rhs.imag(), r.abs_err, r.rel_err}) {
    row += ',' + fmt12(v);
  }
  row += std::string(",") + (r.pass ? "true" : "false") + ',' + std::to_string(r.terms) + ',' +
         (include_timing ? fmt12(r.elapsed_ms) : "0") + ',' + r.status + ',' + csv_quote(r.error);
  return row;
}

}  // namespace klsum::verify
