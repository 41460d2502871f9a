#pragma once

// Finite fields F_{p^d} built as one-step towers F = B[S]/(f(S)) over a base
// field B, down to a prime field.
//
// Elements are encoded as integers: the element sum_i c_i S^i (c_i in B) has
// index sum_i idx(c_i) |B|^i. Because the base field uses the same encoding,
// the base-p digits of an index are the absolute F_p coordinates, and a base
// element keeps its index when viewed inside an extension.

#include <complex>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace klsum::gf {

using Elem = std::uint32_t;
/// Polynomial over some field, coefficients low-to-high.
using Poly = std::vector<Elem>;

inline constexpr std::uint64_t kMaxFieldSize = std::uint64_t{1} << 20;

class Field;
using FieldPtr = std::shared_ptr<const Field>;

class Field {
 public:
  Field(const Field&) = delete;
  Field& operator=(const Field&) = delete;

  std::uint32_t characteristic() const { return p_; }
  /// Degree over the immediate base (1 for a prime field).
  int degree() const { return degree_; }
  int absolute_degree() const { return abs_degree_; }
  std::uint64_t size() const { return size_; }
  /// Size of the immediate base field, or p for a prime field.
  std::uint64_t base_size() const { return base_size_; }
  bool is_prime() const { return base_ == nullptr; }
  const FieldPtr& base() const { return base_; }
  /// Monic defining polynomial over base(); empty for prime fields.
  const Poly& modulus() const { return modulus_; }
  std::uint64_t id() const { return id_; }

  /// `p^d` for a prime-rooted tower of height one, otherwise the chain of
  /// defining polynomials, e.g. `2^2:1,1,1/2:1,0,1`.
  std::string descriptor() const;

  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem mul(Elem a, Elem b) const;
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const;
  /// Arbitrary integer exponent; negative exponents go through the inverse.
  Elem pow(Elem a, std::int64_t e) const;
  Elem scale(Elem a, std::uint64_t times) const;

  bool is_valid(Elem a) const { return a < size_; }

  /// Smallest element (in index order) of multiplicative order size()-1.
  Elem generator() const;
  /// Exponent e in [0, size()-1) with generator()^e = a.
  std::uint64_t dlog(Elem a) const;
  Elem exp(std::uint64_t e) const;

  std::vector<Elem> coefficients(Elem a) const;
  Elem from_coefficients(std::span<const Elem> coeffs) const;

  /// True when `sub` is this field or appears in its base chain.
  bool has_subfield(const Field& sub) const;
  /// [this : sub]; throws NotASubfield.
  int degree_over(const Field& sub) const;

  Elem frobenius(Elem a, const Field& sub, std::uint64_t i) const;
  Elem trace_to(Elem a, const Field& sub) const;
  Elem norm_to(Elem a, const Field& sub) const;
  std::vector<Elem> frobenius_orbit(Elem a, const Field& sub) const;

  /// Lift of the absolute trace Tr_{F/F_p}(a) to {0, ..., p-1}.
  std::uint32_t absolute_trace(Elem a) const;

 private:
  friend FieldPtr prime_field(std::uint32_t p);
  friend FieldPtr make_extension(const FieldPtr& base, int d, std::optional<Poly> poly);

  Field() = default;

  Elem slow_mul(Elem a, Elem b) const;
  Elem slow_pow(Elem a, std::uint64_t e) const;
  Elem trace_one_step(Elem a) const;
  Elem norm_one_step(Elem a) const;
  void build_tables() const;

  std::uint32_t p_ = 0;
  int degree_ = 1;
  int abs_degree_ = 1;
  std::uint64_t size_ = 0;
  std::uint64_t base_size_ = 0;
  FieldPtr base_;
  Poly modulus_;
  std::uint64_t id_ = 0;
  std::vector<Elem> add_table_;

  mutable std::once_flag tables_once_;
  mutable Elem generator_ = 0;
  mutable std::vector<Elem> exp_table_;
  mutable std::vector<std::uint32_t> log_table_;
};

bool is_prime(std::uint64_t n);

/// F_p; cached per p.
FieldPtr prime_field(std::uint32_t p);

/// base[S]/(poly). Without `poly` the lexicographically first monic
/// irreducible of degree d is used (coefficient lists compared low-to-high).
FieldPtr make_extension(const FieldPtr& base, int d, std::optional<Poly> poly = std::nullopt);

/// F_{p^d} as a single extension of F_p (F_p itself when d == 1 and no poly).
FieldPtr make_field(std::uint32_t p, int d, std::optional<Poly> poly = std::nullopt);

/// Cached default extension of degree m over `base`; returns `base` for m == 1.
FieldPtr extension_of_degree(const FieldPtr& base, int m);

/// Cached base[T]/(f) for a monic irreducible f (the eigenvalue field of the
/// companion matrix of f). Degree-one f gives a degree-one extension.
FieldPtr eigen_field(const FieldPtr& base, const Poly& f);

/// Parses `p^d[:c0,c1,...,1]` (plain `p` is accepted for d = 1).
FieldPtr parse_field_descriptor(const std::string& text);

// Polynomials over a field -------------------------------------------------

void poly_trim(Poly& f);
int poly_degree(const Poly& f);
Poly poly_add(const Field& F, const Poly& f, const Poly& g);
Poly poly_sub(const Field& F, const Poly& f, const Poly& g);
Poly poly_mul(const Field& F, const Poly& f, const Poly& g);
/// Returns {quotient, remainder}; throws DivisionByZero for g == 0.
std::pair<Poly, Poly> poly_divmod(const Field& F, const Poly& f, const Poly& g);
/// Monic gcd (zero polynomial only if both inputs are zero).
Poly poly_gcd(const Field& F, Poly f, Poly g);
Poly poly_monic(const Field& F, const Poly& f);
/// Exhaustive search for a monic factor of degree 1..deg/2.
bool poly_is_irreducible(const Field& F, const Poly& f);
/// All monic irreducibles of degree d, lexicographic order (low-to-high list).
std::vector<Poly> irreducible_polynomials(const Field& F, int d);
std::string poly_to_string(const Poly& f);

// Value-type elements --------------------------------------------------------

class FieldElement {
 public:
  FieldElement(FieldPtr field, Elem index);
  static FieldElement from_coefficients(FieldPtr field, std::span<const Elem> coeffs);

  const FieldPtr& field() const { return field_; }
  Elem index() const { return index_; }
  std::vector<Elem> coefficients() const { return field_->coefficients(index_); }
  bool is_zero() const { return index_ == 0; }
  std::string to_string() const;

  FieldElement operator+(const FieldElement& other) const;
  FieldElement operator-(const FieldElement& other) const;
  FieldElement operator*(const FieldElement& other) const;
  FieldElement operator/(const FieldElement& other) const;
  FieldElement operator-() const;
  FieldElement pow(std::int64_t e) const;

  /// Coefficient equality within one field; comparing across fields throws
  /// FieldMismatch.
  bool operator==(const FieldElement& other) const;

 private:
  void require_same_field(const FieldElement& other) const;

  FieldPtr field_;
  Elem index_;
};

enum class ArithOp { Add, Sub, Mul, Div, Pow };

/// For Pow the exponent is read from `b` as a plain integer index.
FieldElement elem_arith(const FieldElement& a, const FieldElement& b, ArithOp op);

FieldElement frobenius(const FieldElement& a, const Field& base, std::uint64_t i);
FieldElement trace_to(const FieldElement& a, const FieldPtr& base);
FieldElement norm_to(const FieldElement& a, const FieldPtr& base);
FieldElement primitive_generator(const FieldPtr& field);
std::uint64_t dlog(const FieldPtr& field, const FieldElement& a);
std::vector<FieldElement> frobenius_orbit(const FieldElement& a, const Field& base);

/// View a subfield element inside a field of its tower.
FieldElement embed(const FieldElement& a, const FieldPtr& target);

/// Parses `c0,c1,...` over the immediate base (each entry an element index).
FieldElement parse_element(const FieldPtr& field, const std::string& text);

}  // namespace klsum::gf
