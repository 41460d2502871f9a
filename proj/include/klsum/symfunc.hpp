#pragma once

// Partitions, exact polynomials in t, and the symmetric-function quantities
// built on them: Kostka and Kostka-Foulkes polynomials, symmetric group
// characters, Green polynomials and modified Hall-Littlewood polynomials.

#include <compare>
#include <complex>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace klsum::symfunc {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using cplx = std::complex<double>;

class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<int> parts);
  /// Throws InvalidPartition unless parts are positive and weakly decreasing.
  explicit Partition(std::vector<int> parts);

  static Partition parse(const std::string& text);

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return size_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  /// lambda_i with 0-based i; zero past the end.
  int part(int i) const { return i < length() ? parts_[i] : 0; }
  int multiplicity(int j) const;
  /// prod_j j^{m_j} m_j!
  std::uint64_t z() const;
  /// sum_i (i-1) lambda_i (1-based i).
  int n() const;
  Partition conjugate() const;
  std::string to_string() const;

  auto operator<=>(const Partition&) const = default;

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

/// All partitions of b in reverse lexicographic order; {()} for b = 0.
std::vector<Partition> partitions_of(int b);

class WeakComposition {
 public:
  WeakComposition() = default;
  explicit WeakComposition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return size_; }
  int length() const { return static_cast<int>(parts_.size()); }
  /// Nonzero parts sorted decreasingly.
  Partition sorted() const;
  std::string to_string() const;

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

/// All weak compositions of b with exactly k parts, lexicographically
/// decreasing.
std::vector<WeakComposition> weak_compositions(int b, int k);

class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coeffs);
  IntPolynomial(std::initializer_list<long long> coeffs);
  static IntPolynomial monomial(int degree, const BigInt& c = 1);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  BigInt coeff(int i) const;

  IntPolynomial operator+(const IntPolynomial& o) const;
  IntPolynomial operator-(const IntPolynomial& o) const;
  IntPolynomial operator*(const IntPolynomial& o) const;
  IntPolynomial operator*(const BigInt& c) const;
  IntPolynomial& operator+=(const IntPolynomial& o);
  bool operator==(const IntPolynomial& o) const { return coeffs_ == o.coeffs_; }

  BigInt eval(const BigInt& t) const;
  Rational eval(const Rational& t) const;
  cplx eval(cplx t) const;

  /// t^n p(1/t); throws NonPolynomialResult if deg p > n.
  IntPolynomial reversed(int n) const;

  /// e.g. "1 - t - t^2 + t^3"; "0" for the zero polynomial.
  std::string to_string(const std::string& var = "t") const;

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

/// Semistandard tableaux of shape rho and content mu, as rows of entries.
using Tableau = std::vector<std::vector<int>>;
std::vector<Tableau> semistandard_tableaux(const Partition& rho, const Partition& mu);

/// Reading word (rows bottom to top, each left to right) and its charge.
std::vector<int> reading_word(const Tableau& t);
int charge(const std::vector<int>& word);

BigInt kostka_number(const Partition& rho, const Partition& mu);
IntPolynomial kostka_foulkes(const Partition& rho, const Partition& mu);
/// chi^rho evaluated on the class of cycle type lambda.
BigInt symgroup_character(const Partition& rho, const Partition& lambda);

/// Q_lambda^mu(t) = t^{n(mu)} X_lambda^mu(1/t), X = sum_rho chi^rho_lambda K_{rho,mu}(t).
IntPolynomial green_polynomial(const Partition& lambda, const Partition& mu);
/// sum_rho K_{rho,lambda} K_{rho,mu}(t).
IntPolynomial p_mu_lambda(const Partition& mu, const Partition& lambda);

enum class Basis { Monomial, PowerSum, Schur, Complete };

cplx power_sum(int j, std::span<const cplx> x);
/// h_b by the power-sum route: sum_{lambda |- b} p_lambda / z_lambda.
cplx complete_homogeneous(int b, std::span<const cplx> x);
cplx eval_basis(Basis basis, const Partition& index, std::span<const cplx> x);

/// Schur route: sum_rho t^{n(mu)} K_{rho,mu}(1/t) s_rho(x). Throws ZeroParameterT.
cplx modified_hl_eval(const Partition& mu, std::span<const cplx> x, cplx t);
/// Power-sum route: sum_lambda Q_lambda^mu(t) / z_lambda p_lambda(x).
cplx modified_hl_eval_powersum(const Partition& mu, std::span<const cplx> x, cplx t);
/// Monomial coefficients of H~_mu(x_1..x_k; t) for every lambda |- |mu| with
/// at most k parts.
std::map<Partition, BigInt> modified_hl_monomial_coeffs(const Partition& mu, int k, const BigInt& t);

/// Gaussian binomial [n choose k]_q as a polynomial in q.
IntPolynomial q_binomial(int n, int k);
/// prod_{j=1}^{l-1} (1 - T^j).
IntPolynomial phi_l(int l);

BigInt binomial(int n, int k);

}  // namespace klsum::symfunc
