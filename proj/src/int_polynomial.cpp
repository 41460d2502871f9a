#include <sstream>

#include "klsum/error.hpp"
#include "klsum/symfunc.hpp"

namespace klsum::symfunc {

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPolynomial::IntPolynomial(std::initializer_list<long long> coeffs) {
  for (long long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

IntPolynomial IntPolynomial::monomial(int degree, const BigInt& c) {
  std::vector<BigInt> v(degree + 1, 0);
  v[degree] = c;
  return IntPolynomial(std::move(v));
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt IntPolynomial::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[i];
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& o) const {
  IntPolynomial r = *this;
  r += o;
  return r;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& o) const { return *this + o * BigInt(-1); }

IntPolynomial IntPolynomial::operator*(const IntPolynomial& o) const {
  if (is_zero() || o.is_zero()) return {};
  std::vector<BigInt> r(coeffs_.size() + o.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) r[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  return IntPolynomial(std::move(r));
}

IntPolynomial IntPolynomial::operator*(const BigInt& c) const {
  std::vector<BigInt> r = coeffs_;
  for (auto& x : r) x *= c;
  return IntPolynomial(std::move(r));
}

BigInt IntPolynomial::eval(const BigInt& t) const {
  BigInt r = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) r = r * t + *it;
  return r;
}

Rational IntPolynomial::eval(const Rational& t) const {
  Rational r = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) r = r * t + Rational(*it);
  return r;
}

cplx IntPolynomial::eval(cplx t) const {
  cplx r = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) r = r * t + it->convert_to<double>();
  return r;
}

IntPolynomial IntPolynomial::reversed(int n) const {
  if (degree() > n) {
    throw Error(ErrorCode::NonPolynomialResult,
                "degree " + std::to_string(degree()) + " exceeds reversal bound " + std::to_string(n));
  }
  if (is_zero()) return {};
  std::vector<BigInt> r(n + 1, 0);
  for (int i = 0; i <= degree(); ++i) r[n - i] = coeffs_[i];
  return IntPolynomial(std::move(r));
}

std::string IntPolynomial::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const BigInt& c = coeffs_[i];
    if (c == 0) continue;
    const BigInt mag = c < 0 ? BigInt(-c) : c;
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag << '*';
    os << var;
    if (i > 1) os << '^' << i;
  }
  return os.str();
}

IntPolynomial q_binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n) {
    throw Error(ErrorCode::IndexOutOfRange, "q-binomial needs 0 <= k <= n");
  }
  // Row-by-row Pascal recurrence [n,k] = [n-1,k-1] + q^k [n-1,k].
  std::vector<IntPolynomial> row{IntPolynomial{1}};
  for (int m = 1; m <= n; ++m) {
    std::vector<IntPolynomial> next(m + 1);
    next[0] = IntPolynomial{1};
    next[m] = IntPolynomial{1};
    for (int j = 1; j < m; ++j) next[j] = row[j - 1] + IntPolynomial::monomial(j) * row[j];
    row = std::move(next);
  }
  return row[k];
}

IntPolynomial phi_l(int l) {
  if (l < 1) throw Error(ErrorCode::IndexOutOfRange, "phi_l needs l >= 1");
  IntPolynomial r{1};
  for (int j = 1; j < l; ++j) r = r * (IntPolynomial{1} - IntPolynomial::monomial(j));
  return r;
}

BigInt binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  BigInt r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace klsum::symfunc
