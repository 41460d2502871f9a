#include "klsum/gf.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <map>
#include <sstream>

#include "klsum/error.hpp"

namespace klsum::gf {

namespace {

std::atomic<std::uint64_t> next_field_id{1};

std::uint64_t ipow(std::uint64_t base, int e) {
  std::uint64_t r = 1;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::uint64_t mod_mul(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

std::uint64_t parse_uint(const std::string& s, const char* what) {
  std::size_t pos = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(s, &pos);
  } catch (const std::exception&) {
    throw Error(ErrorCode::ParseError, std::string("bad ") + what + " '" + s + "'");
  }
  if (pos != s.size()) throw Error(ErrorCode::ParseError, std::string("bad ") + what + " '" + s + "'");
  return v;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Polynomials

void poly_trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

int poly_degree(const Poly& f) {
  for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i) {
    if (f[i] != 0) return i;
  }
  return -1;
}

Poly poly_add(const Field& F, const Poly& f, const Poly& g) {
  Poly r(std::max(f.size(), g.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    Elem a = i < f.size() ? f[i] : 0;
    Elem b = i < g.size() ? g[i] : 0;
    r[i] = F.add(a, b);
  }
  poly_trim(r);
  return r;
}

Poly poly_sub(const Field& F, const Poly& f, const Poly& g) {
  Poly r(std::max(f.size(), g.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    Elem a = i < f.size() ? f[i] : 0;
    Elem b = i < g.size() ? g[i] : 0;
    r[i] = F.sub(a, b);
  }
  poly_trim(r);
  return r;
}

Poly poly_mul(const Field& F, const Poly& f, const Poly& g) {
  if (poly_degree(f) < 0 || poly_degree(g) < 0) return {};
  Poly r(f.size() + g.size() - 1, 0);
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i] == 0) continue;
    for (std::size_t j = 0; j < g.size(); ++j) {
      r[i + j] = F.add(r[i + j], F.mul(f[i], g[j]));
    }
  }
  poly_trim(r);
  return r;
}

std::pair<Poly, Poly> poly_divmod(const Field& F, const Poly& f, const Poly& g) {
  const int dg = poly_degree(g);
  if (dg < 0) throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
  Poly rem = f;
  poly_trim(rem);
  const int df = poly_degree(rem);
  if (df < dg) return {Poly{}, rem};
  Poly quot(df - dg + 1, 0);
  const Elem lead_inv = F.inv(g[dg]);
  for (int i = df; i >= dg; --i) {
    if (rem[i] == 0) continue;
    const Elem c = F.mul(rem[i], lead_inv);
    quot[i - dg] = c;
    for (int j = 0; j <= dg; ++j) {
      rem[i - dg + j] = F.sub(rem[i - dg + j], F.mul(c, g[j]));
    }
  }
  poly_trim(rem);
  poly_trim(quot);
  return {quot, rem};
}

Poly poly_monic(const Field& F, const Poly& f) {
  const int d = poly_degree(f);
  if (d < 0) return {};
  const Elem inv = F.inv(f[d]);
  Poly r(f.begin(), f.begin() + d + 1);
  for (auto& c : r) c = F.mul(c, inv);
  return r;
}

Poly poly_gcd(const Field& F, Poly f, Poly g) {
  poly_trim(f);
  poly_trim(g);
  while (poly_degree(g) >= 0) {
    auto [q, r] = poly_divmod(F, f, g);
    f = std::move(g);
    g = std::move(r);
  }
  return poly_monic(F, f);
}

bool poly_is_irreducible(const Field& F, const Poly& f) {
  const int d = poly_degree(f);
  if (d < 1) return false;
  if (d == 1) return true;
  const std::uint64_t q = F.size();
  for (int k = 1; 2 * k <= d; ++k) {
    const std::uint64_t count = ipow(q, k);
    Poly cand(k + 1, 0);
    cand[k] = 1;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      std::uint64_t t = idx;
      for (int i = 0; i < k; ++i) {
        cand[i] = static_cast<Elem>(t % q);
        t /= q;
      }
      if (poly_degree(poly_divmod(F, f, cand).second) < 0) return false;
    }
  }
  return true;
}

std::vector<Poly> irreducible_polynomials(const Field& F, int d) {
  std::vector<Poly> out;
  if (d < 1) return out;
  const std::uint64_t q = F.size();
  if (static_cast<double>(d) * std::log2(static_cast<double>(q)) > 24.0) {
    throw Error(ErrorCode::ScaleExceeded, "too many candidate polynomials");
  }
  const std::uint64_t count = ipow(q, d);
  Poly cand(d + 1, 0);
  cand[d] = 1;
  // idx counts with c0 as the most significant digit.
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    std::uint64_t t = idx;
    for (int i = d - 1; i >= 0; --i) {
      cand[i] = static_cast<Elem>(t % q);
      t /= q;
    }
    if (poly_is_irreducible(F, cand)) out.push_back(cand);
  }
  return out;
}

std::string poly_to_string(const Poly& f) {
  std::ostringstream os;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i) os << ',';
    os << f[i];
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Field construction

FieldPtr prime_field(std::uint32_t p) {
  static std::mutex mu;
  static std::map<std::uint32_t, FieldPtr> cache;
  if (!is_prime(p)) {
    throw Error(ErrorCode::NonPrimeCharacteristic, std::to_string(p) + " is not prime");
  }
  if (p > kMaxFieldSize) throw Error(ErrorCode::ScaleExceeded, "prime above 2^20");
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(p);
  if (it != cache.end()) return it->second;
  auto f = std::shared_ptr<Field>(new Field());
  f->p_ = p;
  f->degree_ = 1;
  f->abs_degree_ = 1;
  f->size_ = p;
  f->base_size_ = p;
  f->id_ = next_field_id++;
  if (p > 2 && p <= 256) {
    f->add_table_.resize(static_cast<std::size_t>(p) * p);
    for (std::uint32_t a = 0; a < p; ++a)
      for (std::uint32_t b = 0; b < p; ++b) f->add_table_[a * p + b] = (a + b) % p;
  }
  cache.emplace(p, f);
  return f;
}

FieldPtr make_extension(const FieldPtr& base, int d, std::optional<Poly> poly) {
  if (!base) throw Error(ErrorCode::TowerMismatch, "null base field");
  if (d < 1) throw Error(ErrorCode::IndexOutOfRange, "extension degree must be >= 1");
  const double log_size = static_cast<double>(d) * std::log2(static_cast<double>(base->size()));
  if (log_size > 20.0 + 1e-9) {
    throw Error(ErrorCode::ScaleExceeded, "field with more than 2^20 elements");
  }
  Poly modulus;
  if (poly) {
    modulus = *poly;
    poly_trim(modulus);
    if (poly_degree(modulus) != d || modulus[d] != 1) {
      throw Error(ErrorCode::ReduciblePolynomial, "defining polynomial must be monic of degree " + std::to_string(d));
    }
    for (Elem c : modulus) {
      if (!base->is_valid(c)) throw Error(ErrorCode::FieldMismatch, "coefficient outside base field");
    }
    if (!poly_is_irreducible(*base, modulus)) {
      throw Error(ErrorCode::ReduciblePolynomial, "polynomial " + poly_to_string(modulus) + " factors");
    }
  } else {
    const std::uint64_t q = base->size();
    const std::uint64_t count = ipow(q, d);
    Poly cand(d + 1, 0);
    cand[d] = 1;
    bool found = false;
    for (std::uint64_t idx = 0; idx < count && !found; ++idx) {
      std::uint64_t t = idx;
      for (int i = d - 1; i >= 0; --i) {
        cand[i] = static_cast<Elem>(t % q);
        t /= q;
      }
      if (poly_is_irreducible(*base, cand)) found = true;
    }
    modulus = cand;
  }

  auto f = std::shared_ptr<Field>(new Field());
  f->p_ = base->characteristic();
  f->degree_ = d;
  f->abs_degree_ = base->absolute_degree() * d;
  f->size_ = ipow(base->size(), d);
  f->base_size_ = base->size();
  f->base_ = base;
  f->modulus_ = std::move(modulus);
  f->id_ = next_field_id++;
  if (f->p_ > 2 && f->size_ <= 256) {
    const auto n = static_cast<std::size_t>(f->size_);
    f->add_table_.resize(n * n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        std::uint64_t x = a, y = b, r = 0, scale = 1;
        for (int i = 0; i < f->abs_degree_; ++i) {
          r += ((x % f->p_ + y % f->p_) % f->p_) * scale;
          x /= f->p_;
          y /= f->p_;
          scale *= f->p_;
        }
        f->add_table_[a * n + b] = static_cast<Elem>(r);
      }
    }
  }
  return f;
}

FieldPtr make_field(std::uint32_t p, int d, std::optional<Poly> poly) {
  FieldPtr fp = prime_field(p);
  if (d == 1 && !poly) return fp;
  return make_extension(fp, d, std::move(poly));
}

FieldPtr extension_of_degree(const FieldPtr& base, int m) {
  if (m == 1) return base;
  static std::mutex mu;
  static std::map<std::pair<std::uint64_t, int>, FieldPtr> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({base->id(), m});
    if (it != cache.end()) return it->second;
  }
  FieldPtr ext = make_extension(base, m);
  std::lock_guard<std::mutex> lock(mu);
  auto [it, inserted] = cache.emplace(std::make_pair(base->id(), m), ext);
  return it->second;
}

FieldPtr eigen_field(const FieldPtr& base, const Poly& f) {
  static std::mutex mu;
  static std::map<std::pair<std::uint64_t, Poly>, FieldPtr> cache;
  Poly g = f;
  poly_trim(g);
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({base->id(), g});
    if (it != cache.end()) return it->second;
  }
  FieldPtr ext = make_extension(base, poly_degree(g), g);
  std::lock_guard<std::mutex> lock(mu);
  auto [it, inserted] = cache.emplace(std::make_pair(base->id(), g), ext);
  return it->second;
}

namespace {

std::optional<Poly> parse_coeff_suffix(const std::string& text, std::size_t colon) {
  if (colon == std::string::npos) return std::nullopt;
  Poly coeffs;
  for (const auto& tok : split(text.substr(colon + 1), ',')) {
    coeffs.push_back(static_cast<Elem>(parse_uint(tok, "coefficient")));
  }
  return coeffs;
}

}  // namespace

FieldPtr parse_field_descriptor(const std::string& text) {
  const auto levels = split(text, '/');
  const std::string& first = levels.front();
  const auto colon = first.find(':');
  const std::string head = first.substr(0, colon);
  std::uint64_t p = 0;
  int d = 1;
  const auto caret = head.find('^');
  if (caret == std::string::npos) {
    p = parse_uint(head, "characteristic");
  } else {
    p = parse_uint(head.substr(0, caret), "characteristic");
    d = static_cast<int>(parse_uint(head.substr(caret + 1), "degree"));
  }
  if (p > kMaxFieldSize) throw Error(ErrorCode::ScaleExceeded, "characteristic too large");
  if (d < 1) throw Error(ErrorCode::ParseError, "degree must be positive in '" + text + "'");
  FieldPtr field = make_field(static_cast<std::uint32_t>(p), d, parse_coeff_suffix(first, colon));
  for (std::size_t i = 1; i < levels.size(); ++i) {
    const auto c = levels[i].find(':');
    const int m = static_cast<int>(parse_uint(levels[i].substr(0, c), "degree"));
    field = make_extension(field, m, parse_coeff_suffix(levels[i], c));
  }
  return field;
}

// ---------------------------------------------------------------------------
// Field arithmetic

std::string Field::descriptor() const {
  if (is_prime()) return std::to_string(p_);
  std::ostringstream os;
  if (base_->is_prime()) {
    os << p_ << '^' << degree_;
  } else {
    os << base_->descriptor() << '/' << degree_;
  }
  os << ':' << poly_to_string(modulus_);
  return os.str();
}

Elem Field::add(Elem a, Elem b) const {
  if (p_ == 2) return a ^ b;
  if (!add_table_.empty()) return add_table_[static_cast<std::size_t>(a) * size_ + b];
  std::uint64_t x = a, y = b, r = 0, scale = 1;
  while (x || y) {
    r += ((x % p_ + y % p_) % p_) * scale;
    x /= p_;
    y /= p_;
    scale *= p_;
  }
  return static_cast<Elem>(r);
}

Elem Field::neg(Elem a) const {
  if (p_ == 2) return a;
  std::uint64_t x = a, r = 0, scale = 1;
  while (x) {
    r += ((p_ - x % p_) % p_) * scale;
    x /= p_;
    scale *= p_;
  }
  return static_cast<Elem>(r);
}

Elem Field::sub(Elem a, Elem b) const { return add(a, neg(b)); }

Elem Field::scale(Elem a, std::uint64_t times) const {
  Elem r = 0;
  times %= p_;
  for (std::uint64_t i = 0; i < times; ++i) r = add(r, a);
  return r;
}

Elem Field::slow_mul(Elem a, Elem b) const {
  if (is_prime()) return static_cast<Elem>((static_cast<std::uint64_t>(a) * b) % p_);
  const Field& B = *base_;
  const auto ca = coefficients(a);
  const auto cb = coefficients(b);
  Poly prod(2 * degree_ - 1, 0);
  for (int i = 0; i < degree_; ++i) {
    if (ca[i] == 0) continue;
    for (int j = 0; j < degree_; ++j) {
      prod[i + j] = B.add(prod[i + j], B.mul(ca[i], cb[j]));
    }
  }
  // Reduce with the monic modulus.
  for (int i = 2 * degree_ - 2; i >= degree_; --i) {
    const Elem c = prod[i];
    if (c == 0) continue;
    for (int j = 0; j < degree_; ++j) {
      prod[i - degree_ + j] = B.sub(prod[i - degree_ + j], B.mul(c, modulus_[j]));
    }
    prod[i] = 0;
  }
  prod.resize(degree_);
  return from_coefficients(prod);
}

Elem Field::slow_pow(Elem a, std::uint64_t e) const {
  Elem r = 1, b = a;
  while (e) {
    if (e & 1) r = slow_mul(r, b);
    b = slow_mul(b, b);
    e >>= 1;
  }
  return r;
}

void Field::build_tables() const {
  std::call_once(tables_once_, [this] {
    const std::uint64_t order = size_ - 1;
    const auto factors = prime_factors(order);
    Elem g = 0;
    for (std::uint64_t cand = 1; cand < size_; ++cand) {
      bool ok = true;
      for (auto r : factors) {
        if (slow_pow(static_cast<Elem>(cand), order / r) == 1) {
          ok = false;
          break;
        }
      }
      if (ok) {
        g = static_cast<Elem>(cand);
        break;
      }
    }
    exp_table_.resize(order == 0 ? 1 : order);
    log_table_.assign(size_, 0);
    Elem cur = 1;
    for (std::uint64_t e = 0; e < order; ++e) {
      exp_table_[e] = cur;
      log_table_[cur] = static_cast<std::uint32_t>(e);
      cur = slow_mul(cur, g);
    }
    if (order == 0) exp_table_[0] = 1;
    generator_ = order == 0 ? 1 : g;
  });
}

Elem Field::mul(Elem a, Elem b) const {
  if (a == 0 || b == 0) return 0;
  if (is_prime()) return static_cast<Elem>((static_cast<std::uint64_t>(a) * b) % p_);
  build_tables();
  const std::uint64_t order = size_ - 1;
  std::uint64_t e = static_cast<std::uint64_t>(log_table_[a]) + log_table_[b];
  if (e >= order) e -= order;
  return exp_table_[e];
}

Elem Field::inv(Elem a) const {
  if (a == 0) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  build_tables();
  const std::uint64_t order = size_ - 1;
  const std::uint64_t l = log_table_[a];
  return exp_table_[l == 0 ? 0 : order - l];
}

Elem Field::div(Elem a, Elem b) const {
  if (b == 0) throw Error(ErrorCode::DivisionByZero, "division by zero");
  return mul(a, inv(b));
}

Elem Field::pow(Elem a, std::int64_t e) const {
  if (a == 0) {
    if (e < 0) throw Error(ErrorCode::DivisionByZero, "negative power of zero");
    return e == 0 ? 1 : 0;
  }
  build_tables();
  const auto order = static_cast<std::int64_t>(size_ - 1);
  const std::int64_t l = log_table_[a];
  std::int64_t em = e % order;
  if (em < 0) em += order;
  const auto r = static_cast<std::uint64_t>(mod_mul(static_cast<std::uint64_t>(l), static_cast<std::uint64_t>(em),
                                                    static_cast<std::uint64_t>(order)));
  return exp_table_[r];
}

Elem Field::generator() const {
  build_tables();
  return generator_;
}

std::uint64_t Field::dlog(Elem a) const {
  if (a == 0) throw Error(ErrorCode::ZeroElement, "discrete log of zero");
  if (!is_valid(a)) throw Error(ErrorCode::FieldMismatch, "element outside field");
  build_tables();
  return log_table_[a];
}

Elem Field::exp(std::uint64_t e) const {
  build_tables();
  return exp_table_[e % (size_ - 1)];
}

std::vector<Elem> Field::coefficients(Elem a) const {
  std::vector<Elem> out(degree_);
  if (is_prime()) {
    out[0] = a;
    return out;
  }
  std::uint64_t x = a;
  for (int i = 0; i < degree_; ++i) {
    out[i] = static_cast<Elem>(x % base_size_);
    x /= base_size_;
  }
  return out;
}

Elem Field::from_coefficients(std::span<const Elem> coeffs) const {
  if (static_cast<int>(coeffs.size()) > degree_) {
    throw Error(ErrorCode::FieldMismatch, "too many coefficients for field");
  }
  if (is_prime()) return coeffs.empty() ? 0 : coeffs[0] % p_;
  std::uint64_t r = 0;
  for (int i = static_cast<int>(coeffs.size()) - 1; i >= 0; --i) {
    if (coeffs[i] >= base_size_) throw Error(ErrorCode::FieldMismatch, "coefficient outside base field");
    r = r * base_size_ + coeffs[i];
  }
  return static_cast<Elem>(r);
}

bool Field::has_subfield(const Field& sub) const {
  for (const Field* f = this; f != nullptr; f = f->base_.get()) {
    if (f == &sub) return true;
  }
  return false;
}

int Field::degree_over(const Field& sub) const {
  int d = 1;
  for (const Field* f = this; f != nullptr; f = f->base_.get()) {
    if (f == &sub) return d;
    d *= f->degree_;
  }
  throw Error(ErrorCode::NotASubfield, sub.descriptor() + " is not a subfield of " + descriptor());
}

Elem Field::frobenius(Elem a, const Field& sub, std::uint64_t i) const {
  const int d = degree_over(sub);
  if (a == 0) return 0;
  // a^(|sub|^i) with the exponent reduced modulo the group order.
  const std::uint64_t order = size_ - 1;
  std::uint64_t e = 1;
  const std::uint64_t steps = i % static_cast<std::uint64_t>(d);
  for (std::uint64_t s = 0; s < steps; ++s) e = mod_mul(e, sub.size(), order == 0 ? 1 : order);
  return pow(a, static_cast<std::int64_t>(e));
}

Elem Field::trace_one_step(Elem a) const {
  // Sum of the conjugates over the immediate base; the result is a constant
  // polynomial whose index equals the base element's index.
  Elem s = 0, c = a;
  for (int i = 0; i < degree_; ++i) {
    s = add(s, c);
    c = pow(c, static_cast<std::int64_t>(base_size_));
  }
  return s;
}

Elem Field::norm_one_step(Elem a) const {
  if (a == 0) return 0;
  // N(a) = a^((|F|-1)/(|B|-1)).
  return pow(a, static_cast<std::int64_t>((size_ - 1) / (base_size_ - 1)));
}

Elem Field::trace_to(Elem a, const Field& sub) const {
  (void)degree_over(sub);
  const Field* f = this;
  Elem x = a;
  while (f != &sub) {
    x = f->trace_one_step(x);
    f = f->base_.get();
  }
  return x;
}

Elem Field::norm_to(Elem a, const Field& sub) const {
  (void)degree_over(sub);
  const Field* f = this;
  Elem x = a;
  while (f != &sub) {
    x = f->norm_one_step(x);
    f = f->base_.get();
  }
  return x;
}

std::vector<Elem> Field::frobenius_orbit(Elem a, const Field& sub) const {
  const int d = degree_over(sub);
  std::vector<Elem> orbit{a};
  for (int i = 1; i < d; ++i) {
    const Elem c = frobenius(a, sub, static_cast<std::uint64_t>(i));
    if (c == a) break;
    orbit.push_back(c);
  }
  return orbit;
}

std::uint32_t Field::absolute_trace(Elem a) const {
  const Field* f = this;
  Elem x = a;
  while (!f->is_prime()) {
    x = f->trace_one_step(x);
    f = f->base_.get();
  }
  return x;
}

// ---------------------------------------------------------------------------
// FieldElement

FieldElement::FieldElement(FieldPtr field, Elem index) : field_(std::move(field)), index_(index) {
  if (!field_) throw Error(ErrorCode::FieldMismatch, "element without field");
  if (!field_->is_valid(index_)) throw Error(ErrorCode::FieldMismatch, "index outside field");
}

FieldElement FieldElement::from_coefficients(FieldPtr field, std::span<const Elem> coeffs) {
  const Elem idx = field->from_coefficients(coeffs);
  return FieldElement(std::move(field), idx);
}

std::string FieldElement::to_string() const { return poly_to_string(coefficients()); }

void FieldElement::require_same_field(const FieldElement& other) const {
  if (field_.get() != other.field_.get()) {
    throw Error(ErrorCode::FieldMismatch, field_->descriptor() + " vs " + other.field_->descriptor());
  }
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  require_same_field(o);
  return {field_, field_->add(index_, o.index_)};
}
FieldElement FieldElement::operator-(const FieldElement& o) const {
  require_same_field(o);
  return {field_, field_->sub(index_, o.index_)};
}
FieldElement FieldElement::operator*(const FieldElement& o) const {
  require_same_field(o);
  return {field_, field_->mul(index_, o.index_)};
}
FieldElement FieldElement::operator/(const FieldElement& o) const {
  require_same_field(o);
  return {field_, field_->div(index_, o.index_)};
}
FieldElement FieldElement::operator-() const { return {field_, field_->neg(index_)}; }
FieldElement FieldElement::pow(std::int64_t e) const { return {field_, field_->pow(index_, e)}; }

bool FieldElement::operator==(const FieldElement& o) const {
  require_same_field(o);
  return index_ == o.index_;
}

FieldElement elem_arith(const FieldElement& a, const FieldElement& b, ArithOp op) {
  switch (op) {
    case ArithOp::Add: return a + b;
    case ArithOp::Sub: return a - b;
    case ArithOp::Mul: return a * b;
    case ArithOp::Div: return a / b;
    case ArithOp::Pow: return a.pow(static_cast<std::int64_t>(b.index()));
  }
  throw Error(ErrorCode::ParseError, "unknown arithmetic op");
}

FieldElement frobenius(const FieldElement& a, const Field& base, std::uint64_t i) {
  return {a.field(), a.field()->frobenius(a.index(), base, i)};
}

namespace {
FieldPtr find_in_chain(const FieldElement& a, const FieldPtr& base) {
  if (!a.field()->has_subfield(*base)) {
    throw Error(ErrorCode::NotASubfield, base->descriptor() + " is not a subfield of " + a.field()->descriptor());
  }
  return base;
}
}  // namespace

FieldElement trace_to(const FieldElement& a, const FieldPtr& base) {
  return {find_in_chain(a, base), a.field()->trace_to(a.index(), *base)};
}

FieldElement norm_to(const FieldElement& a, const FieldPtr& base) {
  return {find_in_chain(a, base), a.field()->norm_to(a.index(), *base)};
}

FieldElement primitive_generator(const FieldPtr& field) { return {field, field->generator()}; }

std::uint64_t dlog(const FieldPtr& field, const FieldElement& a) {
  if (a.field().get() != field.get()) throw Error(ErrorCode::FieldMismatch, "dlog in a different field");
  return field->dlog(a.index());
}

std::vector<FieldElement> frobenius_orbit(const FieldElement& a, const Field& base) {
  std::vector<FieldElement> out;
  for (Elem e : a.field()->frobenius_orbit(a.index(), base)) out.emplace_back(a.field(), e);
  return out;
}

FieldElement embed(const FieldElement& a, const FieldPtr& target) {
  if (!target->has_subfield(*a.field())) {
    throw Error(ErrorCode::NotASubfield, a.field()->descriptor() + " is not a subfield of " + target->descriptor());
  }
  return {target, a.index()};
}

FieldElement parse_element(const FieldPtr& field, const std::string& text) {
  std::vector<Elem> coeffs;
  for (const auto& tok : split(text, ',')) coeffs.push_back(static_cast<Elem>(parse_uint(tok, "coefficient")));
  if (field->is_prime()) {
    if (coeffs.size() != 1 || coeffs[0] >= field->size()) {
      throw Error(ErrorCode::ParseError, "element '" + text + "' not in " + field->descriptor());
    }
    return {field, coeffs[0]};
  }
  return FieldElement::from_coefficients(field, coeffs);
}

}  // namespace klsum::gf
