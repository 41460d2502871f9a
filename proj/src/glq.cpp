#include "klsum/glq.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <set>
#include <sstream>

#include "klsum/error.hpp"
#include "klsum/parallel.hpp"

namespace klsum::glq {

namespace {

using gf::Elem;

void require_same(const MatrixFq& a, const MatrixFq& b) {
  if (a.field().get() != b.field().get()) throw Error(ErrorCode::FieldMismatch, "matrices over different fields");
  if (a.dim() != b.dim()) throw Error(ErrorCode::SizeMismatch, "matrix dimensions differ");
}

// Raw kernels on row-major buffers, used by the brute-force inner loop.
void mat_mul(const gf::Field& F, int n, const Elem* a, const Elem* b, Elem* out) {
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      Elem s = 0;
      for (int l = 0; l < n; ++l) s = F.add(s, F.mul(a[i * n + l], b[l * n + j]));
      out[i * n + j] = s;
    }
  }
}

// Gauss-Jordan on a copy; returns false if singular.
bool mat_inv(const gf::Field& F, int n, const Elem* a, Elem* out, std::vector<Elem>& work) {
  work.assign(a, a + n * n);
  for (int i = 0; i < n * n; ++i) out[i] = 0;
  for (int i = 0; i < n; ++i) out[i * n + i] = 1;
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int r = c; r < n; ++r) {
      if (work[r * n + c] != 0) {
        piv = r;
        break;
      }
    }
    if (piv < 0) return false;
    if (piv != c) {
      for (int j = 0; j < n; ++j) {
        std::swap(work[piv * n + j], work[c * n + j]);
        std::swap(out[piv * n + j], out[c * n + j]);
      }
    }
    const Elem inv = F.inv(work[c * n + c]);
    for (int j = 0; j < n; ++j) {
      work[c * n + j] = F.mul(work[c * n + j], inv);
      out[c * n + j] = F.mul(out[c * n + j], inv);
    }
    for (int r = 0; r < n; ++r) {
      if (r == c || work[r * n + c] == 0) continue;
      const Elem f = work[r * n + c];
      for (int j = 0; j < n; ++j) {
        work[r * n + j] = F.sub(work[r * n + j], F.mul(f, work[c * n + j]));
        out[r * n + j] = F.sub(out[r * n + j], F.mul(f, out[c * n + j]));
      }
    }
  }
  return true;
}

Elem mat_trace(const gf::Field& F, int n, const Elem* a) {
  Elem s = 0;
  for (int i = 0; i < n; ++i) s = F.add(s, a[i * n + i]);
  return s;
}

}  // namespace

gf::Poly parse_poly(const std::string& text) {
  gf::Poly f;
  std::string tok;
  std::stringstream ss(text);
  while (std::getline(ss, tok, text.find(';') != std::string::npos ? ';' : ',')) {
    try {
      std::size_t pos = 0;
      f.push_back(static_cast<Elem>(std::stoul(tok, &pos)));
      if (pos != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::logic_error&) {
      throw Error(ErrorCode::ParseError, "bad polynomial '" + text + "'");
    }
  }
  return f;
}

MatrixFq::MatrixFq(gf::FieldPtr field, int n) : field_(std::move(field)), n_(n), a_(static_cast<std::size_t>(n) * n, 0) {
  if (n < 1) throw Error(ErrorCode::SizeMismatch, "matrix dimension must be positive");
}

MatrixFq::MatrixFq(gf::FieldPtr field, int n, std::vector<Elem> entries)
    : field_(std::move(field)), n_(n), a_(std::move(entries)) {
  if (n < 1 || a_.size() != static_cast<std::size_t>(n) * n) {
    throw Error(ErrorCode::SizeMismatch, "entry count does not match dimension");
  }
  for (Elem e : a_) {
    if (!field_->is_valid(e)) throw Error(ErrorCode::FieldMismatch, "matrix entry outside field");
  }
}

MatrixFq MatrixFq::identity(gf::FieldPtr field, int n) { return scalar(std::move(field), n, 1); }

MatrixFq MatrixFq::scalar(gf::FieldPtr field, int n, Elem c) {
  MatrixFq m(std::move(field), n);
  for (int i = 0; i < n; ++i) m.at(i, i) = c;
  return m;
}

MatrixFq MatrixFq::operator*(const MatrixFq& o) const {
  require_same(*this, o);
  MatrixFq r(field_, n_);
  mat_mul(*field_, n_, a_.data(), o.a_.data(), r.a_.data());
  return r;
}

MatrixFq MatrixFq::operator+(const MatrixFq& o) const {
  require_same(*this, o);
  MatrixFq r(field_, n_);
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = field_->add(a_[i], o.a_[i]);
  return r;
}

MatrixFq MatrixFq::operator-(const MatrixFq& o) const {
  require_same(*this, o);
  MatrixFq r(field_, n_);
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = field_->sub(a_[i], o.a_[i]);
  return r;
}

bool MatrixFq::operator==(const MatrixFq& o) const {
  require_same(*this, o);
  return a_ == o.a_;
}

MatrixFq MatrixFq::inverse() const {
  MatrixFq r(field_, n_);
  std::vector<Elem> work;
  if (!mat_inv(*field_, n_, a_.data(), r.a_.data(), work)) throw Error(ErrorCode::SingularInput, "matrix is singular");
  return r;
}

Elem MatrixFq::det() const {
  const gf::Field& F = *field_;
  std::vector<Elem> w = a_;
  Elem d = 1;
  for (int c = 0; c < n_; ++c) {
    int piv = -1;
    for (int r = c; r < n_; ++r) {
      if (w[r * n_ + c] != 0) {
        piv = r;
        break;
      }
    }
    if (piv < 0) return 0;
    if (piv != c) {
      for (int j = 0; j < n_; ++j) std::swap(w[piv * n_ + j], w[c * n_ + j]);
      d = F.neg(d);
    }
    const Elem p = w[c * n_ + c];
    d = F.mul(d, p);
    const Elem inv = F.inv(p);
    for (int r = c + 1; r < n_; ++r) {
      if (w[r * n_ + c] == 0) continue;
      const Elem f = F.mul(w[r * n_ + c], inv);
      for (int j = c; j < n_; ++j) w[r * n_ + j] = F.sub(w[r * n_ + j], F.mul(f, w[c * n_ + j]));
    }
  }
  return d;
}

Elem MatrixFq::trace() const { return mat_trace(*field_, n_, a_.data()); }

int MatrixFq::rank() const {
  const gf::Field& F = *field_;
  std::vector<Elem> w = a_;
  int rank = 0;
  for (int c = 0; c < n_ && rank < n_; ++c) {
    int piv = -1;
    for (int r = rank; r < n_; ++r) {
      if (w[r * n_ + c] != 0) {
        piv = r;
        break;
      }
    }
    if (piv < 0) continue;
    for (int j = 0; j < n_; ++j) std::swap(w[piv * n_ + j], w[rank * n_ + j]);
    const Elem inv = F.inv(w[rank * n_ + c]);
    for (int r = rank + 1; r < n_; ++r) {
      if (w[r * n_ + c] == 0) continue;
      const Elem f = F.mul(w[r * n_ + c], inv);
      for (int j = c; j < n_; ++j) w[r * n_ + j] = F.sub(w[r * n_ + j], F.mul(f, w[rank * n_ + j]));
    }
    ++rank;
  }
  return rank;
}

std::string MatrixFq::to_string() const {
  std::ostringstream os;
  os << '[';
  for (int i = 0; i < n_; ++i) {
    os << (i ? ",[" : "[");
    for (int j = 0; j < n_; ++j) {
      if (j) os << ',';
      if (field_->is_prime()) {
        os << (*this)(i, j);
      } else {
        os << '(' << gf::poly_to_string(field_->coefficients((*this)(i, j))) << ')';
      }
    }
    os << ']';
  }
  os << ']';
  return os.str();
}

MatrixFq block_diag(const MatrixFq& a, const MatrixFq& b) {
  if (a.field().get() != b.field().get()) throw Error(ErrorCode::FieldMismatch, "blocks over different fields");
  const int n = a.dim() + b.dim();
  MatrixFq r(a.field(), n);
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j) r.at(i, j) = a(i, j);
  for (int i = 0; i < b.dim(); ++i)
    for (int j = 0; j < b.dim(); ++j) r.at(a.dim() + i, a.dim() + j) = b(i, j);
  return r;
}

gf::Poly char_poly(const MatrixFq& x) {
  const gf::Field& F = *x.field();
  const int n = x.dim();
  std::vector<Elem> h = x.data();
  auto H = [&](int i, int j) -> Elem& { return h[i * n + j]; };

  // Similarity reduction to upper Hessenberg form.
  for (int c = 0; c + 2 < n; ++c) {
    int piv = -1;
    for (int r = c + 1; r < n; ++r) {
      if (H(r, c) != 0) {
        piv = r;
        break;
      }
    }
    if (piv < 0) continue;
    if (piv != c + 1) {
      for (int j = 0; j < n; ++j) std::swap(H(piv, j), H(c + 1, j));
      for (int i = 0; i < n; ++i) std::swap(H(i, piv), H(i, c + 1));
    }
    const Elem inv = F.inv(H(c + 1, c));
    for (int r = c + 2; r < n; ++r) {
      if (H(r, c) == 0) continue;
      const Elem u = F.mul(H(r, c), inv);
      for (int j = 0; j < n; ++j) H(r, j) = F.sub(H(r, j), F.mul(u, H(c + 1, j)));
      for (int i = 0; i < n; ++i) H(i, c + 1) = F.add(H(i, c + 1), F.mul(u, H(i, r)));
    }
  }

  // p_m = (T - h_mm) p_{m-1} - sum_i h_{m-i,m} (prod of subdiagonal) p_{m-i-1}.
  std::vector<gf::Poly> p(n + 1);
  p[0] = {1};
  for (int m = 1; m <= n; ++m) {
    p[m] = gf::poly_mul(F, gf::Poly{F.neg(H(m - 1, m - 1)), 1}, p[m - 1]);
    Elem t = 1;
    for (int i = 1; i < m; ++i) {
      t = F.mul(t, H(m - i, m - i - 1));
      const Elem coef = F.mul(t, H(m - i - 1, m - 1));
      if (coef == 0) continue;
      p[m] = gf::poly_sub(F, p[m], gf::poly_mul(F, gf::Poly{coef}, p[m - i - 1]));
    }
  }
  return p[n];
}

MatrixFq companion_matrix_unchecked(const gf::FieldPtr& field, const gf::Poly& f) {
  const int a = gf::poly_degree(f);
  if (a < 1 || f[a] != 1) throw Error(ErrorCode::ReduciblePolynomial, "companion needs a monic polynomial");
  MatrixFq m(field, a);
  for (int i = 0; i + 1 < a; ++i) m.at(i, i + 1) = 1;
  for (int j = 0; j < a; ++j) m.at(a - 1, j) = field->neg(f[j]);
  return m;
}

MatrixFq companion_matrix(const gf::FieldPtr& field, const gf::Poly& f) {
  gf::Poly g = f;
  gf::poly_trim(g);
  const int a = gf::poly_degree(g);
  if (a < 1 || g[a] != 1 || !gf::poly_is_irreducible(*field, g)) {
    throw Error(ErrorCode::ReduciblePolynomial, gf::poly_to_string(g) + " is not monic irreducible");
  }
  return companion_matrix_unchecked(field, g);
}

MatrixFq jordan_matrix(const MatrixFq& x, const symfunc::Partition& mu) {
  if (mu.empty()) throw Error(ErrorCode::EmptyPartition, "Jordan matrix of the empty partition");
  if (!x.is_invertible()) throw Error(ErrorCode::SingularInput, "Jordan block of a singular matrix");
  const int a = x.dim();
  MatrixFq m(x.field(), a * mu.size());
  int offset = 0;
  for (int part : mu.parts()) {
    for (int blk = 0; blk < part; ++blk) {
      const int base = (offset + blk) * a;
      for (int i = 0; i < a; ++i)
        for (int j = 0; j < a; ++j) m.at(base + i, base + j) = x(i, j);
      if (blk + 1 < part) {
        for (int i = 0; i < a; ++i) m.at(base + i, base + a + i) = 1;
      }
    }
    offset += part;
  }
  return m;
}

bool is_regular_elliptic(const MatrixFq& x) { return gf::poly_is_irreducible(*x.field(), char_poly(x)); }

bool eigen_disjoint(const MatrixFq& x1, const MatrixFq& x2) {
  if (x1.field().get() != x2.field().get()) throw Error(ErrorCode::FieldMismatch, "matrices over different fields");
  return gf::poly_degree(gf::poly_gcd(*x1.field(), char_poly(x1), char_poly(x2))) == 0;
}

int ConjugacyDatum::dimension() const {
  int n = 0;
  for (const auto& [f, mu] : blocks) n += gf::poly_degree(f) * mu.size();
  return n;
}

void ConjugacyDatum::validate(const gf::FieldPtr& field) const {
  if (blocks.empty()) throw Error(ErrorCode::InvalidHypothesis, "no blocks");
  std::set<gf::Poly> seen;
  for (const auto& [f, mu] : blocks) {
    if (mu.empty()) throw Error(ErrorCode::InvalidHypothesis, "empty partition in block");
    gf::Poly g = f;
    gf::poly_trim(g);
    const int d = gf::poly_degree(g);
    if (d < 1 || g[d] != 1 || !gf::poly_is_irreducible(*field, g)) {
      throw Error(ErrorCode::InvalidHypothesis, gf::poly_to_string(g) + " is not monic irreducible");
    }
    if (g == gf::Poly{0, 1}) throw Error(ErrorCode::InvalidHypothesis, "eigenvalue zero is not invertible");
    if (!seen.insert(g).second) throw Error(ErrorCode::InvalidHypothesis, "repeated eigenvalue polynomial");
  }
}

MatrixFq ConjugacyDatum::matrix(const gf::FieldPtr& field) const {
  validate(field);
  MatrixFq m = jordan_matrix(companion_matrix(field, blocks[0].first), blocks[0].second);
  for (std::size_t i = 1; i < blocks.size(); ++i) {
    m = block_diag(m, jordan_matrix(companion_matrix(field, blocks[i].first), blocks[i].second));
  }
  return m;
}

std::string ConjugacyDatum::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (i) os << ' ';
    os << '(' << gf::poly_to_string(blocks[i].first) << ")^(" << blocks[i].second.to_string() << ')';
  }
  return os.str();
}

std::uint64_t gl_order(int n, std::uint64_t q) {
  using u128 = unsigned __int128;
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  // prod_{j=0}^{n-1} (q^n - q^j)
  u128 qn = 1;
  for (int j = 0; j < n; ++j) {
    qn *= q;
    if (qn > kMax) return kMax;
  }
  u128 order = 1, qj = 1;
  for (int j = 0; j < n; ++j) {
    order *= qn - qj;
    if (order > kMax) return kMax;
    qj *= q;
  }
  return static_cast<std::uint64_t>(order);
}

std::vector<MatrixFq> enumerate_gl(int n, const gf::FieldPtr& field) {
  const std::uint64_t q = field->size();
  if (gl_order(n, q) > kMaxGroupOrder) throw Error(ErrorCode::ScaleExceeded, "|GL_n(F_q)| above 10^6");
  const gf::Field& F = *field;
  std::uint64_t vectors = 1;
  for (int i = 0; i < n; ++i) vectors *= q;

  // Row vectors in lexicographic order (first entry most significant).
  std::vector<std::vector<Elem>> rows(vectors, std::vector<Elem>(n));
  for (std::uint64_t v = 0; v < vectors; ++v) {
    std::uint64_t t = v;
    for (int j = n - 1; j >= 0; --j) {
      rows[v][j] = static_cast<Elem>(t % q);
      t /= q;
    }
  }

  std::vector<MatrixFq> out;
  out.reserve(gl_order(n, q));
  std::vector<Elem> entries(static_cast<std::size_t>(n) * n);
  // echelon[r] holds reduced copies of the chosen rows with their pivots.
  std::vector<std::vector<Elem>> echelon(n, std::vector<Elem>(n));
  std::vector<int> pivots(n);

  std::function<void(int)> rec = [&](int r) {
    if (r == n) {
      out.emplace_back(field, n, entries);
      return;
    }
    for (std::uint64_t v = 0; v < vectors; ++v) {
      std::vector<Elem> w = rows[v];
      for (int i = 0; i < r; ++i) {
        const Elem c = w[pivots[i]];
        if (c == 0) continue;
        for (int j = 0; j < n; ++j) w[j] = F.sub(w[j], F.mul(c, echelon[i][j]));
      }
      int piv = -1;
      for (int j = 0; j < n; ++j) {
        if (w[j] != 0) {
          piv = j;
          break;
        }
      }
      if (piv < 0) continue;
      const Elem inv = F.inv(w[piv]);
      for (auto& e : w) e = F.mul(e, inv);
      // Keep earlier echelon rows reduced at the new pivot.
      std::vector<std::vector<Elem>> saved(echelon.begin(), echelon.begin() + r);
      for (int i = 0; i < r; ++i) {
        const Elem c = echelon[i][piv];
        if (c == 0) continue;
        for (int j = 0; j < n; ++j) echelon[i][j] = F.sub(echelon[i][j], F.mul(c, w[j]));
      }
      echelon[r] = w;
      pivots[r] = piv;
      std::copy(rows[v].begin(), rows[v].end(), entries.begin() + static_cast<std::ptrdiff_t>(r) * n);
      rec(r + 1);
      std::copy(saved.begin(), saved.end(), echelon.begin());
    }
  };
  rec(0);
  return out;
}

MatrixFq random_gl(int n, const gf::FieldPtr& field, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint64_t> dist(0, field->size() - 1);
  while (true) {
    std::vector<Elem> e(static_cast<std::size_t>(n) * n);
    for (auto& x : e) x = static_cast<Elem>(dist(rng));
    MatrixFq m(field, n, std::move(e));
    if (m.is_invertible()) return m;
  }
}

kl::SumResult matrix_kloosterman_bruteforce(const chars::CharacterTuple& alpha, const chars::AdditiveCharacter& psi,
                                            const MatrixFq& x, const kl::EnumOptions& opts) {
  const gf::FieldPtr& field = x.field();
  if (alpha.field().get() != field.get() || psi.field().get() != field.get()) {
    throw Error(ErrorCode::FieldMismatch, "characters and matrix over different fields");
  }
  const Elem det_x = x.det();
  if (det_x == 0) throw Error(ErrorCode::SingularInput, "x is not invertible");
  const gf::Field& F = *field;
  const int n = x.dim();
  const int k = alpha.size();
  const std::uint64_t units = F.size() - 1;

  // Character tables over F: alpha_i by dlog, psi by element index.
  std::vector<std::vector<kl::cplx>> alpha_tab(k, std::vector<kl::cplx>(units));
  for (int i = 0; i < k; ++i) {
    for (std::uint64_t e = 0; e < units; ++e) alpha_tab[i][e] = alpha[i](F.exp(e));
  }
  std::vector<kl::cplx> psi_tab(F.size());
  for (std::uint64_t v = 0; v < F.size(); ++v) psi_tab[v] = psi(static_cast<Elem>(v));

  if (k == 1) return {alpha_tab[0][F.dlog(det_x)] * psi_tab[x.trace()], 1};

  const std::uint64_t order = gl_order(n, F.size());
  const double log_terms = (k - 1) * std::log10(static_cast<double>(order));
  if (order > kMaxGroupOrder || log_terms > std::log10(static_cast<double>(opts.budget)) + 1e-12) {
    throw Error(ErrorCode::ScaleExceeded, "matrix Kloosterman enumeration exceeds budget");
  }
  const std::vector<MatrixFq> group = enumerate_gl(n, field);
  const std::uint64_t G = group.size();
  std::vector<std::uint64_t> det_log(G);
  std::vector<kl::cplx> psi_tr(G);
  for (std::uint64_t i = 0; i < G; ++i) {
    det_log[i] = F.dlog(group[i].det());
    psi_tr[i] = psi_tab[group[i].trace()];
  }
  const std::uint64_t det_x_log = F.dlog(det_x);
  const std::size_t nn = static_cast<std::size_t>(n) * n;

  auto partial = [&](std::uint64_t g1) {
    kl::cplx sum = 0.0;
    std::vector<std::uint64_t> idx(k - 1, 0);
    idx[0] = g1;
    // prefix[i] = g_1 ... g_{i+1}; weight[i] = prod of alpha and psi factors.
    std::vector<std::vector<Elem>> prefix(k - 1, std::vector<Elem>(nn));
    std::vector<kl::cplx> weight(k - 1);
    std::vector<std::uint64_t> dsum(k - 1);
    std::vector<Elem> inv(nn), gk(nn), work;
    auto set_level = [&](int i) {
      const MatrixFq& g = group[idx[i]];
      if (i == 0) {
        std::copy(g.data().begin(), g.data().end(), prefix[0].begin());
        weight[0] = alpha_tab[0][det_log[idx[0]]] * psi_tr[idx[0]];
        dsum[0] = det_log[idx[0]];
      } else {
        mat_mul(F, n, prefix[i - 1].data(), g.data().data(), prefix[i].data());
        weight[i] = weight[i - 1] * alpha_tab[i][det_log[idx[i]]] * psi_tr[idx[i]];
        dsum[i] = dsum[i - 1] + det_log[idx[i]];
      }
    };
    for (int i = 0; i < k - 1; ++i) set_level(i);
    while (true) {
      // g_k = (g_1 ... g_{k-1})^{-1} x
      mat_inv(F, n, prefix[k - 2].data(), inv.data(), work);
      mat_mul(F, n, inv.data(), x.data().data(), gk.data());
      const std::uint64_t dk = (det_x_log + units - dsum[k - 2] % units) % units;
      sum += weight[k - 2] * alpha_tab[k - 1][dk] * psi_tab[mat_trace(F, n, gk.data())];
      int i = k - 2;
      while (i >= 1 && idx[i] + 1 == G) --i;
      if (i < 1) break;
      ++idx[i];
      set_level(i);
      for (int j = i + 1; j < k - 1; ++j) {
        idx[j] = 0;
        set_level(j);
      }
    }
    return sum;
  };

  std::vector<kl::cplx> sums(G);
  parallel_for(G, opts.workers, [&](std::uint64_t g1) { sums[g1] = partial(g1); });
  std::uint64_t terms = 1;
  for (int i = 1; i < k; ++i) terms *= G;
  return {pairwise_sum(sums), terms};
}

MatrixFq parse_matrix(const gf::FieldPtr& field, const std::string& text) {
  const auto first = text.find(':');
  if (first == std::string::npos) throw Error(ErrorCode::ParseError, "matrix spec '" + text + "' lacks ':'");
  const std::string kind = text.substr(0, first);
  const std::string rest = text.substr(first + 1);
  if (kind == "companion") return companion_matrix(field, parse_poly(rest));
  if (kind == "jordan") {
    const auto second = rest.find(':');
    if (second == std::string::npos) throw Error(ErrorCode::ParseError, "jordan spec needs poly:partition");
    const MatrixFq x = companion_matrix(field, parse_poly(rest.substr(0, second)));
    return jordan_matrix(x, symfunc::Partition::parse(rest.substr(second + 1)));
  }
  throw Error(ErrorCode::ParseError, "unknown matrix constructor '" + kind + "'");
}

ConjugacyDatum parse_datum(const std::string& text) {
  ConjugacyDatum d;
  std::stringstream ss(text);
  std::string block;
  while (std::getline(ss, block, '+')) {
    const auto first = block.find(':');
    if (first == std::string::npos) throw Error(ErrorCode::ParseError, "block spec '" + block + "' lacks ':'");
    const std::string kind = block.substr(0, first);
    const std::string rest = block.substr(first + 1);
    if (kind == "companion") {
      d.blocks.emplace_back(parse_poly(rest), symfunc::Partition{1});
    } else if (kind == "jordan") {
      const auto second = rest.find(':');
      if (second == std::string::npos) throw Error(ErrorCode::ParseError, "jordan spec needs poly:partition");
      d.blocks.emplace_back(parse_poly(rest.substr(0, second)), symfunc::Partition::parse(rest.substr(second + 1)));
    } else {
      throw Error(ErrorCode::ParseError, "unknown matrix constructor '" + kind + "'");
    }
  }
  if (d.blocks.empty()) throw Error(ErrorCode::ParseError, "empty matrix spec");
  return d;
}

}  // namespace klsum::glq
