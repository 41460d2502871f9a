#include "klsum/flags.hpp"

#include <algorithm>
#include <functional>

#include "klsum/error.hpp"
#include "klsum/parallel.hpp"

namespace klsum::flags {

using gf::Elem;

bool SubspaceFq::contains(const std::vector<Elem>& v) const {
  const gf::Field& F = *field;
  std::vector<Elem> w = v;
  for (int i = 0; i < dim; ++i) {
    const Elem c = w[pivots[i]];
    if (c == 0) continue;
    for (int j = 0; j < ambient; ++j) w[j] = F.sub(w[j], F.mul(c, rref[i * ambient + j]));
  }
  return std::all_of(w.begin(), w.end(), [](Elem e) { return e == 0; });
}

bool SubspaceFq::contains(const SubspaceFq& other) const {
  if (other.dim > dim) return false;
  for (int i = 0; i < other.dim; ++i) {
    std::vector<Elem> row(other.rref.begin() + i * ambient, other.rref.begin() + (i + 1) * ambient);
    if (!contains(row)) return false;
  }
  return true;
}

std::uint64_t subspace_count(int b, std::uint64_t Q) {
  std::uint64_t total = 0;
  for (int d = 0; d <= b; ++d) {
    const BigInt c = symfunc::q_binomial(b, d).eval(BigInt(Q));
    if (c > kMaxSubspaces) return kMaxSubspaces + 1;
    total += c.convert_to<std::uint64_t>();
  }
  return total;
}

namespace {

// All subspaces sharing one pivot pattern: free entries sit right of each
// pivot outside the pivot columns.
std::vector<SubspaceFq> subspaces_with_pivots(const gf::FieldPtr& field, int b, const std::vector<int>& pivots) {
  const int d = static_cast<int>(pivots.size());
  std::vector<bool> is_pivot(b, false);
  for (int p : pivots) is_pivot[p] = true;
  std::vector<std::pair<int, int>> free;
  for (int i = 0; i < d; ++i) {
    for (int j = pivots[i] + 1; j < b; ++j) {
      if (!is_pivot[j]) free.emplace_back(i, j);
    }
  }
  const std::uint64_t Q = field->size();
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < free.size(); ++i) count *= Q;

  std::vector<SubspaceFq> out;
  out.reserve(count);
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    SubspaceFq s{field, b, d, std::vector<Elem>(static_cast<std::size_t>(d) * b, 0), pivots};
    for (int i = 0; i < d; ++i) s.rref[i * b + pivots[i]] = 1;
    std::uint64_t t = idx;
    for (auto it = free.rbegin(); it != free.rend(); ++it) {
      s.rref[it->first * b + it->second] = static_cast<Elem>(t % Q);
      t /= Q;
    }
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<std::vector<int>> pivot_patterns(int b) {
  std::vector<std::vector<int>> out;
  for (int d = 0; d <= b; ++d) {
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int start) {
      if (static_cast<int>(cur.size()) == d) {
        out.push_back(cur);
        return;
      }
      for (int j = start; j < b; ++j) {
        cur.push_back(j);
        rec(j + 1);
        cur.pop_back();
      }
    };
    rec(0);
  }
  return out;
}

bool is_invariant(const SubspaceFq& s, const glq::MatrixFq& g) {
  const gf::Field& F = *s.field;
  const int b = s.ambient;
  std::vector<Elem> image(b);
  for (int i = 0; i < s.dim; ++i) {
    for (int r = 0; r < b; ++r) {
      Elem acc = 0;
      for (int c = 0; c < b; ++c) acc = F.add(acc, F.mul(g(r, c), s.rref[i * b + c]));
      image[r] = acc;
    }
    if (!s.contains(image)) return false;
  }
  return true;
}

std::vector<SubspaceFq> collect(const gf::FieldPtr& field, int b, unsigned workers,
                                const std::function<bool(const SubspaceFq&)>& keep) {
  if (subspace_count(b, field->size()) > kMaxSubspaces) {
    throw Error(ErrorCode::ScaleExceeded, "too many subspaces to enumerate");
  }
  const auto patterns = pivot_patterns(b);
  std::vector<std::vector<SubspaceFq>> parts(patterns.size());
  parallel_for(patterns.size(), workers, [&](std::uint64_t i) {
    for (auto& s : subspaces_with_pivots(field, b, patterns[i])) {
      if (keep(s)) parts[i].push_back(std::move(s));
    }
  });
  std::vector<SubspaceFq> out;
  for (auto& p : parts) {
    for (auto& s : p) out.push_back(std::move(s));
  }
  return out;
}

}  // namespace

std::vector<SubspaceFq> enumerate_subspaces(const gf::FieldPtr& field, int b, unsigned workers) {
  return collect(field, b, workers, [](const SubspaceFq&) { return true; });
}

InvariantLattice::InvariantLattice(const glq::MatrixFq& g, unsigned workers) : b_(g.dim()) {
  if (!g.is_invertible()) throw Error(ErrorCode::SingularInput, "g is not invertible");
  subs_ = collect(g.field(), b_, workers, [&](const SubspaceFq& s) { return is_invariant(s, g); });
  by_dim_.assign(b_ + 1, {});
  for (std::size_t i = 0; i < subs_.size(); ++i) by_dim_[subs_[i].dim].push_back(static_cast<int>(i));
  below_.assign(subs_.size(), {});
  for (std::size_t i = 0; i < subs_.size(); ++i) {
    for (int d = 0; d <= subs_[i].dim; ++d) {
      for (int j : by_dim_[d]) {
        if (subs_[i].contains(subs_[j])) below_[i].push_back(j);
      }
    }
  }
}

BigInt InvariantLattice::count_chains(const symfunc::WeakComposition& comp) const {
  if (comp.size() != b_) {
    throw Error(ErrorCode::CompositionMismatch,
                "composition " + comp.to_string() + " does not sum to " + std::to_string(b_));
  }
  // ways[i] = number of partial chains ending at subs_[i].
  std::vector<BigInt> ways(subs_.size(), 0);
  for (int i : by_dim_[0]) ways[i] = 1;
  int dim = 0;
  for (int m : comp.parts()) {
    if (m == 0) continue;
    const int next = dim + m;
    std::vector<BigInt> nw(subs_.size(), 0);
    for (int i : by_dim_[next]) {
      for (int j : below_[i]) {
        if (subs_[j].dim == dim) nw[i] += ways[j];
      }
    }
    ways = std::move(nw);
    dim = next;
  }
  BigInt total = 0;
  for (int i : by_dim_[b_]) total += ways[i];
  return total;
}

BigInt count_fixed_weak_flags_bruteforce(const symfunc::WeakComposition& comp, const glq::MatrixFq& g,
                                         unsigned workers) {
  if (comp.size() != g.dim()) {
    throw Error(ErrorCode::CompositionMismatch,
                "composition " + comp.to_string() + " does not sum to " + std::to_string(g.dim()));
  }
  return InvariantLattice(g, workers).count_chains(comp);
}

BigInt count_fixed_flags_formula(const symfunc::Partition& mu, const symfunc::Partition& lambda, const BigInt& qa) {
  if (mu.size() != lambda.size()) throw Error(ErrorCode::SizeMismatch, "|mu| != |lambda|");
  const symfunc::IntPolynomial p = symfunc::p_mu_lambda(mu, lambda);
  symfunc::Rational qn = 1;
  for (int i = 0; i < mu.n(); ++i) qn *= qa;
  const symfunc::Rational v = qn * p.eval(symfunc::Rational(1, qa));
  if (boost::multiprecision::denominator(v) != 1) {
    throw Error(ErrorCode::NonIntegerResult, "flag count formula is not an integer");
  }
  return boost::multiprecision::numerator(v);
}

BigInt count_fixed_length_k_weak_flags(const symfunc::Partition& mu, const BigInt& qa, int k) {
  if (k < 1) throw Error(ErrorCode::IndexOutOfRange, "k must be positive");
  BigInt total = 0;
  for (const auto& comp : symfunc::weak_compositions(mu.size(), k)) {
    total += count_fixed_flags_formula(mu, comp.sorted(), qa);
  }
  return total;
}

}  // namespace klsum::flags
