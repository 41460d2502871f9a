#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <shared_mutex>

#include "klsum/error.hpp"
#include "klsum/symfunc.hpp"

namespace klsum::symfunc {

namespace {

void require_same_size(const Partition& a, const Partition& b) {
  if (a.size() != b.size()) {
    throw Error(ErrorCode::SizeMismatch, "|" + a.to_string() + "| != |" + b.to_string() + "|");
  }
}

// Memo table with shared reads and exclusive writes.
template <typename Key, typename Value>
class Memo {
 public:
  bool find(const Key& k, Value& out) const {
    std::shared_lock lock(mu_);
    auto it = map_.find(k);
    if (it == map_.end()) return false;
    out = it->second;
    return true;
  }
  void insert(const Key& k, const Value& v) {
    std::unique_lock lock(mu_);
    map_.emplace(k, v);
  }

 private:
  mutable std::shared_mutex mu_;
  std::map<Key, Value> map_;
};

// Extends `shape` by a horizontal strip of `count` boxes labelled `letter`,
// staying inside `outer`.
void add_strip(const std::vector<int>& outer, Tableau& tab, std::size_t row, int count, int letter,
               const std::vector<int>& before, const std::function<void()>& done) {
  if (count == 0) {
    done();
    return;
  }
  if (row >= outer.size()) return;
  const int cur = static_cast<int>(tab[row].size());
  int cap = outer[row] - cur;
  if (row > 0) cap = std::min(cap, before[row - 1] - cur);
  cap = std::min(cap, count);
  for (int x = cap; x >= 0; --x) {
    for (int i = 0; i < x; ++i) tab[row].push_back(letter);
    add_strip(outer, tab, row + 1, count - x, letter, before, done);
    tab[row].resize(cur);
  }
}

void fill_tableaux(const Partition& rho, const Partition& mu, int letter, Tableau& tab, std::vector<Tableau>& out) {
  if (letter > mu.length()) {
    out.push_back(tab);
    return;
  }
  std::vector<int> before;
  for (const auto& r : tab) before.push_back(static_cast<int>(r.size()));
  add_strip(rho.parts(), tab, 0, mu.part(letter - 1), letter, before,
            [&] { fill_tableaux(rho, mu, letter + 1, tab, out); });
}

Memo<std::pair<Partition, Partition>, BigInt> kostka_memo;
Memo<std::pair<Partition, Partition>, IntPolynomial> kf_memo;
Memo<std::pair<std::vector<int>, std::vector<int>>, BigInt> mn_memo;

// Number of chains nu -> rho removing horizontal strips of sizes mu_l, ..., mu_1.
BigInt count_strip_chains(const std::vector<int>& shape, const std::vector<int>& content) {
  if (content.empty()) return shape.empty() ? 1 : 0;
  const int last = content.back();
  const std::vector<int> rest(content.begin(), content.end() - 1);
  BigInt total = 0;
  // Remove `last` boxes as a horizontal strip: row r may shrink to no less
  // than shape[r+1].
  std::vector<int> cur = shape;
  std::function<void(std::size_t, int)> rec = [&](std::size_t r, int left) {
    if (r == shape.size()) {
      if (left != 0) return;
      std::vector<int> trimmed;
      for (int v : cur) {
        if (v > 0) trimmed.push_back(v);
      }
      if (static_cast<int>(trimmed.size()) > static_cast<int>(rest.size())) return;
      total += count_strip_chains(trimmed, rest);
      return;
    }
    const int floor_len = r + 1 < shape.size() ? shape[r + 1] : 0;
    const int maxr = std::min(left, shape[r] - floor_len);
    for (int x = 0; x <= maxr; ++x) {
      cur[r] = shape[r] - x;
      rec(r + 1, left - x);
    }
    cur[r] = shape[r];
  };
  rec(0, last);
  return total;
}

std::vector<int> beta_to_parts(std::vector<int> beta) {
  std::sort(beta.rbegin(), beta.rend());
  const int l = static_cast<int>(beta.size());
  std::vector<int> parts;
  for (int i = 0; i < l; ++i) {
    const int p = beta[i] - (l - 1 - i);
    if (p > 0) parts.push_back(p);
  }
  return parts;
}

BigInt mn_rec(const std::vector<int>& shape, const std::vector<int>& cycles) {
  if (cycles.empty()) return shape.empty() ? 1 : 0;
  const auto key = std::make_pair(shape, cycles);
  BigInt cached;
  if (mn_memo.find(key, cached)) return cached;

  const int r = cycles.front();
  const std::vector<int> rest(cycles.begin() + 1, cycles.end());
  const int l = static_cast<int>(shape.size());
  std::vector<int> beta(l);
  for (int i = 0; i < l; ++i) beta[i] = shape[i] + (l - 1 - i);

  BigInt total = 0;
  for (int i = 0; i < l; ++i) {
    const int target = beta[i] - r;
    if (target < 0 || std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
    int between = 0;
    for (int b : beta) between += (b > target && b < beta[i]) ? 1 : 0;
    std::vector<int> nb = beta;
    nb[i] = target;
    const BigInt sub = mn_rec(beta_to_parts(nb), rest);
    total += (between % 2 == 0) ? sub : BigInt(-sub);
  }
  mn_memo.insert(key, total);
  return total;
}

}  // namespace

std::vector<Tableau> semistandard_tableaux(const Partition& rho, const Partition& mu) {
  require_same_size(rho, mu);
  std::vector<Tableau> out;
  Tableau tab(rho.length());
  fill_tableaux(rho, mu, 1, tab, out);
  return out;
}

std::vector<int> reading_word(const Tableau& t) {
  std::vector<int> w;
  for (auto it = t.rbegin(); it != t.rend(); ++it) w.insert(w.end(), it->begin(), it->end());
  return w;
}

int charge(const std::vector<int>& word) {
  const int n = static_cast<int>(word.size());
  std::vector<bool> used(n, false);
  int remaining = n;
  int total = 0;
  while (remaining > 0) {
    // Rightmost unused 1 starts the standard subword.
    int pos = -1;
    for (int i = n - 1; i >= 0; --i) {
      if (!used[i] && word[i] == 1) {
        pos = i;
        break;
      }
    }
    if (pos < 0) throw Error(ErrorCode::InvalidPartition, "word content is not a partition");
    used[pos] = true;
    --remaining;
    int index = 0;
    for (int letter = 2;; ++letter) {
      int found = -1;
      for (int i = pos - 1; i >= 0 && found < 0; --i) {
        if (!used[i] && word[i] == letter) found = i;
      }
      if (found < 0) {
        for (int i = n - 1; i > pos && found < 0; --i) {
          if (!used[i] && word[i] == letter) found = i;
        }
        if (found < 0) break;
        ++index;
      }
      total += index;
      used[found] = true;
      --remaining;
      pos = found;
    }
  }
  return total;
}

BigInt kostka_number(const Partition& rho, const Partition& mu) {
  require_same_size(rho, mu);
  const auto key = std::make_pair(rho, mu);
  BigInt cached;
  if (kostka_memo.find(key, cached)) return cached;
  const BigInt v = count_strip_chains(rho.parts(), mu.parts());
  kostka_memo.insert(key, v);
  return v;
}

IntPolynomial kostka_foulkes(const Partition& rho, const Partition& mu) {
  require_same_size(rho, mu);
  const auto key = std::make_pair(rho, mu);
  IntPolynomial cached;
  if (kf_memo.find(key, cached)) return cached;
  std::vector<BigInt> coeffs;
  for (const auto& tab : semistandard_tableaux(rho, mu)) {
    const int c = charge(reading_word(tab));
    if (static_cast<int>(coeffs.size()) <= c) coeffs.resize(c + 1, 0);
    coeffs[c] += 1;
  }
  IntPolynomial p(std::move(coeffs));
  kf_memo.insert(key, p);
  return p;
}

BigInt symgroup_character(const Partition& rho, const Partition& lambda) {
  require_same_size(rho, lambda);
  return mn_rec(rho.parts(), lambda.parts());
}

IntPolynomial green_polynomial(const Partition& lambda, const Partition& mu) {
  require_same_size(lambda, mu);
  IntPolynomial x;
  for (const auto& rho : partitions_of(mu.size())) {
    const BigInt chi = symgroup_character(rho, lambda);
    if (chi != 0) x += kostka_foulkes(rho, mu) * chi;
  }
  return x.reversed(mu.n());
}

IntPolynomial p_mu_lambda(const Partition& mu, const Partition& lambda) {
  require_same_size(mu, lambda);
  IntPolynomial r;
  for (const auto& rho : partitions_of(mu.size())) {
    const BigInt k = kostka_number(rho, lambda);
    if (k != 0) r += kostka_foulkes(rho, mu) * k;
  }
  return r;
}

}  // namespace klsum::symfunc
