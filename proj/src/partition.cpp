#include <algorithm>
#include <sstream>

#include "klsum/error.hpp"
#include "klsum/symfunc.hpp"

namespace klsum::symfunc {

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw Error(ErrorCode::InvalidPartition, "parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw Error(ErrorCode::InvalidPartition, "parts must be weakly decreasing");
    size_ += parts_[i];
  }
}

Partition Partition::parse(const std::string& text) {
  std::vector<int> parts;
  if (text.empty() || text == "()") return Partition();
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      std::size_t pos = 0;
      parts.push_back(std::stoi(tok, &pos));
      if (pos != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::logic_error&) {
      throw Error(ErrorCode::ParseError, "bad partition '" + text + "'");
    }
  }
  return Partition(std::move(parts));
}

int Partition::multiplicity(int j) const { return static_cast<int>(std::count(parts_.begin(), parts_.end(), j)); }

std::uint64_t Partition::z() const {
  std::uint64_t z = 1;
  std::size_t i = 0;
  while (i < parts_.size()) {
    const int j = parts_[i];
    std::uint64_t m = 0;
    while (i < parts_.size() && parts_[i] == j) {
      ++m;
      ++i;
      z *= static_cast<std::uint64_t>(j) * m;
    }
  }
  return z;
}

int Partition::n() const {
  int s = 0;
  for (int i = 0; i < length(); ++i) s += i * parts_[i];
  return s;
}

Partition Partition::conjugate() const {
  std::vector<int> out;
  if (parts_.empty()) return Partition();
  for (int j = 1; j <= parts_.front(); ++j) {
    int c = 0;
    for (int p : parts_) c += p >= j ? 1 : 0;
    out.push_back(c);
  }
  return Partition(std::move(out));
}

std::string Partition::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
  return os.str();
}

namespace {

void gen_partitions(int remaining, int max_part, std::vector<int>& cur, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    cur.push_back(p);
    gen_partitions(remaining - p, p, cur, out);
    cur.pop_back();
  }
}

void gen_compositions(int remaining, int slots, std::vector<int>& cur, std::vector<WeakComposition>& out) {
  if (slots == 1) {
    cur.push_back(remaining);
    out.emplace_back(cur);
    cur.pop_back();
    return;
  }
  for (int p = remaining; p >= 0; --p) {
    cur.push_back(p);
    gen_compositions(remaining - p, slots - 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int b) {
  std::vector<Partition> out;
  if (b < 0) return out;
  std::vector<int> cur;
  gen_partitions(b, b, cur, out);
  return out;
}

WeakComposition::WeakComposition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_) {
    if (p < 0) throw Error(ErrorCode::CompositionMismatch, "negative part in weak composition");
    size_ += p;
  }
}

Partition WeakComposition::sorted() const {
  std::vector<int> v;
  for (int p : parts_) {
    if (p > 0) v.push_back(p);
  }
  std::sort(v.rbegin(), v.rend());
  return Partition(std::move(v));
}

std::string WeakComposition::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
  return os.str();
}

std::vector<WeakComposition> weak_compositions(int b, int k) {
  std::vector<WeakComposition> out;
  if (b < 0 || k < 1) return out;
  std::vector<int> cur;
  gen_compositions(b, k, cur, out);
  return out;
}

}  // namespace klsum::symfunc
