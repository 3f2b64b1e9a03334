#include "csf/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace csf {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_) {
    if (p < 1) throw std::invalid_argument("Partition: parts must be positive");
  }
  std::sort(parts_.begin(), parts_.end(), std::greater<int>());
}

int Partition::weight() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::conjugate() const {
  std::vector<int> conj;
  if (parts_.empty()) return Partition{};
  conj.resize(static_cast<size_t>(parts_[0]));
  for (size_t j = 0; j < conj.size(); ++j) {
    int count = 0;
    for (int p : parts_) {
      if (p > static_cast<int>(j)) ++count;
    }
    conj[j] = count;
  }
  Partition out;
  out.parts_ = std::move(conj);  // already weakly decreasing
  return out;
}

Coeff Partition::multiplicity_factorial() const {
  Coeff r(1);
  size_t i = 0;
  while (i < parts_.size()) {
    size_t j = i;
    while (j < parts_.size() && parts_[j] == parts_[i]) ++j;
    r *= Coeff::factorial(static_cast<int>(j - i));
    i = j;
  }
  return r;
}

bool Partition::dominates(const Partition& other) const {
  if (weight() != other.weight()) {
    throw std::invalid_argument("Partition::dominates: weights differ");
  }
  long long a = 0, b = 0;
  size_t n = std::max(parts_.size(), other.parts_.size());
  for (size_t i = 0; i < n; ++i) {
    a += i < parts_.size() ? parts_[i] : 0;
    b += i < other.parts_.size() ? other.parts_[i] : 0;
    if (a < b) return false;
  }
  return true;
}

std::string Partition::str() const {
  std::string s;
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i) s.push_back(',');
    s += std::to_string(parts_[i]);
  }
  return s;
}

namespace {

void emit_partitions(int remaining, int max_part, std::vector<int>& acc,
                     std::vector<Partition>& out) {
  if (remaining == 0) {
    out.push_back(Partition(acc));
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    acc.push_back(p);
    emit_partitions(remaining - p, p, acc, out);
    acc.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw std::invalid_argument("partitions_of: negative weight");
  std::vector<Partition> out;
  std::vector<int> acc;
  emit_partitions(n, n, acc, out);
  if (n == 0) out.assign(1, Partition{});
  return out;
}

}  // namespace csf
