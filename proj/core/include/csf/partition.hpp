#pragma once

#include <compare>
#include <span>
#include <string>
#include <vector>

#include "csf/exact_int.hpp"

namespace csf {

// Integer partition stored in canonical weakly-decreasing order.
// The empty partition (weight 0) is valid.
class Partition {
public:
  Partition() = default;
  // Parts may arrive in any order; they are sorted on construction.
  // Throws if any part is < 1.
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int part(int i) const { return parts_[static_cast<size_t>(i)]; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  int weight() const;

  Partition conjugate() const;

  // Product of factorials of part multiplicities: for (2,1,1) this is 1!*2!.
  Coeff multiplicity_factorial() const;

  // True when this partition dominates `other` (both must have equal weight):
  // every prefix sum of this is >= the corresponding prefix sum of other.
  bool dominates(const Partition& other) const;

  // "3,2,1"; empty partition renders as "".
  std::string str() const;

  // Ascending lexicographic order on the raw part vectors.  For a fixed
  // weight, iterating a map in reverse therefore visits partitions in an
  // order that extends dominance from the top ((n) first).
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }
  friend bool operator==(const Partition& a, const Partition& b) = default;

private:
  std::vector<int> parts_;
};

// All partitions of n in descending lexicographic order: (n) first, (1^n) last.
std::vector<Partition> partitions_of(int n);

}  // namespace csf
