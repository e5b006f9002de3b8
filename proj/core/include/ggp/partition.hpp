#pragma once

#include <compare>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "ggp/rational.hpp"

namespace ggp {

/// Integer partition: weakly decreasing positive parts. The empty partition
/// is the unique partition of 0.
class Partition {
 public:
  Partition() = default;
  /// Throws Error(invalid_partition) unless parts are positive and weakly decreasing.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  /// Sorts arbitrary positive parts into a partition.
  static Partition from_unsorted(std::vector<int> parts);
  /// The one-row partition (n), or () for n == 0.
  static Partition row(int n);

  std::span<const int> parts() const noexcept { return parts_; }
  int size() const noexcept { return size_; }
  int length() const noexcept { return static_cast<int>(parts_.size()); }
  bool empty() const noexcept { return parts_.empty(); }
  int operator[](std::size_t i) const { return parts_[i]; }

  /// Number of parts equal to `part`.
  int multiplicity(int part) const noexcept;
  /// part -> multiplicity, ascending by part.
  std::map<int, int> multiplicities() const;

  friend bool operator==(const Partition& a, const Partition& b) noexcept { return a.parts_ == b.parts_; }
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) noexcept {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

/// Canonical output order: ascending size, then reverse-lexicographic within
/// a size, so partitions_of(3) reads (3), (2,1), (1,1,1).
struct RevLexOrder {
  bool operator()(const Partition& a, const Partition& b) const noexcept {
    if (a.size() != b.size()) return a.size() < b.size();
    return b < a;
  }
};

/// All partitions of n in reverse-lexicographic order; {()} for n == 0.
std::vector<Partition> partitions_of(int n);

/// z_lambda = prod_i i^{m_i} m_i!.
Integer z_stat(const Partition& lambda);

/// n(lambda) = sum_i (i-1) lambda_i.
long n_stat(const Partition& lambda);

/// Multiset union of parts.
Partition concat_sort(const Partition& a, const Partition& b);

/// Removes one copy of `part`. Throws Error(invalid_argument) if absent.
Partition remove_part(const Partition& lambda, int part);

/// Every part multiplied by `factor` (factor >= 1).
Partition scale_parts(const Partition& lambda, int factor);

/// True iff `fine` is obtained from `coarse` by splitting parts, i.e. the
/// parts of `fine` can be grouped into blocks whose sums are the parts of
/// `coarse`. Every partition refines itself.
bool refines(const Partition& fine, const Partition& coarse);

/// "[2,1]"; "[]" for the empty partition.
std::string to_string(const Partition& lambda);

}  // namespace ggp
