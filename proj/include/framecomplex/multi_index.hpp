// Multi-indices I in N^m recording derivative counts per frame direction.
#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace fcx {

// Frame directions are 1-based throughout, matching the u[alpha;directions]
// input syntax. Immutable value type.
class MultiIndex {
 public:
  explicit MultiIndex(std::vector<int> counts);

  static MultiIndex zero(int width);
  static MultiIndex unit(int width, int direction);  // 1_i

  int width() const { return static_cast<int>(counts_.size()); }
  int count(int direction) const;  // I(i)
  int degree() const;              // |I|

  std::int64_t index_factorial() const;  // I! = prod_i I(i)!
  std::int64_t weight() const;           // |I|! / I!, the number of distinct rearrangements

  MultiIndex raised(int direction) const;                  // I + 1_i
  std::optional<MultiIndex> lowered(int direction) const;  // I - 1_i, absent when I(i) = 0

  const std::vector<int>& counts() const { return counts_; }

  // Expanded direction list "i1 i2 ... ip" with repeats, ascending; empty for |I| = 0.
  std::vector<int> directions() const;

  std::string to_string() const;  // "(c1,...,cm)"

  // Canonical order: by degree, then lexicographically on the counts.
  // Width mismatches are programming errors and throw.
  std::strong_ordering operator<=>(const MultiIndex& other) const;
  bool operator==(const MultiIndex& other) const;

  // All width-m indices of exactly the given degree, in canonical order.
  static std::vector<MultiIndex> all_of_degree(int width, int degree);

 private:
  std::vector<int> counts_;
};

}  // namespace fcx
