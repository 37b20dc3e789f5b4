#include "framecomplex/multi_index.hpp"

#include <algorithm>

#include "framecomplex/errors.hpp"

namespace fcx {

namespace {

std::int64_t small_factorial(int n) {
  std::int64_t out = 1;
  for (int i = 2; i <= n; ++i) out *= i;
  return out;
}

}  // namespace

MultiIndex::MultiIndex(std::vector<int> counts) : counts_(std::move(counts)) {
  if (counts_.empty()) throw DomainError("multi-index width must be at least 1");
  for (int c : counts_)
    if (c < 0) throw DomainError("multi-index counts must be non-negative");
}

MultiIndex MultiIndex::zero(int width) {
  if (width < 1) throw DomainError("multi-index width must be at least 1");
  return MultiIndex(std::vector<int>(width, 0));
}

MultiIndex MultiIndex::unit(int width, int direction) {
  MultiIndex out = zero(width);
  return out.raised(direction);
}

int MultiIndex::count(int direction) const {
  if (direction < 1 || direction > width())
    throw DomainError("multi-index direction " + std::to_string(direction) + " out of range");
  return counts_[direction - 1];
}

int MultiIndex::degree() const {
  int total = 0;
  for (int c : counts_) total += c;
  return total;
}

std::int64_t MultiIndex::index_factorial() const {
  std::int64_t out = 1;
  for (int c : counts_) out *= small_factorial(c);
  return out;
}

std::int64_t MultiIndex::weight() const {
  return small_factorial(degree()) / index_factorial();
}

MultiIndex MultiIndex::raised(int direction) const {
  if (direction < 1 || direction > width())
    throw DomainError("multi-index direction " + std::to_string(direction) + " out of range");
  MultiIndex out = *this;
  ++out.counts_[direction - 1];
  return out;
}

std::optional<MultiIndex> MultiIndex::lowered(int direction) const {
  if (direction < 1 || direction > width())
    throw DomainError("multi-index direction " + std::to_string(direction) + " out of range");
  if (counts_[direction - 1] == 0) return std::nullopt;
  MultiIndex out = *this;
  --out.counts_[direction - 1];
  return out;
}

std::vector<int> MultiIndex::directions() const {
  std::vector<int> out;
  out.reserve(degree());
  for (int i = 0; i < width(); ++i)
    for (int c = 0; c < counts_[i]; ++c) out.push_back(i + 1);
  return out;
}

std::string MultiIndex::to_string() const {
  std::string out = "(";
  for (int i = 0; i < width(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(counts_[i]);
  }
  return out + ")";
}

std::strong_ordering MultiIndex::operator<=>(const MultiIndex& other) const {
  if (width() != other.width())
    throw DomainError("multi-index width mismatch: " + to_string() + " vs " + other.to_string());
  if (auto cmp = degree() <=> other.degree(); cmp != 0) return cmp;
  return std::lexicographical_compare_three_way(counts_.begin(), counts_.end(),
                                                other.counts_.begin(), other.counts_.end());
}

bool MultiIndex::operator==(const MultiIndex& other) const {
  return (*this <=> other) == 0;
}

std::vector<MultiIndex> MultiIndex::all_of_degree(int width, int degree) {
  if (width < 1) throw DomainError("multi-index width must be at least 1");
  if (degree < 0) throw DomainError("multi-index degree must be non-negative");
  std::vector<MultiIndex> out;
  std::vector<int> counts(width, 0);
  // Counts are generated in ascending lexicographic order, which is the
  // canonical order at fixed degree.
  auto recurse = [&](auto&& self, int slot, int remaining) -> void {
    if (slot == width - 1) {
      counts[slot] = remaining;
      out.push_back(MultiIndex(counts));
      return;
    }
    for (int c = 0; c <= remaining; ++c) {
      counts[slot] = c;
      self(self, slot + 1, remaining - c);
    }
  };
  recurse(recurse, 0, degree);
  return out;
}

}  // namespace fcx
