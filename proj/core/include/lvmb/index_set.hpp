#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace lvmb {

/// Set of coordinate indices, stored 0-based as a bitmask.
/// Indices are limited to [0, kMaxIndices); config parsing enforces n <= kMaxIndices.
class IndexSet {
 public:
  static constexpr std::size_t kMaxIndices = 64;

  constexpr IndexSet() = default;
  constexpr explicit IndexSet(std::uint64_t bits) : bits_(bits) {}
  IndexSet(std::initializer_list<std::size_t> zero_based);

  static IndexSet full(std::size_t n);
  /// From 1-based indices; throws DomainError on 0 or values beyond kMaxIndices.
  static IndexSet from_one_based(const std::vector<std::size_t>& indices);

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr bool contains(std::size_t i) const { return i < kMaxIndices && ((bits_ >> i) & 1U) != 0; }
  constexpr bool is_subset_of(IndexSet other) const { return (bits_ & ~other.bits_) == 0; }
  /// Largest index + 1, or 0 when empty.
  constexpr std::size_t extent() const {
    return bits_ == 0 ? 0 : kMaxIndices - static_cast<std::size_t>(std::countl_zero(bits_));
  }

  void insert(std::size_t i);
  void erase(std::size_t i);

  std::vector<std::size_t> elements() const;
  std::vector<std::size_t> one_based() const;
  std::string to_string() const;

  friend constexpr IndexSet operator|(IndexSet a, IndexSet b) { return IndexSet(a.bits_ | b.bits_); }
  friend constexpr IndexSet operator&(IndexSet a, IndexSet b) { return IndexSet(a.bits_ & b.bits_); }
  friend constexpr bool operator==(IndexSet a, IndexSet b) = default;
  /// Lexicographic order on the sorted element lists.
  friend bool operator<(IndexSet a, IndexSet b);

 private:
  std::uint64_t bits_ = 0;
};

}  // namespace lvmb
