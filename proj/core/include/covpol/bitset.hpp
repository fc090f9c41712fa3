#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace covpol {

/// Fixed-size dynamic bitset used for order relations and upper ideals.
/// Kept minimal: exactly the operations the enumeration kernels need.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(int n) : size_(n), words_((n + 63) / 64, 0) {}

  int size() const { return size_; }

  bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(int i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(int i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

  int count() const;
  bool any() const;
  bool none() const { return !any(); }

  bool is_subset_of(const Bitset& other) const;
  bool intersects(const Bitset& other) const;

  Bitset& operator&=(const Bitset& o);
  Bitset& operator|=(const Bitset& o);
  friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
  friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
  Bitset and_not(const Bitset& o) const;  // *this & ~o, within size
  Bitset complemented() const;

  bool operator==(const Bitset&) const = default;

  // Deterministic total order on equal-sized sets (word-lexicographic);
  // enumeration code sorts by (count, lex) for canonical output.
  bool lex_less(const Bitset& o) const { return words_ < o.words_; }

  int find_first() const;      // -1 when empty
  int find_next(int i) const;  // first set bit > i, -1 at end

  template <class F>
  void for_each(F f) const {
    for (int i = find_first(); i >= 0; i = find_next(i)) f(i);
  }

  std::vector<int> to_indices() const;
  std::size_t hash() const;

 private:
  int size_ = 0;
  std::vector<std::uint64_t> words_;
};

struct BitsetHash {
  std::size_t operator()(const Bitset& b) const { return b.hash(); }
};

}  // namespace covpol
