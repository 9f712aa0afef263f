#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "ringtsp/graph.hpp"

namespace ringtsp {

/// Characteristic vector of a spanning subgraph over GF(2), indexed by edge
/// ids 1..m. The capacity m is fixed at construction; binary operations on
/// sets of different capacity throw DomainError.
class EdgeSet {
 public:
  EdgeSet() = default;
  explicit EdgeSet(std::size_t capacity);
  EdgeSet(std::size_t capacity, std::initializer_list<EdgeId> ids);
  EdgeSet(std::size_t capacity, const std::vector<EdgeId>& ids);

  [[nodiscard]] std::size_t capacity() const noexcept { return capacity_; }
  [[nodiscard]] std::size_t size() const noexcept;
  [[nodiscard]] bool empty() const noexcept;

  [[nodiscard]] bool contains(EdgeId e) const;
  void insert(EdgeId e);
  void erase(EdgeId e);
  void toggle(EdgeId e);

  /// Member ids in increasing order.
  [[nodiscard]] std::vector<EdgeId> ids() const;

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits) {
        const int b = __builtin_ctzll(bits);
        f(static_cast<EdgeId>(w * 64 + b + 1));
        bits &= bits - 1;
      }
    }
  }

  EdgeSet& operator^=(const EdgeSet& other);
  EdgeSet& operator|=(const EdgeSet& other);
  EdgeSet& operator&=(const EdgeSet& other);

  [[nodiscard]] std::size_t intersection_size(const EdgeSet& other) const;

  friend bool operator==(const EdgeSet& a, const EdgeSet& b) = default;

  /// Canonical order: lexicographic over the sorted member-id sequences.
  /// Requires equal capacity.
  [[nodiscard]] std::strong_ordering canonical_compare(const EdgeSet& other) const;

 private:
  void check_id(EdgeId e) const;
  void check_same(const EdgeSet& other) const;

  std::size_t capacity_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Ring sum: (A u B) \ (A n B).
[[nodiscard]] EdgeSet ring_sum(const EdgeSet& a, const EdgeSet& b);
[[nodiscard]] EdgeSet set_union(const EdgeSet& a, const EdgeSet& b);
[[nodiscard]] EdgeSet intersect(const EdgeSet& a, const EdgeSet& b);

inline EdgeSet operator^(const EdgeSet& a, const EdgeSet& b) { return ring_sum(a, b); }
inline EdgeSet operator|(const EdgeSet& a, const EdgeSet& b) { return set_union(a, b); }
inline EdgeSet operator&(const EdgeSet& a, const EdgeSet& b) { return intersect(a, b); }

/// "{e2,e4,e5}"; the empty set prints as "{}".
[[nodiscard]] std::string to_string(const EdgeSet& s);

}  // namespace ringtsp
