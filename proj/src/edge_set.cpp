#include "ringtsp/edge_set.hpp"

#include <bit>
#include <sstream>

namespace ringtsp {

EdgeSet::EdgeSet(std::size_t capacity) : capacity_(capacity), words_((capacity + 63) / 64, 0) {}

EdgeSet::EdgeSet(std::size_t capacity, std::initializer_list<EdgeId> ids) : EdgeSet(capacity) {
  for (EdgeId e : ids) insert(e);
}

EdgeSet::EdgeSet(std::size_t capacity, const std::vector<EdgeId>& ids) : EdgeSet(capacity) {
  for (EdgeId e : ids) insert(e);
}

void EdgeSet::check_id(EdgeId e) const {
  if (e < 1 || e > capacity_) {
    throw DomainError("edge id e" + std::to_string(e) + " outside 1.." + std::to_string(capacity_));
  }
}

void EdgeSet::check_same(const EdgeSet& other) const {
  if (capacity_ != other.capacity_) {
    throw DomainError("edge sets over different ambient graphs (m=" + std::to_string(capacity_) +
                      " vs m=" + std::to_string(other.capacity_) + ")");
  }
}

std::size_t EdgeSet::size() const noexcept {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

bool EdgeSet::empty() const noexcept {
  for (auto w : words_) {
    if (w) return false;
  }
  return true;
}

bool EdgeSet::contains(EdgeId e) const {
  check_id(e);
  return (words_[(e - 1) / 64] >> ((e - 1) % 64)) & 1U;
}

void EdgeSet::insert(EdgeId e) {
  check_id(e);
  words_[(e - 1) / 64] |= std::uint64_t{1} << ((e - 1) % 64);
}

void EdgeSet::erase(EdgeId e) {
  check_id(e);
  words_[(e - 1) / 64] &= ~(std::uint64_t{1} << ((e - 1) % 64));
}

void EdgeSet::toggle(EdgeId e) {
  check_id(e);
  words_[(e - 1) / 64] ^= std::uint64_t{1} << ((e - 1) % 64);
}

std::vector<EdgeId> EdgeSet::ids() const {
  std::vector<EdgeId> out;
  for_each([&](EdgeId e) { out.push_back(e); });
  return out;
}

EdgeSet& EdgeSet::operator^=(const EdgeSet& other) {
  check_same(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
  return *this;
}

EdgeSet& EdgeSet::operator|=(const EdgeSet& other) {
  check_same(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

EdgeSet& EdgeSet::operator&=(const EdgeSet& other) {
  check_same(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

std::size_t EdgeSet::intersection_size(const EdgeSet& other) const {
  check_same(other);
  std::size_t c = 0;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    c += static_cast<std::size_t>(std::popcount(words_[i] & other.words_[i]));
  }
  return c;
}

std::strong_ordering EdgeSet::canonical_compare(const EdgeSet& other) const {
  check_same(other);
  // The first differing bit decides: whoever holds the smaller id there has
  // the smaller sequence, unless the other sequence already ended (prefix).
  for (std::size_t i = 0; i < words_.size(); ++i) {
    const std::uint64_t diff = words_[i] ^ other.words_[i];
    if (!diff) continue;
    const std::uint64_t low = diff & (~diff + 1);
    const bool mine = (words_[i] & low) != 0;
    auto has_more_from = [&](const std::vector<std::uint64_t>& ws) {
      if (ws[i] & ~(low | (low - 1))) return true;
      for (std::size_t j = i + 1; j < ws.size(); ++j) {
        if (ws[j]) return true;
      }
      return false;
    };
    if (mine) {
      return has_more_from(other.words_) ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return has_more_from(words_) ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  return std::strong_ordering::equal;
}

EdgeSet ring_sum(const EdgeSet& a, const EdgeSet& b) {
  EdgeSet r = a;
  r ^= b;
  return r;
}

EdgeSet set_union(const EdgeSet& a, const EdgeSet& b) {
  EdgeSet r = a;
  r |= b;
  return r;
}

EdgeSet intersect(const EdgeSet& a, const EdgeSet& b) {
  EdgeSet r = a;
  r &= b;
  return r;
}

std::string to_string(const EdgeSet& s) {
  std::ostringstream out;
  out << '{';
  bool first = true;
  s.for_each([&](EdgeId e) {
    if (!first) out << ',';
    out << 'e' << e;
    first = false;
  });
  out << '}';
  return out.str();
}

}  // namespace ringtsp
