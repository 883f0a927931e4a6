#pragma once

#include <boost/dynamic_bitset.hpp>

#include <cstddef>
#include <vector>

namespace broomlab {

/// Exact set of vertices drawn from 0..n-1.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(int universe) : bits_(static_cast<std::size_t>(universe)) {}

  int universe() const noexcept { return static_cast<int>(bits_.size()); }
  int size() const noexcept { return static_cast<int>(bits_.count()); }
  bool empty() const noexcept { return bits_.none(); }

  bool contains(int v) const;
  void insert(int v);
  void erase(int v);

  VertexSet& operator&=(const VertexSet& other);
  VertexSet& operator|=(const VertexSet& other);
  VertexSet& operator-=(const VertexSet& other);

  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
  friend bool operator==(const VertexSet& a, const VertexSet& b) {
    return a.bits_ == b.bits_;
  }

  /// Members in increasing order.
  std::vector<int> members() const;

 private:
  void check(int v) const;
  void check_universe(const VertexSet& other) const;

  boost::dynamic_bitset<> bits_;
};

}  // namespace broomlab
