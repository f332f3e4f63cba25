// Subsets of the chain {1 < 2 < ... < n} as bitmasks, together with the
// similarity relation that controls which domain/image pairs admit an
// order-, fence- and parity-preserving partial injection.

#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace fence {

// Number of points in the chain. The bitmask representation caps this at
// 16; everything here is exhaustive search, so the practical range is
// smaller anyway.
class ChainSize {
 public:
  static constexpr int max_value = 16;

  explicit ChainSize(int n) : n_(n) {
    if (n < 1 || n > max_value) {
      throw std::invalid_argument("chain size must be in [1, " +
                                  std::to_string(max_value) + "], got " +
                                  std::to_string(n));
    }
  }

  int value() const { return n_; }
  std::uint32_t full_mask() const { return (1u << n_) - 1; }

  friend bool operator==(ChainSize, ChainSize) = default;

 private:
  int n_;
};

// A subset of {1..n}. Bit i-1 of the mask stands for the point i.
class PointSet {
 public:
  constexpr PointSet() = default;

  static constexpr PointSet from_mask(std::uint32_t bits) {
    PointSet s;
    s.bits_ = bits;
    return s;
  }

  // Expects 1-based, strictly increasing points.
  static PointSet from_elements(const std::vector<int>& elems) {
    PointSet s;
    int prev = 0;
    for (int e : elems) {
      if (e < 1 || e > ChainSize::max_value) {
        throw std::invalid_argument("point " + std::to_string(e) +
                                    " outside [1, " +
                                    std::to_string(ChainSize::max_value) + "]");
      }
      if (e <= prev) {
        throw std::invalid_argument("points must be strictly increasing");
      }
      s.bits_ |= 1u << (e - 1);
      prev = e;
    }
    return s;
  }

  constexpr std::uint32_t mask() const { return bits_; }
  int size() const { return std::popcount(bits_); }
  bool empty() const { return bits_ == 0; }

  bool contains(int e) const {
    return e >= 1 && e <= ChainSize::max_value && ((bits_ >> (e - 1)) & 1u);
  }

  bool subset_of(PointSet other) const {
    return (bits_ & other.bits_) == bits_;
  }

  bool within(ChainSize n) const { return (bits_ & ~n.full_mask()) == 0; }

  std::vector<int> elements() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (std::uint32_t b = bits_; b != 0; b &= b - 1) {
      out.push_back(std::countr_zero(b) + 1);
    }
    return out;
  }

  // 1-based r-th smallest point.
  int element_at(int r) const {
    if (r < 1 || r > size()) {
      throw std::out_of_range("position " + std::to_string(r) +
                              " out of range for set of size " +
                              std::to_string(size()));
    }
    std::uint32_t b = bits_;
    for (int i = 1; i < r; ++i) b &= b - 1;
    return std::countr_zero(b) + 1;
  }

  std::string to_string() const {
    std::string out = "{";
    bool first = true;
    for (int e : elements()) {
      if (!first) out += ",";
      out += std::to_string(e);
      first = false;
    }
    return out + "}";
  }

  friend constexpr bool operator==(PointSet, PointSet) = default;

  // Total order: smaller size first, then lexicographic on the ascending
  // element sequence. For equal sizes the lexicographically smaller set is
  // the one owning the least element of the symmetric difference.
  friend bool operator<(PointSet a, PointSet b) {
    if (a.size() != b.size()) return a.size() < b.size();
    std::uint32_t d = a.bits_ ^ b.bits_;
    return d != 0 && (a.bits_ & (d & (~d + 1))) != 0;
  }

 private:
  std::uint32_t bits_ = 0;
};

// Positional fingerprint of a subset: its size, the parity of each element,
// and which consecutive gaps are exactly 1. Two subsets admit an order-,
// fence- and parity-preserving bijection exactly when these coincide.
struct Signature {
  int size = 0;
  std::uint32_t parity_bits = 0;     // bit r: the (r+1)-th smallest point is odd
  std::uint32_t adjacency_bits = 0;  // bit r: gap between positions r+1, r+2 is 1

  std::uint64_t packed() const {
    return static_cast<std::uint64_t>(size) |
           (static_cast<std::uint64_t>(parity_bits) << 5) |
           (static_cast<std::uint64_t>(adjacency_bits) << 21);
  }

  friend bool operator==(const Signature&, const Signature&) = default;
};

inline Signature signature(PointSet s) {
  Signature sig;
  sig.size = s.size();
  int r = 0;
  int prev = 0;
  for (int e : s.elements()) {
    if (e % 2 == 1) sig.parity_bits |= 1u << r;
    if (r > 0 && e - prev == 1) sig.adjacency_bits |= 1u << (r - 1);
    prev = e;
    ++r;
  }
  return sig;
}

// The similarity relation, checked directly against its three defining
// conditions: equal size, equal parity position by position, and gaps of
// exactly 1 occurring in the same positions.
inline bool similar(PointSet a, PointSet b) {
  if (a.size() != b.size()) return false;
  const std::vector<int> xs = a.elements();
  const std::vector<int> ys = b.elements();
  for (std::size_t r = 0; r < xs.size(); ++r) {
    if (((xs[r] ^ ys[r]) & 1) != 0) return false;
  }
  for (std::size_t r = 1; r < xs.size(); ++r) {
    if ((xs[r] - xs[r - 1] == 1) != (ys[r] - ys[r - 1] == 1)) return false;
  }
  return true;
}

// All subsets of {1..n} in increasing mask order.
template <typename F>
void for_each_subset(ChainSize n, F&& f) {
  const std::uint32_t full = n.full_mask();
  for (std::uint32_t m = 0;; ++m) {
    f(PointSet::from_mask(m));
    if (m == full) break;
  }
}

// All size-k subsets of {1..n} in increasing mask order (Gosper's hack).
template <typename F>
void for_each_subset_of_size(ChainSize n, int k, F&& f) {
  if (k < 0 || k > n.value()) return;
  if (k == 0) {
    f(PointSet{});
    return;
  }
  const std::uint32_t full = n.full_mask();
  std::uint32_t c = (1u << k) - 1;
  while (c <= full) {
    f(PointSet::from_mask(c));
    std::uint32_t lo = c & (~c + 1);
    std::uint32_t lz = c + lo;
    c = lz | (((c ^ lz) / lo) >> 2);
  }
}

// The similarity class of s inside {1..n}, sorted.
inline std::vector<PointSet> similarity_class(PointSet s, ChainSize n) {
  if (!s.within(n)) {
    throw std::invalid_argument("point set " + s.to_string() +
                                " not inside chain of size " +
                                std::to_string(n.value()));
  }
  std::vector<PointSet> out;
  const Signature key = signature(s);
  for_each_subset_of_size(n, s.size(), [&](PointSet t) {
    if (signature(t) == key) out.push_back(t);
  });
  // Mask order and lexicographic order disagree once sets straddle, e.g.
  // {1,8} vs {3,6}; sort explicitly.
  std::sort(out.begin(), out.end());
  return out;
}

// All similarity classes of subsets of {1..n}: each class sorted, classes
// ordered by their least member.
inline std::vector<std::vector<PointSet>> similarity_classes(ChainSize n) {
  std::unordered_map<std::uint64_t, std::size_t> index;
  std::vector<std::vector<PointSet>> classes;
  for (int k = 0; k <= n.value(); ++k) {
    for_each_subset_of_size(n, k, [&](PointSet s) {
      const std::uint64_t key = signature(s).packed();
      auto [it, inserted] = index.emplace(key, classes.size());
      if (inserted) classes.emplace_back();
      classes[it->second].push_back(s);
    });
  }
  for (auto& k : classes) std::sort(k.begin(), k.end());
  std::sort(classes.begin(), classes.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return classes;
}

}  // namespace fence
