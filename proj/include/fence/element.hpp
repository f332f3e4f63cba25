// Elements of the monoid of order-, fence- and parity-preserving partial
// injections on the chain {1..n}. An element is the order-preserving pairing
// of two equal-size subsets (r-th smallest to r-th smallest), so it is fully
// determined by its domain and image.

#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "fence/pointset.hpp"

namespace fence {

class PartialInjection {
 public:
  // The empty map.
  constexpr PartialInjection() = default;

  PartialInjection(PointSet dom, PointSet img) : dom_(dom), img_(img) {
    if (dom.size() != img.size()) {
      throw std::invalid_argument("domain " + dom.to_string() + " and image " +
                                  img.to_string() + " differ in size");
    }
  }

  PointSet dom() const { return dom_; }
  PointSet img() const { return img_; }
  int rank() const { return dom_.size(); }
  bool empty() const { return dom_.empty(); }

  bool defined_at(int x) const { return dom_.contains(x); }

  // Image of x under the pairing; x must lie in the domain.
  int image_of(int x) const {
    if (!dom_.contains(x)) {
      throw std::out_of_range("point " + std::to_string(x) +
                              " not in domain " + dom_.to_string());
    }
    const int pos =
        std::popcount(dom_.mask() & ((1u << (x - 1)) - 1u));
    return img_.element_at(pos + 1);
  }

  std::vector<std::pair<int, int>> pairs() const {
    std::vector<std::pair<int, int>> out;
    const std::vector<int> xs = dom_.elements();
    const std::vector<int> ys = img_.elements();
    out.reserve(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) out.emplace_back(xs[i], ys[i]);
    return out;
  }

  std::string to_string() const {
    if (empty()) return "e";
    std::string out;
    out += dom_.to_string();
    out += "->";
    out += img_.to_string();
    return out;
  }

  friend constexpr bool operator==(PartialInjection, PartialInjection) =
      default;

  // Global order: rank, then domain, then image.
  friend bool operator<(PartialInjection a, PartialInjection b) {
    if (a.dom_ != b.dom_) return a.dom_ < b.dom_;
    return a.img_ < b.img_;
  }

 private:
  PointSet dom_;
  PointSet img_;
};

// Packs (dom, img) into one word; handy as a hash/set key.
inline std::uint32_t packed(PartialInjection a) {
  return (a.dom().mask() << 16) | a.img().mask();
}

inline PartialInjection partial_identity(PointSet s) {
  return PartialInjection(s, s);
}

inline PartialInjection full_identity(ChainSize n) {
  return partial_identity(PointSet::from_mask(n.full_mask()));
}

// Membership via the four arithmetic conditions on (dom, img): equal sizes,
// matching parity of the least elements, gaps of 1 in matching positions,
// and matching gap parities. The pairing handles condition (i), increasing
// images, by construction.
inline bool is_member(PointSet d, PointSet m, ChainSize n) {
  if (!d.within(n) || !m.within(n)) {
    throw std::invalid_argument("point set outside chain of size " +
                                std::to_string(n.value()));
  }
  if (d.size() != m.size()) return false;
  if (d.empty()) return true;
  const std::vector<int> ds = d.elements();
  const std::vector<int> ms = m.elements();
  if (((ds[0] ^ ms[0]) & 1) != 0) return false;
  for (std::size_t i = 1; i < ds.size(); ++i) {
    const int gd = ds[i] - ds[i - 1];
    const int gm = ms[i] - ms[i - 1];
    if ((gd == 1) != (gm == 1)) return false;
    if (((gd ^ gm) & 1) != 0) return false;
  }
  return true;
}

// x is below y in the zig-zag order on the chain: neighbours, odd below even.
inline bool zigzag_below(int x, int y) {
  return (x % 2 == 1) && (y == x + 1 || y == x - 1);
}

// First-principles membership check, independent of is_member: build the
// pairing and test order-preservation, parity-preservation, and
// fence-preservation of the map and of its inverse directly.
inline bool is_member_semantic(PointSet d, PointSet m, ChainSize n) {
  if (!d.within(n) || !m.within(n)) {
    throw std::invalid_argument("point set outside chain of size " +
                                std::to_string(n.value()));
  }
  if (d.size() != m.size()) return false;
  const std::vector<int> xs = d.elements();
  const std::vector<int> ys = m.elements();
  const std::size_t k = xs.size();
  for (std::size_t i = 0; i < k; ++i) {
    if (((xs[i] - ys[i]) & 1) != 0) return false;  // parity-preserving
  }
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      if (i == j) continue;
      if (xs[i] < xs[j] && !(ys[i] < ys[j])) return false;  // order-preserving
      if (zigzag_below(xs[i], xs[j]) && !zigzag_below(ys[i], ys[j])) {
        return false;  // fence-preserving
      }
      if (zigzag_below(ys[i], ys[j]) && !zigzag_below(xs[i], xs[j])) {
        return false;  // inverse fence-preserving
      }
    }
  }
  return true;
}

// Left-to-right composition: x(ab) = (xa)b where both sides are defined.
inline PartialInjection compose(PartialInjection a, PartialInjection b) {
  std::uint32_t dom_bits = 0;
  std::uint32_t img_bits = 0;
  for (int x : a.dom().elements()) {
    const int y = a.image_of(x);
    if (b.defined_at(y)) {
      dom_bits |= 1u << (x - 1);
      img_bits |= 1u << (b.image_of(y) - 1);
    }
  }
  return PartialInjection(PointSet::from_mask(dom_bits),
                          PointSet::from_mask(img_bits));
}

inline PartialInjection inverse(PartialInjection a) {
  return PartialInjection(a.img(), a.dom());
}

// Every element of the monoid on {1..n}, in global order. Built by sieving
// all equal-size subset pairs through is_member, deliberately not through
// the similarity classes, so class-based counts stay an independent check.
inline std::vector<PartialInjection> enumerate_elements(ChainSize n) {
  std::vector<PartialInjection> out;
  for (int k = 0; k <= n.value(); ++k) {
    for_each_subset_of_size(n, k, [&](PointSet a) {
      for_each_subset_of_size(n, k, [&](PointSet b) {
        if (is_member(a, b, n)) out.emplace_back(a, b);
      });
    });
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Order of the monoid as the sum of squared similarity-class sizes.
inline std::uint64_t element_count_by_classes(ChainSize n) {
  std::uint64_t total = 0;
  for (const auto& k : similarity_classes(n)) {
    total += static_cast<std::uint64_t>(k.size()) * k.size();
  }
  return total;
}

}  // namespace fence
