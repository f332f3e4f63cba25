// Green's relations on the monoid. For these partial injections the
// relations collapse to plain set comparisons: L compares images, R compares
// domains, H is equality, and J is similarity of domains. A definitional
// oracle computes the same relations from principal ideals for cross-checks.

#pragma once

#include <cstdint>
#include <set>
#include <stdexcept>
#include <vector>

#include "fence/element.hpp"
#include "fence/pointset.hpp"

namespace fence {

enum class GreenKind { L, R, H, J };

inline const char* to_string(GreenKind kind) {
  switch (kind) {
    case GreenKind::L: return "L";
    case GreenKind::R: return "R";
    case GreenKind::H: return "H";
    case GreenKind::J: return "J";
  }
  throw std::invalid_argument("unknown Green relation kind");
}

inline bool green_related(GreenKind kind, PartialInjection a,
                          PartialInjection b) {
  switch (kind) {
    case GreenKind::L: return a.img() == b.img();
    case GreenKind::R: return a.dom() == b.dom();
    case GreenKind::H: return a == b;
    case GreenKind::J: return similar(a.dom(), b.dom());
  }
  throw std::invalid_argument("unknown Green relation kind");
}

// The partition of all elements on {1..n} induced by green_related. Blocks
// are sorted internally and ordered by their least element.
inline std::vector<std::vector<PartialInjection>> green_classes(GreenKind kind,
                                                                ChainSize n) {
  std::vector<std::vector<PartialInjection>> blocks;
  for (const PartialInjection& a : enumerate_elements(n)) {
    bool placed = false;
    for (auto& block : blocks) {
      if (green_related(kind, block.front(), a)) {
        block.push_back(a);
        placed = true;
        break;
      }
    }
    if (!placed) blocks.push_back({a});
  }
  // Elements arrive in global order, so blocks are sorted and block fronts
  // are already minimal and increasing.
  return blocks;
}

namespace detail {

inline std::set<std::uint32_t> left_principal(PartialInjection a,
                                              const std::vector<PartialInjection>& monoid) {
  std::set<std::uint32_t> out;
  for (const PartialInjection& x : monoid) out.insert(packed(compose(x, a)));
  return out;
}

inline std::set<std::uint32_t> right_principal(PartialInjection a,
                                               const std::vector<PartialInjection>& monoid) {
  std::set<std::uint32_t> out;
  for (const PartialInjection& x : monoid) out.insert(packed(compose(a, x)));
  return out;
}

inline std::set<std::uint32_t> two_sided_principal(PartialInjection a,
                                                   const std::vector<PartialInjection>& monoid) {
  std::set<std::uint32_t> out;
  for (const PartialInjection& x : monoid) {
    const PartialInjection xa = compose(x, a);
    for (const PartialInjection& y : monoid) out.insert(packed(compose(xa, y)));
  }
  return out;
}

}  // namespace detail

// Green's relations from first principles inside the monoid itself: L via
// equality of left principal ideals, R via right, J via two-sided, H as
// L meet R. The monoid already contains the identity, so no adjunction is
// needed. Exhaustive products; intended for small n as a verification
// oracle for green_related.
inline bool green_related_oracle(GreenKind kind, PartialInjection a,
                                 PartialInjection b, ChainSize n) {
  const std::vector<PartialInjection> monoid = enumerate_elements(n);
  switch (kind) {
    case GreenKind::L:
      return detail::left_principal(a, monoid) ==
             detail::left_principal(b, monoid);
    case GreenKind::R:
      return detail::right_principal(a, monoid) ==
             detail::right_principal(b, monoid);
    case GreenKind::H:
      return detail::left_principal(a, monoid) ==
                 detail::left_principal(b, monoid) &&
             detail::right_principal(a, monoid) ==
                 detail::right_principal(b, monoid);
    case GreenKind::J:
      return detail::two_sided_principal(a, monoid) ==
             detail::two_sided_principal(b, monoid);
  }
  throw std::invalid_argument("unknown Green relation kind");
}

}  // namespace fence
