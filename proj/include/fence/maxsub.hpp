// Classification of the maximal subsemigroups of an ideal. Every maximal
// subsemigroup is the ideal minus a removal set T drawn from one rank layer:
// either all elements fixing one isolated subset (type 1), all elements
// moving within the removal family of a whole similarity class (type 2), or
// all elements crossing an ordered bipartition of mutually similar removal
// blocks (type 3). In each case T must avoid products of two higher-rank
// elements, which is what the unfactorizable set captures.

#pragma once

#include <algorithm>
#include <cstdint>
#include <iterator>
#include <stdexcept>
#include <unordered_set>
#include <vector>

#include "fence/element.hpp"
#include "fence/ideals.hpp"
#include "fence/pointset.hpp"

namespace fence {

// y with its t-th smallest point removed; defined only for |y| >= 2.
inline PointSet remove_at(PointSet y, int t) {
  if (y.size() < 2) {
    throw std::invalid_argument("single-point removal needs at least two "
                                "points, got " +
                                y.to_string());
  }
  const int e = y.element_at(t);
  return PointSet::from_mask(y.mask() & ~(1u << (e - 1)));
}

// x arises from y by removing exactly one point. False whenever |y| < 2.
inline bool is_single_removal(PointSet x, PointSet y) {
  return y.size() >= 2 && x.subset_of(y) && y.size() - x.size() == 1;
}

namespace detail {

inline std::uint32_t pack_pair(PointSet a, PointSet b) {
  return (a.mask() << 16) | b.mask();
}

}  // namespace detail

// Elements of the ideal admitting no factorization into two strictly
// higher-rank factors, found by exhaustive search over all products.
inline std::vector<PartialInjection> unfactorizable_by_search(
    const IdealFamily& f) {
  const std::vector<PartialInjection> elems = elements_of_ideal(f);
  std::unordered_set<std::uint32_t> factorable;
  for (const PartialInjection& a : elems) {
    for (const PartialInjection& b : elems) {
      const PartialInjection p = compose(a, b);
      if (a.rank() > p.rank() && b.rank() > p.rank()) {
        factorable.insert(packed(p));
      }
    }
  }
  std::vector<PartialInjection> out;
  for (const PartialInjection& a : elems) {
    if (!factorable.contains(packed(a))) out.push_back(a);
  }
  return out;
}

// The same set from its shape description: a product of two rank-k elements
// meeting in rank k-1 has domain y2 minus its r-th point and image z2 minus
// its s-th point, where y1, z1 in the family overlap in all but one point,
// y2 runs over the class of y1 and z2 over the class of z1. Elements whose
// (domain, image) pair never arises this way are unfactorizable. Size-1
// pairs are included with removal yielding the empty set: two disjoint
// rank-1 elements multiply to the empty map, and leaving them out would
// break the agreement with the factorization search on that one element.
inline std::vector<PartialInjection> unfactorizable_direct(
    const IdealFamily& f) {
  const ChainSize n = f.chain();
  const auto drop_at = [](PointSet y, int t) {
    const int e = y.element_at(t);
    return PointSet::from_mask(y.mask() & ~(1u << (e - 1)));
  };
  std::unordered_set<std::uint32_t> reachable;
  for (PointSet y1 : f.members()) {
    if (y1.empty()) continue;
    for (PointSet z1 : f.members()) {
      if (z1.size() != y1.size() || z1 == y1) continue;
      const PointSet w = PointSet::from_mask(y1.mask() & z1.mask());
      if (w.size() != y1.size() - 1) continue;
      const int removed_y = PointSet::from_mask(y1.mask() & ~w.mask())
                                .element_at(1);
      const int removed_z = PointSet::from_mask(z1.mask() & ~w.mask())
                                .element_at(1);
      const int r = 1 + std::popcount(y1.mask() & ((1u << (removed_y - 1)) - 1u));
      const int s = 1 + std::popcount(z1.mask() & ((1u << (removed_z - 1)) - 1u));
      for (PointSet y2 : similarity_class(y1, n)) {
        const PointSet a = drop_at(y2, r);
        if (!similar(a, w)) continue;
        for (PointSet z2 : similarity_class(z1, n)) {
          const PointSet b = drop_at(z2, s);
          if (similar(b, w) && similar(a, b)) {
            reachable.insert(detail::pack_pair(a, b));
          }
        }
      }
    }
  }
  std::vector<PartialInjection> out;
  for (const PartialInjection& a : elements_of_ideal(f)) {
    if (!reachable.contains(detail::pack_pair(a.dom(), a.img()))) {
      out.push_back(a);
    }
  }
  return out;
}

// The unfactorizable set, computed both ways; their agreement is kept as a
// standing runtime self-check.
inline std::vector<PartialInjection> unfactorizable_elements(
    const IdealFamily& f) {
  std::vector<PartialInjection> direct = unfactorizable_direct(f);
  const std::vector<PartialInjection> searched = unfactorizable_by_search(f);
  if (direct != searched) {
    throw std::logic_error(
        "unfactorizable-set routes disagree; this is a library bug");
  }
  return direct;
}

enum class BlockKind { singleton, class_removals };

// A candidate removal block: a family of mutually interchangeable subsets
// describing one removal set.
struct BlockFamily {
  BlockKind kind{};
  std::vector<PointSet> members;  // sorted, unique
  // singleton: the member itself; class_removals: least set of the source
  // class. Not part of the block's identity.
  PointSet origin;

  friend bool operator==(const BlockFamily& a, const BlockFamily& b) {
    return a.kind == b.kind && a.members == b.members;
  }
  friend bool operator<(const BlockFamily& a, const BlockFamily& b) {
    if (a.kind != b.kind) return a.kind < b.kind;
    if (a.members.size() != b.members.size()) {
      return a.members.size() < b.members.size();
    }
    return a.members < b.members;
  }
};

// Singleton blocks: {g} qualifies when g is a one-point removal of some
// member whose similarity class within the family is just itself, or when
// g is a one-point removal of no member at all.
inline std::vector<BlockFamily> singleton_blocks(const IdealFamily& f) {
  std::vector<BlockFamily> out;
  const std::vector<PointSet>& mem = f.members();
  for (PointSet g : mem) {
    bool qualifies = false;
    for (PointSet y : mem) {
      if (!is_single_removal(g, y)) continue;
      bool isolated = true;
      for (PointSet z : mem) {
        if (z != y && similar(z, y)) {
          isolated = false;
          break;
        }
      }
      if (isolated) {
        qualifies = true;
        break;
      }
    }
    if (!qualifies) {
      qualifies = std::none_of(mem.begin(), mem.end(), [&](PointSet z) {
        return is_single_removal(g, z);
      });
    }
    if (qualifies) {
      out.push_back(BlockFamily{BlockKind::singleton, {g}, g});
    }
  }
  return out;  // members are scanned in order, so blocks arrive sorted
}

// Class-removal blocks: for every similarity class inside the family with
// at least two members of size >= 2, the family of all one-point removals
// of all class members. Deduplicated.
inline std::vector<BlockFamily> class_removal_blocks(const IdealFamily& f) {
  const ChainSize n = f.chain();
  std::vector<BlockFamily> out;
  std::unordered_set<std::uint64_t> seen_classes;
  for (PointSet g : f.members()) {
    if (g.size() < 2) continue;
    if (!seen_classes.insert(signature(g).packed()).second) continue;
    const std::vector<PointSet> cls = similarity_class(g, n);
    if (cls.size() < 2) continue;
    std::vector<PointSet> removals;
    for (PointSet c : cls) {
      for (int t = 1; t <= c.size(); ++t) removals.push_back(remove_at(c, t));
    }
    std::sort(removals.begin(), removals.end());
    removals.erase(std::unique(removals.begin(), removals.end()),
                   removals.end());
    out.push_back(
        BlockFamily{BlockKind::class_removals, std::move(removals), cls.front()});
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

inline std::vector<BlockFamily> all_blocks(const IdealFamily& f) {
  std::vector<BlockFamily> out = singleton_blocks(f);
  const std::vector<BlockFamily> removals = class_removal_blocks(f);
  out.insert(out.end(), removals.begin(), removals.end());
  return out;
}

// The blocks every one of whose members is similar to every member of the
// anchor. The anchor itself belongs exactly when its own members are
// mutually similar.
struct RelatedBlocks {
  BlockFamily anchor;
  std::vector<BlockFamily> blocks;  // sorted
};

namespace detail {

inline bool fully_similar(const BlockFamily& block, const BlockFamily& anchor) {
  for (PointSet x : block.members) {
    for (PointSet y : anchor.members) {
      if (!similar(x, y)) return false;
    }
  }
  return true;
}

inline std::vector<BlockFamily> related_blocks_among(
    const BlockFamily& anchor, const std::vector<BlockFamily>& candidates) {
  std::vector<BlockFamily> out;
  for (const BlockFamily& d : candidates) {
    if (fully_similar(d, anchor)) out.push_back(d);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace detail

inline RelatedBlocks related_blocks(const BlockFamily& anchor,
                                    const IdealFamily& f) {
  const std::vector<BlockFamily> candidates = all_blocks(f);
  if (std::find(candidates.begin(), candidates.end(), anchor) ==
      candidates.end()) {
    throw std::invalid_argument("anchor is not a removal block of this ideal");
  }
  return RelatedBlocks{anchor, detail::related_blocks_among(anchor, candidates)};
}

enum class MaxSubType {
  singleton_block = 1,
  class_removal_block = 2,
  block_bipartition = 3,
};

struct MaxSubDescriptor {
  MaxSubType type{};
  PointSet g;                       // type 1
  PointSet y1;                      // type 2: least member of the defining class
  std::vector<BlockFamily> blocks;  // type 3: the mutually similar block set
  std::vector<int> q1, q2;          // type 3: ordered bipartition of blocks
  std::vector<PartialInjection> removed;  // sorted

  friend bool operator==(const MaxSubDescriptor&,
                         const MaxSubDescriptor&) = default;
};

namespace detail {

// Elements whose domain lies in doms and image lies in imgs.
inline std::vector<PartialInjection> elements_between(
    const IdealFamily& f, const std::vector<PointSet>& doms,
    const std::vector<PointSet>& imgs) {
  std::vector<PartialInjection> out;
  for (const PartialInjection& a : elements_of_ideal(f)) {
    if (std::binary_search(doms.begin(), doms.end(), a.dom()) &&
        std::binary_search(imgs.begin(), imgs.end(), a.img())) {
      out.push_back(a);
    }
  }
  return out;
}

inline std::vector<PointSet> block_union(const std::vector<BlockFamily>& blocks,
                                         const std::vector<int>& picks) {
  std::vector<PointSet> out;
  for (int i : picks) {
    out.insert(out.end(), blocks[static_cast<std::size_t>(i)].members.begin(),
               blocks[static_cast<std::size_t>(i)].members.end());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace detail

// The removal set a descriptor stands for, recomputed from its payload.
inline std::vector<PartialInjection> removed_elements(
    const MaxSubDescriptor& d, const IdealFamily& f) {
  switch (d.type) {
    case MaxSubType::singleton_block: {
      const std::vector<PointSet> only{d.g};
      return detail::elements_between(f, only, only);
    }
    case MaxSubType::class_removal_block: {
      std::vector<PointSet> removals;
      for (PointSet c : similarity_class(d.y1, f.chain())) {
        for (int t = 1; t <= c.size(); ++t) {
          removals.push_back(remove_at(c, t));
        }
      }
      std::sort(removals.begin(), removals.end());
      removals.erase(std::unique(removals.begin(), removals.end()),
                     removals.end());
      return detail::elements_between(f, removals, removals);
    }
    case MaxSubType::block_bipartition:
      return detail::elements_between(f,
                                      detail::block_union(d.blocks, d.q1),
                                      detail::block_union(d.blocks, d.q2));
  }
  throw std::invalid_argument("unknown descriptor type");
}

// All maximal subsemigroups of the ideal, as descriptors. Deduplicated by
// removal set; ordered by type, then by removal set.
inline std::vector<MaxSubDescriptor> classify_maximal(const IdealFamily& f) {
  if (f.trivial()) {
    throw std::invalid_argument(
        "the one-element ideal has no maximal subsemigroups to classify");
  }
  std::unordered_set<std::uint32_t> unfactorizable;
  for (const PartialInjection& a : unfactorizable_elements(f)) {
    unfactorizable.insert(packed(a));
  }
  const auto gate = [&](const std::vector<PartialInjection>& t) {
    return std::all_of(t.begin(), t.end(), [&](const PartialInjection& a) {
      return unfactorizable.contains(packed(a));
    });
  };

  const std::vector<BlockFamily> singles = singleton_blocks(f);
  const std::vector<BlockFamily> removals = class_removal_blocks(f);
  std::vector<BlockFamily> blocks = singles;
  blocks.insert(blocks.end(), removals.begin(), removals.end());

  std::vector<MaxSubDescriptor> out;

  for (const BlockFamily& c : singles) {
    if (detail::related_blocks_among(c, blocks).size() != 1) continue;
    MaxSubDescriptor d;
    d.type = MaxSubType::singleton_block;
    d.g = c.origin;
    d.removed = removed_elements(d, f);
    if (gate(d.removed)) out.push_back(std::move(d));
  }

  for (const BlockFamily& b : removals) {
    if (detail::related_blocks_among(b, blocks).size() != 1) continue;
    MaxSubDescriptor d;
    d.type = MaxSubType::class_removal_block;
    d.y1 = b.origin;
    d.removed = removed_elements(d, f);
    if (gate(d.removed)) out.push_back(std::move(d));
  }

  // Distinct related-block sets with at least two blocks; any anchor inside
  // such a set induces the same set, so canonicalize by the set itself.
  std::vector<std::vector<BlockFamily>> contexts;
  for (const BlockFamily& anchor : blocks) {
    std::vector<BlockFamily> related = detail::related_blocks_among(anchor, blocks);
    if (related.size() < 2) continue;
    if (std::find(contexts.begin(), contexts.end(), related) ==
        contexts.end()) {
      contexts.push_back(std::move(related));
    }
  }
  for (const std::vector<BlockFamily>& context : contexts) {
    const std::size_t k = context.size();
    for (std::uint32_t pick = 1; pick + 1 < (1u << k); ++pick) {
      MaxSubDescriptor d;
      d.type = MaxSubType::block_bipartition;
      d.blocks = context;
      for (std::size_t i = 0; i < k; ++i) {
        ((pick >> i) & 1u ? d.q1 : d.q2).push_back(static_cast<int>(i));
      }
      d.removed = removed_elements(d, f);
      if (gate(d.removed)) out.push_back(std::move(d));
    }
  }

  // Deduplicate by removal set, preferring the lowest type, then order by
  // type and removal set.
  std::sort(out.begin(), out.end(),
            [](const MaxSubDescriptor& a, const MaxSubDescriptor& b) {
              if (a.removed != b.removed) return a.removed < b.removed;
              return a.type < b.type;
            });
  out.erase(std::unique(out.begin(), out.end(),
                        [](const MaxSubDescriptor& a, const MaxSubDescriptor& b) {
                          return a.removed == b.removed;
                        }),
            out.end());
  std::sort(out.begin(), out.end(),
            [](const MaxSubDescriptor& a, const MaxSubDescriptor& b) {
              if (a.type != b.type) return a.type < b.type;
              return a.removed < b.removed;
            });
  return out;
}

// The maximal subsemigroup itself: the ideal minus the removal set.
inline std::vector<PartialInjection> materialize(const MaxSubDescriptor& d,
                                                 const IdealFamily& f) {
  const std::vector<PartialInjection> elems = elements_of_ideal(f);
  std::vector<PartialInjection> out;
  std::set_difference(elems.begin(), elems.end(), d.removed.begin(),
                      d.removed.end(), std::back_inserter(out));
  return out;
}

// Similarity classes that could ever pass the unfactorizable gate of a
// type-2 descriptor on this chain: at least two members of size >= 2, all
// removals mutually similar, and the removal set unfactorizable inside the
// least ideal containing the class. Factorization witnesses persist in
// every larger ideal, so classes failing here fail in every ideal.
inline std::vector<std::vector<PointSet>> type2_viable_classes(ChainSize n) {
  std::vector<std::vector<PointSet>> out;
  for (const std::vector<PointSet>& cls : similarity_classes(n)) {
    if (cls.size() < 2 || cls.front().size() < 2) continue;
    std::vector<PointSet> removals;
    for (PointSet c : cls) {
      for (int t = 1; t <= c.size(); ++t) removals.push_back(remove_at(c, t));
    }
    std::sort(removals.begin(), removals.end());
    removals.erase(std::unique(removals.begin(), removals.end()),
                   removals.end());
    bool mutually_similar = true;
    for (std::size_t i = 0; i + 1 < removals.size() && mutually_similar; ++i) {
      if (!similar(removals[i], removals[i + 1])) mutually_similar = false;
    }
    if (!mutually_similar) continue;

    const IdealFamily least = close_family({cls.front()}, n);
    std::unordered_set<std::uint32_t> unfact;
    for (const PartialInjection& a : unfactorizable_elements(least)) {
      unfact.insert(packed(a));
    }
    const std::vector<PartialInjection> t =
        detail::elements_between(least, removals, removals);
    const bool gated = std::all_of(t.begin(), t.end(),
                                   [&](const PartialInjection& a) {
                                     return unfact.contains(packed(a));
                                   });
    if (gated) out.push_back(cls);
  }
  return out;
}

}  // namespace fence
