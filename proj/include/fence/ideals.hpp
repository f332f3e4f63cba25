// Two-sided ideals of the monoid. Every ideal is cut out by a family of
// subsets of the chain that contains the empty set, is closed under taking
// subsets, and is closed under similarity; the ideal consists of all
// elements whose domain lies in the family.

#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "fence/element.hpp"
#include "fence/pointset.hpp"

namespace fence {

class IdealFamily {
 public:
  struct unchecked_t {};

  // Validating constructor: sorts, dedupes, and requires the three family
  // invariants (empty set present, subset-closed, similarity-closed).
  IdealFamily(ChainSize n, std::vector<PointSet> members) : n_(n) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    members_ = std::move(members);
    if (!valid()) {
      throw std::invalid_argument("not an ideal family on chain of size " +
                                  std::to_string(n.value()));
    }
  }

  // For callers that construct members already sorted, unique and valid.
  IdealFamily(unchecked_t, ChainSize n, std::vector<PointSet> members)
      : n_(n), members_(std::move(members)) {}

  ChainSize chain() const { return n_; }
  const std::vector<PointSet>& members() const { return members_; }

  bool contains(PointSet s) const {
    return std::binary_search(members_.begin(), members_.end(), s);
  }

  // Only the empty set: the ideal is the one-element ideal {empty map}.
  bool trivial() const { return members_.size() == 1; }

  friend bool operator==(const IdealFamily& a, const IdealFamily& b) {
    return a.n_ == b.n_ && a.members_ == b.members_;
  }

  friend bool operator<(const IdealFamily& a, const IdealFamily& b) {
    if (a.members_.size() != b.members_.size()) {
      return a.members_.size() < b.members_.size();
    }
    return a.members_ < b.members_;
  }

 private:
  bool valid() const;

  ChainSize n_;
  std::vector<PointSet> members_;  // sorted, unique
};

// True exactly when the candidate members satisfy the three invariants.
inline bool is_ideal_family(const std::vector<PointSet>& candidate,
                            ChainSize n) {
  std::vector<PointSet> members = candidate;
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  const auto present = [&](PointSet s) {
    return std::binary_search(members.begin(), members.end(), s);
  };
  if (!present(PointSet{})) return false;
  for (PointSet a : members) {
    if (!a.within(n)) return false;
    // Subset closure: every submask of a member is a member.
    const std::uint32_t m = a.mask();
    for (std::uint32_t s = m; s != 0; s = (s - 1) & m) {
      if (!present(PointSet::from_mask(s))) return false;
    }
    // Similarity closure.
    for (PointSet b : similarity_class(a, n)) {
      if (!present(b)) return false;
    }
  }
  return true;
}

inline bool IdealFamily::valid() const { return is_ideal_family(members_, n_); }

// Least ideal family containing the generators: alternate subset closure
// and similarity closure to a fixpoint. The empty set is always included.
inline IdealFamily close_family(const std::vector<PointSet>& generators,
                                ChainSize n) {
  std::vector<bool> in(static_cast<std::size_t>(n.full_mask()) + 1, false);
  std::vector<std::uint32_t> work;
  const auto push = [&](std::uint32_t mask) {
    if (!in[mask]) {
      in[mask] = true;
      work.push_back(mask);
    }
  };
  push(0);
  for (PointSet g : generators) {
    if (!g.within(n)) {
      throw std::invalid_argument("generator " + g.to_string() +
                                  " not inside chain of size " +
                                  std::to_string(n.value()));
    }
    push(g.mask());
  }
  while (!work.empty()) {
    const std::uint32_t m = work.back();
    work.pop_back();
    for (std::uint32_t s = m; s != 0; s = (s - 1) & m) push(s);
    for (PointSet b : similarity_class(PointSet::from_mask(m), n)) {
      push(b.mask());
    }
  }
  std::vector<PointSet> members;
  for (std::uint32_t m = 0; m < in.size(); ++m) {
    if (in[m]) members.push_back(PointSet::from_mask(m));
  }
  std::sort(members.begin(), members.end());
  return IdealFamily(IdealFamily::unchecked_t{}, n, std::move(members));
}

// All elements whose domain lies in the family, in global order. Since the
// family is similarity-closed, images land in the family as well.
inline std::vector<PartialInjection> elements_of_ideal(const IdealFamily& f) {
  std::vector<PartialInjection> out;
  for (PointSet a : f.members()) {
    for (PointSet b : f.members()) {
      if (a.size() == b.size() && similar(a, b)) out.emplace_back(a, b);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Streams every ideal family on {1..n} exactly once. Ideal families
// correspond to down-sets of the poset of similarity classes (ordered by
// "is the class of a subset of"), so the walk recurses over classes in a
// linear extension, including a class only once everything below it is in.
template <typename F>
void for_each_ideal(ChainSize n, F&& f) {
  const std::vector<std::vector<PointSet>> classes = similarity_classes(n);
  const std::size_t m = classes.size();

  std::unordered_map<std::uint64_t, std::size_t> class_of_signature;
  for (std::size_t i = 0; i < m; ++i) {
    class_of_signature.emplace(signature(classes[i].front()).packed(), i);
  }
  // below[i]: classes of proper subsets of a representative of class i.
  // Well-defined: similar sets have subset families with identical
  // signatures position by position.
  std::vector<std::vector<std::size_t>> below(m);
  for (std::size_t i = 0; i < m; ++i) {
    const std::uint32_t rep = classes[i].front().mask();
    std::vector<std::size_t> subs;
    if (rep != 0) {
      for (std::uint32_t s = rep & (rep - 1);; s = (s - 1) & rep) {
        subs.push_back(
            class_of_signature.at(signature(PointSet::from_mask(s)).packed()));
        if (s == 0) break;
      }
    }
    std::sort(subs.begin(), subs.end());
    subs.erase(std::unique(subs.begin(), subs.end()), subs.end());
    below[i] = std::move(subs);
  }

  std::vector<char> included(m, false);
  std::vector<std::size_t> chosen;
  const std::function<void(std::size_t)> walk = [&](std::size_t i) {
    if (i == m) {
      if (chosen.empty()) return;  // a family always holds the empty set
      std::vector<PointSet> members;
      for (std::size_t c : chosen) {
        members.insert(members.end(), classes[c].begin(), classes[c].end());
      }
      std::sort(members.begin(), members.end());
      f(IdealFamily(IdealFamily::unchecked_t{}, n, std::move(members)));
      return;
    }
    walk(i + 1);
    for (std::size_t j : below[i]) {
      if (!included[j]) return;  // cannot add class i; subtree already done
    }
    included[i] = true;
    chosen.push_back(i);
    walk(i + 1);
    included[i] = false;
    chosen.pop_back();
  };
  walk(0);
}

// All ideal families, deduplicated by construction, in deterministic order.
inline std::vector<IdealFamily> enumerate_ideals(ChainSize n) {
  std::vector<IdealFamily> out;
  for_each_ideal(n, [&](IdealFamily f) { out.push_back(std::move(f)); });
  std::sort(out.begin(), out.end());
  return out;
}

// The minimal non-trivial ideals: all odd singletons plus the empty set,
// and all even singletons plus the empty set. For n = 1 the even family
// degenerates to the trivial family and is dropped.
inline std::vector<IdealFamily> minimal_ideals(ChainSize n) {
  std::vector<PointSet> odd{PointSet{}};
  std::vector<PointSet> even{PointSet{}};
  for (int e = 1; e <= n.value(); ++e) {
    (e % 2 == 1 ? odd : even)
        .push_back(PointSet::from_mask(1u << (e - 1)));
  }
  std::vector<IdealFamily> out;
  if (odd.size() > 1) {
    out.emplace_back(IdealFamily::unchecked_t{}, n, std::move(odd));
  }
  if (even.size() > 1) {
    out.emplace_back(IdealFamily::unchecked_t{}, n, std::move(even));
  }
  return out;
}

}  // namespace fence
