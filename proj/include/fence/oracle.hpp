// Brute-force ground truth, independent of the classifier: a closed product
// table over an explicit element list, semigroup closure, maximality
// testing, and exhaustive enumeration of maximal subsemigroups and ideals.
// Everything here works on index sets into the table, kept as 64-bit masks,
// and refuses instances beyond its configured budgets rather than truncate.

#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "fence/element.hpp"

namespace fence {

struct OracleBudget {
  // Strategy A (full subset enumeration) runs when |i| <= exhaustive_max.
  std::size_t exhaustive_max = 16;
  // Strategy B (per-rank-layer complements) needs every layer <= layer_max.
  std::size_t layer_max = 20;
};

// Index sets into an ElementTable; the table is capped at 64 elements.
using IndexSet = std::uint64_t;

class ElementTable {
 public:
  static constexpr std::size_t max_size = 64;

  explicit ElementTable(std::vector<PartialInjection> elements)
      : elems_(std::move(elements)) {
    if (elems_.empty()) {
      throw std::invalid_argument("element table needs at least one element");
    }
    if (elems_.size() > max_size) {
      throw std::invalid_argument(
          "element table limited to 64 elements, got " +
          std::to_string(elems_.size()));
    }
    for (std::size_t i = 0; i < elems_.size(); ++i) {
      if (!index_.emplace(packed(elems_[i]), i).second) {
        throw std::invalid_argument("duplicate element in table");
      }
    }
    prod_.resize(elems_.size() * elems_.size());
    for (std::size_t i = 0; i < elems_.size(); ++i) {
      for (std::size_t j = 0; j < elems_.size(); ++j) {
        const PartialInjection p = compose(elems_[i], elems_[j]);
        const auto it = index_.find(packed(p));
        if (it == index_.end()) {
          throw std::invalid_argument("element list is not closed: " +
                                      elems_[i].to_string() + " * " +
                                      elems_[j].to_string() + " = " +
                                      p.to_string() + " is missing");
        }
        prod_[i * elems_.size() + j] = static_cast<std::uint8_t>(it->second);
      }
    }
  }

  std::size_t size() const { return elems_.size(); }
  const std::vector<PartialInjection>& elements() const { return elems_; }
  const PartialInjection& element(std::size_t i) const { return elems_[i]; }

  std::size_t product(std::size_t i, std::size_t j) const {
    return prod_[i * elems_.size() + j];
  }

  std::size_t index_of(PartialInjection a) const {
    const auto it = index_.find(packed(a));
    if (it == index_.end()) {
      throw std::invalid_argument("element " + a.to_string() +
                                  " not in table");
    }
    return it->second;
  }

  IndexSet universe() const {
    return elems_.size() == max_size ? ~IndexSet{0}
                                     : (IndexSet{1} << elems_.size()) - 1;
  }

 private:
  std::vector<PartialInjection> elems_;
  std::vector<std::uint8_t> prod_;
  std::unordered_map<std::uint32_t, std::size_t> index_;
};

namespace detail {

template <typename F>
void for_each_index(IndexSet s, F&& f) {
  while (s != 0) {
    f(static_cast<std::size_t>(std::countr_zero(s)));
    s &= s - 1;
  }
}

}  // namespace detail

// Least multiplicatively closed superset of the seed.
inline IndexSet closure(IndexSet seed, const ElementTable& t) {
  IndexSet result = seed;
  IndexSet fresh = seed;
  while (fresh != 0) {
    IndexSet next = 0;
    detail::for_each_index(fresh, [&](std::size_t i) {
      detail::for_each_index(result, [&](std::size_t j) {
        next |= IndexSet{1} << t.product(i, j);
        next |= IndexSet{1} << t.product(j, i);
      });
    });
    fresh = next & ~result;
    result |= next;
  }
  return result;
}

inline bool is_closed(IndexSet s, const ElementTable& t) {
  for (IndexSet a = s; a != 0; a &= a - 1) {
    const auto i = static_cast<std::size_t>(std::countr_zero(a));
    for (IndexSet b = s; b != 0; b &= b - 1) {
      const auto j = static_cast<std::size_t>(std::countr_zero(b));
      if ((s >> t.product(i, j) & 1) == 0) return false;
    }
  }
  return true;
}

// m is a maximal subsemigroup of i: closed, proper, non-empty, and adjoining
// any missing element generates all of i.
inline bool is_maximal_subsemigroup(IndexSet m, IndexSet i,
                                    const ElementTable& t) {
  if ((m & ~i) != 0 || m == i || m == 0) return false;
  if (!is_closed(m, t)) return false;
  bool maximal = true;
  detail::for_each_index(i & ~m, [&](std::size_t x) {
    if (!maximal) return;
    if (closure(m | (IndexSet{1} << x), t) != i) maximal = false;
  });
  return maximal;
}

namespace detail {

inline std::vector<IndexSet> brute_maximal_exhaustive(IndexSet ideal,
                                                      const ElementTable& t) {
  // Walk all proper non-empty subsets, keep the closed ones, then filter to
  // the inclusion-maximal ones.
  std::vector<IndexSet> closed;
  for (IndexSet s = (ideal - 1) & ideal;; s = (s - 1) & ideal) {
    if (s != 0 && is_closed(s, t)) closed.push_back(s);
    if (s == 0) break;
  }
  std::vector<IndexSet> out;
  for (IndexSet s : closed) {
    const bool dominated =
        std::any_of(closed.begin(), closed.end(),
                    [&](IndexSet o) { return o != s && (s & ~o) == 0; });
    if (!dominated) out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<IndexSet> brute_maximal_by_layers(IndexSet ideal,
                                                     const ElementTable& t,
                                                     const OracleBudget& budget) {
  // Complements of maximal subsemigroups are rank-homogeneous, so it is
  // enough to delete subsets of one rank layer at a time.
  std::unordered_map<int, IndexSet> layers;
  for_each_index(ideal, [&](std::size_t i) {
    layers[t.element(i).rank()] |= IndexSet{1} << i;
  });
  std::vector<IndexSet> out;
  for (const auto& [rank, layer] : layers) {
    const auto layer_size = static_cast<std::size_t>(std::popcount(layer));
    if (layer_size > budget.layer_max) {
      throw std::invalid_argument(
          "oracle budget exceeded: rank layer of size " +
          std::to_string(layer_size) + " exceeds limit " +
          std::to_string(budget.layer_max));
    }
    for (IndexSet removal = layer;; removal = (removal - 1) & layer) {
      if (removal != 0 &&
          is_maximal_subsemigroup(ideal & ~removal, ideal, t)) {
        out.push_back(ideal & ~removal);
      }
      if (removal == 0) break;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace detail

// All maximal subsemigroups of the closed index set. Runs the exhaustive
// strategy when the instance is small enough and the rank-layer strategy
// when every layer fits the budget; when both run, they must agree.
inline std::vector<IndexSet> brute_maximal(IndexSet ideal,
                                           const ElementTable& t,
                                           const OracleBudget& budget = {}) {
  if (ideal == 0) throw std::invalid_argument("empty index set");
  if (!is_closed(ideal, t)) {
    throw std::invalid_argument("index set is not closed under products");
  }
  const auto size = static_cast<std::size_t>(std::popcount(ideal));
  const bool can_exhaustive = size <= budget.exhaustive_max;
  std::vector<IndexSet> exhaustive;
  if (can_exhaustive) {
    exhaustive = detail::brute_maximal_exhaustive(ideal, t);
  }
  std::vector<IndexSet> layered;
  bool layered_ran = false;
  try {
    layered = detail::brute_maximal_by_layers(ideal, t, budget);
    layered_ran = true;
  } catch (const std::invalid_argument&) {
    if (!can_exhaustive) throw;  // neither strategy feasible: refuse
  }
  if (can_exhaustive && layered_ran && exhaustive != layered) {
    throw std::logic_error(
        "oracle strategies disagree; this is a library bug");
  }
  return can_exhaustive ? exhaustive : layered;
}

// All two-sided ideals of the monoid the table was built over: unions of
// principal two-sided ideals, closed under union, deduplicated.
inline std::vector<IndexSet> brute_ideals(const ElementTable& t) {
  std::vector<IndexSet> principals;
  for (std::size_t a = 0; a < t.size(); ++a) {
    IndexSet p = 0;
    for (std::size_t x = 0; x < t.size(); ++x) {
      const std::size_t xa = t.product(x, a);
      for (std::size_t y = 0; y < t.size(); ++y) {
        p |= IndexSet{1} << t.product(xa, y);
      }
    }
    principals.push_back(p);
  }
  std::sort(principals.begin(), principals.end());
  principals.erase(std::unique(principals.begin(), principals.end()),
                   principals.end());
  if (principals.size() > 24) {
    throw std::invalid_argument(
        "oracle budget exceeded: " + std::to_string(principals.size()) +
        " distinct principal ideals is beyond the union enumeration limit");
  }
  std::unordered_set<IndexSet> unions;
  const std::uint32_t combos = 1u << principals.size();
  for (std::uint32_t pick = 1; pick < combos; ++pick) {
    IndexSet u = 0;
    for (std::size_t i = 0; i < principals.size(); ++i) {
      if ((pick >> i) & 1u) u |= principals[i];
    }
    unions.insert(u);
  }
  std::vector<IndexSet> out(unions.begin(), unions.end());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace fence
