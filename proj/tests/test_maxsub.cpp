#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>
#include <vector>

#include "fence/maxsub.hpp"

namespace fence {
namespace {

PointSet ps(std::vector<int> v) { return PointSet::from_elements(std::move(v)); }

PartialInjection pi(std::vector<int> d, std::vector<int> m) {
  return PartialInjection(ps(std::move(d)), ps(std::move(m)));
}

std::vector<PointSet> sets(std::vector<std::vector<int>> vs) {
  std::vector<PointSet> out;
  for (auto& v : vs) out.push_back(ps(std::move(v)));
  return out;
}

TEST_CASE("single point removal", "[maxsub]") {
  REQUIRE(remove_at(ps({1, 3, 5}), 3) == ps({1, 3}));
  REQUIRE(remove_at(ps({1, 2}), 1) == ps({2}));
  REQUIRE_THROWS_AS(remove_at(ps({1}), 1), std::invalid_argument);
  REQUIRE_THROWS_AS(remove_at(ps({1, 2}), 3), std::out_of_range);
}

TEST_CASE("the one-removal relation", "[maxsub]") {
  REQUIRE(is_single_removal(ps({1}), ps({1, 3})));
  REQUIRE_FALSE(is_single_removal(PointSet{}, ps({2})));
  REQUIRE_FALSE(is_single_removal(ps({2}), ps({1, 3})));
  REQUIRE_FALSE(is_single_removal(ps({1, 3}), ps({1, 3})));
}

TEST_CASE("unfactorizable set of the even minimal ideal", "[maxsub]") {
  const IdealFamily even(ChainSize(4), sets({{}, {2}, {4}}));
  const std::vector<PartialInjection> expected{
      pi({2}, {2}), pi({2}, {4}), pi({4}, {2}), pi({4}, {4})};
  REQUIRE(unfactorizable_elements(even) == expected);
}

TEST_CASE("unfactorizable set of the whole monoid at n = 2", "[maxsub]") {
  const IdealFamily whole = close_family({ps({1, 2})}, ChainSize(2));
  const std::vector<PartialInjection> expected{
      pi({1}, {1}), pi({2}, {2}), pi({1, 2}, {1, 2})};
  REQUIRE(unfactorizable_elements(whole) == expected);
}

TEST_CASE("unfactorizable set of the least ideal", "[maxsub]") {
  const IdealFamily least = close_family({}, ChainSize(3));
  REQUIRE(unfactorizable_elements(least) ==
          std::vector<PartialInjection>{PartialInjection{}});
}

TEST_CASE("the two unfactorizable routes agree on every ideal", "[maxsub]") {
  for (int n = 1; n <= 3; ++n) {
    for (const IdealFamily& f : enumerate_ideals(ChainSize(n))) {
      REQUIRE(unfactorizable_direct(f) == unfactorizable_by_search(f));
    }
  }
}

TEST_CASE("singleton blocks", "[maxsub]") {
  const IdealFamily even(ChainSize(4), sets({{}, {2}, {4}}));
  const auto c_even = singleton_blocks(even);
  REQUIRE(c_even.size() == 3);
  REQUIRE(c_even[0].members == sets({{}}));
  REQUIRE(c_even[1].members == sets({{2}}));
  REQUIRE(c_even[2].members == sets({{4}}));

  const IdealFamily whole2 = close_family({ps({1, 2})}, ChainSize(2));
  const auto c_whole = singleton_blocks(whole2);
  REQUIRE(c_whole.size() == 4);

  // {1} is a removal of {1,3} whose class has three members, so it does not
  // qualify; {1,3} is a removal of nothing, so it does.
  const IdealFamily pairs = close_family({ps({1, 3})}, ChainSize(5));
  const auto c_pairs = singleton_blocks(pairs);
  const auto has = [&](PointSet g) {
    return std::any_of(c_pairs.begin(), c_pairs.end(), [&](const BlockFamily& b) {
      return b.members == std::vector<PointSet>{g};
    });
  };
  REQUIRE_FALSE(has(ps({1})));
  REQUIRE(has(ps({1, 3})));
  REQUIRE(has(PointSet{}));
}

TEST_CASE("class removal blocks", "[maxsub]") {
  const IdealFamily whole5 = close_family({ps({1, 2, 3, 4, 5})}, ChainSize(5));
  const auto blocks5 = class_removal_blocks(whole5);
  const auto has5 = [&](std::vector<PointSet> members) {
    return std::any_of(blocks5.begin(), blocks5.end(), [&](const BlockFamily& b) {
      return b.members == members;
    });
  };
  REQUIRE(has5(sets({{1}, {3}, {5}})));  // removals across {1,3},{1,5},{3,5}

  const IdealFamily whole4 = close_family({ps({1, 2, 3, 4})}, ChainSize(4));
  const auto blocks4 = class_removal_blocks(whole4);
  const auto b12 = std::find_if(blocks4.begin(), blocks4.end(),
                                [&](const BlockFamily& b) {
                                  return b.origin == ps({1, 2});
                                });
  REQUIRE(b12 != blocks4.end());
  REQUIRE(b12->members == sets({{1}, {2}, {3}, {4}}));

  const IdealFamily even(ChainSize(4), sets({{}, {2}, {4}}));
  REQUIRE(class_removal_blocks(even).empty());
}

TEST_CASE("related blocks", "[maxsub]") {
  const IdealFamily even(ChainSize(4), sets({{}, {2}, {4}}));
  const auto c_even = singleton_blocks(even);
  const RelatedBlocks around2 = related_blocks(c_even[1], even);
  REQUIRE(around2.blocks.size() == 2);
  REQUIRE(around2.blocks[0].members == sets({{2}}));
  REQUIRE(around2.blocks[1].members == sets({{4}}));

  const IdealFamily whole2 = close_family({ps({1, 2})}, ChainSize(2));
  const auto c_whole = singleton_blocks(whole2);
  const RelatedBlocks around1 = related_blocks(c_whole[1], whole2);
  REQUIRE(around1.anchor.members == sets({{1}}));
  REQUIRE(around1.blocks.size() == 1);
  REQUIRE(around1.blocks[0].members == sets({{1}}));

  // An anchor whose own members are not mutually similar relates to nothing.
  const IdealFamily whole4 = close_family({ps({1, 2, 3, 4})}, ChainSize(4));
  const auto blocks4 = class_removal_blocks(whole4);
  const auto b12 = std::find_if(blocks4.begin(), blocks4.end(),
                                [&](const BlockFamily& b) {
                                  return b.origin == ps({1, 2});
                                });
  REQUIRE(b12 != blocks4.end());
  REQUIRE(related_blocks(*b12, whole4).blocks.empty());

  REQUIRE_THROWS_AS(
      related_blocks(BlockFamily{BlockKind::singleton, {ps({1, 2})}, ps({1, 2})},
                     even),
      std::invalid_argument);
}

TEST_CASE("removed elements per descriptor", "[maxsub]") {
  const IdealFamily even(ChainSize(4), sets({{}, {2}, {4}}));
  MaxSubDescriptor cross;
  cross.type = MaxSubType::block_bipartition;
  cross.blocks = {BlockFamily{BlockKind::singleton, {ps({2})}, ps({2})},
                  BlockFamily{BlockKind::singleton, {ps({4})}, ps({4})}};
  cross.q1 = {0};
  cross.q2 = {1};
  REQUIRE(removed_elements(cross, even) ==
          std::vector<PartialInjection>{pi({2}, {4})});

  const IdealFamily whole2 = close_family({ps({1, 2})}, ChainSize(2));
  MaxSubDescriptor top;
  top.type = MaxSubType::singleton_block;
  top.g = ps({1, 2});
  REQUIRE(removed_elements(top, whole2) ==
          std::vector<PartialInjection>{pi({1, 2}, {1, 2})});

  const IdealFamily least = close_family({}, ChainSize(2));
  MaxSubDescriptor empty;
  empty.type = MaxSubType::singleton_block;
  empty.g = PointSet{};
  REQUIRE(removed_elements(empty, least) ==
          std::vector<PartialInjection>{PartialInjection{}});
}

TEST_CASE("classification of the even minimal ideal at n = 4", "[maxsub]") {
  const IdealFamily even(ChainSize(4), sets({{}, {2}, {4}}));
  const auto descriptors = classify_maximal(even);
  REQUIRE(descriptors.size() == 2);
  for (const MaxSubDescriptor& d : descriptors) {
    REQUIRE(d.type == MaxSubType::block_bipartition);
  }
  REQUIRE(descriptors[0].removed ==
          std::vector<PartialInjection>{pi({2}, {4})});
  REQUIRE(descriptors[1].removed ==
          std::vector<PartialInjection>{pi({4}, {2})});
}

TEST_CASE("classification of the whole monoid at n = 2", "[maxsub]") {
  const IdealFamily whole = close_family({ps({1, 2})}, ChainSize(2));
  const auto descriptors = classify_maximal(whole);
  REQUIRE(descriptors.size() == 3);
  std::set<std::vector<PartialInjection>> removed;
  for (const MaxSubDescriptor& d : descriptors) {
    REQUIRE(d.type == MaxSubType::singleton_block);
    removed.insert(d.removed);
  }
  REQUIRE(removed ==
          std::set<std::vector<PartialInjection>>{
              {pi({1}, {1})}, {pi({2}, {2})}, {pi({1, 2}, {1, 2})}});
}

TEST_CASE("classification at n = 1 keeps the empty-map removal", "[maxsub]") {
  const IdealFamily whole = close_family({ps({1})}, ChainSize(1));
  const auto descriptors = classify_maximal(whole);
  REQUIRE(descriptors.size() == 2);
  std::set<std::vector<PartialInjection>> removed;
  for (const MaxSubDescriptor& d : descriptors) removed.insert(d.removed);
  REQUIRE(removed == std::set<std::vector<PartialInjection>>{
                         {PartialInjection{}}, {pi({1}, {1})}});
}

TEST_CASE("the trivial ideal is rejected", "[maxsub]") {
  REQUIRE_THROWS_AS(classify_maximal(close_family({}, ChainSize(3))),
                    std::invalid_argument);
}

TEST_CASE("materialization", "[maxsub]") {
  const IdealFamily even(ChainSize(4), sets({{}, {2}, {4}}));
  const auto descriptors = classify_maximal(even);
  const std::vector<PartialInjection> expected{
      PartialInjection{}, pi({2}, {2}), pi({4}, {2}), pi({4}, {4})};
  REQUIRE(materialize(descriptors[0], even) == expected);

  const auto elems = elements_of_ideal(even);
  for (const MaxSubDescriptor& d : descriptors) {
    const auto got = materialize(d, even);
    REQUIRE(got.size() == elems.size() - d.removed.size());
    for (const PartialInjection& r : d.removed) {
      REQUIRE_FALSE(std::binary_search(got.begin(), got.end(), r));
    }
  }
}

TEST_CASE("descriptors have distinct removal sets", "[maxsub]") {
  for (int n = 1; n <= 4; ++n) {
    for (const IdealFamily& f : enumerate_ideals(ChainSize(n))) {
      if (f.trivial()) continue;
      const auto descriptors = classify_maximal(f);
      std::set<std::vector<PartialInjection>> removed;
      for (const MaxSubDescriptor& d : descriptors) {
        REQUIRE(!d.removed.empty());
        REQUIRE(removed.insert(d.removed).second);
        // every removal set sits inside one rank layer
        for (const PartialInjection& r : d.removed) {
          REQUIRE(r.rank() == d.removed.front().rank());
        }
      }
    }
  }
}

TEST_CASE("blocks inside one related set are mutually similar", "[maxsub]") {
  for (const IdealFamily& f : enumerate_ideals(ChainSize(4))) {
    if (f.trivial()) continue;
    for (const BlockFamily& anchor : all_blocks(f)) {
      const RelatedBlocks related = related_blocks(anchor, f);
      for (const BlockFamily& a : related.blocks) {
        for (const BlockFamily& b : related.blocks) {
          for (PointSet x : a.members) {
            for (PointSet y : b.members) REQUIRE(similar(x, y));
          }
        }
      }
    }
  }
}

TEST_CASE("no similarity class admits a type 2 descriptor for n <= 6",
          "[maxsub]") {
  for (int n = 1; n <= 6; ++n) {
    INFO("n = " << n);
    REQUIRE(type2_viable_classes(ChainSize(n)).empty());
  }
}

}  // namespace
}  // namespace fence
