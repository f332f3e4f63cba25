#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "fence/pointset.hpp"

namespace fence {
namespace {

TEST_CASE("point sets validate their input", "[pointset]") {
  REQUIRE(PointSet::from_elements({1, 3, 4}).mask() == 0b1101u);
  REQUIRE(PointSet::from_elements({}).empty());
  REQUIRE_THROWS_AS(PointSet::from_elements({0}), std::invalid_argument);
  REQUIRE_THROWS_AS(PointSet::from_elements({17}), std::invalid_argument);
  REQUIRE_THROWS_AS(PointSet::from_elements({2, 2}), std::invalid_argument);
  REQUIRE_THROWS_AS(PointSet::from_elements({3, 1}), std::invalid_argument);
}

TEST_CASE("element access", "[pointset]") {
  const PointSet s = PointSet::from_elements({2, 5, 6});
  REQUIRE(s.size() == 3);
  REQUIRE(s.elements() == std::vector<int>{2, 5, 6});
  REQUIRE(s.element_at(1) == 2);
  REQUIRE(s.element_at(3) == 6);
  REQUIRE_THROWS_AS(s.element_at(0), std::out_of_range);
  REQUIRE_THROWS_AS(s.element_at(4), std::out_of_range);
  REQUIRE(s.contains(5));
  REQUIRE_FALSE(s.contains(4));
  REQUIRE(s.to_string() == "{2,5,6}");
}

TEST_CASE("order is size-major, then lexicographic", "[pointset]") {
  const auto ps = [](std::vector<int> v) { return PointSet::from_elements(v); };
  REQUIRE(ps({3}) < ps({1, 2}));
  REQUIRE(ps({1, 4}) < ps({2, 3}));
  REQUIRE(ps({1, 8}) < ps({3, 6}));
  REQUIRE(ps({1, 2, 4}) < ps({1, 3, 4}));
  REQUIRE_FALSE(ps({1, 3}) < ps({1, 3}));
}

TEST_CASE("signature reads off size, parities and unit gaps", "[pointset]") {
  const Signature a = signature(PointSet::from_elements({1, 3, 4}));
  REQUIRE(a.size == 3);
  REQUIRE(a.parity_bits == 0b011u);     // 1 odd, 3 odd, 4 even
  REQUIRE(a.adjacency_bits == 0b10u);   // gaps 2 then 1

  const Signature empty = signature(PointSet{});
  REQUIRE(empty.size == 0);
  REQUIRE(empty.parity_bits == 0);
  REQUIRE(empty.adjacency_bits == 0);

  const Signature single = signature(PointSet::from_elements({2}));
  REQUIRE(single.size == 1);
  REQUIRE(single.parity_bits == 0);
  REQUIRE(single.adjacency_bits == 0);
}

TEST_CASE("similarity on small examples", "[pointset]") {
  const auto ps = [](std::vector<int> v) { return PointSet::from_elements(v); };
  REQUIRE(similar(ps({1}), ps({3})));
  REQUIRE_FALSE(similar(ps({1, 2}), ps({2, 3})));
  REQUIRE(similar(ps({1, 2}), ps({3, 4})));
  REQUIRE_FALSE(similar(ps({1}), ps({2})));
  REQUIRE_FALSE(similar(ps({1}), ps({1, 3})));
  REQUIRE(similar(PointSet{}, PointSet{}));
}

TEST_CASE("similarity agrees with signature equality", "[pointset]") {
  for (int n = 1; n <= 6; ++n) {
    const ChainSize cs(n);
    std::vector<PointSet> all;
    for_each_subset(cs, [&](PointSet s) { all.push_back(s); });
    for (PointSet a : all) {
      for (PointSet b : all) {
        REQUIRE(similar(a, b) == (signature(a) == signature(b)));
      }
    }
  }
}

TEST_CASE("similarity is an equivalence relation", "[pointset]") {
  const ChainSize cs(5);
  std::vector<PointSet> all;
  for_each_subset(cs, [&](PointSet s) { all.push_back(s); });
  for (PointSet a : all) {
    REQUIRE(similar(a, a));
    for (PointSet b : all) {
      REQUIRE(similar(a, b) == similar(b, a));
      if (!similar(a, b)) continue;
      for (PointSet c : all) {
        if (similar(b, c)) REQUIRE(similar(a, c));
      }
    }
  }
}

TEST_CASE("similarity classes of named sets", "[pointset]") {
  const auto ps = [](std::vector<int> v) { return PointSet::from_elements(v); };
  REQUIRE(similarity_class(ps({1}), ChainSize(4)) ==
          std::vector<PointSet>{ps({1}), ps({3})});
  REQUIRE(similarity_class(ps({1, 3}), ChainSize(5)) ==
          std::vector<PointSet>{ps({1, 3}), ps({1, 5}), ps({3, 5})});
  REQUIRE(similarity_class(ps({1, 2, 3}), ChainSize(3)) ==
          std::vector<PointSet>{ps({1, 2, 3})});
  REQUIRE_THROWS_AS(similarity_class(ps({5}), ChainSize(4)),
                    std::invalid_argument);
}

TEST_CASE("similarity classes partition the power set", "[pointset]") {
  for (int n = 1; n <= 6; ++n) {
    const ChainSize cs(n);
    const auto classes = similarity_classes(cs);
    std::size_t covered = 0;
    for (const auto& k : classes) {
      REQUIRE(!k.empty());
      REQUIRE(std::is_sorted(k.begin(), k.end()));
      covered += k.size();
      for (PointSet a : k) {
        REQUIRE(similar(a, k.front()));
        REQUIRE(similarity_class(a, cs) == k);
      }
    }
    REQUIRE(covered == (1u << n));
    for (std::size_t i = 1; i < classes.size(); ++i) {
      REQUIRE(classes[i - 1].front() < classes[i].front());
    }
  }
}

TEST_CASE("subset generators", "[pointset]") {
  const ChainSize cs(6);
  int total = 0;
  for_each_subset(cs, [&](PointSet) { ++total; });
  REQUIRE(total == 64);
  const int binomial[] = {1, 6, 15, 20, 15, 6, 1};
  for (int k = 0; k <= 6; ++k) {
    int count = 0;
    for_each_subset_of_size(cs, k, [&](PointSet s) {
      REQUIRE(s.size() == k);
      ++count;
    });
    REQUIRE(count == binomial[k]);
  }
}

TEST_CASE("chain size bounds", "[pointset]") {
  REQUIRE_THROWS_AS(ChainSize(0), std::invalid_argument);
  REQUIRE_THROWS_AS(ChainSize(17), std::invalid_argument);
  REQUIRE(ChainSize(16).full_mask() == 0xFFFFu);
}

}  // namespace
}  // namespace fence
