#include "support.hpp"

#include <gtest/gtest.h>

using namespace graphpair;
using namespace graphpair::testing;

namespace {

std::vector<int> all_ones(const ribbon_presentation& p) { return std::vector<int>(p.starred_count(), 1); }

}  // namespace

TEST(PresentationTest, ThetaShape) {
  for (auto [p, q, r] : theta_params(7)) {
    auto c = diagram_theta(p, q, r);
    auto pres = from_signed_diagram(c);
    SCOPED_TRACE(hairy_spec::theta(p, q, r).name());
    EXPECT_TRUE(violations(pres).empty());
    EXPECT_EQ(pres.starred_count(), c.k());
    EXPECT_EQ(pres.nodes().size(), 1u);
    ASSERT_TRUE(pres.marked_q.has_value());
    EXPECT_EQ(pres.disks[pres.marked_q->first].role, disk_role::leaf);
    EXPECT_EQ(pres.disks[pres.marked_q->second].role, disk_role::leaf);
    // one leaf per line plus one per node, the base, the node
    EXPECT_EQ(pres.disk_count(), 1 + c.s() + 2);
    EXPECT_EQ(pres.band_count(), pres.disk_count() - 1);
  }
}

TEST(PresentationTest, ExampleLayout) {
  auto pres = from_signed_diagram(example_c1());
  EXPECT_EQ(pres.disk_count(), 5);
  EXPECT_EQ(pres.crossings.size(), 3u);
  for (const auto& x : pres.crossings) {
    EXPECT_TRUE(x.starred);
    EXPECT_EQ(x.sign, 1);
  }
}

TEST(PresentationTest, SignsCarryOver) {
  auto pres = from_signed_diagram(flip_sign(example_c1(), 1));
  EXPECT_EQ(pres.crossings[1].sign, -1);
  EXPECT_TRUE(violations(pres).empty());
}

TEST(PresentationTest, YHasTwoNodesAndNoMarkedPair) {
  for (auto hairs : {std::array<int, 6>{1, 0, 1, 1, 0, 1}, std::array<int, 6>{1, 1, 1, 1, 1, 1}}) {
    auto pres = from_signed_diagram(diagram_y(hairs));
    EXPECT_TRUE(violations(pres).empty());
    EXPECT_EQ(pres.nodes().size(), 2u);
    EXPECT_FALSE(pres.marked_q.has_value());
    EXPECT_THROW(is_degenerate(pres), std::invalid_argument);
    EXPECT_THROW(primed(pres), std::invalid_argument);
  }
}

TEST(PresentationTest, BrokenPresentationsAreReported) {
  auto pres = from_signed_diagram(example_c1());
  auto bad = pres;
  bad.crossings[0].band = 99;
  EXPECT_FALSE(violations(bad).empty());
  bad = pres;
  bad.crossings[0].sign = 2;
  EXPECT_FALSE(violations(bad).empty());
  bad = pres;
  bad.bands[0].parent = bad.bands[0].child;
  EXPECT_FALSE(violations(bad).empty());
}

TEST(EpsilonTest, VariantKeepsOrDeletes) {
  auto pres = from_signed_diagram(example_c1());
  auto v = epsilon_variant(pres, {1, -1, 1});
  EXPECT_EQ(v.crossings.size(), 2u);
  EXPECT_EQ(v.starred_count(), 0);
  EXPECT_TRUE(violations(v).empty());
  EXPECT_EQ(epsilon_variant(pres, all_ones(pres)).crossings.size(), 3u);
  EXPECT_THROW(epsilon_variant(pres, {1, 1}), std::invalid_argument);
  EXPECT_THROW(epsilon_variant(pres, {1, 0, 1}), std::invalid_argument);
}

TEST(CrossChangeTest, AddsAnUnstarredCopy) {
  auto pres = from_signed_diagram(example_c1());
  int node = pres.nodes().front();
  auto out = cross_change(pres, 0, node);
  EXPECT_EQ(out.disk_count(), pres.disk_count() + 1);
  EXPECT_TRUE(out.disks.back().copy);
  EXPECT_FALSE(out.crossings.back().starred);
  EXPECT_EQ(out.crossings.back().band, 0);
  EXPECT_TRUE(violations(out).empty());
  EXPECT_THROW(cross_change(pres, 0, 0), std::invalid_argument);
  EXPECT_THROW(cross_change(pres, 99, node), std::invalid_argument);
}

TEST(CrossChangeTest, PrimedAddsTwoCopies) {
  auto pres = from_signed_diagram(example_c1());
  auto pr = primed(pres);
  EXPECT_EQ(pr.disk_count(), pres.disk_count() + 2);
  EXPECT_EQ(pr.starred_count(), pres.starred_count());
  EXPECT_TRUE(violations(pr).empty());
}

TEST(ClosureTest, ConfluentUnderRandomRuleOrder) {
  std::mt19937 rng(97);
  std::vector<ribbon_presentation> cases;
  for (auto [p, q, r] : theta_params(4)) {
    auto pres = from_signed_diagram(diagram_theta(p, q, r));
    for (const auto& base : {pres, primed(pres)})
      for (std::uint32_t mask = 0; mask < (1u << base.starred_count()); ++mask) {
        std::vector<int> eps(base.starred_count());
        for (int i = 0; i < base.starred_count(); ++i) eps[i] = (mask >> i) & 1 ? -1 : 1;
        cases.push_back(epsilon_variant(base, eps));
      }
  }
  auto y = from_signed_diagram(diagram_y({1, 0, 1, 1, 0, 1}));
  for (int i = 0; i < y.starred_count(); ++i) {
    auto eps = all_ones(y);
    eps[i] = -1;
    cases.push_back(epsilon_variant(y, eps));
  }
  for (const auto& c : cases) {
    auto fixed = resolution_closure(c);
    for (int run = 0; run < 5; ++run) {
      auto shuffled = resolution_closure(c, &rng);
      EXPECT_EQ(shuffled.reduced, fixed.reduced);
      EXPECT_EQ(shuffled.resolved, fixed.resolved);
    }
  }
}

TEST(ClosureTest, Idempotent) {
  auto pres = from_signed_diagram(diagram_theta(2, 1, 1));
  auto once = resolution_closure(epsilon_variant(pres, {1, -1, 1, 1, 1}));
  auto twice = resolution_closure(once.reduced);
  EXPECT_EQ(twice.reduced, once.reduced);
  EXPECT_EQ(twice.resolved, once.resolved);
}

TEST(ClosureTest, OnlyDeletes) {
  auto pres = primed(from_signed_diagram(diagram_theta(1, 1, 1)));
  auto r = resolution_closure(pres);
  for (const auto& x : r.reduced.crossings)
    EXPECT_NE(std::find(pres.crossings.begin(), pres.crossings.end(), x), pres.crossings.end());
  EXPECT_EQ(r.reduced.disks, pres.disks);
  EXPECT_EQ(r.reduced.bands, pres.bands);
}

TEST(SweepTest, ThetaDegenerateExactlyWithANegativeEntry) {
  for (auto [p, q, r] : theta_params(4)) {
    auto pres = from_signed_diagram(diagram_theta(p, q, r));
    auto rows = sweep_epsilon(pres);
    EXPECT_EQ(rows.size(), std::size_t{1} << pres.starred_count());
    for (const auto& row : rows) {
      bool neg = std::count(row.eps.begin(), row.eps.end(), -1) > 0;
      EXPECT_EQ(row.degenerate, neg);
    }
    EXPECT_FALSE(rows.front().degenerate);
    EXPECT_FALSE(rows.front().trivial);
  }
}

TEST(SweepTest, PrimedAllOnesIsTrivial) {
  for (auto [p, q, r] : theta_params(4)) {
    auto pres = from_signed_diagram(diagram_theta(p, q, r));
    auto pr = primed(pres);
    EXPECT_TRUE(is_trivial(epsilon_variant(pr, all_ones(pr))));
    EXPECT_FALSE(is_trivial(epsilon_variant(pres, all_ones(pres))));
  }
}

TEST(SweepTest, YSingleNegativeFreesANodeLeaf) {
  for (auto hairs : {std::array<int, 6>{1, 0, 1, 1, 0, 1}, std::array<int, 6>{1, 0, 0, 1, 0, 1}}) {
    auto pres = from_signed_diagram(diagram_y(hairs));
    EXPECT_FALSE(resolves_node_leaf(epsilon_variant(pres, all_ones(pres))));
    EXPECT_GE(node_adjacent_leaves(pres).size(), pres.nodes().size());
    for (int i = 0; i < pres.starred_count(); ++i) {
      auto eps = all_ones(pres);
      eps[i] = -1;
      EXPECT_TRUE(resolves_node_leaf(epsilon_variant(pres, eps))) << "entry " << i;
    }
  }
}

TEST(SweepTest, RowOrderFollowsBits) {
  auto rows = sweep_epsilon(from_signed_diagram(example_c1()));
  ASSERT_EQ(rows.size(), 8u);
  EXPECT_EQ(rows[0].eps, (std::vector<int>{1, 1, 1}));
  EXPECT_EQ(rows[1].eps, (std::vector<int>{-1, 1, 1}));
  EXPECT_EQ(rows[6].eps, (std::vector<int>{1, -1, -1}));
}
