#include <gtest/gtest.h>

#include "engel/class_algebra.hpp"
#include "engel/matrix_groups.hpp"

using namespace engel;

namespace {

std::string table_path(const char* f) { return std::string(ENGEL_DATA_DIR) + "/chartab/" + f; }

struct Case {
  const char* table;
  Group (*make)();
};

const Case kCases[] = {
    {"s3.ct", [] { return symmetric_group(3); }},
    {"s4.ct", [] { return symmetric_group(4); }},
    {"a5.ct", [] { return alternating_group(5); }},
    {"psl2_7.ct", [] { return psl2(7); }},
};

ElementId first_of_order(const Group& G, std::uint64_t o) {
  for (ElementId x = 0; x < G.order(); ++x)
    if (G.element_order(x) == o) return x;
  throw std::logic_error("no element of that order");
}

std::size_t class_with_order(const Group& G, std::uint64_t o) { return G.class_of(first_of_order(G, o)); }

}  // namespace

TEST(ClassConstants, FormulaAgreesWithBruteForce) {
  for (const auto& c : kCases) {
    const Group G = c.make();
    const auto T = load_character_table(table_path(c.table));
    const auto r = crosscheck_class_constants(G, T);
    EXPECT_TRUE(r.ok()) << c.table << ": " << r.mismatches.size() << " mismatches";
    EXPECT_EQ(r.triples, T.class_count() * T.class_count() * T.class_count());
  }
}

TEST(ClassConstants, CountingIdentities) {
  for (const auto& c : kCases) {
    const Group G = c.make();
    const auto& cls = G.classes();
    const std::size_t k = cls.size();
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) {
        std::uint64_t total = 0;
        for (std::size_t v = 0; v < k; ++v) {
          const auto a = class_constant_bruteforce(G, i, j, v);
          EXPECT_EQ(a, class_constant_bruteforce(G, j, i, v));  // X_i X_j = X_j X_i
          total += a * cls[v].size();
          // Independent of the chosen representative.
          EXPECT_EQ(a, class_constant_bruteforce(G, i, j, v, cls[v].members.back()));
        }
        EXPECT_EQ(total, cls[i].size() * cls[j].size());
      }
  }
}

TEST(ClassConstants, TranspositionsSquared) {
  const Group G = symmetric_group(3);
  const auto t = class_with_order(G, 2), r = class_with_order(G, 3);
  EXPECT_EQ(class_constant_bruteforce(G, t, t, r), 3u);
  EXPECT_EQ(class_constant_bruteforce(G, t, t, G.class_of(G.identity())), 3u);
  EXPECT_EQ(class_constant_bruteforce(G, t, t, t), 0u);
  EXPECT_THROW(class_constant_bruteforce(G, t, t, r, G.identity()), std::invalid_argument);
  EXPECT_THROW(class_constant_bruteforce(G, 7, t, r), std::out_of_range);
}

TEST(PermutationCharacter, Sym3OnThreePoints) {
  const Group G = symmetric_group(3);
  const auto T = load_character_table(table_path("s3.ct"));
  const auto map = match_classes(G, T);
  auto pi = perm_character(G, point_stabilizer(G, 0));
  EXPECT_EQ(pi.index, 3u);
  EXPECT_EQ(pi.values[map[0]], 3u);
  EXPECT_EQ(pi.values[map[1]], 1u);
  EXPECT_EQ(pi.values[map[2]], 0u);
  decompose(pi, T, map);
  EXPECT_EQ(pi.multiplicities, (std::vector<Rational>{1, 0, 1}));
  EXPECT_EQ(*pi.norm, 2);
}

// <pi, pi> = number of (H, H)-double cosets.
TEST(PermutationCharacter, NormCountsDoubleCosets) {
  for (const auto& c : kCases) {
    const Group G = c.make();
    const auto T = load_character_table(table_path(c.table));
    const auto map = match_classes(G, T);
    std::vector<Subgroup> subs{point_stabilizer(G, 0), sylow_subgroup(G, 2), sylow_subgroup(G, 3)};
    for (const auto& H : subs) {
      auto pi = perm_character(G, H);
      decompose(pi, T, map);
      EXPECT_EQ(*pi.norm, Rational(double_coset_count(G, H, H))) << c.table << " |H|=" << H.order();
      Rational deg = 0;
      for (std::size_t chi = 0; chi < T.characters.size(); ++chi) deg += pi.multiplicities[chi] * T.degree(chi);
      EXPECT_EQ(deg, Rational(pi.index));
    }
  }
}

TEST(Fusion, PowerMapsAgreeWithGroup) {
  for (const auto& c : kCases) {
    const Group G = c.make();
    const auto T = load_character_table(table_path(c.table));
    const auto map = match_classes(G, T);
    for (std::size_t t = 0; t < T.class_count(); ++t) {
      const auto a = fusion_map(G, G.classes()[map[t]].representative, map);
      const auto b = fusion_from_power_maps(T, t);
      EXPECT_EQ(a.order, b.order);
      EXPECT_EQ(a.power_class, b.power_class) << c.table << " class " << T.classes[t].name;
    }
  }
}

TEST(Hypotheses, Alt5WithA4AndC5) {
  const Group G = alternating_group(5);
  const Subgroup H = point_stabilizer(G, 0);
  const ElementId g = first_of_order(G, 5);
  const Subgroup C = cyclic_subgroup(G, g);
  const auto h = hypotheses_check(G, H, C);
  EXPECT_TRUE(h.holds());
  EXPECT_EQ(h.closure_size, 24u);
  EXPECT_EQ(h.normalizer_order, 10u);

  const auto d = delta_graph(G, H, C);
  EXPECT_EQ(d.component_count(), d.coset_count);
  EXPECT_EQ(d.coset_count, 4u);
  EXPECT_TRUE(d.components_in_single_cosets);

  const auto T = load_character_table(table_path("a5.ct"));
  const auto map = match_classes(G, T);
  auto pi = perm_character(G, H);
  decompose(pi, T, map);
  const auto f = fusion_map(G, g, map);
  const Rational bound = lower_bound_84(T, pi.multiplicities, f);
  EXPECT_EQ(bound, 4);
  EXPECT_LE(bound, Rational(d.coset_count));
}

TEST(Hypotheses, Sym4WithD8AndC3) {
  const Group G = symmetric_group(4);
  const Subgroup H = sylow_subgroup(G, 2);
  const Subgroup C = sylow_subgroup(G, 3);
  const auto h = hypotheses_check(G, H, C);
  EXPECT_TRUE(h.holds());
  const auto d = delta_graph(G, H, C);
  EXPECT_EQ(d.component_count(), d.coset_count);
  EXPECT_TRUE(d.components_in_single_cosets);
  const auto T = load_character_table(table_path("s4.ct"));
  const auto map = match_classes(G, T);
  auto pi = perm_character(G, H);
  decompose(pi, T, map);
  const Rational bound = lower_bound_84(T, pi.multiplicities, fusion_map(G, C.elements.back(), map));
  EXPECT_LE(bound, Rational(d.coset_count));
  EXPECT_GT(bound, 0);
}

TEST(Hypotheses, FailuresAreReported) {
  const Group G = alternating_group(5);
  const Subgroup C = cyclic_subgroup(G, first_of_order(G, 5));
  // A Sylow 5 normaliser contains C, so Hypothesis 0 fails.
  const Subgroup N = normalizer(G, C);
  EXPECT_FALSE(hypotheses_check(G, N, C).hyp0);
  EXPECT_THROW(delta_graph(G, N, C), std::invalid_argument);
  // Point stabiliser in Sym(4) with a 4-cycle: the normaliser is not Frobenius.
  const Group S = symmetric_group(4);
  const auto r = hypotheses_check(S, point_stabilizer(S, 0), cyclic_subgroup(S, first_of_order(S, 4)));
  EXPECT_FALSE(r.hyp3);
}

TEST(LowerBound, EdgeCases) {
  const auto T = load_character_table(table_path("a5.ct"));
  FusionMap trivial;
  trivial.power_class = {0};
  EXPECT_EQ(lower_bound_84(T, {1, 0, 0, 1, 0}, trivial), 0);
  EXPECT_THROW(lower_bound_84(T, {1, 0}, trivial), std::invalid_argument);
  // The degree-5 character restricts to the regular character of C_5, so its
  // term vanishes.
  const auto f = fusion_from_power_maps(T, 3);
  EXPECT_THROW(lower_bound_84(T, {0, 0, 0, 0, 1}, f), std::domain_error);
  EXPECT_EQ(restricted_trivial_count(T, 4, f), 5);
}

TEST(Slices, DirectCountsMatchClassConstants) {
  for (const auto& c : kCases) {
    const Group G = c.make();
    for (const auto& cls : G.classes()) {
      if (cls.element_order != 2) continue;
      const auto s = slice_sizes(G, cls.representative);
      EXPECT_TRUE(s.all_equal()) << c.table;
      EXPECT_EQ(s.rows[G.class_of(G.identity())].direct, 1u);
    }
  }
  EXPECT_THROW(slice_sizes(alternating_group(5), 0), std::invalid_argument);
}
