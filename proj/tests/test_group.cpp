#include <gtest/gtest.h>

#include <filesystem>
#include <random>
#include <sstream>

#include "engel/group.hpp"
#include "engel/group_spec.hpp"
#include "engel/matrix_groups.hpp"

using namespace engel;

namespace {

std::filesystem::path data_dir() { return ENGEL_DATA_DIR; }

Permutation compose(const Permutation& a, const Permutation& b) {  // a then b
  std::vector<Point> img(a.degree());
  for (std::size_t p = 0; p < a.degree(); ++p) img[p] = b[a[p]];
  return Permutation(img);
}

}  // namespace

TEST(Group, OrdersOfBuiltinFamilies) {
  EXPECT_EQ(symmetric_group(5).order(), 120u);
  EXPECT_EQ(alternating_group(6).order(), 360u);
  EXPECT_EQ(cyclic_group(12).order(), 12u);
  for (std::uint64_t q : {4u, 5u, 7u, 8u, 9u, 11u, 16u}) EXPECT_EQ(psl2(q).order(), psl2_order(q)) << q;
  EXPECT_EQ(psl3(2).order(), 168u);
  EXPECT_EQ(psl3(4).order(), 20160u);
  EXPECT_EQ(psl3_order(3), 5616u);
  EXPECT_EQ(pgl2(9).order(), 720u);
  EXPECT_EQ(sl3(2).order(), 168u);
}

TEST(Group, GeneratorFilesCloseToDeclaredOrders) {
  EXPECT_EQ(load_group((data_dir() / "gens/m10.gens").string()).order(), 720u);
  EXPECT_EQ(load_group((data_dir() / "gens/m11.gens").string()).order(), 7920u);
}

TEST(Group, ClassCountsOfKnownGroups) {
  EXPECT_EQ(alternating_group(5).classes().size(), 5u);
  EXPECT_EQ(symmetric_group(4).classes().size(), 5u);
  EXPECT_EQ(alternating_group(6).classes().size(), 7u);
  EXPECT_EQ(psl2(7).classes().size(), 6u);
  EXPECT_EQ(psl3(4).classes().size(), 10u);
  EXPECT_EQ(load_group((data_dir() / "gens/m11.gens").string()).classes().size(), 10u);
}

TEST(Group, ClassEquationAndOrbitStabilizer) {
  for (auto make : {+[] { return symmetric_group(5); }, +[] { return psl2(11); }, +[] { return psl3(2); }}) {
    const Group G = make();
    std::size_t total = 0;
    for (const auto& c : G.classes()) {
      total += c.size();
      EXPECT_EQ(G.order() % c.size(), 0u);
      EXPECT_EQ(centralizer(G, c.representative).order() * c.size(), G.order());
      for (auto x : c.members) EXPECT_EQ(G.element_order(x), c.element_order);
    }
    EXPECT_EQ(total, G.order());
  }
}

TEST(Group, MultiplicationMatchesPermutationComposition) {
  const Group G = psl2(8);
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<ElementId> pick(0, static_cast<ElementId>(G.order() - 1));
  for (int t = 0; t < 300; ++t) {
    const ElementId a = pick(rng), b = pick(rng), c = pick(rng);
    EXPECT_EQ(G.element(G.mul(a, b)), compose(G.element(a), G.element(b)));
    EXPECT_EQ(G.mul(G.mul(a, b), c), G.mul(a, G.mul(b, c)));
    EXPECT_EQ(G.mul(a, G.inverse(a)), G.identity());
    const ElementId ai = G.inverse(a), bi = G.inverse(b);
    EXPECT_EQ(G.commutator(a, b), G.mul(G.mul(ai, bi), G.mul(a, b)));
    EXPECT_EQ(G.conjugate(a, b), G.mul(G.mul(bi, a), b));
  }
}

TEST(Group, ClassConjugatorMapsRepresentative) {
  const Group G = alternating_group(6);
  for (ElementId x = 0; x < G.order(); ++x) {
    const auto& c = G.classes()[G.class_of(x)];
    EXPECT_EQ(G.conjugate(c.representative, G.class_conjugator(x)), x);
  }
}

TEST(Group, CenterAndNormalizer) {
  EXPECT_EQ(center(symmetric_group(4)).size(), 1u);
  EXPECT_EQ(center(cyclic_group(6)).size(), 6u);
  EXPECT_EQ(center(sl3(4)).size(), 3u);
  const Group G = alternating_group(5);
  const Subgroup P = sylow_subgroup(G, 5);
  EXPECT_EQ(P.order(), 5u);
  EXPECT_EQ(normalizer(G, P).order(), 10u);
  EXPECT_EQ(sylow_subgroup(G, 2).order(), 4u);
  EXPECT_EQ(normalizer(G, sylow_subgroup(G, 2)).order(), 12u);
}

TEST(Group, HallSubgroups) {
  const Group G = psl3(4);
  const auto H = hall_subgroup(G, {7});
  ASSERT_TRUE(H);
  EXPECT_EQ(H->order(), 7u);
  const auto S = hall_subgroup(symmetric_group(4), {2, 3});
  ASSERT_TRUE(S);
  EXPECT_EQ(S->order(), 24u);
  EXPECT_FALSE(hall_subgroup(alternating_group(5), {3, 5}).has_value());
}

TEST(Group, CosetActionIsTransitiveOfRightDegree) {
  const Group G = symmetric_group(4);
  const Subgroup H = point_stabilizer(G, 0);
  const auto A = coset_action(G, H);
  EXPECT_EQ(A.degree, 4u);
  std::uint64_t fixed = 0;
  for (std::size_t c = 0; c < G.classes().size(); ++c) fixed += A.fixed_points_per_class[c] * G.classes()[c].size();
  EXPECT_EQ(fixed, G.order());  // Burnside: one orbit
}

TEST(Group, RejectsNonSubgroups) {
  const Group G = symmetric_group(4);
  ElementId x = 1;
  while (G.element_order(x) != 3) ++x;
  Subgroup bogus;
  bogus.elements = {0, x};
  EXPECT_THROW(require_subgroup(G, bogus), std::invalid_argument);
}

TEST(Group, GeneratorFileErrors) {
  std::istringstream no_degree("(1,2)\n");
  EXPECT_THROW(parse_generator_file(no_degree), ConstructionError);
  std::istringstream bad("degree 3\n(0,5)\n");
  EXPECT_THROW(parse_generator_file(bad), ConstructionError);
  std::istringstream empty("degree 3\n");
  EXPECT_THROW(parse_generator_file(empty), ConstructionError);
  EXPECT_THROW(load_group("/nonexistent/x.gens"), ConstructionError);
}

TEST(Group, ClosureLimit) { EXPECT_THROW(Group::generate(symmetric_group(6).generators(), 100), ConstructionError); }

TEST(Group, CacheRoundTripPreservesElementOrder) {
  const auto dir = std::filesystem::temp_directory_path() / "engel_cache_test";
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  GroupCache cache(dir);
  const Group a = cache.generate(psl2(7).generators());
  const Group b = cache.generate(psl2(7).generators());
  ASSERT_EQ(a.order(), b.order());
  for (ElementId x = 0; x < a.order(); ++x) EXPECT_EQ(a.element(x), b.element(x));
  std::filesystem::remove_all(dir);
}
