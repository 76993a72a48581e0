#include <gtest/gtest.h>

#include "engel/group_spec.hpp"

using namespace engel;

TEST(GroupSpec, ParsesSpellings) {
  for (const char* t : {"alt 5", "alt5", "ALT5", "alt_5", "alt(5)"}) {
    const auto s = parse_group_spec(t);
    EXPECT_EQ(s.family, "alt") << t;
    EXPECT_EQ(s.param, 5u) << t;
  }
  EXPECT_EQ(parse_group_spec("psl2_11").label(), "psl2(11)");
  EXPECT_EQ(parse_group_spec("psl3 4").family, "psl3");
  EXPECT_EQ(parse_group_spec("m11").label(), "m11");
  EXPECT_EQ(parse_group_spec("sz8").label(), "sz8");
  EXPECT_EQ(parse_group_spec("sz 8").param, 8u);
  const auto f = parse_group_spec("file x/y.gens");
  EXPECT_EQ(f.family, "file");
  EXPECT_EQ(f.path, "x/y.gens");
  EXPECT_EQ(parse_group_spec("m12.gens").family, "file");
}

TEST(GroupSpec, RejectsMalformedInput) {
  for (const char* t : {"", "e8 2", "alt", "alt five", "m11 3", "sz 32", "alt 5 6", "file", "psl2x"})
    EXPECT_THROW(parse_group_spec(t), std::invalid_argument) << "'" << t << "'";
}

TEST(GroupSpec, BuildsGroups) {
  const std::filesystem::path data = ENGEL_DATA_DIR;
  EXPECT_EQ(build_group(parse_group_spec("sym 4"), data).order(), 24u);
  EXPECT_EQ(build_group(parse_group_spec("m10"), data).order(), 720u);
  EXPECT_EQ(build_group(parse_group_spec("file m11.gens"), data).order(), 7920u);
  EXPECT_EQ(build_group(parse_group_spec("pgl2 5"), data).order(), 120u);
  EXPECT_THROW(build_group(parse_group_spec("file missing.gens"), data), ConstructionError);
  EXPECT_THROW(build_group(parse_group_spec("psl2 6"), data), ConstructionError);
  EXPECT_THROW(build_group(parse_group_spec("alt 0"), data), ConstructionError);
}

TEST(GroupSpec, PredictionsAndTables) {
  const std::filesystem::path data = ENGEL_DATA_DIR;
  EXPECT_EQ(*predict_for(parse_group_spec("alt 6"))->n, 3u);
  EXPECT_EQ(*predict_for(parse_group_spec("psl3 4"))->n, 3u);
  EXPECT_FALSE(predict_for(parse_group_spec("cyclic 4")));
  EXPECT_FALSE(predict_for(parse_group_spec("alt 4")));
  EXPECT_FALSE(predict_for(parse_group_spec("sym 6")));
  EXPECT_TRUE(table_for(parse_group_spec("psl3 2"), data));
  EXPECT_FALSE(table_for(parse_group_spec("alt 6"), data));
  EXPECT_EQ(table2_rows(parse_group_spec("m22"))->size(), 3u);
  EXPECT_FALSE(table2_rows(parse_group_spec("alt 7")));
}
