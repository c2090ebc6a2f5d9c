#include <sstream>

#include <gtest/gtest.h>

#include "semilat/io.hpp"

namespace semilat::io {
namespace {

using T = Transformation;

TEST(TransformationText, FormatAndParse) {
  EXPECT_EQ(format_transformation(T::of({0, 0, 2})), "0 0 2");
  EXPECT_EQ(parse_transformation("0 0 2"), T::of({0, 0, 2}));
  EXPECT_EQ(parse_transformation("  1\t1  "), T::of({1, 1}));
  EXPECT_THROW(parse_transformation("0 3 1", 7), ParseError);
  EXPECT_THROW(parse_transformation("0 x 1"), ParseError);
  EXPECT_THROW(parse_transformation(""), ParseError);
  try {
    parse_transformation("0 3 1", 7);
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line, 7U);
    EXPECT_EQ(std::string(e.what()).rfind("line 7:", 0), 0U);
  }
}

TEST(TransformationText, ParsingInvertsFormatting) {
  for (std::size_t n = 1; n <= 4; ++n)
    for (const auto& e : enumerate_idempotents(n))
      EXPECT_EQ(parse_transformation(format_transformation(e)), e);
}

TEST(TransformationFile, HeaderCommentsAndBody) {
  std::istringstream in(
      "# E_0 on three points\n"
      "n=3 t=0 size=4\n"
      "0 0 0\n"
      "\n"
      "0 0 2   # trailing comment\n"
      "0 1 0\n"
      "0 1 2\n");
  auto f = read_transformations(in);
  EXPECT_EQ(f.n, 3U);
  EXPECT_EQ(f.t, 0U);
  EXPECT_EQ(f.size, 4U);
  EXPECT_EQ(f.elements.size(), 4U);
  EXPECT_EQ(f.elements[1], T::of({0, 0, 2}));
}

TEST(TransformationFile, ErrorsCarryLineNumbers) {
  auto line_of = [](const std::string& text) -> std::size_t {
    std::istringstream in(text);
    try {
      read_transformations(in);
    } catch (const ParseError& e) {
      return e.line;
    }
    return 0;
  };
  EXPECT_EQ(line_of("0 0 2\n0 1\n"), 2U);
  EXPECT_EQ(line_of("# c\n0 0 2\n0 5 2\n"), 3U);
  EXPECT_EQ(line_of("n=3\n0 1\n"), 2U);
  EXPECT_EQ(line_of("n=3 size=2\n0 1 2\n"), 2U);
  EXPECT_EQ(line_of("n=3 colour=2\n"), 1U);
  EXPECT_EQ(line_of("0 1 2\nn=3\n"), 2U);
}

TEST(SemilatticeText, HeaderThenImageWords) {
  EXPECT_EQ(format_semilattice_text(make_Et(3, 0), 0),
            "n=3 t=0 size=4\n0 0 0\n0 0 2\n0 1 0\n0 1 2\n");
  EXPECT_EQ(format_semilattice_text(make_Et(2, 1)), "n=2 size=2\n0 1\n1 1\n");
}

TEST(Json, SemilatticeWithAnnotations) {
  auto e = make_Et(2, 0);
  auto j = to_json(e);
  EXPECT_EQ(j.dump(), R"({"elements":[[0,0],[0,1]],"n":2})");
  auto annotated = to_json(e, {true, true, std::vector<T>{T::of({0, 1})}});
  EXPECT_EQ(annotated["is_maximal"], true);
  EXPECT_EQ(annotated["atoms"].dump(), "[[0,1]]");
}

TEST(Json, ReductionResultSchema) {
  auto j = to_json(reduce(make_Et(3, 0)));
  EXPECT_EQ(j["anchor"]["t"], 0);
  EXPECT_EQ(j["anchor"]["u"], 1);
  EXPECT_EQ(j["sizes"]["S"], 4);
  EXPECT_EQ(j["sizes"]["S_star"], 2);
  EXPECT_EQ(j["sizes"]["S_star_u"], 2);
  EXPECT_EQ(j["star"]["elements"].dump(), "[[0,0,0],[0,0,2]]");
  EXPECT_EQ(j["restricted"]["n"], 2);
}

TEST(Json, SpectrumSchemaAndCsv) {
  auto r = spectrum(3);
  auto j = to_json(r);
  EXPECT_EQ(j["n"], 3);
  EXPECT_EQ(j["max_size"], 4);
  EXPECT_EQ(j["total_maximal"], r.total);
  ASSERT_TRUE(j["histogram"].is_array());
  EXPECT_EQ(j["histogram"].back()["size"], 4);
  EXPECT_EQ(j["histogram"].back()["count"], 3);
  EXPECT_TRUE(j["witnesses"].contains("4"));
  EXPECT_EQ(j["witnesses"]["4"]["elements"].size(), 4U);

  auto csv = spectrum_csv(r);
  EXPECT_EQ(csv.rfind("n,size,count\n", 0), 0U);
  EXPECT_NE(csv.find("3,4,3\n"), std::string::npos);
}

TEST(Json, PosetSchema) {
  auto j = to_json(natural_order(make_Et(2, 0)));
  EXPECT_EQ(j["carrier"].dump(), "[[0,0],[0,1]]");
  EXPECT_EQ(j["leq"].dump(), "[[1,1],[0,1]]");
  auto p = to_json(transitivity_order(make_Et(2, 0)));
  EXPECT_EQ(p["carrier"].dump(), "[0,1]");
  EXPECT_EQ(p["leq"].dump(), "[[1,1],[0,1]]");
}

}  // namespace
}  // namespace semilat::io
