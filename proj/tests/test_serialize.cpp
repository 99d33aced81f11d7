#include <gtest/gtest.h>

#include "sgr/plucker.hpp"
#include "sgr/sampling.hpp"
#include "sgr/serialize.hpp"

namespace sgr {
namespace {

TEST(FieldNames, RoundTripAndErrors) {
  EXPECT_TRUE(field_from_name("Q").is_rational());
  EXPECT_EQ(field_from_name("GF(7)").modulus(), 7);
  EXPECT_EQ(field_from_name(Field::gf(101).name()), Field::gf(101));
  EXPECT_THROW(field_from_name("R"), parse_error);
  EXPECT_THROW(field_from_name("GF(x)"), parse_error);
  EXPECT_THROW(field_from_name("GF(4)"), invalid_argument_error);
}

TEST(Elements, RationalsTravelAsExactStrings) {
  Field q = Field::rationals();
  FieldElement e = FieldElement(q, 2) / FieldElement(q, -6);
  Json j = element_to_json(e);
  EXPECT_EQ(j.get<std::string>(), "-1/3");
  EXPECT_EQ(element_from_json(q, j), e);
  EXPECT_EQ(element_from_json(q, Json(-5)), FieldElement(q, -5));
  EXPECT_THROW(element_from_json(q, Json("1/0")), parse_error);
  EXPECT_THROW(element_from_json(q, Json("x")), parse_error);
  EXPECT_THROW(element_from_json(q, Json(1.5)), parse_error);
}

TEST(Elements, ResiduesTravelAsIntegers) {
  Field f5 = Field::gf(5);
  Json j = element_to_json(FieldElement(f5, 9));
  EXPECT_TRUE(j.is_number_integer());
  EXPECT_EQ(j.get<int>(), 4);
  EXPECT_EQ(element_from_json(f5, j), FieldElement(f5, 4));
  EXPECT_EQ(element_from_json(f5, Json("13")), FieldElement(f5, 3));
}

TEST(IndexSets, TextRoundTrip) {
  FiniteIndexSet s(3, {-2, 0, 1});
  EXPECT_EQ(index_set_to_text(s), "[-2,0,1]");
  EXPECT_EQ(index_set_from_text(3, "[-2,0,1]"), s);
  EXPECT_EQ(index_set_from_text(3, "[ -2, 0 , 1 ]"), s);
  EXPECT_THROW(index_set_from_text(3, "-2,0,1"), parse_error);
  EXPECT_THROW(index_set_from_text(3, "[-2,,1]"), parse_error);
  EXPECT_THROW(index_set_from_text(3, "[-2,zero,1]"), parse_error);
  EXPECT_THROW(index_set_from_text(2, "[-2,0,1]"), invalid_argument_error);
}

TEST(Points, JsonRoundTripRational) {
  Field q = Field::rationals();
  SeededRng rng(7);
  for (int level = 1; level <= 3; ++level)
    for (int d = 1; d <= 2 * level; ++d) {
      GrassPoint p = random_point(q, level, d, rng);
      GrassPoint back = point_from_json(point_to_json(p));
      EXPECT_EQ(back, p);
    }
}

TEST(Points, JsonRoundTripFinite) {
  Field f3 = Field::gf(3);
  for (const GrassPoint& p : enumerate_points(f3, 2, 2))
    EXPECT_EQ(point_from_json(point_to_json(p)), p);
}

TEST(Points, JsonShapeAndErrors) {
  Json j = point_to_json(GrassPoint::from_maya(FiniteIndexSet(2, {-1, 0}), Field::rationals()));
  EXPECT_EQ(j.at("level"), 2);
  EXPECT_EQ(j.at("field"), "Q");
  EXPECT_EQ(j.at("rows").size(), 2u);
  EXPECT_EQ(j.at("rows").at(0).at(1).get<std::string>(), "1");

  EXPECT_THROW(point_from_json(Json{{"field", "Q"}}), parse_error);
  EXPECT_THROW(point_from_json(Json{{"level", 2}, {"field", "Q"}, {"rows", Json::array()}}),
               parse_error);
  Json ragged = j;
  ragged["rows"][0] = Json::array({"1", "0"});
  EXPECT_THROW(point_from_json(ragged), parse_error);
  Json dependent = j;
  dependent["rows"][1] = dependent["rows"][0];
  EXPECT_THROW(point_from_json(dependent), rank_deficient_error);
}

TEST(Vectors, JsonRoundTrip) {
  Field q = Field::rationals();
  SeededRng rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    PluckerVector v = plucker_vector(random_point(q, 2, 2, rng));
    PluckerVector back = vector_from_json(vector_to_json(v));
    EXPECT_EQ(back, v);
  }
  PluckerVector v = plucker_vector(GrassPoint::from_maya(FiniteIndexSet(2, {-2, 1}), Field::gf(2)));
  EXPECT_EQ(vector_from_json(vector_to_json(v)), v);
}

TEST(Vectors, TextListsCoordinatesInCanonicalOrder) {
  Field q = Field::rationals();
  ExactMatrix m(q, 2, 4);
  m.at(0, 0) = FieldElement(q, 1);
  m.at(0, 2) = FieldElement(q, 1);
  m.at(1, 1) = FieldElement(q, 1);
  m.at(1, 3) = FieldElement(q, 1);
  PluckerVector v = plucker_vector(GrassPoint(2, m));
  EXPECT_EQ(vector_to_text(v),
            "X[-2,-1] = 1\nX[-2,1] = 1\nX[-1,0] = -1\nX[0,1] = 1");
}

TEST(Relations, TextMatchesPinnedQuadric) {
  std::vector<QuadraticRelation> rels = generate_all(2);
  ASSERT_EQ(rels.size(), 1u);
  EXPECT_EQ(relation_to_text(rels[0]),
            "X[-2,-1]*X[0,1] - X[-2,0]*X[-1,1] + X[-2,1]*X[-1,0]");
}

TEST(Relations, JsonRoundTripLevelTwoAndThree) {
  for (int level = 2; level <= 3; ++level)
    for (const QuadraticRelation& rel : generate_all(level)) {
      Json j = relation_to_json(rel);
      EXPECT_EQ(relation_from_json(j), rel);
    }
  Json quad = relation_to_json(generate_all(2)[0]);
  EXPECT_EQ(quad.at(0).at("c"), 1);
  EXPECT_EQ(quad.at(0).at("l"), Json::array({-2, -1}));
  EXPECT_EQ(quad.at(0).at("r"), Json::array({0, 1}));
  EXPECT_THROW(relation_from_json(Json::array()), parse_error);
}

TEST(Operators, JsonRoundTrip) {
  Field q = Field::rationals();
  WindowOperator mul = WindowOperator::multiplication(
      LaurentVector(q, {{1, FieldElement(q, 2)}, {2, FieldElement(q, 1)}}));
  Json jm = operator_to_json(mul);
  EXPECT_EQ(jm.at("kind"), "mul");
  WindowOperator mul_back = operator_from_json(jm);
  EXPECT_EQ(mul_back.kind(), OperatorKind::multiplication);
  EXPECT_EQ(mul_back.unit(), mul.unit());

  std::map<std::pair<int, int>, FieldElement> block;
  block.emplace(std::make_pair(-1, 0), FieldElement(q, 3));
  block.emplace(std::make_pair(0, 0), FieldElement(q, 2));
  WindowOperator band = WindowOperator::banded(q, 1, block);
  Json jb = operator_to_json(band);
  EXPECT_EQ(jb.at("kind"), "band");
  EXPECT_EQ(jb.at("bandwidth"), 1);
  WindowOperator band_back = operator_from_json(jb);
  EXPECT_EQ(band_back.kind(), OperatorKind::banded);
  EXPECT_EQ(band_back.bandwidth(), 1);
  EXPECT_TRUE(band_back.block() == band.block());

  EXPECT_THROW(operator_from_json(Json{{"kind", "twist"}, {"field", "Q"}}), parse_error);
}

TEST(Operators, ActionAgreesAfterRoundTrip) {
  Field f5 = Field::gf(5);
  std::map<std::pair<int, int>, FieldElement> block;
  block.emplace(std::make_pair(-1, 1), FieldElement(f5, 2));
  block.emplace(std::make_pair(1, 1), FieldElement(f5, 3));
  WindowOperator g = WindowOperator::banded(f5, 2, block);
  WindowOperator back = operator_from_json(operator_to_json(g));
  GrassPoint p = GrassPoint::from_maya(FiniteIndexSet(2, {-1, 1}), f5);
  EXPECT_EQ(act(back, p), act(g, p));
}

}  // namespace
}  // namespace sgr
