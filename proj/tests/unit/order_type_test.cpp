#include <gtest/gtest.h>

#include "enumorder/order_type.hpp"
#include "enumorder/set_order.hpp"
#include "enumorder/set_spec.hpp"

namespace enumorder {
namespace {

using OT = OrderType;
using D = BlockDirection;

TEST(Normalize, MergesAdjacentFiniteBlocks) { EXPECT_EQ(normalize(OT::concat({OT::fin(2), OT::fin(3)})), OT::fin(5)); }

TEST(Normalize, UnwrapsSingletonConcat) { EXPECT_EQ(normalize(OT::concat({OT::omega()})), OT::omega()); }

TEST(Normalize, FlattensNestedConcat) {
  EXPECT_EQ(normalize(OT::concat({OT::concat({OT::omega(), OT::omega_star()})})),
            OT::concat({OT::omega(), OT::omega_star()}));
}

TEST(Normalize, DropsEmptyBlocks) {
  EXPECT_EQ(normalize(OT::concat({OT::fin(0), OT::omega_star(), OT::fin(0), OT::omega()})),
            OT::concat({OT::omega_star(), OT::omega()}));
  EXPECT_EQ(normalize(OT::concat({OT::fin(0)})), OT::fin(0));
  EXPECT_EQ(normalize(OT::concat({})), OT::fin(0));
}

TEST(Normalize, AbsorbsFiniteBlocksIntoOmegaEnds) {
  EXPECT_EQ(normalize(OT::concat({OT::fin(3), OT::omega()})), OT::omega());
  EXPECT_EQ(normalize(OT::concat({OT::omega_star(), OT::fin(2)})), OT::omega_star());
  // w + 1 and 1 + w* are genuinely different shapes
  EXPECT_EQ(normalize(OT::concat({OT::omega(), OT::fin(1)})).kind, OT::Kind::Concat);
  EXPECT_EQ(normalize(OT::concat({OT::fin(1), OT::omega_star()})).kind, OT::Kind::Concat);
  // z + 1 + z collapses the middle point into the left w*
  EXPECT_EQ(normalize(OT::concat({OT::omega_star(), OT::fin(1), OT::omega()})),
            OT::concat({OT::omega_star(), OT::omega()}));
}

TEST(Normalize, DenseEndpointLaws) {
  EXPECT_EQ(normalize(OT::concat({OT::fin(1), OT::dense(false, false)})), OT::dense(true, false));
  EXPECT_EQ(normalize(OT::concat({OT::dense(false, false), OT::fin(1)})), OT::dense(false, true));
  EXPECT_EQ(normalize(OT::concat({OT::dense(true, false), OT::dense(false, true)})), OT::dense(true, true));
  EXPECT_EQ(normalize(OT::concat({OT::dense(false, false), OT::fin(1), OT::dense(false, false)})),
            OT::dense(false, false));
  // Two endpoints meeting leave a jump, which is not dense.
  EXPECT_EQ(normalize(OT::concat({OT::dense(true, true), OT::dense(true, true)})).kind, OT::Kind::Concat);
  // 2 + Q and 1 + Q[ are the same order.
  EXPECT_TRUE(isomorphic(OT::concat({OT::fin(2), OT::dense(false, false)}),
                         OT::concat({OT::fin(1), OT::dense(true, false)})));
}

TEST(Normalize, IsIdempotent) {
  const std::vector<OT> samples{
      OT::concat({OT::fin(2), OT::concat({OT::fin(1), OT::omega()}), OT::omega_star(), OT::fin(4)}),
      OT::concat({OT::dense(false, false), OT::fin(3), OT::dense(false, true), OT::omega()}),
      OT::concat({OT::omega(), OT::omega_star(), OT::omega(), OT::fin(0)}),
      OT::fin(7),
  };
  for (const auto& d : samples) {
    EXPECT_EQ(normalize(normalize(d)), normalize(d)) << to_string(d);
    EXPECT_TRUE(isomorphic(d, normalize(d)));
  }
}

TEST(Isomorphic, Examples) {
  EXPECT_FALSE(isomorphic(OT::omega(), OT::omega_star()));
  EXPECT_FALSE(isomorphic(OT::concat({OT::omega(), OT::omega_star()}), OT::omega()));
  const OT d = OT::concat({OT::omega(), OT::omega_star(), OT::omega()});
  EXPECT_TRUE(isomorphic(d, d));
  EXPECT_FALSE(isomorphic(OT::fin(3), OT::fin(4)));
  EXPECT_FALSE(isomorphic(OT::dense(true, true), OT::dense(false, true)));
}

TEST(TextForm, RoundTrips) {
  const std::vector<std::string> texts{"FIN(3)", "W", "W*", "Q[a,b]", "Q(a,b]", "W + W* + W", "Q(a,b) + W*"};
  for (const auto& t : texts) {
    EXPECT_EQ(to_string(parse_order_type(t)), t);
  }
  EXPECT_EQ(parse_order_type("W+W*"), OT::concat({OT::omega(), OT::omega_star()}));
  EXPECT_THROW(parse_order_type("V"), OrderTypeSyntaxError);
  EXPECT_THROW(parse_order_type("FIN(x)"), OrderTypeSyntaxError);
  EXPECT_THROW(parse_order_type("W +"), OrderTypeSyntaxError);
}

TEST(BlockSignature, FollowsParity) {
  EXPECT_EQ(block_signature(build_A(1)), (std::vector<D>{D::Asc}));
  EXPECT_EQ(block_signature(build_A(3)), (std::vector<D>{D::Asc, D::Desc, D::Asc}));
  EXPECT_EQ(block_signature(build_T(2)), (std::vector<D>{D::Desc}));
}

TEST(BlockSignature, RejectsUnsupportedShapes) {
  EXPECT_THROW(block_signature(rationals_in_interval(Rational(0), Rational(1))), UnsupportedShape);
  EXPECT_THROW(block_signature(finite_listing({Rational(1)})), UnsupportedShape);
  EXPECT_THROW(block_signature(builtin_dyadic(listing_from_values({Rational(1)}))), UnsupportedShape);
}

TEST(RefuteType2, DifferentSignaturesRefute) {
  const Refutation r = refute_type2(build_A(2), build_A(5));
  EXPECT_TRUE(r.refuted());
  EXPECT_EQ(r.reason, "signature [ASC,DESC] != [ASC,DESC,ASC,DESC,ASC]");
}

TEST(RefuteType2, EqualSignaturesAreUnknown) { EXPECT_FALSE(refute_type2(build_A(3), build_A(3)).refuted()); }

TEST(RefuteType2, DenseIsOutOfScope) {
  EXPECT_FALSE(refute_type2(builtin_harmonic(), rationals_in_interval(Rational(0), Rational(1))).refuted());
}

TEST(RefuteType2, SurvivesFiniteEdits) {
  const SetSpec edited = remove_finite(shift(build_A(3), 4), {Rational(2)});
  ASSERT_TRUE(edited.descriptor.has_value());
  EXPECT_EQ(block_signature(edited), block_signature(build_A(3)));
  EXPECT_TRUE(refute_type2(edited, build_A(2)).refuted());
}

TEST(RefuteCoorder, HarmonicVersusThirds) {
  const Refutation r = refute_coorder(builtin_harmonic(), builtin_thirds());
  EXPECT_TRUE(r.refuted());
  EXPECT_FALSE(refute_coorder(build_T(1), build_T(3)).refuted());
}

}  // namespace
}  // namespace enumorder
