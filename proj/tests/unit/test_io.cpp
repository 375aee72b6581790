#include <gtest/gtest.h>

#include "c34/divisor.hpp"
#include "c34/error.hpp"
#include "c34/io.hpp"
#include "support.hpp"

using namespace c34;
using c34::testing::el;

namespace {

Errc code_of(std::string_view text) {
  try {
    parse_curve(text);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "accepted: " << text;
  return Errc::Exhausted;
}

}  // namespace

TEST(Io, CurveRoundTrip) {
  const Curve c = c34::testing::curve31();
  const Curve back = parse_curve(format_curve(c));
  EXPECT_EQ(back.modulus(), 31u);
  EXPECT_EQ(back.coeffs(), c.coeffs());
}

TEST(Io, CurveCommentsAndBlanks) {
  const Curve c = parse_curve("# test curve\n\np = 31\np2=3\np1=5 # inline\np0=7\nq2=11\nq1=13\nq0=17\n");
  EXPECT_EQ(c.coeffs(), c34::testing::curve31().coeffs());
}

TEST(Io, CurveErrors) {
  const std::string good = "p2=3\np1=5\np0=7\nq2=11\nq1=13\nq0=17\n";
  EXPECT_EQ(code_of(good), Errc::InvalidInput);
  EXPECT_EQ(code_of("p=31\n" + good + "r=1\n"), Errc::InvalidInput);
  EXPECT_EQ(code_of("p=31\np=31\n" + good), Errc::InvalidInput);
  EXPECT_EQ(code_of("p=31\n" + good + "oops\n"), Errc::InvalidInput);
  EXPECT_EQ(code_of("p=31\np2=31\np1=5\np0=7\nq2=11\nq1=13\nq0=17\n"), Errc::InvalidInput);
  EXPECT_EQ(code_of("p=31\np2=-1\np1=5\np0=7\nq2=11\nq1=13\nq0=17\n"), Errc::InvalidInput);
  EXPECT_EQ(code_of("p=33\n" + good), Errc::NonPrime);
  EXPECT_EQ(code_of("p=7\np2=0\np1=0\np0=0\nq2=0\nq1=3\nq0=1\n"), Errc::SingularScreenFailed);
}

TEST(Io, LoadMissingFile) {
  EXPECT_THROW(load_curve("/nonexistent/curve.txt"), Error);
}

TEST(Io, DivisorRoundTrip) {
  const FieldCtx k(31);
  const DivisorRep D = make_divisor(k, el(29), el(11), el(27), el(30), el(4), el(20));
  EXPECT_EQ(parse_divisor(k, format_divisor(D)), D);
  EXPECT_THROW(parse_divisor(k, "1,2,3"), Error);
  EXPECT_THROW(parse_divisor(k, "0,1,2,3,4,5"), Error);
}
