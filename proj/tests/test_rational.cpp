#include <doctest.h>

#include <sstream>

#include "vgf/rational.hpp"

using vgf::Int;
using vgf::Rational;

TEST_SUITE("rational") {

TEST_CASE("construction reduces and keeps the denominator positive") {
  CHECK(Rational(Int(2), Int(4)) == Rational(Int(1), Int(2)));
  CHECK(Rational(Int(1), Int(-2)) == Rational(Int(-1), Int(2)));
  CHECK(Rational(Int(-6), Int(-4)) == Rational(Int(3), Int(2)));
  CHECK(Rational(Int(0), Int(7)).den() == 1);
  CHECK(Rational(5).den() == 1);
  CHECK_THROWS_AS(Rational(Int(1), Int(0)), vgf::DivisionByZeroError);
}

TEST_CASE("field operations are exact") {
  Rational a(Int(1), Int(3)), b(Int(1), Int(6));
  CHECK(a + b == Rational(Int(1), Int(2)));
  CHECK(a - b == b);
  CHECK(a * b == Rational(Int(1), Int(18)));
  CHECK(a / b == Rational(2));
  CHECK(-a == Rational(Int(-1), Int(3)));
  CHECK(a.inverse() == Rational(3));
  Rational c = a;
  c += b;
  c *= Rational(4);
  CHECK(c == Rational(2));
  CHECK_THROWS_AS(a / Rational(0), vgf::DivisionByZeroError);
  CHECK_THROWS_AS(Rational(0).inverse(), vgf::DivisionByZeroError);
}

TEST_CASE("ordering is the field order") {
  CHECK(Rational(Int(1), Int(3)) < Rational(Int(1), Int(2)));
  CHECK(Rational(-1) < Rational(Int(-1), Int(2)));
  CHECK(Rational(Int(2), Int(4)) <= Rational(Int(1), Int(2)));
  CHECK(Rational(3) > Rational(Int(5), Int(2)));
  CHECK(vgf::abs(Rational(Int(-3), Int(4))) == Rational(Int(3), Int(4)));
}

TEST_CASE("text round trip is canonical") {
  for (const char* text : {"0", "7", "-3/4", "1/2", "-12"}) {
    Rational r = Rational::from_string(text);
    CHECK(r.to_string() == text);
  }
  CHECK(Rational::from_string("2/4").to_string() == "1/2");
  CHECK(Rational::from_string("+3") == Rational(3));
  std::ostringstream os;
  os << Rational(Int(-1), Int(2));
  CHECK(os.str() == "-1/2");
}

TEST_CASE("malformed literals are rejected") {
  for (const char* text : {"", "1/", "/2", "a", "1.5", "1/0", "--2", "1/2/3", "2 "}) {
    CHECK_THROWS_AS(Rational::from_string(text), vgf::ParseError);
  }
}

TEST_CASE("arithmetic stays exact on large values") {
  Rational big(Int("123456789123456789"), Int("987654321987654321"));
  CHECK(big * big.inverse() == Rational(1));
  Rational sum(0);
  for (int i = 1; i <= 50; ++i) sum += Rational(Int(1), Int(i));
  for (int i = 1; i <= 50; ++i) sum -= Rational(Int(1), Int(i));
  CHECK(sum == Rational(0));
}

}  // TEST_SUITE
