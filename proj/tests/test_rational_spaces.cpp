#include <catch2/catch.hpp>

#include "semiflow/finite_actions.hpp"  // DetRng
#include "semiflow/rational.hpp"
#include "semiflow/spaces.hpp"

using namespace semiflow;

namespace {

Rational rand_rational(DetRng& rng, long long max_den) {
  long long den = 1 + static_cast<long long>(rng.below(static_cast<std::uint64_t>(max_den)));
  long long num = static_cast<long long>(rng.below(static_cast<std::uint64_t>(2 * den + 1))) - den;
  return Rational(num, den);
}

}  // namespace

TEST_CASE("rational canonical form and arithmetic") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(-1, -2) == Rational(1, 2));
  CHECK(Rational(1, -2) == Rational(-1, 2));
  CHECK(Rational(0, 7).den() == 1);
  CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);

  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  CHECK(Rational(1, 2) * Rational(1, 4) == Rational(1, 8));
  CHECK(Rational(1, 2) - Rational(2, 3) == Rational(-1, 6));
  CHECK(Rational(3, 4) / Rational(3, 2) == Rational(1, 2));
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::invalid_argument);

  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 2) < Rational(0));
}

TEST_CASE("rational floor, frac, parse and print") {
  CHECK(Rational(7, 2).floor() == 3);
  CHECK(Rational(-1, 4).floor() == -1);
  CHECK(Rational(-1, 4).frac() == Rational(3, 4));
  CHECK(Rational(3, 2).frac() == Rational(1, 2));
  CHECK(Rational(5).frac() == Rational(0));

  CHECK(Rational::parse("11/24") == Rational(11, 24));
  CHECK(Rational::parse("-3/6") == Rational(-1, 2));
  CHECK(Rational::parse("42") == Rational(42));
  CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("x"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1/-2"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);

  CHECK(Rational(1, 2).str() == "1/2");
  CHECK(Rational(-5).str() == "-5");
}

TEST_CASE("rational arithmetic laws on random triples") {
  DetRng rng(77);
  for (int i = 0; i < 200; ++i) {
    Rational a = rand_rational(rng, 30), b = rand_rational(rng, 30),
             c = rand_rational(rng, 30);
    REQUIRE((a + b) + c == a + (b + c));
    REQUIRE((a * b) * c == a * (b * c));
    REQUIRE(a * (b + c) == a * b + a * c);
    REQUIRE((a <= b) == !(b < a));
  }
}

TEST_CASE("circle distance") {
  CHECK(circle_dist(CirclePoint(Rational(0)), CirclePoint(Rational(1, 2))) ==
        Rational(1, 2));
  CHECK(circle_dist(CirclePoint(Rational(1, 27)), CirclePoint(Rational(26, 27))) ==
        Rational(2, 27));
  CHECK(circle_dist(CirclePoint(Rational(1, 3)), CirclePoint(Rational(1, 3))) ==
        Rational(0));
}

TEST_CASE("circle distance is a metric on random triples") {
  DetRng rng(78);
  for (int i = 0; i < 200; ++i) {
    CirclePoint a(rand_rational(rng, 40)), b(rand_rational(rng, 40)),
        c(rand_rational(rng, 40));
    Rational ab = circle_dist(a, b), ba = circle_dist(b, a);
    REQUIRE(ab == ba);
    REQUIRE(ab >= Rational(0));
    REQUIRE(ab <= Rational(1, 2));
    REQUIRE((ab == Rational(0)) == (a == b));
    REQUIRE(circle_dist(a, c) <= ab + circle_dist(b, c));
  }
}

TEST_CASE("disk distance") {
  DiskPoint a(Rational(1, 2), CirclePoint(Rational(0)));
  DiskPoint b(Rational(1, 2), CirclePoint(Rational(1, 4)));
  DiskPoint c(Rational(1, 4), CirclePoint(Rational(0)));
  CHECK(disk_dist(a, a) == Rational(0));
  CHECK(disk_dist(a, b) == Rational(1, 8));
  CHECK(disk_dist(a, c) == Rational(1, 4));

  DetRng rng(79);
  for (int i = 0; i < 200; ++i) {
    DiskPoint x(rand_rational(rng, 20).frac(), CirclePoint(rand_rational(rng, 20)));
    DiskPoint y(rand_rational(rng, 20).frac(), CirclePoint(rand_rational(rng, 20)));
    REQUIRE(disk_dist(x, y) == disk_dist(y, x));
    REQUIRE((disk_dist(x, y) == Rational(0)) == (x == y));
    REQUIRE(disk_dist(x, y) >= (x.radius - y.radius).abs());
  }
}

TEST_CASE("point invariants") {
  CHECK(CirclePoint(Rational(3, 2)).angle == Rational(1, 2));
  CHECK(CirclePoint(Rational(-1, 4)).angle == Rational(3, 4));
  DiskPoint center(Rational(0), CirclePoint(Rational(7, 9)));
  CHECK(center.theta.angle == Rational(0));  // center angle normalized
  CHECK_THROWS_AS(UnitIntervalPoint(Rational(3, 2)), std::invalid_argument);
  CHECK_THROWS_AS(DiskPoint(Rational(2), CirclePoint(Rational(0))),
                  std::invalid_argument);
}

TEST_CASE("neighborhood membership") {
  OpenInterval u(Rational(1, 3), Rational(2, 3));
  CHECK(u.contains(UnitIntervalPoint(Rational(1, 2))));
  CHECK_FALSE(u.contains(UnitIntervalPoint(Rational(1, 3))));  // open

  Arc arc(CirclePoint(Rational(0)), Rational(1, 27));
  CHECK(arc.contains(CirclePoint(Rational(1, 54))));
  CHECK(arc.contains(CirclePoint(Rational(53, 54))));  // wraps below 1
  CHECK_FALSE(arc.contains(CirclePoint(Rational(1, 27))));  // boundary
  CHECK_FALSE(arc.contains(CirclePoint(Rational(1, 2))));

  PolarBox box(Rational(3, 8), Rational(5, 8),
               Arc(CirclePoint(Rational(0)), Rational(1, 8)));
  CHECK(box.contains(DiskPoint(Rational(1, 2), CirclePoint(Rational(0)))));
  CHECK_FALSE(box.contains(DiskPoint(Rational(1, 2), CirclePoint(Rational(1, 2)))));
  CHECK_FALSE(box.contains(DiskPoint(Rational(3, 4), CirclePoint(Rational(0)))));

  CHECK_THROWS_AS(
      neighborhood_contains(Neighborhood(arc), Point(UnitIntervalPoint(Rational(0)))),
      std::invalid_argument);
  CHECK_THROWS_AS(Arc(CirclePoint(Rational(0)), Rational(2, 3)), std::invalid_argument);
  CHECK_THROWS_AS(OpenInterval(Rational(1, 2), Rational(1, 2)), std::invalid_argument);
}

TEST_CASE("arc membership agrees with the distance formulation") {
  DetRng rng(80);
  for (int i = 0; i < 200; ++i) {
    CirclePoint c(rand_rational(rng, 30));
    Rational h(1 + static_cast<long long>(rng.below(10)), 21);
    Arc arc(c, h);
    CirclePoint p(rand_rational(rng, 30));
    REQUIRE(arc.contains(p) == (circle_dist(c, p) < h));
  }
}

TEST_CASE("epsilon density") {
  std::vector<Point> tenths, hundredths;
  for (int k = 0; k < 10; ++k) tenths.push_back(CirclePoint(Rational(k, 10)));
  for (int k = 0; k < 100; ++k) hundredths.push_back(CirclePoint(Rational(k, 100)));
  CHECK(epsilon_dense(tenths, tenths, Rational(1, 100)));
  CHECK(epsilon_dense(tenths, hundredths, Rational(1, 10)));
  CHECK_FALSE(epsilon_dense({Point(CirclePoint(Rational(0)))},
                            {Point(CirclePoint(Rational(1, 2)))}, Rational(1, 4)));
  CHECK(epsilon_dense(std::vector<Point>{}, std::vector<Point>{}, Rational(1, 4)));
  CHECK_THROWS_AS(epsilon_dense(tenths, tenths, Rational(0)), std::invalid_argument);
}

TEST_CASE("canonicalize is idempotent and compatible with membership") {
  DetRng rng(81);
  Arc arc(CirclePoint(Rational(1, 3)), Rational(1, 8));
  for (int i = 0; i < 100; ++i) {
    CirclePoint p(rand_rational(rng, 25));
    Point q = canonicalize(Point(p));
    REQUIRE(canonicalize(q) == q);
    REQUIRE(arc.contains(std::get<CirclePoint>(q)) == arc.contains(p));
  }
}

TEST_CASE("point and neighborhood parsing") {
  CHECK(std::get<UnitIntervalPoint>(parse_point("1/2")).value == Rational(1, 2));
  CHECK(std::get<CirclePoint>(parse_point("circ:1/3")).angle == Rational(1, 3));
  DiskPoint d = std::get<DiskPoint>(parse_point("disk:1/2@1/4"));
  CHECK(d.radius == Rational(1, 2));
  CHECK(d.theta.angle == Rational(1, 4));
  CHECK(point_str(parse_point("disk:1/2@1/4")) == "disk:1/2@1/4");

  CHECK(std::holds_alternative<OpenInterval>(parse_neighborhood("int:1/3,2/3")));
  CHECK(std::holds_alternative<Arc>(parse_neighborhood("arc:0,1/27")));
  CHECK(std::holds_alternative<PolarBox>(parse_neighborhood("box:3/8,5/8@0,1/8")));
  CHECK_THROWS_AS(parse_neighborhood("ball:1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_point("disk:1/2"), std::invalid_argument);
}
