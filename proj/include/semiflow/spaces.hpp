#pragma once

// The three phase spaces, all over exact rationals: the unit interval, the
// circle T1 = [0,1) with wraparound, and the closed unit disk in polar
// coordinates. Neighborhoods are open and membership is decidable exactly.

#include <algorithm>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "semiflow/rational.hpp"

namespace semiflow {

struct UnitIntervalPoint {
  Rational value;

  explicit UnitIntervalPoint(Rational v) : value(std::move(v)) {
    if (value < Rational(0) || value > Rational(1))
      throw std::invalid_argument("UnitIntervalPoint: value outside [0,1]");
  }
  bool operator==(const UnitIntervalPoint& o) const { return value == o.value; }
  bool operator<(const UnitIntervalPoint& o) const { return value < o.value; }
  std::string str() const { return value.str(); }
};

struct CirclePoint {
  Rational angle;  // canonical representative in [0,1)

  explicit CirclePoint(const Rational& a) : angle(a.frac()) {}
  bool operator==(const CirclePoint& o) const { return angle == o.angle; }
  bool operator<(const CirclePoint& o) const { return angle < o.angle; }
  std::string str() const { return "circ:" + angle.str(); }
};

struct DiskPoint {
  Rational radius;    // [0, 1]
  CirclePoint theta;  // normalized to 0 at the center

  DiskPoint(Rational r, CirclePoint t)
      : radius(std::move(r)), theta(std::move(t)) {
    if (radius < Rational(0) || radius > Rational(1))
      throw std::invalid_argument("DiskPoint: radius outside [0,1]");
    if (radius.is_zero()) theta = CirclePoint(Rational(0));
  }
  bool operator==(const DiskPoint& o) const {
    return radius == o.radius && theta == o.theta;
  }
  bool operator<(const DiskPoint& o) const {
    if (radius != o.radius) return radius < o.radius;
    return theta < o.theta;
  }
  std::string str() const { return "disk:" + radius.str() + "@" + theta.angle.str(); }
};

using Point = std::variant<UnitIntervalPoint, CirclePoint, DiskPoint>;

// --- metrics -------------------------------------------------------------

inline Rational circle_dist(const CirclePoint& a, const CirclePoint& b) {
  Rational d = (a.angle - b.angle).abs();
  Rational w = Rational(1) - d;
  return d < w ? d : w;
}

// Exact surrogate metric on the disk: radial difference plus the angular
// distance weighted by the inner radius. Symmetric, zero iff equal (points
// are canonical), and >= |dr|; the triangle inequality is not relied on.
inline Rational disk_dist(const DiskPoint& a, const DiskPoint& b) {
  Rational dr = (a.radius - b.radius).abs();
  const Rational& inner = a.radius < b.radius ? a.radius : b.radius;
  return dr + inner * circle_dist(a.theta, b.theta);
}

inline Rational unit_dist(const UnitIntervalPoint& a, const UnitIntervalPoint& b) {
  return (a.value - b.value).abs();
}

inline Rational point_dist(const Point& a, const Point& b) {
  if (a.index() != b.index())
    throw std::invalid_argument("point_dist: points from different spaces");
  return std::visit(
      [&](const auto& x) -> Rational {
        using T = std::decay_t<decltype(x)>;
        const auto& y = std::get<T>(b);
        if constexpr (std::is_same_v<T, UnitIntervalPoint>)
          return unit_dist(x, y);
        else if constexpr (std::is_same_v<T, CirclePoint>)
          return circle_dist(x, y);
        else
          return disk_dist(x, y);
      },
      a);
}

// --- neighborhoods -------------------------------------------------------

struct OpenInterval {
  Rational lo, hi;  // open subinterval of [0,1]

  OpenInterval(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {
    if (!(lo < hi)) throw std::invalid_argument("OpenInterval: empty interval");
  }
  bool contains(const UnitIntervalPoint& p) const {
    return lo < p.value && p.value < hi;
  }
};

struct Arc {
  CirclePoint center;
  Rational halfwidth;  // (0, 1/2]

  Arc(CirclePoint c, Rational h) : center(std::move(c)), halfwidth(std::move(h)) {
    if (!(halfwidth > Rational(0)) || halfwidth > Rational(1, 2))
      throw std::invalid_argument("Arc: halfwidth outside (0, 1/2]");
  }
  bool contains(const CirclePoint& p) const {
    return circle_dist(center, p) < halfwidth;
  }
};

struct PolarBox {
  Rational radius_lo, radius_hi;  // open radial window
  Arc angular;

  PolarBox(Rational rlo, Rational rhi, Arc arc)
      : radius_lo(std::move(rlo)), radius_hi(std::move(rhi)),
        angular(std::move(arc)) {
    if (!(radius_lo < radius_hi))
      throw std::invalid_argument("PolarBox: empty radial window");
  }
  bool contains(const DiskPoint& p) const {
    return radius_lo < p.radius && p.radius < radius_hi &&
           angular.contains(p.theta);
  }
};

using Neighborhood = std::variant<OpenInterval, Arc, PolarBox>;

inline bool neighborhood_contains(const Neighborhood& u, const Point& p) {
  if (std::holds_alternative<OpenInterval>(u) &&
      std::holds_alternative<UnitIntervalPoint>(p))
    return std::get<OpenInterval>(u).contains(std::get<UnitIntervalPoint>(p));
  if (std::holds_alternative<Arc>(u) && std::holds_alternative<CirclePoint>(p))
    return std::get<Arc>(u).contains(std::get<CirclePoint>(p));
  if (std::holds_alternative<PolarBox>(u) && std::holds_alternative<DiskPoint>(p))
    return std::get<PolarBox>(u).contains(std::get<DiskPoint>(p));
  throw std::invalid_argument("neighborhood_contains: space mismatch");
}

// --- density -------------------------------------------------------------

// Every target point within eps (inclusive) of some sample point. An empty
// target is vacuously dense; requires eps > 0.
template <class P, class Dist>
bool epsilon_dense(const std::vector<P>& sample, const std::vector<P>& target,
                   const Rational& eps, Dist dist) {
  if (!(eps > Rational(0))) throw std::invalid_argument("epsilon_dense: eps <= 0");
  for (const P& t : target) {
    bool hit = false;
    for (const P& s : sample) {
      if (dist(s, t) <= eps) {
        hit = true;
        break;
      }
    }
    if (!hit) return false;
  }
  return true;
}

inline bool epsilon_dense(const std::vector<Point>& sample,
                          const std::vector<Point>& target,
                          const Rational& eps) {
  return epsilon_dense(sample, target, eps,
                       [](const Point& a, const Point& b) { return point_dist(a, b); });
}

// --- canonicalization ----------------------------------------------------

// Constructors already canonicalize; these exist as explicit idempotent maps.
inline UnitIntervalPoint canonicalize(const UnitIntervalPoint& p) { return p; }
inline CirclePoint canonicalize(const CirclePoint& p) { return CirclePoint(p.angle); }
inline DiskPoint canonicalize(const DiskPoint& p) { return DiskPoint(p.radius, p.theta); }
inline Point canonicalize(const Point& p) {
  return std::visit([](const auto& x) -> Point { return canonicalize(x); }, p);
}

inline bool point_less(const Point& a, const Point& b) {
  if (a.index() != b.index()) return a.index() < b.index();
  return std::visit(
      [&](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        return x < std::get<T>(b);
      },
      a);
}

inline std::string point_str(const Point& p) {
  return std::visit([](const auto& x) { return x.str(); }, p);
}

// --- parsing -------------------------------------------------------------

// "1/2" (unit interval), "circ:1/3", "disk:1/2@1/4".
inline Point parse_point(std::string_view s) {
  if (s.rfind("circ:", 0) == 0)
    return CirclePoint(Rational::parse(s.substr(5)));
  if (s.rfind("disk:", 0) == 0) {
    auto at = s.find('@');
    if (at == std::string_view::npos)
      throw std::invalid_argument("disk point needs 'disk:r@theta'");
    return DiskPoint(Rational::parse(s.substr(5, at - 5)),
                     CirclePoint(Rational::parse(s.substr(at + 1))));
  }
  return UnitIntervalPoint(Rational::parse(s));
}

// "int:1/3,2/3", "arc:0,1/27", "box:3/8,5/8@0,1/8".
inline Neighborhood parse_neighborhood(std::string_view s) {
  auto split2 = [](std::string_view t, char sep) {
    auto k = t.find(sep);
    if (k == std::string_view::npos)
      throw std::invalid_argument("neighborhood: expected two components");
    return std::pair{t.substr(0, k), t.substr(k + 1)};
  };
  if (s.rfind("int:", 0) == 0) {
    auto [lo, hi] = split2(s.substr(4), ',');
    return OpenInterval(Rational::parse(lo), Rational::parse(hi));
  }
  if (s.rfind("arc:", 0) == 0) {
    auto [c, h] = split2(s.substr(4), ',');
    return Arc(CirclePoint(Rational::parse(c)), Rational::parse(h));
  }
  if (s.rfind("box:", 0) == 0) {
    auto at = s.find('@');
    if (at == std::string_view::npos)
      throw std::invalid_argument("box neighborhood needs 'box:rlo,rhi@c,h'");
    auto [rlo, rhi] = split2(s.substr(4, at - 4), ',');
    auto [c, h] = split2(s.substr(at + 1), ',');
    return PolarBox(Rational::parse(rlo), Rational::parse(rhi),
                    Arc(CirclePoint(Rational::parse(c)), Rational::parse(h)));
  }
  throw std::invalid_argument("neighborhood: unknown prefix in '" +
                              std::string(s) + "'");
}

}  // namespace semiflow
