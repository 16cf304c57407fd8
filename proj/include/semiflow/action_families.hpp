#pragma once

// The three exactly-computable acting families:
//   scale:  x -> alpha*x on [0,1], alpha in [0,1/2] u {1}
//   affine: x -> p*x + q (mod 1) on the circle, p in (0,1], q in [0,1)
//   twist:  (r,theta) -> (r, theta + n*r) on the disk, n in {0} u {3,4,...}
// Composition is exact; truncations are finite parameter-bounded subsets.
//
// Affine caveat: the parameter law (p,q)o(p',q') = (pp', pq'+q mod 1)
// realizes pointwise function composition exactly when the outer part is a
// translation (p = 1) or the inner image does not wrap past 1. With q
// reduced mod 1 and a contracting outer part after a wrap, the two notions
// part ways (kolmogorov_check reports this honestly). Every cover
// decomposition and certificate in this library lives in the exact regime:
// translation nets, scaled copies h o s, and q-grid decompositions.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "semiflow/rational.hpp"
#include "semiflow/spaces.hpp"

namespace semiflow {

enum class Family { Scale, Affine, Twist };

inline std::string family_name(Family f) {
  switch (f) {
    case Family::Scale: return "scale";
    case Family::Affine: return "affine";
    case Family::Twist: return "twist";
  }
  return "?";
}

struct ScaleMap {
  Rational alpha;  // [0, 1/2] u {1}

  explicit ScaleMap(Rational a) : alpha(std::move(a)) {
    bool ok = (alpha >= Rational(0) && alpha <= Rational(1, 2)) || alpha == Rational(1);
    if (!ok) throw std::invalid_argument("ScaleMap: alpha outside [0,1/2] u {1}");
  }
};

struct AffineMap {
  Rational p;  // (0, 1]
  Rational q;  // [0, 1)

  AffineMap(Rational pp, Rational qq) : p(std::move(pp)), q(std::move(qq)) {
    if (!(p > Rational(0)) || p > Rational(1))
      throw std::invalid_argument("AffineMap: p outside (0,1]");
    if (q < Rational(0) || !(q < Rational(1)))
      throw std::invalid_argument("AffineMap: q outside [0,1)");
  }
};

struct TwistPower {
  long long n;  // {0} u {3, 4, ...}

  explicit TwistPower(long long nn) : n(nn) {
    if (n < 0 || n == 1 || n == 2)
      throw std::invalid_argument("TwistPower: exponent must be 0 or >= 3");
  }
};

class SemigroupElement {
 public:
  SemigroupElement(ScaleMap m) : v_(std::move(m)) {}
  SemigroupElement(AffineMap m) : v_(std::move(m)) {}
  SemigroupElement(TwistPower m) : v_(std::move(m)) {}

  Family family() const { return static_cast<Family>(v_.index()); }
  const ScaleMap& scale() const { return std::get<ScaleMap>(v_); }
  const AffineMap& affine() const { return std::get<AffineMap>(v_); }
  const TwistPower& twist() const { return std::get<TwistPower>(v_); }

  static SemigroupElement identity(Family f) {
    switch (f) {
      case Family::Scale: return ScaleMap(Rational(1));
      case Family::Affine: return AffineMap(Rational(1), Rational(0));
      case Family::Twist: return TwistPower(0);
    }
    throw std::logic_error("identity: bad family");
  }

  bool is_identity() const {
    switch (family()) {
      case Family::Scale: return scale().alpha == Rational(1);
      case Family::Affine:
        return affine().p == Rational(1) && affine().q.is_zero();
      case Family::Twist: return twist().n == 0;
    }
    return false;
  }

  bool operator==(const SemigroupElement& o) const {
    if (family() != o.family()) return false;
    switch (family()) {
      case Family::Scale: return scale().alpha == o.scale().alpha;
      case Family::Affine:
        return affine().p == o.affine().p && affine().q == o.affine().q;
      case Family::Twist: return twist().n == o.twist().n;
    }
    return false;
  }
  bool operator!=(const SemigroupElement& o) const { return !(*this == o); }

  // Within one family: scale by alpha, affine by (p, q), twist by exponent.
  bool operator<(const SemigroupElement& o) const {
    if (family() != o.family()) return family() < o.family();
    switch (family()) {
      case Family::Scale: return scale().alpha < o.scale().alpha;
      case Family::Affine:
        if (affine().p != o.affine().p) return affine().p < o.affine().p;
        return affine().q < o.affine().q;
      case Family::Twist: return twist().n < o.twist().n;
    }
    return false;
  }

  // "scale:1/2", "affine:1/2,1/3", "twist:4"
  std::string str() const {
    switch (family()) {
      case Family::Scale: return "scale:" + scale().alpha.str();
      case Family::Affine:
        return "affine:" + affine().p.str() + "," + affine().q.str();
      case Family::Twist: return "twist:" + std::to_string(twist().n);
    }
    return "?";
  }

  static SemigroupElement parse(std::string_view s) {
    if (s.rfind("scale:", 0) == 0)
      return ScaleMap(Rational::parse(s.substr(6)));
    if (s.rfind("affine:", 0) == 0) {
      auto rest = s.substr(7);
      auto comma = rest.find(',');
      if (comma == std::string_view::npos)
        throw std::invalid_argument("affine element needs 'affine:p,q'");
      return AffineMap(Rational::parse(rest.substr(0, comma)),
                       Rational::parse(rest.substr(comma + 1)));
    }
    if (s.rfind("twist:", 0) == 0) {
      Rational n = Rational::parse(s.substr(6));
      if (!n.is_integer())
        throw std::invalid_argument("twist exponent must be an integer");
      return TwistPower(static_cast<long long>(n.num()));
    }
    throw std::invalid_argument("element: unknown prefix in '" +
                                std::string(s) + "'");
  }

 private:
  std::variant<ScaleMap, AffineMap, TwistPower> v_;
};

// --- action --------------------------------------------------------------

inline UnitIntervalPoint apply(const ScaleMap& s, const UnitIntervalPoint& x) {
  return UnitIntervalPoint(s.alpha * x.value);
}

inline CirclePoint apply(const AffineMap& s, const CirclePoint& x) {
  return CirclePoint(s.p * x.angle + s.q);
}

inline DiskPoint apply(const TwistPower& s, const DiskPoint& x) {
  return DiskPoint(x.radius,
                   CirclePoint(x.theta.angle + Rational(s.n) * x.radius));
}

// Variant-level dispatcher. Deliberately not named `apply`: Point is a
// std::variant, so unqualified apply(s, point) would drag std::apply into
// overload resolution through ADL.
inline Point act(const SemigroupElement& s, const Point& x) {
  switch (s.family()) {
    case Family::Scale:
      if (auto* p = std::get_if<UnitIntervalPoint>(&x))
        return apply(s.scale(), *p);
      break;
    case Family::Affine:
      if (auto* p = std::get_if<CirclePoint>(&x)) return apply(s.affine(), *p);
      break;
    case Family::Twist:
      if (auto* p = std::get_if<DiskPoint>(&x)) return apply(s.twist(), *p);
      break;
  }
  throw std::invalid_argument("act: family/space mismatch");
}

// compose(a, b) applies b first; the composed map is x -> a(b(x)).
inline SemigroupElement compose(const SemigroupElement& a,
                                const SemigroupElement& b) {
  if (a.family() != b.family())
    throw std::invalid_argument("compose: family mismatch");
  switch (a.family()) {
    case Family::Scale:
      return ScaleMap(a.scale().alpha * b.scale().alpha);
    case Family::Affine:
      return AffineMap(a.affine().p * b.affine().p,
                       (a.affine().p * b.affine().q + a.affine().q).frac());
    case Family::Twist:
      return TwistPower(a.twist().n + b.twist().n);
  }
  throw std::logic_error("compose: bad family");
}

// The action axiom: acting by a composite equals acting twice.
inline bool kolmogorov_check(const SemigroupElement& a,
                             const SemigroupElement& b, const Point& x) {
  return act(compose(a, b), x) == act(a, act(b, x));
}

// --- truncations ---------------------------------------------------------

struct Truncation {
  Family family = Family::Scale;
  long long bound = 1;  // denominator grid bound (scale/affine) or exponent cap

  Truncation() = default;
  Truncation(Family f, long long b) : family(f), bound(b) {
    if (bound < 1) throw std::invalid_argument("Truncation: bound must be >= 1");
  }
  std::string str() const { return family_name(family) + ":" + std::to_string(bound); }

  static Truncation parse(std::string_view s) {
    auto colon = s.find(':');
    if (colon == std::string_view::npos)
      throw std::invalid_argument("truncation needs 'family:bound'");
    auto fam = s.substr(0, colon);
    Rational b = Rational::parse(s.substr(colon + 1));
    if (!b.is_integer())
      throw std::invalid_argument("truncation bound must be an integer");
    long long bound = static_cast<long long>(b.num());
    if (fam == "scale") return Truncation(Family::Scale, bound);
    if (fam == "affine") return Truncation(Family::Affine, bound);
    if (fam == "twist") return Truncation(Family::Twist, bound);
    throw std::invalid_argument("truncation: unknown family '" +
                                std::string(fam) + "'");
  }
};

// All reduced fractions a/b with b <= d in the requested range, sorted.
inline std::vector<Rational> farey_grid(long long d, bool include_zero,
                                        bool include_one) {
  std::vector<Rational> out;
  if (include_zero) out.emplace_back(0);
  if (include_one) out.emplace_back(1);
  for (long long b = 2; b <= d; ++b)
    for (long long a = 1; a < b; ++a)
      if (std::gcd(a, b) == 1) out.emplace_back(a, b);
  std::sort(out.begin(), out.end());
  return out;
}

inline std::uint64_t truncation_size(const Truncation& t) {
  auto count_unit = [&](bool zero, bool one) {
    std::uint64_t c = (zero ? 1 : 0) + (one ? 1 : 0);
    for (long long b = 2; b <= t.bound; ++b)
      for (long long a = 1; a < b; ++a)
        if (std::gcd(a, b) == 1) ++c;
    return c;
  };
  switch (t.family) {
    case Family::Scale: {
      // fractions <= 1/2 with denominator <= bound, plus 0 and 1
      std::uint64_t c = 2;
      for (long long b = 2; b <= t.bound; ++b)
        for (long long a = 1; 2 * a <= b; ++a)
          if (std::gcd(a, b) == 1) ++c;
      return c;
    }
    case Family::Affine:
      return count_unit(false, true) * count_unit(true, false);
    case Family::Twist:
      return t.bound < 3 ? 1 : static_cast<std::uint64_t>(t.bound - 1);
  }
  return 0;
}

inline constexpr std::uint64_t kEnumerateLimit = 2'000'000;

// Deterministic sorted enumeration; always contains the identity. Guarded:
// affine truncations grow quadratically in the grid and refuse to
// materialize past kEnumerateLimit (use the streaming form instead).
inline std::vector<SemigroupElement> enumerate_truncation(const Truncation& t) {
  std::uint64_t n = truncation_size(t);
  if (n > kEnumerateLimit)
    throw std::length_error("enumerate_truncation: " + t.str() + " has " +
                            std::to_string(n) +
                            " elements; beyond the materialization limit");
  std::vector<SemigroupElement> out;
  out.reserve(n);
  switch (t.family) {
    case Family::Scale: {
      std::vector<Rational> grid;
      grid.emplace_back(0);
      grid.emplace_back(1);
      for (long long b = 2; b <= t.bound; ++b)
        for (long long a = 1; 2 * a <= b; ++a)
          if (std::gcd(a, b) == 1) grid.emplace_back(a, b);
      std::sort(grid.begin(), grid.end());
      for (auto& g : grid) out.emplace_back(ScaleMap(std::move(g)));
      break;
    }
    case Family::Affine: {
      auto ps = farey_grid(t.bound, false, true);
      auto qs = farey_grid(t.bound, true, false);
      for (const auto& p : ps)
        for (const auto& q : qs) out.emplace_back(AffineMap(p, q));
      break;
    }
    case Family::Twist: {
      out.emplace_back(TwistPower(0));
      for (long long k = 3; k <= t.bound; ++k) out.emplace_back(TwistPower(k));
      break;
    }
  }
  return out;
}

// Streaming traversal in the same sorted order, without materializing the
// affine product grid. The visitor returns false to stop early; the function
// reports whether the traversal ran to completion.
inline bool for_each_element(const Truncation& t,
                             const std::function<bool(const SemigroupElement&)>& visit) {
  if (t.family != Family::Affine) {
    for (const auto& s : enumerate_truncation(t))
      if (!visit(s)) return false;
    return true;
  }
  auto ps = farey_grid(t.bound, false, true);
  auto qs = farey_grid(t.bound, true, false);
  for (const auto& p : ps)
    for (const auto& q : qs)
      if (!visit(SemigroupElement(AffineMap(p, q)))) return false;
  return true;
}

inline bool in_truncation(const SemigroupElement& s, const Truncation& t) {
  if (s.family() != t.family) return false;
  switch (t.family) {
    case Family::Scale:
      return s.scale().alpha.den() <= BigInt(t.bound);
    case Family::Affine:
      return s.affine().p.den() <= BigInt(t.bound) &&
             s.affine().q.den() <= BigInt(t.bound);
    case Family::Twist:
      return s.twist().n <= t.bound;
  }
  return false;
}

// Group completion of the twist family: the exponent semigroup completes to
// all of Z under addition, and each signed exponent still acts by twisting.
// Only the twist family admits this completion here.
struct TwistGroupElement {
  long long n = 0;  // any integer
};

inline DiskPoint apply(const TwistGroupElement& s, const DiskPoint& x) {
  return DiskPoint(x.radius,
                   CirclePoint(x.theta.angle + Rational(s.n) * x.radius));
}

inline TwistGroupElement compose(const TwistGroupElement& a,
                                 const TwistGroupElement& b) {
  return TwistGroupElement{a.n + b.n};
}

inline TwistGroupElement inverse(const TwistGroupElement& a) {
  return TwistGroupElement{-a.n};
}

inline Point default_base_point(Family f) {
  switch (f) {
    case Family::Scale: return UnitIntervalPoint(Rational(1, 2));
    case Family::Affine: return CirclePoint(Rational(0));
    case Family::Twist: return DiskPoint(Rational(1, 2), CirclePoint(Rational(0)));
  }
  throw std::logic_error("default_base_point: bad family");
}

inline Neighborhood default_neighborhood(Family f) {
  switch (f) {
    case Family::Scale: return OpenInterval(Rational(1, 3), Rational(2, 3));
    case Family::Affine: return Arc(CirclePoint(Rational(0)), Rational(1, 27));
    case Family::Twist:
      return PolarBox(Rational(3, 8), Rational(5, 8),
                      Arc(CirclePoint(Rational(0)), Rational(1, 8)));
  }
  throw std::logic_error("default_neighborhood: bad family");
}

}  // namespace semiflow
