#pragma once

// Return-set computation and certificate search for both almost-periodicity
// definitions, epsilon-resolution minimality, proximal/distal pair analysis,
// the exponent-window bridge and the group completion of the twist family.
//
// Orientation: covers are built with k outermost, i.e. the syndetic
// decomposition is s = compose(k, a) and the modified condition tests
// compose(k, s) for membership. This matters for the non-commutative affine
// family. Truncated searches never report non-existence over the full
// family: a failed search is an exhaustion report, not a refutation.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "semiflow/action_families.hpp"
#include "semiflow/rational.hpp"
#include "semiflow/spaces.hpp"
#include "semiflow/windowed_set.hpp"

namespace semiflow {

// --- return sets -----------------------------------------------------------

struct ReturnSet {
  Family family;
  Point base;
  Neighborhood nbhd;
  Truncation trunc;
  std::vector<SemigroupElement> members;  // enumeration order

  // Exact membership test; valid for elements outside the truncation too.
  bool admits(const SemigroupElement& s) const {
    return neighborhood_contains(nbhd, act(s, base));
  }
};

inline ReturnSet return_set(const Point& x, const Neighborhood& u,
                            const Truncation& t) {
  ReturnSet rs{t.family, canonicalize(x), u, t, {}};
  for (const auto& s : enumerate_truncation(t))
    if (rs.admits(s)) rs.members.push_back(s);
  return rs;
}

// --- certificates ------------------------------------------------------------

enum class CertKind { SyndeticCover, ModifiedApCover };

inline std::string cert_kind_name(CertKind k) {
  return k == CertKind::SyndeticCover ? "SYNDETIC-COVER" : "MODIFIED-AP-COVER";
}

struct Certificate {
  CertKind kind = CertKind::SyndeticCover;
  std::vector<SemigroupElement> k_set;
  Truncation trunc;
  bool verified = false;
  bool minimized = false;  // exact minimization phase completed
  std::string note;
};

struct ExhaustionReport {
  Truncation trunc;
  std::uint64_t pool_size = 0;
  std::uint64_t uncovered_total = 0;
  std::vector<SemigroupElement> uncovered_sample;  // capped at 20
  std::string note;
};

using SearchOutcome = std::variant<Certificate, ExhaustionReport>;

inline const Certificate* certificate_of(const SearchOutcome& o) {
  return std::get_if<Certificate>(&o);
}

namespace detail {

struct CoverProblem {
  std::size_t universe = 0;
  std::size_t words = 0;
  std::vector<std::vector<std::uint64_t>> cover;  // per candidate
};

struct CoverSolution {
  bool success = false;
  std::vector<std::size_t> chosen;
  std::vector<std::size_t> uncovered;
  bool minimized = false;
};

inline std::size_t popcount_and_not(const std::vector<std::uint64_t>& a,
                                    const std::vector<std::uint64_t>& covered) {
  std::size_t c = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    c += static_cast<std::size_t>(__builtin_popcountll(a[i] & ~covered[i]));
  return c;
}

inline bool full_cover(const std::vector<std::uint64_t>& covered,
                       std::size_t universe) {
  std::size_t full = universe / 64;
  for (std::size_t i = 0; i < full; ++i)
    if (covered[i] != ~std::uint64_t{0}) return false;
  std::size_t rem = universe % 64;
  if (rem) {
    std::uint64_t need = (std::uint64_t{1} << rem) - 1;
    if ((covered[full] & need) != need) return false;
  }
  return true;
}

// Greedy maximum-gain selection (ties to the lowest candidate index),
// optionally seeded with a forced first pick, followed by an exact
// lexicographic search over subset sizes 1..4 while the combination count
// stays within budget. Deterministic throughout.
inline CoverSolution solve_cover(const CoverProblem& p, std::size_t max_k,
                                 std::size_t seed = SIZE_MAX) {
  CoverSolution sol;
  std::vector<std::uint64_t> covered(p.words, 0);
  if (seed < p.cover.size() && popcount_and_not(p.cover[seed], covered) > 0) {
    sol.chosen.push_back(seed);
    for (std::size_t i = 0; i < p.words; ++i) covered[i] |= p.cover[seed][i];
  }
  while (!full_cover(covered, p.universe)) {
    std::size_t best = p.cover.size();
    std::size_t best_gain = 0;
    for (std::size_t c = 0; c < p.cover.size(); ++c) {
      std::size_t gain = popcount_and_not(p.cover[c], covered);
      if (gain > best_gain) {
        best_gain = gain;
        best = c;
      }
    }
    if (best_gain == 0 || sol.chosen.size() >= max_k) {
      for (std::size_t i = 0; i < p.universe; ++i)
        if (!((covered[i / 64] >> (i % 64)) & 1)) sol.uncovered.push_back(i);
      return sol;
    }
    sol.chosen.push_back(best);
    for (std::size_t i = 0; i < p.words; ++i) covered[i] |= p.cover[best][i];
  }
  sol.success = true;
  std::sort(sol.chosen.begin(), sol.chosen.end());

  // exact phase: candidates with empty coverage can never appear in a cover
  std::vector<std::size_t> pool;
  for (std::size_t c = 0; c < p.cover.size(); ++c)
    for (std::size_t i = 0; i < p.words; ++i)
      if (p.cover[c][i]) {
        pool.push_back(c);
        break;
      }

  const std::uint64_t op_budget = 100'000'000;
  sol.minimized = true;
  for (std::size_t size = 1;
       size < std::min<std::size_t>(5, sol.chosen.size()); ++size) {
    if (pool.size() < size) break;
    // combination-count * words must stay within budget
    long double combos = 1;
    for (std::size_t i = 0; i < size; ++i)
      combos = combos * static_cast<long double>(pool.size() - i) /
               static_cast<long double>(i + 1);
    if (combos * static_cast<long double>(p.words) >
        static_cast<long double>(op_budget)) {
      sol.minimized = false;
      break;
    }
    std::vector<std::size_t> idx(size);
    for (std::size_t i = 0; i < size; ++i) idx[i] = i;
    std::vector<std::uint64_t> acc(p.words, 0);
    bool found = false;
    while (!found) {
      std::fill(acc.begin(), acc.end(), 0);
      for (std::size_t i = 0; i < size; ++i)
        for (std::size_t w = 0; w < p.words; ++w)
          acc[w] |= p.cover[pool[idx[i]]][w];
      if (full_cover(acc, p.universe)) {
        sol.chosen.clear();
        for (std::size_t i = 0; i < size; ++i) sol.chosen.push_back(pool[idx[i]]);
        found = true;
        break;
      }
      // advance lexicographic combination
      std::size_t i = size;
      while (i-- > 0) {
        if (idx[i] + (size - i) < pool.size()) {
          ++idx[i];
          for (std::size_t j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
          break;
        }
        if (i == 0) {
          i = pool.size();  // signal exhaustion
          break;
        }
      }
      if (i == pool.size()) break;
    }
    if (found) break;
  }
  return sol;
}

inline constexpr std::size_t kCoverUniverseLimit = 65536;
inline constexpr std::uint64_t kCoverEvalLimit = 60'000'000;

}  // namespace detail

// Independent re-verification passes (element-by-element, no shared state
// with the search machinery).

inline bool verify_syndetic_certificate(const Truncation& t, const ReturnSet& a,
                                        const std::vector<SemigroupElement>& k_set) {
  auto universe = enumerate_truncation(t);
  std::map<SemigroupElement, bool> covered;
  for (const auto& s : universe) covered.emplace(s, false);
  for (const auto& k : k_set)
    for (const auto& m : a.members) {
      auto it = covered.find(compose(k, m));
      if (it != covered.end()) it->second = true;
    }
  for (const auto& [s, ok] : covered)
    if (!ok) return false;
  return true;
}

inline bool verify_modified_certificate(const Truncation& t, const ReturnSet& a,
                                        const std::vector<SemigroupElement>& k_set) {
  for (const auto& k : k_set)
    if (!in_truncation(k, t)) return false;

  // Translation nets against an arc verify by exact circle-cover geometry,
  // which settles every element of the full family at once.
  if (t.family == Family::Affine && std::holds_alternative<Arc>(a.nbhd)) {
    bool all_translations = !k_set.empty();
    for (const auto& k : k_set)
      if (k.affine().p != Rational(1)) all_translations = false;
    if (all_translations) {
      const Arc& arc = std::get<Arc>(a.nbhd);
      Rational width = arc.halfwidth * Rational(2);
      std::vector<Rational> offs;
      for (const auto& k : k_set) offs.push_back(k.affine().q);
      std::sort(offs.begin(), offs.end());
      for (std::size_t i = 0; i < offs.size(); ++i) {
        Rational gap = i + 1 < offs.size()
                           ? offs[i + 1] - offs[i]
                           : offs.front() + Rational(1) - offs.back();
        if (!(gap < width)) return false;  // open arcs: gap must be strict
      }
      return true;
    }
  }

  std::uint64_t n = truncation_size(t);
  if (n > kEnumerateLimit)
    throw std::length_error(
        "verify_modified_certificate: truncation too large for the "
        "element-by-element scan and certificate is not a translation net");
  bool ok = true;
  for_each_element(t, [&](const SemigroupElement& s) {
    bool hit = false;
    for (const auto& k : k_set)
      if (a.admits(compose(k, s))) {
        hit = true;
        break;
      }
    if (!hit) {
      ok = false;
      return false;
    }
    return true;
  });
  return ok;
}

namespace detail {

inline SearchOutcome outcome_from_solution(
    CertKind kind, const Truncation& t, const ReturnSet& a,
    const std::vector<SemigroupElement>& universe, const CoverSolution& sol,
    const std::string& note) {
  if (!sol.success) {
    ExhaustionReport ex;
    ex.trunc = t;
    ex.pool_size = universe.size();
    ex.uncovered_total = sol.uncovered.size();
    for (std::size_t i = 0; i < sol.uncovered.size() && i < 20; ++i)
      ex.uncovered_sample.push_back(universe[sol.uncovered[i]]);
    ex.note = note.empty() ? "greedy cover stalled or exceeded maxK" : note;
    return ex;
  }
  Certificate cert;
  cert.kind = kind;
  cert.trunc = t;
  cert.minimized = sol.minimized;
  for (std::size_t c : sol.chosen) cert.k_set.push_back(universe[c]);
  cert.verified = kind == CertKind::SyndeticCover
                      ? verify_syndetic_certificate(t, a, cert.k_set)
                      : verify_modified_certificate(t, a, cert.k_set);
  cert.note = note;
  return cert;
}

}  // namespace detail

// Syndetic cover search: K with every s in the truncation equal to
// compose(k, a) for some k in K, a in the return set (exact parameter
// equality; the decomposition stays inside the truncation).
inline SearchOutcome syndetic_search(const Truncation& t, const ReturnSet& a,
                                     std::size_t max_k) {
  auto universe = enumerate_truncation(t);
  if (universe.size() > detail::kCoverUniverseLimit ||
      static_cast<std::uint64_t>(universe.size()) * std::max<std::size_t>(1, a.members.size()) >
          detail::kCoverEvalLimit)
    throw std::length_error("syndetic_search: truncation too large for exact cover search");

  std::map<SemigroupElement, std::size_t> index;
  for (std::size_t i = 0; i < universe.size(); ++i) index.emplace(universe[i], i);

  detail::CoverProblem p;
  p.universe = universe.size();
  p.words = universe.size() / 64 + 1;
  p.cover.assign(universe.size(), std::vector<std::uint64_t>(p.words, 0));
  std::size_t identity_idx = SIZE_MAX;
  for (std::size_t c = 0; c < universe.size(); ++c) {
    if (universe[c].is_identity()) identity_idx = c;
    for (const auto& m : a.members) {
      auto it = index.find(compose(universe[c], m));
      if (it != index.end())
        p.cover[c][it->second / 64] |= std::uint64_t{1} << (it->second % 64);
    }
  }

  auto sol = detail::solve_cover(p, max_k, identity_idx);
  return detail::outcome_from_solution(CertKind::SyndeticCover, t, a, universe,
                                       sol, "");
}

// Modified-AP cover search: K with, for every s in the truncation, some
// compose(k, s) landing in the return set (membership evaluated exactly even
// when the composite leaves the truncation).
inline SearchOutcome modified_ap_search(const Truncation& t, const ReturnSet& a,
                                        std::size_t max_k) {
  // Affine circle neighborhoods are arcs; a uniform translation net whose
  // spacing is finer than the arc covers every possible image point, so the
  // certificate holds for the whole family and needs no enumeration.
  if (t.family == Family::Affine && std::holds_alternative<Arc>(a.nbhd)) {
    const Arc& arc = std::get<Arc>(a.nbhd);
    Rational width = arc.halfwidth * Rational(2);
    // smallest m with m*width > 1
    BigInt m_big = (Rational(1) / width).floor() + 1;
    long long m = static_cast<long long>(m_big);
    if (m <= t.bound && static_cast<std::size_t>(m) <= max_k) {
      Certificate cert;
      cert.kind = CertKind::ModifiedApCover;
      cert.trunc = t;
      for (long long j = 0; j < m; ++j)
        cert.k_set.push_back(AffineMap(Rational(1), Rational(j, m)));
      cert.verified = verify_modified_certificate(t, a, cert.k_set);
      cert.note = "translation net of spacing 1/" + std::to_string(m) +
                  " against arc width " + width.str() +
                  "; valid for the full family, not only the truncation";
      return cert;
    }
    if (truncation_size(t) > 4096) {
      ExhaustionReport ex;
      ex.trunc = t;
      ex.pool_size = truncation_size(t);
      ex.note = "translation net needs spacing 1/" + std::to_string(m) +
                " which exceeds the truncation bound, and the truncation is "
                "too large for the generic search";
      return ex;
    }
  }

  auto universe = enumerate_truncation(t);
  if (static_cast<std::uint64_t>(universe.size()) * universe.size() >
      detail::kCoverEvalLimit)
    throw std::length_error("modified_ap_search: truncation too large for exact cover search");

  detail::CoverProblem p;
  p.universe = universe.size();
  p.words = universe.size() / 64 + 1;
  p.cover.assign(universe.size(), std::vector<std::uint64_t>(p.words, 0));
  for (std::size_t c = 0; c < universe.size(); ++c)
    for (std::size_t s = 0; s < universe.size(); ++s)
      if (a.admits(compose(universe[c], universe[s])))
        p.cover[c][s / 64] |= std::uint64_t{1} << (s % 64);

  auto sol = detail::solve_cover(p, max_k);
  return detail::outcome_from_solution(CertKind::ModifiedApCover, t, a,
                                       universe, sol, "");
}

// Prefix-window syndetic certificate for the exponent family: the smallest
// c whose truncation prefix K = S and [0, c] covers every exponent as k + a.
// Verified by direct integer arithmetic, independent of the composition
// machinery.
inline std::optional<Certificate> exponent_window_certificate(
    const Truncation& t, const ReturnSet& a) {
  if (t.family != Family::Twist) return std::nullopt;
  std::vector<long long> exps;
  for (const auto& m : a.members) exps.push_back(m.twist().n);
  std::set<long long> a_set(exps.begin(), exps.end());
  std::vector<long long> s_all;
  s_all.push_back(0);
  for (long long n = 3; n <= t.bound; ++n) s_all.push_back(n);

  for (long long c = 0; c <= t.bound; ++c) {
    std::vector<long long> k_set;
    for (long long k : s_all)
      if (k <= c) k_set.push_back(k);
    bool all = true;
    for (long long s : s_all) {
      bool hit = false;
      for (long long k : k_set)
        if (s - k >= 0 && a_set.count(s - k)) {
          hit = true;
          break;
        }
      if (!hit) {
        all = false;
        break;
      }
    }
    if (all) {
      Certificate cert;
      cert.kind = CertKind::SyndeticCover;
      cert.trunc = t;
      for (long long k : k_set) cert.k_set.push_back(TwistPower(k));
      cert.verified = verify_syndetic_certificate(t, a, cert.k_set);
      cert.note = "prefix-window certificate, cutoff " + std::to_string(c);
      return cert;
    }
  }
  return std::nullopt;
}

// --- orbit samples and minimality --------------------------------------------

struct OrbitSample {
  Point base;
  Truncation trunc;
  std::vector<Point> points;  // canonical, deduplicated, sorted
};

inline OrbitSample orbit_sample(const Point& x, const Truncation& t) {
  OrbitSample out{canonicalize(x), t, {}};
  std::set<Point, bool (*)(const Point&, const Point&)> seen(point_less);
  for_each_element(t, [&](const SemigroupElement& s) {
    seen.insert(canonicalize(act(s, x)));
    return true;
  });
  out.points.assign(seen.begin(), seen.end());
  return out;
}

enum class MinimalityStatus { MinimalAtResolution, NotMinimalExact, Inconclusive };

inline std::string minimality_status_name(MinimalityStatus s) {
  switch (s) {
    case MinimalityStatus::MinimalAtResolution: return "MINIMAL-AT-RESOLUTION";
    case MinimalityStatus::NotMinimalExact: return "NOT-MINIMAL-EXACT";
    case MinimalityStatus::Inconclusive: return "INCONCLUSIVE";
  }
  return "?";
}

struct MinimalityVerdict {
  MinimalityStatus status = MinimalityStatus::Inconclusive;
  Rational eps;
  Truncation trunc;
  std::vector<Point> witness;  // NOT-MINIMAL-EXACT: the exact invariant set
  std::string evidence;
};

namespace detail {

inline std::vector<Point> orbit_points_of(const Point& y, const Truncation& t) {
  std::set<Point, bool (*)(const Point&, const Point&)> seen(point_less);
  for_each_element(t, [&](const SemigroupElement& s) {
    seen.insert(canonicalize(act(s, y)));
    return true;
  });
  return {seen.begin(), seen.end()};
}

inline bool exactly_invariant(const std::vector<Point>& set, const Truncation& t) {
  auto member = [&](const Point& p) {
    return std::binary_search(set.begin(), set.end(), p, point_less);
  };
  bool invariant = true;
  for_each_element(t, [&](const SemigroupElement& s) {
    for (const Point& z : set)
      if (!member(canonicalize(act(s, z)))) {
        invariant = false;
        return false;
      }
    return true;
  });
  return invariant;
}

inline Rational min_dist_to(const Point& x, const std::vector<Point>& set) {
  Rational best = point_dist(x, set.front());
  for (std::size_t i = 1; i < set.size(); ++i) {
    Rational d = point_dist(x, set[i]);
    if (d < best) best = d;
  }
  return best;
}

}  // namespace detail

// Builds the orbit sample Y of x and checks that the orbit of every sample
// point is eps-dense in Y. An exactly invariant finite orbit lying farther
// than eps from x is a NOT-MINIMAL-EXACT witness and takes precedence; a
// density failure without such a witness is honest INCONCLUSIVE.
inline MinimalityVerdict epsilon_minimality(const Point& x, const Truncation& t,
                                            const Rational& eps) {
  if (!(eps > Rational(0)))
    throw std::invalid_argument("epsilon_minimality: eps must be positive");
  MinimalityVerdict v;
  v.eps = eps;
  v.trunc = t;

  if (t.family == Family::Affine) {
    // Translation net shortcut: {j/m : j < m} lies in every truncation with
    // bound >= m, and spacing 1/m <= 2*eps makes the orbit of every point
    // eps-dense in the whole circle, hence in any orbit sample.
    const Rational& e = eps;
    BigInt m_big = ((Rational(1) / (e * Rational(2))).floor());
    if (Rational(m_big) * e * Rational(2) < Rational(1)) ++m_big;  // ceil
    long long m = std::max<long long>(1, static_cast<long long>(m_big));
    if (m <= t.bound) {
      v.status = MinimalityStatus::MinimalAtResolution;
      v.evidence = "translation net {j/" + std::to_string(m) +
                   "} inside the truncation; every orbit is eps-dense in the "
                   "whole circle";
      return v;
    }
  }

  if (truncation_size(t) > 200'000) {
    v.status = MinimalityStatus::Inconclusive;
    v.evidence = "truncation too large for the exhaustive density scan";
    return v;
  }

  OrbitSample sample = orbit_sample(x, t);
  const auto& y_points = sample.points;
  if (y_points.size() > 2000) {
    v.status = MinimalityStatus::Inconclusive;
    v.evidence = "orbit sample too large for the pointwise density scan";
    return v;
  }

  std::vector<std::vector<Point>> orbits;
  orbits.reserve(y_points.size());
  for (const Point& y : y_points) orbits.push_back(detail::orbit_points_of(y, t));

  // exact invariant witnesses first
  for (std::size_t i = 0; i < y_points.size(); ++i) {
    if (orbits[i].size() > 256) continue;
    if (!detail::exactly_invariant(orbits[i], t)) continue;
    Rational d = detail::min_dist_to(canonicalize(x), orbits[i]);
    if (d > eps) {
      v.status = MinimalityStatus::NotMinimalExact;
      v.witness = orbits[i];
      v.evidence = "orbit of " + point_str(y_points[i]) +
                   " is exactly invariant at distance " + d.str() +
                   " from the base point";
      return v;
    }
  }

  for (std::size_t i = 0; i < y_points.size(); ++i) {
    if (!epsilon_dense(orbits[i], y_points, eps)) {
      v.status = MinimalityStatus::Inconclusive;
      v.evidence = "orbit of " + point_str(y_points[i]) +
                   " is not eps-dense in the orbit sample at this truncation";
      return v;
    }
  }

  v.status = MinimalityStatus::MinimalAtResolution;
  bool exact_cycle = y_points.size() <= 256 &&
                     detail::exactly_invariant(y_points, t);
  if (exact_cycle) {
    bool every_full = true;
    for (const auto& o : orbits)
      if (o != y_points) every_full = false;
    if (every_full) {
      v.evidence = "orbit sample is an exact finite invariant set and every "
                   "point's orbit equals it";
      return v;
    }
  }
  v.evidence = "every sampled orbit is eps-dense in the orbit sample";
  return v;
}

// --- proximal / distal pairs -------------------------------------------------

struct ProximalResult {
  bool witness_found = false;
  std::optional<SemigroupElement> witness;   // first element within eps
  Rational witness_distance;
  Rational min_distance;                     // over the scanned prefix
  std::optional<SemigroupElement> argmin;    // first element attaining it
  std::uint64_t scanned = 0;
  bool exhausted = false;                    // full truncation scanned
};

// Scans the truncation in enumeration order for s bringing the pair within
// eps; otherwise reports the exact minimum attained (distality evidence).
inline ProximalResult proximal_pair_check(const Point& x, const Point& y,
                                          const Truncation& t, const Rational& eps,
                                          std::uint64_t budget = 20'000'000) {
  if (!(eps > Rational(0)))
    throw std::invalid_argument("proximal_pair_check: eps must be positive");
  ProximalResult r;
  if (canonicalize(x) == canonicalize(y)) {
    r.witness_found = true;
    r.witness = SemigroupElement::identity(t.family);
    r.witness_distance = Rational(0);
    r.min_distance = Rational(0);
    r.argmin = r.witness;
    r.scanned = 0;
    r.exhausted = true;
    return r;
  }
  bool first = true;
  r.exhausted = for_each_element(t, [&](const SemigroupElement& s) {
    Rational d = point_dist(act(s, x), act(s, y));
    ++r.scanned;
    if (first || d < r.min_distance) {
      r.min_distance = d;
      r.argmin = s;
      first = false;
    }
    if (d < eps) {
      r.witness_found = true;
      r.witness = s;
      r.witness_distance = d;
      return false;
    }
    return r.scanned < budget;
  });
  if (r.witness_found) r.exhausted = false;
  return r;
}

// --- exponent bridge ----------------------------------------------------------

struct BridgeResult {
  bool ok = false;
  std::optional<WindowedSet> set;
  std::string violation;
};

// Converts an exponent-indexed return set into a WindowedSet at the
// truncation horizon, so the window predicates decide both AP conditions.
inline BridgeResult cascade_ap_bridge(const ReturnSet& a) {
  BridgeResult br;
  if (a.family != Family::Twist) {
    br.violation = "return set is not exponent-indexed";
    return br;
  }
  std::vector<long long> exps;
  for (const auto& m : a.members) exps.push_back(m.twist().n);
  if (exps.empty() || exps.front() != 0) {
    br.violation = "0 is not in the return set; the window hypothesis fails";
    return br;
  }
  br.ok = true;
  br.set = WindowedSet(std::move(exps), a.trunc.bound);
  return br;
}

// --- group completion of the twist family --------------------------------------

struct GroupCompletionResult {
  bool almost_periodic = false;
  long long period = 1;
  std::vector<long long> residues;   // A_U modulo the rotation period
  std::vector<long long> window_k;   // {0..g-1} witness when syndetic
  bool verified = false;
};

// Over the completed group (all integer exponents), the return set of a
// rational-radius point is a union of residue classes modulo the radius
// denominator; gaps are bounded exactly when some residue occurs.
inline GroupCompletionResult group_completion_ap(const DiskPoint& x,
                                                 const Neighborhood& u) {
  GroupCompletionResult res;
  BigInt den = x.radius.den();
  if (den > 1'000'000)
    throw std::invalid_argument("group_completion_ap: radius denominator too large");
  long long period = static_cast<long long>(den);
  res.period = period;
  for (long long rho = 0; rho < period; ++rho) {
    DiskPoint img = apply(TwistGroupElement{rho}, x);
    if (neighborhood_contains(u, Point(img))) res.residues.push_back(rho);
  }
  if (res.residues.empty()) return res;

  long long max_gap = 0;
  for (std::size_t i = 0; i < res.residues.size(); ++i) {
    long long next = i + 1 < res.residues.size()
                         ? res.residues[i + 1]
                         : res.residues.front() + period;
    max_gap = std::max(max_gap, next - res.residues[i]);
  }
  res.almost_periodic = true;
  for (long long k = 0; k < max_gap; ++k) res.window_k.push_back(k);

  // re-verify Z = K + A_U over two periods on both sides
  res.verified = true;
  auto in_a = [&](long long n) {
    long long rho = ((n % period) + period) % period;
    return std::binary_search(res.residues.begin(), res.residues.end(), rho);
  };
  for (long long m = -2 * period; m <= 2 * period && res.verified; ++m) {
    bool hit = false;
    for (long long k : res.window_k)
      if (in_a(m - k)) {
        hit = true;
        break;
      }
    if (!hit) res.verified = false;
  }
  return res;
}

}  // namespace semiflow
