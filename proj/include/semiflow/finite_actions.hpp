#pragma once

// Finite transformation monoids acting on finite point sets: the exact,
// exhaustive oracle for the minimality/almost-periodicity equivalence, the
// flow (group) case, the semicascade coincidence and the existence corollary.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "semiflow/windowed_set.hpp"

namespace semiflow {

struct FiniteMapTable {
  std::vector<std::uint8_t> image;  // i -> image[i]

  FiniteMapTable() = default;
  explicit FiniteMapTable(std::vector<std::uint8_t> img) : image(std::move(img)) {
    for (std::uint8_t v : image)
      if (v >= image.size())
        throw std::invalid_argument("FiniteMapTable: entry out of range");
  }

  static FiniteMapTable identity(int n) {
    std::vector<std::uint8_t> img(static_cast<std::size_t>(n));
    std::iota(img.begin(), img.end(), std::uint8_t{0});
    return FiniteMapTable(std::move(img));
  }

  int size() const { return static_cast<int>(image.size()); }
  int operator()(int x) const { return image[static_cast<std::size_t>(x)]; }

  bool is_permutation() const {
    std::vector<char> seen(image.size(), 0);
    for (std::uint8_t v : image) {
      if (seen[v]) return false;
      seen[v] = 1;
    }
    return true;
  }

  bool operator==(const FiniteMapTable& o) const { return image == o.image; }
  bool operator<(const FiniteMapTable& o) const { return image < o.image; }

  std::string str() const {
    std::string s;
    for (std::size_t i = 0; i < image.size(); ++i) {
      if (i) s += ' ';
      s += std::to_string(image[i]);
    }
    return s;
  }
};

// (a o b)(x) = a(b(x)); b acts first.
inline FiniteMapTable compose(const FiniteMapTable& a, const FiniteMapTable& b) {
  std::vector<std::uint8_t> img(b.image.size());
  for (std::size_t i = 0; i < img.size(); ++i) img[i] = a.image[b.image[i]];
  return FiniteMapTable(std::move(img));
}

struct ActionSystem {
  int n = 0;
  std::vector<FiniteMapTable> generators;
  std::vector<FiniteMapTable> monoid;  // composition-closed, contains identity,
                                       // sorted lexicographically by image
};

// Breadth-first closure of the generators under composition, identity added.
inline ActionSystem monoid_closure(std::vector<FiniteMapTable> generators, int n) {
  if (n <= 0) throw std::invalid_argument("monoid_closure: n must be positive");
  if (generators.empty())
    throw std::invalid_argument("monoid_closure: need at least one generator");
  for (const auto& g : generators)
    if (g.size() != n)
      throw std::invalid_argument("monoid_closure: generator size mismatch");

  std::map<FiniteMapTable, bool> seen;
  std::vector<FiniteMapTable> frontier;
  auto push = [&](const FiniteMapTable& t) {
    if (seen.emplace(t, true).second) frontier.push_back(t);
  };
  push(FiniteMapTable::identity(n));
  for (const auto& g : generators) push(g);
  for (std::size_t i = 0; i < frontier.size(); ++i) {
    FiniteMapTable w = frontier[i];
    for (const auto& g : generators) push(compose(w, g));
  }

  ActionSystem sys;
  sys.n = n;
  sys.generators = std::move(generators);
  sys.monoid.reserve(seen.size());
  for (auto& [t, _] : seen) sys.monoid.push_back(t);
  return sys;  // std::map iteration is already lexicographic
}

struct FiniteOrbit {
  int base = 0;
  std::vector<int> points;  // sorted; exactly {s(base) : s in monoid}
};

inline FiniteOrbit orbit_of(const ActionSystem& sys, int x) {
  if (x < 0 || x >= sys.n) throw std::invalid_argument("orbit_of: point out of range");
  std::vector<char> in(static_cast<std::size_t>(sys.n), 0);
  for (const auto& s : sys.monoid) in[static_cast<std::size_t>(s(x))] = 1;
  FiniteOrbit o;
  o.base = x;
  for (int p = 0; p < sys.n; ++p)
    if (in[static_cast<std::size_t>(p)]) o.points.push_back(p);
  return o;
}

// All minimal nonempty invariant subsets; each equals the orbit of every one
// of its points. Sorted lexicographically, pairwise disjoint.
inline std::vector<std::vector<int>> minimal_subsets(const ActionSystem& sys) {
  std::vector<std::vector<int>> out;
  for (int x = 0; x < sys.n; ++x) {
    std::vector<int> ox = orbit_of(sys, x).points;
    bool minimal = true;
    for (int y : ox) {
      if (orbit_of(sys, y).points != ox) {
        minimal = false;
        break;
      }
    }
    if (minimal && std::find(out.begin(), out.end(), ox) == out.end())
      out.push_back(ox);
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline bool is_minimal_orbit_closure(const ActionSystem& sys, int x) {
  std::vector<int> ox = orbit_of(sys, x).points;
  for (int y : ox)
    if (orbit_of(sys, y).points != ox) return false;
  return true;
}

// Modified almost periodicity at U = {x}: for every s some k in the monoid
// pulls s(x) back to x. (K = the whole finite monoid decides the search.)
inline bool is_ap_modified(const ActionSystem& sys, int x) {
  if (x < 0 || x >= sys.n) throw std::invalid_argument("is_ap_modified: point out of range");
  for (const auto& s : sys.monoid) {
    int sx = s(x);
    bool pulled_back = false;
    for (const auto& k : sys.monoid) {
      if (k(sx) == x) {
        pulled_back = true;
        break;
      }
    }
    if (!pulled_back) return false;
  }
  return true;
}

// Syndetic almost periodicity at U = {x}: the monoid decomposes as K o A with
// A = {a : a(x) = x}. Since the identity always lies in A, K = monoid always
// decomposes; the predicate is computed literally all the same.
inline bool is_ap_syndetic(const ActionSystem& sys, int x) {
  if (x < 0 || x >= sys.n) throw std::invalid_argument("is_ap_syndetic: point out of range");
  std::vector<FiniteMapTable> a_set;
  for (const auto& a : sys.monoid)
    if (a(x) == x) a_set.push_back(a);
  std::map<FiniteMapTable, bool> products;
  for (const auto& k : sys.monoid)
    for (const auto& a : a_set) products.emplace(compose(k, a), true);
  for (const auto& s : sys.monoid)
    if (!products.count(s)) return false;
  return true;
}

// Greedy-shrunk witness K for the modified condition (reporting aid).
inline std::vector<FiniteMapTable> shrink_modified_witness(const ActionSystem& sys,
                                                           int x) {
  if (!is_ap_modified(sys, x)) return {};
  std::vector<FiniteMapTable> k_set = sys.monoid;
  auto works = [&](const std::vector<FiniteMapTable>& ks) {
    for (const auto& s : sys.monoid) {
      int sx = s(x);
      bool hit = false;
      for (const auto& k : ks)
        if (k(sx) == x) {
          hit = true;
          break;
        }
      if (!hit) return false;
    }
    return true;
  };
  for (std::size_t i = k_set.size(); i-- > 0;) {
    std::vector<FiniteMapTable> trial = k_set;
    trial.erase(trial.begin() + static_cast<std::ptrdiff_t>(i));
    if (!trial.empty() && works(trial)) k_set = std::move(trial);
  }
  return k_set;
}

// --- semicascade (single map, exponent semantics) --------------------------

// Return-time structure of x under iteration of f: the set {n : f^n(x) = x}
// is {0} when x never returns, and {0, c, 2c, ...} when x sits on a c-cycle.
struct CascadeReturn {
  bool periodic = false;
  long long cycle = 0;  // first return exponent when periodic
};

inline CascadeReturn cascade_return_structure(const FiniteMapTable& f, int x) {
  int y = x;
  for (long long n = 1; n <= f.size(); ++n) {
    y = f(y);
    if (y == x) return {true, n};
  }
  return {false, 0};
}

// Truncated exponent return set {n <= horizon : f^n(x) = x} as a WindowedSet.
inline WindowedSet cascade_return_set(const FiniteMapTable& f, int x,
                                      long long horizon) {
  std::vector<long long> hits;
  int y = x;
  hits.push_back(0);
  for (long long n = 1; n <= horizon; ++n) {
    y = f(y);
    if (y == x) hits.push_back(n);
  }
  return WindowedSet(std::move(hits), horizon);
}

// The two almost-periodicity conditions for the cascade generated by f,
// quantified over the exponent monoid Z+. Each is decided by the exact
// periodic structure and re-verified through the matching window predicate
// at a horizon past the tail and one full period.
inline bool semicascade_ap_syndetic(const FiniteMapTable& f, int x) {
  CascadeReturn st = cascade_return_structure(f, x);
  long long horizon = 3LL * f.size() + 3;
  WindowedSet a = cascade_return_set(f, x, horizon);
  if (!st.periodic) {
    // A = {0}: every radius short of the horizon leaves m = R+1 uncovered.
    if (min_window(a).value != horizon)
      throw std::logic_error("cascade return set: non-periodic point returned");
    return false;
  }
  // A = {0, c, 2c, ...}: radius c-1 covers, at this and every larger horizon.
  if (!covers_by_window(a, WindowRadius{st.cycle - 1}))
    throw std::logic_error("cascade cover: periodic point failed the window check");
  return true;
}

inline bool semicascade_ap_modified(const FiniteMapTable& f, int x) {
  CascadeReturn st = cascade_return_structure(f, x);
  long long horizon = 3LL * f.size() + 3;
  WindowedSet a = cascade_return_set(f, x, horizon);
  if (!st.periodic) {
    // A = {0}: any window starting past 0 misses A.
    if (min_window(a).value != horizon)
      throw std::logic_error("cascade return set: non-periodic point returned");
    return false;
  }
  if (!window_hits(a, WindowRadius{st.cycle - 1}))
    throw std::logic_error("cascade hits: periodic point failed the window check");
  return true;
}

// --- pointwise verification reports ----------------------------------------

struct PointMismatch {
  int point = 0;
  bool lhs = false;
  bool rhs = false;
};

struct SystemReport {
  bool pass = true;
  std::vector<PointMismatch> mismatches;
};

// minimal orbit closure == modified almost periodicity, for every point.
inline SystemReport verify_theorem(const ActionSystem& sys) {
  SystemReport rep;
  for (int x = 0; x < sys.n; ++x) {
    bool m = is_minimal_orbit_closure(sys, x);
    bool a = is_ap_modified(sys, x);
    if (m != a) {
      rep.pass = false;
      rep.mismatches.push_back({x, m, a});
    }
  }
  return rep;
}

// Group case: minimal orbit closure == syndetic almost periodicity.
inline SystemReport verify_flow_equivalence(const ActionSystem& sys) {
  for (const auto& g : sys.generators)
    if (!g.is_permutation())
      throw std::invalid_argument("verify_flow_equivalence: non-bijective generator");
  SystemReport rep;
  for (int x = 0; x < sys.n; ++x) {
    bool m = is_minimal_orbit_closure(sys, x);
    bool a = is_ap_syndetic(sys, x);
    if (m != a) {
      rep.pass = false;
      rep.mismatches.push_back({x, m, a});
    }
  }
  return rep;
}

// Semicascade coincidence: the syndetic and modified conditions, both read in
// the exponent monoid, agree at every point; the map-monoid modified
// predicate is cross-checked against them as well.
inline SystemReport verify_semicascade_coincidence(const ActionSystem& sys) {
  if (sys.generators.size() != 1)
    throw std::invalid_argument(
        "verify_semicascade_coincidence: exactly one generator required");
  const FiniteMapTable& f = sys.generators.front();
  SystemReport rep;
  for (int x = 0; x < sys.n; ++x) {
    bool synd = semicascade_ap_syndetic(f, x);
    bool mod = semicascade_ap_modified(f, x);
    bool map_mod = is_ap_modified(sys, x);
    if (synd != mod || mod != map_mod) {
      rep.pass = false;
      rep.mismatches.push_back({x, synd, mod});
    }
  }
  return rep;
}

struct ExistenceReport {
  bool pass = false;
  int witness = -1;
  int witness_k_size = 0;
};

inline ExistenceReport verify_ap_existence(const ActionSystem& sys) {
  for (int x = 0; x < sys.n; ++x) {
    if (is_ap_modified(sys, x)) {
      ExistenceReport rep;
      rep.pass = true;
      rep.witness = x;
      rep.witness_k_size = static_cast<int>(shrink_modified_witness(sys, x).size());
      return rep;
    }
  }
  return {};
}

// --- serialization ----------------------------------------------------------

// "n" on the first line, then one space-separated image list per generator.
inline std::string system_str(const ActionSystem& sys) {
  std::string s = std::to_string(sys.n) + "\n";
  for (const auto& g : sys.generators) s += g.str() + "\n";
  return s;
}

inline ActionSystem parse_action_system(const std::string& text) {
  std::istringstream in(text);
  int n = 0;
  if (!(in >> n) || n <= 0)
    throw std::invalid_argument("action system: bad point count");
  std::vector<FiniteMapTable> gens;
  std::string line;
  std::getline(in, line);
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::vector<std::uint8_t> img;
    long long v;
    while (ls >> v) {
      if (v < 0 || v >= n)
        throw std::invalid_argument("action system: image entry out of range");
      img.push_back(static_cast<std::uint8_t>(v));
    }
    if (img.empty()) continue;
    if (static_cast<int>(img.size()) != n)
      throw std::invalid_argument("action system: generator length mismatch");
    gens.push_back(FiniteMapTable(std::move(img)));
  }
  return monoid_closure(std::move(gens), n);
}

// --- enumeration sweeps -----------------------------------------------------

// Table with lexicographic index id in [0, n^n): most significant digit first.
inline FiniteMapTable table_from_index(std::uint64_t id, int n) {
  std::vector<std::uint8_t> img(static_cast<std::size_t>(n));
  for (int i = n - 1; i >= 0; --i) {
    img[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(id % n);
    id /= static_cast<std::uint64_t>(n);
  }
  return FiniteMapTable(std::move(img));
}

inline std::uint64_t table_count(int n) {
  std::uint64_t c = 1;
  for (int i = 0; i < n; ++i) c *= static_cast<std::uint64_t>(n);
  return c;
}

inline std::vector<FiniteMapTable> all_permutations(int n) {
  std::vector<std::uint8_t> img(static_cast<std::size_t>(n));
  std::iota(img.begin(), img.end(), std::uint8_t{0});
  std::vector<FiniteMapTable> out;
  do {
    out.push_back(FiniteMapTable(img));
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

enum class SweepCheck { Theorem, FlowEquivalence, Cascade, ApExistence };

inline std::string sweep_check_name(SweepCheck c) {
  switch (c) {
    case SweepCheck::Theorem: return "theorem";
    case SweepCheck::FlowEquivalence: return "flow-equivalence";
    case SweepCheck::Cascade: return "cascade-coincidence";
    case SweepCheck::ApExistence: return "ap-existence";
  }
  return "?";
}

struct SweepRow {
  std::uint64_t id = 0;
  int n = 0;
  int generators = 0;
  bool pass = false;
  int counterexample = -1;  // -1 when none
};

struct SweepResult {
  SweepCheck check = SweepCheck::Theorem;
  std::uint64_t systems = 0;
  std::uint64_t failures = 0;
  std::vector<SweepRow> rows;  // failures only, unless keep_all
};

namespace detail {

inline SweepRow run_check(SweepCheck check, const ActionSystem& sys,
                          std::uint64_t id) {
  SweepRow row;
  row.id = id;
  row.n = sys.n;
  row.generators = static_cast<int>(sys.generators.size());
  switch (check) {
    case SweepCheck::Theorem: {
      auto rep = verify_theorem(sys);
      row.pass = rep.pass;
      if (!rep.pass) row.counterexample = rep.mismatches.front().point;
      break;
    }
    case SweepCheck::FlowEquivalence: {
      auto rep = verify_flow_equivalence(sys);
      row.pass = rep.pass;
      if (!rep.pass) row.counterexample = rep.mismatches.front().point;
      break;
    }
    case SweepCheck::Cascade: {
      auto rep = verify_semicascade_coincidence(sys);
      row.pass = rep.pass;
      if (!rep.pass) row.counterexample = rep.mismatches.front().point;
      break;
    }
    case SweepCheck::ApExistence: {
      auto rep = verify_ap_existence(sys);
      row.pass = rep.pass;
      if (!rep.pass) row.counterexample = -1;
      break;
    }
  }
  return row;
}

}  // namespace detail

// Deterministic pseudo-random stream for sampled sweeps (splitmix64).
class DetRng {
 public:
  explicit DetRng(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  std::uint64_t below(std::uint64_t n) { return n ? next() % n : 0; }

 private:
  std::uint64_t state_;
};

struct SweepOptions {
  int points = 3;
  int generators = 1;
  bool exhaustive = true;
  std::uint64_t samples = 0;   // used when !exhaustive
  std::uint64_t seed = 12345;
  bool keep_all_rows = false;  // keep passing rows too (CSV dumps)
};

// Sweeps systems with `generators` generator tables over `points` points.
// Exhaustive mode enumerates generator tuples lexicographically (system id =
// combined radix index); permutation checks draw from the permutation list.
inline SweepResult run_sweep(SweepCheck check, const SweepOptions& opt) {
  if (opt.points <= 0 || opt.points > 8)
    throw std::invalid_argument("run_sweep: points must be in [1, 8]");
  if (opt.generators < 1 || opt.generators > 2)
    throw std::invalid_argument("run_sweep: generators must be 1 or 2");
  if (check == SweepCheck::Cascade && opt.generators != 1)
    throw std::invalid_argument("run_sweep: cascade checks need one generator");

  const bool perms_only = check == SweepCheck::FlowEquivalence;
  std::vector<FiniteMapTable> perm_pool;
  std::uint64_t base = 0;
  if (perms_only) {
    perm_pool = all_permutations(opt.points);
    base = perm_pool.size();
  } else {
    base = table_count(opt.points);
  }
  std::uint64_t total = opt.generators == 1 ? base : base * base;

  auto system_at = [&](std::uint64_t id) {
    std::vector<FiniteMapTable> gens;
    if (opt.generators == 1) {
      gens.push_back(perms_only ? perm_pool[id] : table_from_index(id, opt.points));
    } else {
      std::uint64_t hi = id / base, lo = id % base;
      gens.push_back(perms_only ? perm_pool[hi] : table_from_index(hi, opt.points));
      gens.push_back(perms_only ? perm_pool[lo] : table_from_index(lo, opt.points));
    }
    return monoid_closure(std::move(gens), opt.points);
  };

  SweepResult result;
  result.check = check;
  auto consume = [&](std::uint64_t id) {
    SweepRow row = detail::run_check(check, system_at(id), id);
    ++result.systems;
    if (!row.pass) ++result.failures;
    if (!row.pass || opt.keep_all_rows) result.rows.push_back(row);
  };

  if (opt.exhaustive) {
    for (std::uint64_t id = 0; id < total; ++id) consume(id);
  } else {
    DetRng rng(opt.seed);
    for (std::uint64_t i = 0; i < opt.samples; ++i) consume(rng.below(total));
  }
  return result;
}

}  // namespace semiflow
