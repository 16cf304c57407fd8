#include <catch2/catch.hpp>

#include "semiflow/finite_actions.hpp"

using namespace semiflow;

namespace {

FiniteMapTable tbl(std::vector<std::uint8_t> img) { return FiniteMapTable(std::move(img)); }

// generalized modified-AP over an arbitrary neighborhood set U (discrete)
bool modified_ap_over(const ActionSystem& sys, int x, const std::vector<int>& u) {
  auto in_u = [&](int p) { return std::find(u.begin(), u.end(), p) != u.end(); };
  for (const auto& s : sys.monoid) {
    int sx = s(x);
    bool hit = false;
    for (const auto& k : sys.monoid)
      if (in_u(k(sx))) {
        hit = true;
        break;
      }
    if (!hit) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("monoid closure: the stated monoids") {
  auto cyc = monoid_closure({tbl({1, 2, 0})}, 3);
  CHECK(cyc.monoid.size() == 3);

  auto constant = monoid_closure({tbl({0, 0})}, 2);
  CHECK(constant.monoid.size() == 2);  // id and the constant

  auto fold = monoid_closure({tbl({1, 1, 1})}, 3);
  CHECK(fold.monoid.size() == 2);  // f o f = f

  for (const auto& sys : {cyc, constant, fold}) {
    CHECK(std::is_sorted(sys.monoid.begin(), sys.monoid.end()));
    CHECK(std::binary_search(sys.monoid.begin(), sys.monoid.end(),
                             FiniteMapTable::identity(sys.n)));
    for (const auto& g : sys.generators)
      CHECK(std::binary_search(sys.monoid.begin(), sys.monoid.end(), g));
    // composition-closed
    for (const auto& a : sys.monoid)
      for (const auto& b : sys.monoid)
        CHECK(std::binary_search(sys.monoid.begin(), sys.monoid.end(), compose(a, b)));
  }

  CHECK_THROWS_AS(monoid_closure({tbl({0})}, 0), std::invalid_argument);
  CHECK_THROWS_AS(monoid_closure({}, 2), std::invalid_argument);
  CHECK_THROWS_AS(monoid_closure({tbl({0})}, 2), std::invalid_argument);
  CHECK_THROWS_AS(FiniteMapTable({2, 0}), std::invalid_argument);
}

TEST_CASE("orbits") {
  auto cyc = monoid_closure({tbl({1, 2, 0})}, 3);
  CHECK(orbit_of(cyc, 0).points == std::vector<int>{0, 1, 2});

  auto fold = monoid_closure({tbl({1, 1, 1})}, 3);
  CHECK(orbit_of(fold, 0).points == std::vector<int>{0, 1});
  CHECK(orbit_of(fold, 1).points == std::vector<int>{1});

  auto ident = monoid_closure({FiniteMapTable::identity(4)}, 4);
  for (int x = 0; x < 4; ++x) CHECK(orbit_of(ident, x).points == std::vector<int>{x});

  CHECK_THROWS_AS(orbit_of(cyc, 3), std::invalid_argument);
}

TEST_CASE("minimal subsets") {
  auto cyc = monoid_closure({tbl({1, 2, 0})}, 3);
  CHECK(minimal_subsets(cyc) == std::vector<std::vector<int>>{{0, 1, 2}});

  auto fold = monoid_closure({tbl({1, 1, 1})}, 3);
  CHECK(minimal_subsets(fold) == std::vector<std::vector<int>>{{1}});

  auto two_fixed = monoid_closure({tbl({0, 1, 0})}, 3);  // 2 -> 0, 0 and 1 fixed
  CHECK(minimal_subsets(two_fixed) == std::vector<std::vector<int>>{{0}, {1}});

  CHECK(is_minimal_orbit_closure(cyc, 0));
  CHECK_FALSE(is_minimal_orbit_closure(fold, 0));
  CHECK(is_minimal_orbit_closure(fold, 1));
}

TEST_CASE("minimal subsets are disjoint, invariant and nonempty across a sweep") {
  for (std::uint64_t id = 0; id < table_count(4); ++id) {
    auto sys = monoid_closure({table_from_index(id, 4)}, 4);
    auto mins = minimal_subsets(sys);
    REQUIRE(!mins.empty());
    for (std::size_t i = 0; i < mins.size(); ++i) {
      for (const auto& s : sys.monoid)
        for (int p : mins[i])
          REQUIRE(std::binary_search(mins[i].begin(), mins[i].end(), s(p)));
      for (std::size_t j = i + 1; j < mins.size(); ++j)
        for (int p : mins[i])
          REQUIRE(!std::binary_search(mins[j].begin(), mins[j].end(), p));
      // every point inside a minimal set is modified almost periodic
      for (int p : mins[i]) REQUIRE(is_ap_modified(sys, p));
    }
  }
}

TEST_CASE("modified almost periodicity at U = {x}") {
  auto cyc = monoid_closure({tbl({1, 2, 0})}, 3);
  for (int x = 0; x < 3; ++x) CHECK(is_ap_modified(cyc, x));

  auto fold = monoid_closure({tbl({1, 1, 1})}, 3);
  CHECK_FALSE(is_ap_modified(fold, 0));
  CHECK(is_ap_modified(fold, 1));
}

TEST_CASE("syndetic predicate at U = {x}: the identity always decomposes") {
  // The return set always contains the identity, so K = monoid decomposes
  // every element; this is exactly where the two readings part ways.
  auto fold = monoid_closure({tbl({1, 1, 1})}, 3);
  CHECK(is_ap_syndetic(fold, 0));  // differs from is_ap_modified(fold, 0)
  CHECK(is_ap_syndetic(fold, 1));
  CHECK_FALSE(is_ap_modified(fold, 0));

  auto cyc = monoid_closure({tbl({1, 2, 0})}, 3);
  for (int x = 0; x < 3; ++x) CHECK(is_ap_syndetic(cyc, x));

  auto ident = monoid_closure({FiniteMapTable::identity(2)}, 2);
  CHECK(is_ap_syndetic(ident, 0));
}

TEST_CASE("AP is monotone in the neighborhood on sampled supersets") {
  for (std::uint64_t id = 0; id < table_count(3); ++id) {
    auto sys = monoid_closure({table_from_index(id, 3)}, 3);
    for (int x = 0; x < 3; ++x) {
      if (!is_ap_modified(sys, x)) continue;
      for (int extra = 0; extra < 3; ++extra)
        REQUIRE(modified_ap_over(sys, x, {x, extra}));
    }
  }
}

TEST_CASE("theorem verification on the stated systems") {
  CHECK(verify_theorem(monoid_closure({tbl({1, 2, 0})}, 3)).pass);
  CHECK(verify_theorem(monoid_closure({tbl({1, 1, 1})}, 3)).pass);
  CHECK(verify_theorem(monoid_closure({tbl({0, 0, 2, 2})}, 4)).pass);
}

TEST_CASE("flow equivalence needs bijective generators") {
  CHECK_THROWS_AS(verify_flow_equivalence(monoid_closure({tbl({1, 1, 1})}, 3)),
                  std::invalid_argument);
  CHECK(verify_flow_equivalence(monoid_closure({FiniteMapTable::identity(3)}, 3)).pass);
  for (const auto& p : all_permutations(4))
    CHECK(verify_flow_equivalence(monoid_closure({p}, 4)).pass);
}

TEST_CASE("cascade return structure and the exponent AP readings") {
  FiniteMapTable fold = tbl({1, 1});
  auto st0 = cascade_return_structure(fold, 0);
  CHECK_FALSE(st0.periodic);
  auto st1 = cascade_return_structure(fold, 1);
  CHECK(st1.periodic);
  CHECK(st1.cycle == 1);

  CHECK_FALSE(semicascade_ap_syndetic(fold, 0));
  CHECK_FALSE(semicascade_ap_modified(fold, 0));
  CHECK(semicascade_ap_syndetic(fold, 1));
  CHECK(semicascade_ap_modified(fold, 1));

  FiniteMapTable cyc = tbl({1, 2, 0});
  for (int x = 0; x < 3; ++x) {
    auto st = cascade_return_structure(cyc, x);
    CHECK(st.periodic);
    CHECK(st.cycle == 3);
    CHECK(semicascade_ap_syndetic(cyc, x));
  }

  WindowedSet a = cascade_return_set(cyc, 0, 12);
  CHECK(a.elements() == std::vector<long long>{0, 3, 6, 9, 12});
}

TEST_CASE("semicascade coincidence: exhaustive over small point counts") {
  for (int n = 1; n <= 4; ++n) {
    for (std::uint64_t id = 0; id < table_count(n); ++id) {
      auto sys = monoid_closure({table_from_index(id, n)}, n);
      auto rep = verify_semicascade_coincidence(sys);
      CAPTURE(n, id);
      REQUIRE(rep.pass);
    }
  }
  CHECK_THROWS_AS(
      verify_semicascade_coincidence(monoid_closure(
          {tbl({1, 0}), tbl({0, 0})}, 2)),
      std::invalid_argument);
}

TEST_CASE("every small system admits a modified-AP point") {
  auto rep = verify_ap_existence(monoid_closure({tbl({0, 0, 0})}, 3));
  CHECK(rep.pass);
  CHECK(rep.witness == 0);  // the fixed point of the constant map

  auto cyc_rep = verify_ap_existence(monoid_closure({tbl({1, 2, 0})}, 3));
  CHECK(cyc_rep.pass);
  CHECK(cyc_rep.witness_k_size >= 1);
}

TEST_CASE("sweeps: stated counts and zero failures") {
  SweepOptions opt;
  opt.points = 3;
  opt.generators = 1;
  auto r = run_sweep(SweepCheck::Theorem, opt);
  CHECK(r.systems == 27);
  CHECK(r.failures == 0);

  opt.generators = 2;
  auto r2 = run_sweep(SweepCheck::Theorem, opt);
  CHECK(r2.systems == 729);
  CHECK(r2.failures == 0);

  SweepOptions perm;
  perm.points = 3;
  perm.generators = 2;
  auto rp = run_sweep(SweepCheck::FlowEquivalence, perm);
  CHECK(rp.systems == 36);
  CHECK(rp.failures == 0);

  SweepOptions sampled;
  sampled.points = 5;
  sampled.generators = 2;
  sampled.exhaustive = false;
  sampled.samples = 150;
  sampled.seed = 7;
  auto rs = run_sweep(SweepCheck::Theorem, sampled);
  CHECK(rs.systems == 150);
  CHECK(rs.failures == 0);

  CHECK_THROWS_AS(run_sweep(SweepCheck::Cascade, sampled), std::invalid_argument);
}

TEST_CASE("system serialization round-trips") {
  auto sys = monoid_closure({tbl({1, 2, 0}), tbl({0, 0, 0})}, 3);
  std::string text = system_str(sys);
  CHECK(text == "3\n1 2 0\n0 0 0\n");
  auto parsed = parse_action_system(text);
  CHECK(parsed.n == 3);
  CHECK(parsed.generators == sys.generators);
  CHECK(parsed.monoid == sys.monoid);
  CHECK_THROWS_AS(parse_action_system("0\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_action_system("2\n0 3\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_action_system("3\n0 1\n"), std::invalid_argument);
}
