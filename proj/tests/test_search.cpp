#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "bigraph/bounds.hpp"
#include "bigraph/constructions.hpp"
#include "bigraph/counting.hpp"
#include "bigraph/graph.hpp"
#include "bigraph/search.hpp"
#include "bigraph/structure.hpp"

using namespace bg;

namespace {

Bigraph mk(const std::vector<std::vector<long long>>& m) {
  return make_bigraph(static_cast<int>(m.size()),
                      m.empty() ? 0 : static_cast<int>(m[0].size()), m);
}

std::vector<long long> flat(const Bigraph& g) {
  std::vector<long long> out{g.nx, g.ny};
  for (int i = 0; i < g.nx; ++i)
    for (int j = 0; j < g.ny; ++j) out.push_back(g.mult[i][j]);
  return out;
}

bool same_graph_set(std::vector<Bigraph> a, std::vector<Bigraph> b) {
  auto lt = [](const Bigraph& x, const Bigraph& y) { return flat(x) < flat(y); };
  std::sort(a.begin(), a.end(), lt);
  std::sort(b.begin(), b.end(), lt);
  return a == b;
}

bool reports_equal_ignoring_time(const VerifyReport& a, const VerifyReport& b) {
  if (a.theorem_id != b.theorem_id) return false;
  if (a.instances_checked != b.instances_checked) return false;
  if (a.hypothesis_matched != b.hypothesis_matched) return false;
  if (a.violations_total != b.violations_total) return false;
  if (a.violations.size() != b.violations.size()) return false;
  for (size_t i = 0; i < a.violations.size(); ++i) {
    if (!(a.violations[i].g == b.violations[i].g)) return false;
    if (a.violations[i].phi != b.violations[i].phi) return false;
    if (a.violations[i].bound != b.violations[i].bound) return false;
  }
  if (a.extremal != b.extremal) return false;
  if (a.min_phi_valid != b.min_phi_valid) return false;
  if (a.min_phi_valid && a.min_phi != b.min_phi) return false;
  return true;
}

}  // namespace

TEST_CASE("constraint validation rejects malformed and unattainable classes") {
  ClassConstraint c;
  c.nx_min = 2;
  c.nx_max = 1;
  CHECK_THROWS_AS(enumerate_class(c), std::invalid_argument);

  c = ClassConstraint{};
  c.max_mult = 0;
  CHECK_THROWS_AS(enumerate_class(c), std::invalid_argument);

  c = ClassConstraint{};
  c.jobs = 0;
  CHECK_THROWS_AS(enumerate_class(c), std::invalid_argument);

  c = ClassConstraint{};
  c.budget = 0.0;
  CHECK_THROWS_AS(enumerate_class(c), std::invalid_argument);

  // X-degree floor above what the widest row can carry: rejected up front.
  c = ClassConstraint{};
  c.nx_max = 2;
  c.ny_max = 2;
  c.max_mult = 2;
  c.min_deg_x = 5;
  CHECK_THROWS_AS(enumerate_class(c), std::invalid_argument);

  // Raw space far beyond the budget.
  c = ClassConstraint{};
  c.nx_min = c.nx_max = 6;
  c.ny_min = c.ny_max = 6;
  c.max_mult = 3;
  CHECK_THROWS_AS(scan_class(c, [](int, const Bigraph&) {}),
                  std::invalid_argument);
}

TEST_CASE("two-by-two simple graphs with a perfect matching, up to iso") {
  ClassConstraint c;
  c.nx_min = c.nx_max = 2;
  c.ny_min = c.ny_max = 2;
  c.max_mult = 1;
  c.need_hall = true;

  std::vector<Bigraph> raw = enumerate_class(c);
  CHECK(raw.size() == 7);

  c.dedup = true;
  std::vector<Bigraph> classes = enumerate_class(c);
  REQUIRE(classes.size() == 3);
  // Lexicographic order of canonical forms: two disjoint edges, the
  // three-edge path, the complete graph.
  CHECK(classes[0] == mk({{0, 1}, {1, 0}}));
  CHECK(classes[1] == mk({{0, 1}, {1, 1}}));
  CHECK(classes[2] == mk({{1, 1}, {1, 1}}));
  for (const Bigraph& g : classes) {
    CHECK(is_canonical_form(g));
    CHECK(constraint_matches(c, g));
  }

  // Dedup yields exactly one representative per canonical key of the raw run.
  std::set<std::vector<long long>> keys;
  for (const Bigraph& g : raw) keys.insert(canonical_key(g));
  CHECK(keys.size() == classes.size());
}

TEST_CASE("a class no size in range can host is empty, not an error") {
  ClassConstraint c;
  c.nx_min = c.nx_max = 2;
  c.ny_min = c.ny_max = 1;
  c.need_hall = true;
  c.max_mult = 3;
  CHECK(enumerate_class(c).empty());
}

TEST_CASE("degree floors prune without losing members") {
  // Reference: enumerate the whole cube, filter by the predicate afterwards.
  ClassConstraint base;
  base.nx_min = 1;
  base.nx_max = 3;
  base.ny_min = 1;
  base.ny_max = 3;
  base.max_mult = 2;

  ClassConstraint strict = base;
  strict.min_deg_x = 2;
  strict.min_deg_y = 1;
  strict.min_distinct_x = 2;
  strict.min_distinct_y = 1;
  strict.max_deg_y = 3;
  strict.need_hall = true;
  strict.need_leafless = true;

  std::vector<Bigraph> expected;
  for (const Bigraph& g : enumerate_class(base))
    if (constraint_matches(strict, g)) expected.push_back(g);
  std::vector<Bigraph> got = enumerate_class(strict);
  REQUIRE(got.size() == expected.size());
  for (size_t i = 0; i < got.size(); ++i) CHECK(got[i] == expected[i]);
  CHECK(!got.empty());
}

TEST_CASE("only the last row index in range can satisfy a steep degree floor") {
  ClassConstraint c;
  c.nx_min = c.nx_max = 1;
  c.ny_min = 1;
  c.ny_max = 3;
  c.max_mult = 2;
  c.min_deg_x = 5;
  std::vector<Bigraph> got = enumerate_class(c);
  CHECK(got.size() == 4);  // row sums 5 and 6 over three entries capped at 2
  for (const Bigraph& g : got) {
    CHECK(g.ny == 3);
    CHECK(degree_x(g, 0) >= 5);
  }
}

TEST_CASE("the doubled six-cycle shows up in its hypothesis class") {
  ClassConstraint c;
  c.nx_min = c.nx_max = 3;
  c.ny_min = c.ny_max = 3;
  c.max_mult = 3;
  c.min_deg_x = 3;
  c.min_deg_y = 2;
  c.need_hall = true;
  c.dedup = true;
  std::vector<Bigraph> classes = enumerate_class(c);
  const std::vector<long long> g6 = canonical_key(gen_G6().g);
  bool found = false;
  for (const Bigraph& g : classes) {
    CHECK(is_canonical_form(g));
    if (canonical_key(g) == g6) found = true;
  }
  CHECK(found);
  // No two emitted graphs share a canonical form.
  std::set<std::vector<long long>> keys;
  for (const Bigraph& g : classes) keys.insert(canonical_key(g));
  CHECK(keys.size() == classes.size());
}

TEST_CASE("canonical keys round-trip through graph_from_canonical_key") {
  for (const Bigraph& g :
       {gen_G6().g, gen_G7().g, gen_F(5).g, mk({{2, 0, 1}, {0, 1, 1}})}) {
    const std::vector<long long> key = canonical_key(g);
    const Bigraph back = graph_from_canonical_key(key);
    CHECK(canonical_key(back) == key);
    CHECK(is_canonical_form(back));
  }
  CHECK_THROWS_AS(graph_from_canonical_key({2, 2, 1}), std::invalid_argument);
  CHECK_THROWS_AS(graph_from_canonical_key({1}), std::invalid_argument);
  CHECK_THROWS_AS(graph_from_canonical_key({1, 1, -2}), std::invalid_argument);
}

TEST_CASE("worker count changes nothing: same stream, same reports") {
  ClassConstraint c;
  c.nx_min = 1;
  c.nx_max = 2;
  c.ny_min = 1;
  c.ny_max = 3;
  c.max_mult = 2;

  std::vector<Bigraph> sequential;
  scan_class(c, [&sequential](int, const Bigraph& g) {
    sequential.push_back(g);
  });

  ClassConstraint c3 = c;
  c3.jobs = 3;
  std::vector<std::vector<Bigraph>> parts(3);
  scan_class(c3, [&parts](int w, const Bigraph& g) { parts[w].push_back(g); });
  std::vector<Bigraph> parallel;
  for (const auto& part : parts)
    parallel.insert(parallel.end(), part.begin(), part.end());
  CHECK(parallel.size() == sequential.size());
  CHECK(same_graph_set(sequential, parallel));

  const VerifyReport r1 = verify_theorem("main", c);
  const VerifyReport r4 = verify_theorem("main", c3);
  CHECK(reports_equal_ignoring_time(r1, r4));
  CHECK(r1.instances_checked == static_cast<long long>(sequential.size()));

  const VerifyReport r1b = verify_theorem("main", c);
  CHECK(reports_equal_ignoring_time(r1, r1b));
}

TEST_CASE("sweeping the degree-profile bound over a small cube finds no "
          "violations and only well-formed extremal graphs") {
  ClassConstraint c;
  c.nx_min = 1;
  c.nx_max = 3;
  c.ny_min = 1;
  c.ny_max = 3;
  c.max_mult = 2;
  c.jobs = 2;
  const VerifyReport r = verify_theorem("main", c);
  CHECK(r.instances_checked == 21297);
  CHECK(r.hypothesis_matched > 0);
  CHECK(r.violations_total == 0);
  CHECK(r.violations.empty());
  CHECK(!r.extremal.empty());
  for (const Bigraph& g : r.extremal) {
    CHECK(is_canonical_form(g));
    CHECK(check_extremal_structure(g, "main"));
  }
}

TEST_CASE("the doubled six-cycle is the unique equality case of the "
          "min-Y-degree-2 bound in its own class") {
  ClassConstraint c;
  c.nx_min = c.nx_max = 3;
  c.ny_min = c.ny_max = 3;
  c.max_mult = 3;
  c.min_deg_x = 3;
  c.min_deg_y = 2;
  c.need_hall = true;
  c.jobs = 2;
  const VerifyReport r = verify_theorem("y2", c);
  CHECK(r.violations_total == 0);
  CHECK(r.hypothesis_matched > 0);
  // The bound is 2k-1 at min degree 3 — sharp only at the doubled
  // six-cycle — and 2k at min degree >= 4, where sharpness is ordinary, so
  // deeper equality graphs in the class are expected but must sit there.
  std::vector<Bigraph> at_three;
  for (const Bigraph& g : r.extremal) {
    CHECK(check_extremal_structure(g, "y2"));
    if (params(g).k == 3) at_three.push_back(g);
  }
  REQUIRE(at_three.size() == 1);
  CHECK(canonical_key(at_three[0]) == canonical_key(gen_G6().g));
  CHECK(r.min_phi_valid);
  CHECK(r.min_phi == 5);
}

TEST_CASE("the extra-column bound is sharp at two rows and three columns") {
  ClassConstraint c;
  c.nx_min = c.nx_max = 2;
  c.ny_min = c.ny_max = 3;
  c.max_mult = 2;
  const VerifyReport r = verify_theorem("t_plus_1", c);
  CHECK(r.instances_checked == 729);
  CHECK(r.violations_total == 0);
  CHECK(r.min_phi_valid);
  CHECK(r.min_phi == 2);
  CHECK(!r.extremal.empty());
}

TEST_CASE("one sweep serves several bounds at once, including the "
          "deficiency-based ones") {
  ClassConstraint c;
  c.nx_min = 2;
  c.nx_max = 2;
  c.ny_min = 2;
  c.ny_max = 3;
  c.max_mult = 2;
  const std::vector<std::string> ids{"main", "y2", "defect", "surplus",
                                     "t_plus_1"};
  const std::vector<VerifyReport> rs = verify_theorems(ids, c);
  REQUIRE(rs.size() == ids.size());
  for (size_t i = 0; i < rs.size(); ++i) {
    CHECK(rs[i].theorem_id == ids[i]);
    CHECK(rs[i].violations_total == 0);
    CHECK(rs[i].hypothesis_matched > 0);
    CHECK(rs[i].instances_checked == rs[0].instances_checked);
  }

  CHECK_THROWS_AS(verify_theorem("unheard_of", c), std::invalid_argument);
  CHECK_THROWS_AS(verify_theorems({}, c), std::invalid_argument);
}

TEST_CASE("minimum matching count: heavy-column two-row graph at degree 4") {
  ClassConstraint c;
  c.nx_min = c.nx_max = 2;
  c.ny_min = c.ny_max = 2;
  c.max_mult = 4;
  c.min_deg_x = 4;
  c.min_deg_y = 2;
  c.need_hall = true;
  const MinPhiReport r = find_min_phi(c);
  REQUIRE(r.found);
  CHECK(r.min_phi == 6);
  REQUIRE(r.witnesses.size() == 1);
  CHECK(canonical_key(r.witnesses[0]) == canonical_key(gen_F(4).g));
}

TEST_CASE("minimum matching count: the 3x4 simple sharp graph") {
  ClassConstraint c;
  c.nx_min = c.nx_max = 3;
  c.ny_min = c.ny_max = 4;
  c.max_mult = 2;
  c.min_deg_x = 3;
  c.min_deg_y = 2;
  c.need_hall = true;
  c.jobs = 4;
  const MinPhiReport r = find_min_phi(c);
  REQUIRE(r.found);
  CHECK(r.min_phi == 11);
  const std::vector<long long> g7 = canonical_key(gen_G7().g);
  bool found = false;
  for (const Bigraph& w : r.witnesses)
    if (canonical_key(w) == g7) found = true;
  CHECK(found);
}

TEST_CASE("minimum matching count: leafless surplus squares with Y-degree "
          "exactly two reduce to the plain even cycle") {
  ClassConstraint c;
  c.nx_min = c.nx_max = 3;
  c.ny_min = c.ny_max = 3;
  c.max_mult = 2;
  c.need_leafless = true;
  c.need_x_surplus = true;
  c.max_deg_y = 2;
  const MinPhiReport r = find_min_phi(c);
  REQUIRE(r.found);
  CHECK(r.min_phi == 2);
  REQUIRE(r.witnesses.size() == 1);
  CHECK(canonical_key(r.witnesses[0]) == canonical_key(gen_C(3, 0, 0).g));
}

TEST_CASE("minimum matching count over an empty class reports not-found") {
  ClassConstraint c;
  c.nx_min = c.nx_max = 2;
  c.ny_min = c.ny_max = 1;
  c.need_hall = true;
  const MinPhiReport r = find_min_phi(c);
  CHECK(!r.found);
  CHECK(r.instances_checked == 0);
  CHECK(r.witnesses.empty());
}

TEST_CASE("equality structure, degree-profile bound: heavy-column and "
          "complete-block shapes pass") {
  // r >= |X|: one heavy column, complete underlying graph.
  CHECK(check_extremal_structure(gen_sharp1(2, 4, 2).g, "main"));
  CHECK(check_extremal_structure(gen_sharp1(3, 3, 3).g, "main"));
  CHECK(check_extremal_structure(gen_sharp1(2, 5, 2).g, "main"));
  // r < |X|: tight block plus a rigid remainder.
  CHECK(check_extremal_structure(gen_sharp1(3, 4, 2).g, "main"));
  CHECK(check_extremal_structure(gen_sharp1(4, 3, 2).g, "main"));
  // Single row or r = 1: equality is unconstrained.
  CHECK(check_extremal_structure(mk({{2, 2}}), "main"));
  CHECK(check_extremal_structure(gen_H(3, 3).g, "main"));
  // Simple profile k = r below |X|: the plain six-cycle reaches r! = 2
  // while X-surplus with no proper tight set, so no block shape is forced.
  CHECK(check_extremal_structure(gen_C(3, 0, 0).g, "main"));
}

TEST_CASE("equality structure, degree-profile bound: non-extremal graphs "
          "fail the gate") {
  CHECK(!check_extremal_structure(gen_Hp(4, 4).g, "main"));
  CHECK(!check_extremal_structure(mk({{2, 2}, {2, 2}}), "main"));
  // Hall failure: bound inapplicable.
  CHECK(!check_extremal_structure(mk({{1, 0}, {1, 0}}), "main"));
}

TEST_CASE("equality structure, min-Y-degree-2 bound") {
  CHECK(check_extremal_structure(gen_G6().g, "y2"));
  CHECK(check_extremal_structure(gen_F(6).g, "y2"));
  CHECK(check_extremal_structure(gen_F(2).g, "y2"));
  CHECK(check_extremal_structure(gen_C(4, 0, 0).g, "y2"));  // plain 8-cycle
  CHECK(!check_extremal_structure(gen_Hp(3, 3).g, "y2"));   // count 6 > 5
  CHECK_THROWS_AS(check_extremal_structure(gen_G6().g, "4k"),
                  std::invalid_argument);
  CHECK_THROWS_AS(check_extremal_structure(gen_G6().g, "nope"),
                  std::invalid_argument);
}
