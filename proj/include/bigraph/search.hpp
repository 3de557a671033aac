#pragma once
// Exhaustive enumeration of small bipartite multigraphs inside a declared
// hypothesis class, sweep verification that lower-bound formulas hold on
// every member, extraction of the graphs achieving equality, exact class
// minima of the matching count, and structure checks for the proved
// equality descriptions.
//
// Determinism: for a fixed constraint the emitted stream, every report
// field, and every list order are reproducible — and independent of the
// worker count.  Workers partition the space by the first matrix row,
// share nothing, and their partial results are merged by canonical order.

#include <functional>
#include <string>
#include <vector>

#include "bigraph/graph.hpp"

namespace bg {

// A finite class of bipartite multigraphs: size ranges, a multiplicity cap,
// structural flags, and per-vertex degree floors.  Degree caps/floors of 0
// mean "no restriction".
struct ClassConstraint {
  int nx_min = 1;
  int nx_max = 1;
  int ny_min = 1;
  int ny_max = 1;
  long long max_mult = 1;

  bool need_hall = false;        // Hall's condition for X into Y
  bool need_x_surplus = false;   // |N(S)| > |S| for nonempty proper S
  bool need_leafless = false;    // two distinct neighbors at every vertex
  bool need_elementary = false;  // connected, every edge in a perfect matching

  long long min_deg_x = 0;       // floor on every X-degree (with multiplicity)
  long long min_deg_y = 0;       // floor on every Y-degree (with multiplicity)
  long long max_deg_y = 0;       // cap on every Y-degree; 0 = unbounded
  long long min_distinct_x = 0;  // floor on |N(x)| for every x
  long long min_distinct_y = 0;  // floor on |N(y)| for every y

  bool dedup = false;  // emit only canonical forms (one graph per iso class)
  int jobs = 1;        // parallel workers; results do not depend on this
  double budget = 6.0e9;  // max raw matrices the ranges may span
};

// One lower-bound failure found by a sweep: the offending graph, its exact
// maximum-matching count, and the bound that was claimed for it.
struct Violation {
  Bigraph g;
  Int phi;
  Rat bound;
};

// Result of sweeping one theorem id over a class.
struct VerifyReport {
  std::string theorem_id;
  ClassConstraint constraint;      // the class that was swept
  long long instances_checked = 0;   // graphs satisfying the constraint
  long long hypothesis_matched = 0;  // of those, graphs the bound applies to
  long long violations_total = 0;    // exact count of bound failures
  std::vector<Violation> violations;  // first ones in canonical order (<=64)
  std::vector<Bigraph> extremal;  // canonical forms with count == bound, all
                                  // of them, sorted by canonical key
  bool min_phi_valid = false;  // true once some graph matched the hypotheses
  Int min_phi = 0;             // minimum matching count among matched graphs
  double seconds = 0.0;
};

// Result of minimizing the maximum-matching count over a class.
struct MinPhiReport {
  bool found = false;  // false iff the class is empty
  Int min_phi = 0;
  std::vector<Bigraph> witnesses;  // canonical forms achieving the minimum,
                                   // all of them, sorted by canonical key
  long long instances_checked = 0;
  double seconds = 0.0;
};

// Does g satisfy every predicate of the constraint (ranges, multiplicity
// cap, flags, floors)?  Exposed for tests and report consumers.
bool constraint_matches(const ClassConstraint& c, const Bigraph& g);

// True when the graph's matrix is literally its own canonical form, i.e.
// canonical_key(g) flattens back to g.  Each isomorphism class within fixed
// dimensions contains exactly one such matrix.
bool is_canonical_form(const Bigraph& g);

// Rebuild the graph a canonical key denotes.
Bigraph graph_from_canonical_key(const std::vector<long long>& key);

// Core streaming sweep.  Enumerates every multiplicity matrix within the
// constraint (sizes ascending, then rows in lexicographic order), splits
// the work across c.jobs workers by the index of the first row, and calls
// visit(worker, g) for each member.  The Bigraph reference is the worker's
// scratch buffer — copy it to keep it.  Calls with distinct worker values
// may run concurrently; the visitor must not share mutable state across
// workers.  Throws std::invalid_argument on malformed constraints, on a
// class whose degree floors no size in range can meet, and when the raw
// matrix space exceeds the budget.
void scan_class(const ClassConstraint& c,
                const std::function<void(int worker, const Bigraph& g)>& visit);

// Materialized single-threaded enumeration in stable (lexicographic) order;
// intended for small classes.  Budget-guarded like scan_class, with an
// additional 5e7 raw-space cap to keep the result in memory.
std::vector<Bigraph> enumerate_class(const ClassConstraint& c);

// Sweep the class once and evaluate every listed theorem id against every
// member the theorem applies to, comparing the claimed bound with the exact
// maximum-matching count from the reference engine.  Violations are
// findings, not errors: they are collected and reported, never suppressed.
// Unknown ids throw std::invalid_argument.
std::vector<VerifyReport> verify_theorems(const std::vector<std::string>& ids,
                                          const ClassConstraint& c);
VerifyReport verify_theorem(const std::string& theorem_id,
                            const ClassConstraint& c);

// Exact minimum of the maximum-matching count over the class, with every
// minimizer in canonical form.
MinPhiReport find_min_phi(const ClassConstraint& c);

// Does an equality achiever look the way the proved descriptions say it
// must?  Supported ids:
//   "main" — evaluates the bound at the graph's own (k, r); returns false
//     unless the bound applies and holds with equality.  Inside the proved
//     scope (|X| > 1, r > 1, no isolated vertices) the structure is then
//     required: for r >= |X|, the graph is X-surplus, all parallel edges
//     share one Y-endpoint, and the underlying simple graph is complete
//     with |Y| = r; for r < |X| and k > r, |Y| = |X|, the graph is not
//     X-surplus, the smallest tight sets have size exactly r, each induces
//     a block whose underlying graph is complete r-by-r with co-incident
//     parallel edges, and deleting the block leaves exactly one matching
//     covering the remaining rows.  Outside the proved scope (including
//     the simple profile k = r below |X|, where plain even cycles are
//     extra equality graphs) only equality itself is checked.
//   "y2" — equality achievers must be: the heavy-column two-row graph or
//     an even cycle when |X| = 2 or k = 2; the doubled six-cycle when
//     k = 3 and |X| >= 3; unrestricted for k >= 4.
// Other ids throw std::invalid_argument.
bool check_extremal_structure(const Bigraph& g, const std::string& theorem_id);

}  // namespace bg
