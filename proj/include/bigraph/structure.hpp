#pragma once
// Structural classification: Hall condition, deficiency, surplus, tight
// sets, elementarity, odd ear decompositions, and assorted diagnostics.

#include <optional>
#include <utility>
#include <vector>

#include "bigraph/graph.hpp"

namespace bg {

struct HallResult {
  bool ok = false;
  std::vector<int> violator;  // when !ok: S subseteq X with |N(S)| < |S|
};

// Hall's condition for X into Y.  A violator (when present) is extracted
// from alternating reachability and satisfies |N(S)| = |S| - 1.
HallResult hall_check(const Bigraph& g);

// nx - alpha', the number of X-vertices left unmatched by any maximum
// matching; equals max over S of |S| - |N(S)| (never negative).
int defect(const Bigraph& g);

// The largest S maximizing |S| - |N(S)| over all subsets of X (the
// maximizers form a lattice, so the union of all of them is one).  For
// defect 0 this is the union of all tight sets, including X itself when
// |N(X)| = |X|, and empty when no nonempty tight set exists.
std::vector<int> max_deficiency_set(const Bigraph& g);

bool is_tight(const Bigraph& g, const std::vector<int>& S);

struct SurplusResult {
  bool ok = false;
  // When !ok and Hall holds: a nonempty proper tight set.  When Hall fails:
  // a Hall violator.
  std::vector<int> witness;
};

// |N(S)| > |S| for every nonempty proper S subset X.  Vacuously true when
// nx < 2.
SurplusResult x_surplus_check(const Bigraph& g);
bool is_x_surplus(const Bigraph& g);

// Every vertex on both sides has at least two distinct neighbors.
bool is_leafless(const Bigraph& g);

// Connectivity of the underlying simple graph (isolated vertices are their
// own components).
bool is_connected(const Bigraph& g);
int component_count(const Bigraph& g);

struct TightSets {
  bool any = false;
  std::vector<int> minimal;  // an inclusion-minimal nonempty proper tight set
  std::vector<int> maximal;  // see below
  std::vector<std::vector<int>> all;  // every nonempty proper tight set
};

// Enumerates nonempty proper tight subsets of X (requires nx <= 20).
// `maximal` is the union of all of them when that union is itself proper
// (then it is the unique inclusion-maximal one); otherwise the
// lexicographically least inclusion-maximal proper tight set.
TightSets tight_sets(const Bigraph& g);

// Every edge lies in a perfect matching and the graph is connected;
// equivalently G - x - y has a perfect matching for every pair.
// Requires nx == ny and a perfect matching; throws otherwise.
bool is_elementary(const Bigraph& g);

// Vertices are encoded x_i -> i and y_j -> nx + j in ear vertex paths.
struct EarDecomposition {
  std::pair<int, int> base;            // (row, column) of the starting edge
  std::vector<std::vector<int>> ears;  // each an odd path between existing
                                       // vertices, internals new at the time
};

// Builds a decomposition of an elementary graph into a base edge plus
// m - v + 1 odd ears (parallel copies appear as length-1 ears).
EarDecomposition odd_ear_decomposition(const Bigraph& g);

// Replays a decomposition against g: base edge exists; every ear is an odd
// path with endpoints already present (on opposite sides) and internal
// vertices fresh; every copy of every edge is used exactly once; all
// vertices are covered; items = m - v + 2.
bool validate_ear_decomposition(const Bigraph& g, const EarDecomposition& d);

// A 4-cycle three of whose vertices have (multiplicity) degree exactly 2
// while the fourth is a cut vertex.
bool has_pendant_4cycle(const Bigraph& g);

// S subseteq X with |N(S)| = |S| + 1 such that some y in N(S) has at least
// three distinct neighbors, exactly one of which lies in S.
std::vector<std::vector<int>> slim_sets(const Bigraph& g);

struct StructureReport {
  GraphParams p;
  int alpha = 0;
  bool phi_computed = false;
  Int phi = 0;
  bool hall = false;
  std::vector<int> hall_violator;
  int deficiency = 0;
  bool x_surplus = false;
  TightSets tight;               // populated when nx <= 20
  bool tight_computed = false;
  bool leafless = false;
  bool connected = false;
  std::optional<bool> elementary;  // set only when nx == ny and alpha == nx
  bool pendant_4cycle = false;
  std::vector<std::vector<int>> slim;
  bool slim_computed = false;    // slim sets skipped when nx > 12
};

StructureReport analyze(const Bigraph& g);

}  // namespace bg
