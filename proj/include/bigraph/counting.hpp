#pragma once
// Exact matching counts.
//
// Two independent engines are kept deliberately separate so they can
// cross-check each other:
//   * count_max_matchings_oracle — direct branching recursion, no shared
//     machinery, usable up to ~12 rows/columns at small multiplicity;
//   * count_max_matchings — permanent-based: reduce to counting X-matchings
//     of an augmented square-ish graph and evaluate a permanent (Ryser).

#include <utility>

#include "bigraph/graph.hpp"

namespace bg {

struct MatchCount {
  int size = 0;  // maximum matching size alpha'
  Int count = 0; // number of maximum matchings (copies distinguished)
};

Int factorial(long long n);

// Size of a maximum matching in the underlying simple graph (augmenting
// paths).  Multiplicities only matter as zero / nonzero.
int max_matching_size(const Bigraph& g);

// One maximum matching: entry i is the column matched to row i, or -1.
std::vector<int> maximum_matching(const Bigraph& g);

// Reference engine: exhaustive branch over rows (match to any available
// column or skip), weighting by multiplicity.  Requires ny <= 62.
MatchCount count_max_matchings_oracle(const Bigraph& g);

// Permanent of a square non-negative matrix via Ryser's formula with Gray
// code; d <= 30.  Throws std::invalid_argument on non-square input.
Int permanent(const std::vector<std::vector<long long>>& a);

// Number of matchings saturating X.  Requires ny >= nx.  Evaluated as
// per(M') / t! where M' stacks t = ny - nx all-ones rows under mult.
Int count_x_matchings(const Bigraph& g);

// (alpha', number of maximum matchings).  Works for any graph: orient so
// nx <= ny, let p = nx - alpha'; appending p universal columns makes every
// maximum matching extend to an X-matching in exactly p! ways, so the count
// is  (# X-matchings of the augmented graph) / p!.
MatchCount count_max_matchings(const Bigraph& g);

// Number of maximum matchings that use a copy of the edge x_i y_j:
// mult[i][j] * Phi(G - x_i - y_j) when removing the pair drops alpha' by
// exactly one, else 0.
Int count_containing_edge(const Bigraph& g, int i, int j);

}  // namespace bg
