#pragma once

#include <vector>

#include "bigraph/graph.hpp"

namespace bg {

// One edit in a normalization log.  Meaning by field pattern:
//   from_y >= 0, to_y >= 0  — move `copies` copies of edge (x, from_y) onto
//                             (x, to_y);
//   from_y >= 0, to_y == -1 — delete `copies` copies of edge (x, from_y);
//   from_y == -1, to_y >= 0 — add `copies` copies of edge (x, to_y), used
//                             when a row is rebuilt wholesale.
struct ShiftStep {
  int x = 0;
  int from_y = -1;
  int to_y = -1;
  long long copies = 0;
};

struct NormalizeResult {
  Bigraph g;
  std::vector<ShiftStep> steps;
  long long k = 0;  // minimum row degree of the input
  long long r = 0;  // minimum distinct-neighbor count of the input
};

// Rewrites the graph so that X-rows reach the profile "one neighbor with
// multiplicity k-r+1, r-1 neighbors with multiplicity 1" (degree exactly k,
// r distinct neighbors), where k is the minimum row degree and r the minimum
// distinct-neighbor count of the input.  The count of maximum matchings
// never increases, and every intermediate graph keeps its X-saturating
// matching.  For r >= 2 every row reaches the profile; for r == 1 at least
// one row does.  Requires a nonempty graph with no empty row for which an
// X-saturating matching exists; throws std::invalid_argument otherwise.
//
// Shift directions are chosen by comparing the number of maximum matchings
// after deleting (x, y) versus (x, y'); rebuilt rows route through a tight
// block when some subset of X has no surplus.  The returned step log, applied
// in order via apply_steps, reproduces the returned graph exactly.
NormalizeResult normalize_shift_reduce(const Bigraph& g);

// Replays a step log against a graph.  Throws std::invalid_argument if a
// step references missing copies or out-of-range vertices.
Bigraph apply_steps(const Bigraph& g, const std::vector<ShiftStep>& steps);

// True when row x has degree k with r distinct neighbors, one carrying
// multiplicity k-r+1 and the rest multiplicity 1.
bool row_in_profile(const Bigraph& g, int x, long long k, long long r);

// Identifies columns y1 and y2: the merged column (at min(y1, y2), other
// columns shifted left) carries the multiplicity sums.  X-saturating
// matchings of the result correspond exactly to X-saturating matchings of
// the input that use at most one of the two columns.
Bigraph merge_y(const Bigraph& g, int y1, int y2);

}  // namespace bg
