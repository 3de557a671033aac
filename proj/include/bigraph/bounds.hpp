#pragma once
// Lower-bound formulas for the number of maximum matchings, and a
// dispatcher that decides which formulas apply to a given graph.
//
// Formula arguments follow the conventions: n = |X|, t = |Y| - |X|,
// k = minimum X-degree (with multiplicity), r = minimum number of distinct
// neighbors, p = deficiency |X| - alpha', m = number of edge copies,
// v = number of vertices, b = m - 2|Y|.

#include <string>
#include <vector>

#include "bigraph/graph.hpp"

namespace bg {

// Hall + min X-degree k + at least r distinct neighbors per X-vertex,
// k >= r >= 1: r!(k-r+1) when n >= r, else (r + n(k-r)) * (r-1)!/(r-n)!.
Int bound_main(long long n, long long k, long long r);

// Simple + Hall + min X-degree k: falling factorial k(k-1)...(k-min(n,k)+1).
Int bound_mhall(long long n, long long k);

// Deficiency p >= 1 with degree floors k >= r >= 1: (k-r+1)(r+p)!/p!.
Int bound_defect(long long k, long long r, long long p);

// Hall, min degrees k >= 2 on X and >= 1 on Y, n >= 2, and either |Y| > |X|
// or min Y-degree >= 2: 2k-2 / 2k-1 / 2k by (n, k) case.
Int bound_y2(long long n, long long k);

// Hall, n >= 2, k >= 2, min Y-degree >= 2, two distinct neighbors per
// X-vertex: min(n(k-2)+2, 4k-4).
Int bound_4k(long long n, long long k);

// Hall, n >= 2, t >= 0: the best of the per-case lines
//   k(t+1)                 when min Y-degree >= 1,
//   (2k-t-2)(t+1)          when min Y-degree >= 2 and n == 2,
//   2k(t+1)-1              when min Y-degree >= 2, k == 3, n >= 3,
//   2k(t+1)                when min Y-degree >= 2, k >= 4, n >= 3.
Int bound_2kt(long long n, long long k, long long t, long long delta_y);

// Hall, n >= 3, min Y-degree >= 1, t >= 1: k(t+1).
Int bound_kt1(long long k, long long t);

// Hall, n >= 3, min Y-degree >= 2, t >= 1: 2k(t+1), lowered by one at the
// exceptional triple (n, k, t) = (3, 3, 1).
Int bound_2kt_refined(long long n, long long k, long long t);

// Leafless X-surplus, n >= 2, t >= 0, b = m - 2|Y|: ((n-1)t + 2 + b)(t+1).
Int bound_leafmain(long long n, long long t, long long b);

// Elementary: m - v + 2.
Int bound_surplus(long long m, long long v);

// Hall with no isolated Y-vertices: t + 1.
Int bound_t_plus_1(long long t);

// Hall, min X-degree k, at least r distinct neighbors at EVERY vertex,
// some nonempty proper tight set: r!(k-r+1)(r+t)!/t!.
Int bound_case1(long long k, long long r, long long t);

// Simple graphs where |N(S)| > |S| for every nonempty S including X:
// variant 1 (connected): n + 1; variant 2 (connected, as printed in the
// source material): m + (n-1)(t-2); variant 3 (t == 1, min degree >= 2):
// 2m - 2|Y|.
Int bound_liu_liu(int variant, long long n, long long m, long long t,
                  long long ny);

// Deficiency/tight-set factor times a leafless-surplus factor for the
// remainder: (k-r+1) (r+p)!/p! ((n'-1)(t+p)+2+b')(t+p+1), k >= r >= 2.
Int bound_composed(long long k, long long r, long long p, long long n_prime,
                   long long t, long long b_prime);

// k-regular with equal part sizes: n! (k/n)^n, exact rational.
Rat bound_ef(long long n, long long k);

struct BoundEntry {
  std::string id;
  bool applicable = false;
  std::vector<std::string> failures;  // unmet hypotheses when not applicable
  Rat bound = 0;
  std::string note;
};

// Shared per-graph facts used by the hypothesis checks; compute once when
// evaluating several theorems against the same graph.
struct EvalContext {
  GraphParams p;
  bool hall = false;
  int alpha = 0;
  int deficiency = 0;
  bool simple = false;
  bool x_surplus = false;
  bool positive_surplus = false;  // |N(S)| > |S| for all nonempty S incl. X
  bool leafless = false;
  bool connected = false;
  bool tight_known = false;       // tight_any valid (nx <= 20)
  bool tight_any = false;
  int r_both = 0;                 // min distinct degree over both sides
};

EvalContext make_context(const Bigraph& g);

// Stable list of the theorem identifiers known to the dispatcher.
std::vector<std::string> theorem_ids();

// Evaluate one theorem's hypotheses against a graph; when applicable the
// bound is evaluated at the strongest instance the graph supports
// (k = min X-degree, r = min distinct neighborhood).  Unknown ids throw.
BoundEntry evaluate_theorem(const std::string& id, const Bigraph& g);
BoundEntry evaluate_theorem(const std::string& id, const Bigraph& g,
                            const EvalContext& c);

// evaluate_theorem across every known id.
std::vector<BoundEntry> applicable_bounds(const Bigraph& g);

}  // namespace bg
