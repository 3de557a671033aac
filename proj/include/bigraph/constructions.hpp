#pragma once

#include <map>
#include <string>
#include <vector>

#include "bigraph/graph.hpp"

namespace bg {

// A named graph family member together with the exact number of maximum
// matchings the family guarantees at these parameters.  Generators validate
// their parameters (std::invalid_argument) and double-check the structural
// properties the family promises (std::logic_error on internal failure).
struct Construction {
  std::string family;
  std::map<std::string, long long> params;
  Bigraph g;
  Int predicted_phi;
};

// Rows of degree k with r distinct neighbors sharing one heavy column;
// extremal for the degree/distinct-neighbor lower bound.  k >= r >= 1, n >= 1.
Construction gen_sharp1(long long n, long long k, long long r);

// Two rows, two columns, one heavy column: [[k-1,1],[k-1,1]].  k >= 2.
Construction gen_F(long long k);

// The doubled six-cycle on 3+3 vertices with 5 maximum matchings.
Construction gen_G6();

// The 3x4 simple graph with 11 maximum matchings.
Construction gen_G7();

// Identity matrix plus a heavy first column; n >= 2, k >= 1.
Construction gen_H(long long n, long long k);

// gen_H plus one extra copy on every column of the last row.  n >= 2, k >= 2.
Construction gen_Hp(long long n, long long k);

// gen_H with the first row spread across all columns.  2 <= n <= k.
Construction gen_Hpp(long long n, long long k);

// Heavy 2x2 block plus a cycle on the remaining vertices, cycle rows padded
// to degree k on the first column.  n >= 4, k >= 2.
Construction gen_J(long long n, long long k);

// Leafless graph with surplus built from two complete bipartite crossings,
// a path-like perfect matching, and b-controlled extra copies.
// n >= 2r, r >= 2, t >= 0, b >= (r-1)(n-2r).
Construction gen_M(long long n, long long r, long long t, long long b);

// Cycle of length 2n with t duplicated columns and b extra copies on one
// cycle edge; for n = 2 a complete 2x(t+2) graph with b extra copies.
// n >= 2, t >= 0, b >= 0.
Construction gen_C(long long n, long long t, long long b);

// Two rows spread over t+1 single columns plus one heavy shared column.
// k - 1 > t >= 0.
Construction gen_L(long long k, long long t);

// gen_H block on n-1 rows plus a last row covering everything once,
// including t+1 fresh columns; minimum column degree 1.  n >= 3, k, t >= 1.
Construction gen_Gnkt(long long n, long long k, long long t);

// Same layout with the last row doubled; minimum column degree 2.
Construction gen_Gpnkt(long long n, long long k, long long t);

// A tight block (gen_sharp1) glued to r fresh rows matched into r+t fresh
// columns; extremal when a tight set is present.  k >= r >= 1, t >= 0.
Construction gen_case1_sharp(long long k, long long r, long long t);

// Internally disjoint odd-length paths sharing both endpoints; exactly one
// maximum matching per path.  Every length must be odd and positive.
Construction gen_odd_path_bundle(const std::vector<long long>& lengths);

// [[a,b,1],[c,d,1],[1,1,0]] with a,b,c,d >= 1: edge-count-minus-four
// maximum matchings.
Construction gen_k33_minus_edge(long long a, long long b, long long c,
                                long long d);

// Identity matrix plus t extra columns attached to the first row.
// n >= 1, t >= 0.
Construction gen_t_plus_1_star(long long n, long long t);

// Three 4-cycles through one shared row: 24 maximum matchings.
Construction gen_three_4cycles();

// A chain of three edge-disjoint 4-cycles: 28 maximum matchings.
Construction gen_chain_4cycles();

// Two 4-cycles through one shared row: 8 maximum matchings.
Construction gen_two_4cycles();

// Dispatch by family name with named integer parameters.  For
// odd_path_bundle pass lengths as len0, len1, ....  Throws
// std::invalid_argument for unknown families or missing parameters.
Construction generate(const std::string& family,
                      const std::map<std::string, long long>& params);

// Family names accepted by generate(), in a stable order.
std::vector<std::string> construction_families();

}  // namespace bg
