#pragma once
// Core bipartite-multigraph representation and I/O.
//
// A bigraph has parts X (rows, size nx) and Y (columns, size ny).
// mult[i][j] >= 0 is the number of parallel copies of the edge x_i y_j.
// Parallel copies are distinguishable: a matching chooses a copy, so a
// doubled edge contributes twice as many matchings through that pair.

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace bg {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

struct Bigraph {
  int nx = 0;
  int ny = 0;
  std::vector<std::vector<long long>> mult;  // nx rows, ny columns

  Bigraph() = default;
  Bigraph(int nx_, int ny_)
      : nx(nx_), ny(ny_), mult(nx_, std::vector<long long>(ny_, 0)) {}

  long long& at(int i, int j) { return mult[i][j]; }
  long long at(int i, int j) const { return mult[i][j]; }

  bool operator==(const Bigraph& o) const {
    return nx == o.nx && ny == o.ny && mult == o.mult;
  }
};

// Derived numeric parameters of a graph, all recomputed from mult.
struct GraphParams {
  int n = 0;         // |X|
  int ny = 0;        // |Y|
  int t = 0;         // |Y| - |X| (may be negative)
  long long m = 0;   // total edge copies
  long long b = 0;   // m - 2|Y| (surplus of edges over twice |Y|)
  long long k = 0;   // min X-degree (counting multiplicity); 0 when X empty
  long long deltaY = 0;  // min Y-degree counting multiplicity; 0 when Y empty
  int r = 0;         // min |N(x)| over X (distinct neighbors); 0 when X empty
  int rY = 0;        // min |N(y)| over Y
};

// --- construction / validation ---

// Build from an explicit matrix; throws std::invalid_argument on negative
// entries or ragged rows.
Bigraph make_bigraph(int nx, int ny,
                     const std::vector<std::vector<long long>>& mult);

// Build from an edge list (i, j, copies); entries accumulate.
Bigraph make_bigraph_edges(
    int nx, int ny, const std::vector<std::tuple<int, int, long long>>& edges);

GraphParams params(const Bigraph& g);

// --- basic queries ---

std::vector<int> neighbors_x(const Bigraph& g, int i);  // distinct columns
std::vector<int> neighbors_y(const Bigraph& g, int j);  // distinct rows
long long degree_x(const Bigraph& g, int i);            // with multiplicity
long long degree_y(const Bigraph& g, int j);
int distinct_degree_x(const Bigraph& g, int i);
int distinct_degree_y(const Bigraph& g, int j);

// Union of distinct neighborhoods of the rows in S (indices into X).
std::vector<int> neighborhood(const Bigraph& g, const std::vector<int>& S);

// --- transformations ---

// Keep rows in rows_keep and columns in cols_keep (both sorted ascending).
Bigraph induced_subgraph(const Bigraph& g, const std::vector<int>& rows_keep,
                         const std::vector<int>& cols_keep);

// Remove one row and one column.
Bigraph remove_vertex_pair(const Bigraph& g, int i, int j);

Bigraph transpose(const Bigraph& g);

// All multiplicities clamped to {0,1}.
Bigraph underlying_simple(const Bigraph& g);

// Append p new columns, each adjacent to every row with multiplicity 1.
Bigraph add_universal_columns(const Bigraph& g, int p);

// --- isomorphism-invariant key ---

// Canonical key under independent row/column permutations: the minimum,
// over all row orders, of the column-sorted matrix, flattened with the
// dimensions prepended.  Intended for small graphs (nx <= ~10).
std::vector<long long> canonical_key(const Bigraph& g);

// --- serialization ---

// JSON object {"nx":…, "ny":…, "edges":[[i,j,copies],…]} with edges sorted
// lexicographically; parse accepts the same shape.  Throws
// std::invalid_argument on malformed input.
std::string to_json(const Bigraph& g);
Bigraph from_json(const std::string& text);

// Terse text: first line "nx ny", then one "i j copies" line per edge.
std::string to_text(const Bigraph& g);
Bigraph from_text(const std::string& text);

// Decimal string rendering for big integers/rationals (stable across
// platforms; used by all report serializers).
std::string to_string(const Int& v);
std::string to_string(const Rat& v);

}  // namespace bg
