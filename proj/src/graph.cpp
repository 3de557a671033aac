#include "bigraph/graph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include <json.hpp>

namespace bg {

Bigraph make_bigraph(int nx, int ny,
                     const std::vector<std::vector<long long>>& mult) {
  if (nx < 0 || ny < 0) throw std::invalid_argument("negative dimension");
  if (static_cast<int>(mult.size()) != nx)
    throw std::invalid_argument("row count mismatch");
  Bigraph g(nx, ny);
  for (int i = 0; i < nx; ++i) {
    if (static_cast<int>(mult[i].size()) != ny)
      throw std::invalid_argument("ragged multiplicity matrix");
    for (int j = 0; j < ny; ++j) {
      if (mult[i][j] < 0) throw std::invalid_argument("negative multiplicity");
      g.mult[i][j] = mult[i][j];
    }
  }
  return g;
}

Bigraph make_bigraph_edges(
    int nx, int ny, const std::vector<std::tuple<int, int, long long>>& edges) {
  if (nx < 0 || ny < 0) throw std::invalid_argument("negative dimension");
  Bigraph g(nx, ny);
  for (auto& [i, j, c] : edges) {
    if (i < 0 || i >= nx || j < 0 || j >= ny)
      throw std::invalid_argument("edge index out of range");
    if (c < 0) throw std::invalid_argument("negative multiplicity");
    g.mult[i][j] += c;
  }
  return g;
}

GraphParams params(const Bigraph& g) {
  GraphParams p;
  p.n = g.nx;
  p.ny = g.ny;
  p.t = g.ny - g.nx;
  for (int i = 0; i < g.nx; ++i)
    for (int j = 0; j < g.ny; ++j) p.m += g.mult[i][j];
  p.b = p.m - 2LL * g.ny;
  p.k = 0;
  p.r = 0;
  for (int i = 0; i < g.nx; ++i) {
    long long d = degree_x(g, i);
    int s = distinct_degree_x(g, i);
    if (i == 0 || d < p.k) p.k = d;
    if (i == 0 || s < p.r) p.r = s;
  }
  p.deltaY = 0;
  p.rY = 0;
  for (int j = 0; j < g.ny; ++j) {
    long long d = degree_y(g, j);
    int s = distinct_degree_y(g, j);
    if (j == 0 || d < p.deltaY) p.deltaY = d;
    if (j == 0 || s < p.rY) p.rY = s;
  }
  return p;
}

std::vector<int> neighbors_x(const Bigraph& g, int i) {
  std::vector<int> out;
  for (int j = 0; j < g.ny; ++j)
    if (g.mult[i][j] > 0) out.push_back(j);
  return out;
}

std::vector<int> neighbors_y(const Bigraph& g, int j) {
  std::vector<int> out;
  for (int i = 0; i < g.nx; ++i)
    if (g.mult[i][j] > 0) out.push_back(i);
  return out;
}

long long degree_x(const Bigraph& g, int i) {
  return std::accumulate(g.mult[i].begin(), g.mult[i].end(), 0LL);
}

long long degree_y(const Bigraph& g, int j) {
  long long d = 0;
  for (int i = 0; i < g.nx; ++i) d += g.mult[i][j];
  return d;
}

int distinct_degree_x(const Bigraph& g, int i) {
  int s = 0;
  for (int j = 0; j < g.ny; ++j) s += g.mult[i][j] > 0;
  return s;
}

int distinct_degree_y(const Bigraph& g, int j) {
  int s = 0;
  for (int i = 0; i < g.nx; ++i) s += g.mult[i][j] > 0;
  return s;
}

std::vector<int> neighborhood(const Bigraph& g, const std::vector<int>& S) {
  std::vector<char> seen(g.ny, 0);
  for (int i : S)
    for (int j = 0; j < g.ny; ++j)
      if (g.mult[i][j] > 0) seen[j] = 1;
  std::vector<int> out;
  for (int j = 0; j < g.ny; ++j)
    if (seen[j]) out.push_back(j);
  return out;
}

Bigraph induced_subgraph(const Bigraph& g, const std::vector<int>& rows_keep,
                         const std::vector<int>& cols_keep) {
  Bigraph h(static_cast<int>(rows_keep.size()),
            static_cast<int>(cols_keep.size()));
  for (int a = 0; a < h.nx; ++a)
    for (int b = 0; b < h.ny; ++b) h.mult[a][b] = g.mult[rows_keep[a]][cols_keep[b]];
  return h;
}

Bigraph remove_vertex_pair(const Bigraph& g, int i, int j) {
  std::vector<int> rows, cols;
  for (int a = 0; a < g.nx; ++a)
    if (a != i) rows.push_back(a);
  for (int b = 0; b < g.ny; ++b)
    if (b != j) cols.push_back(b);
  return induced_subgraph(g, rows, cols);
}

Bigraph transpose(const Bigraph& g) {
  Bigraph h(g.ny, g.nx);
  for (int i = 0; i < g.nx; ++i)
    for (int j = 0; j < g.ny; ++j) h.mult[j][i] = g.mult[i][j];
  return h;
}

Bigraph underlying_simple(const Bigraph& g) {
  Bigraph h = g;
  for (auto& row : h.mult)
    for (auto& v : row) v = v > 0 ? 1 : 0;
  return h;
}

Bigraph add_universal_columns(const Bigraph& g, int p) {
  if (p < 0) throw std::invalid_argument("negative column count");
  Bigraph h(g.nx, g.ny + p);
  for (int i = 0; i < g.nx; ++i) {
    for (int j = 0; j < g.ny; ++j) h.mult[i][j] = g.mult[i][j];
    for (int j = g.ny; j < g.ny + p; ++j) h.mult[i][j] = 1;
  }
  return h;
}

std::vector<long long> canonical_key(const Bigraph& g) {
  // For a fixed row order, the best column order is simply the sorted order
  // of column vectors: any out-of-order adjacent pair can be swapped without
  // increasing the flattened word (exchange argument), so sorting minimizes.
  // Minimizing over all row orders then yields a true isomorphism invariant.
  std::vector<int> perm(g.nx);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<long long> best;
  std::vector<std::vector<long long>> cols(g.ny, std::vector<long long>(g.nx));
  do {
    for (int j = 0; j < g.ny; ++j)
      for (int i = 0; i < g.nx; ++i) cols[j][i] = g.mult[perm[i]][j];
    std::sort(cols.begin(), cols.end());
    std::vector<long long> key;
    key.reserve(2 + g.nx * g.ny);
    key.push_back(g.nx);
    key.push_back(g.ny);
    for (int i = 0; i < g.nx; ++i)
      for (int j = 0; j < g.ny; ++j) key.push_back(cols[j][i]);
    if (best.empty() || key < best) best = std::move(key);
  } while (std::next_permutation(perm.begin(), perm.end()));
  if (best.empty()) {  // nx == 0
    best = {g.nx, g.ny};
  }
  return best;
}

std::string to_json(const Bigraph& g) {
  nlohmann::ordered_json j;
  j["nx"] = g.nx;
  j["ny"] = g.ny;
  auto edges = nlohmann::ordered_json::array();
  for (int i = 0; i < g.nx; ++i)
    for (int jj = 0; jj < g.ny; ++jj)
      if (g.mult[i][jj] > 0) edges.push_back({i, jj, g.mult[i][jj]});
  j["edges"] = std::move(edges);
  return j.dump();
}

Bigraph from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("bad JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("nx") || !j.contains("ny") ||
      !j.contains("edges") || !j["nx"].is_number_integer() ||
      !j["ny"].is_number_integer() || !j["edges"].is_array())
    throw std::invalid_argument("graph JSON must have nx, ny, edges");
  std::vector<std::tuple<int, int, long long>> edges;
  for (auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 3)
      throw std::invalid_argument("edge must be [i, j, copies]");
    edges.emplace_back(e[0].get<int>(), e[1].get<int>(), e[2].get<long long>());
  }
  return make_bigraph_edges(j["nx"].get<int>(), j["ny"].get<int>(), edges);
}

std::string to_text(const Bigraph& g) {
  std::ostringstream os;
  os << g.nx << ' ' << g.ny << '\n';
  for (int i = 0; i < g.nx; ++i)
    for (int j = 0; j < g.ny; ++j)
      if (g.mult[i][j] > 0) os << i << ' ' << j << ' ' << g.mult[i][j] << '\n';
  return os.str();
}

Bigraph from_text(const std::string& text) {
  std::istringstream is(text);
  int nx, ny;
  if (!(is >> nx >> ny)) throw std::invalid_argument("missing dimensions");
  std::vector<std::tuple<int, int, long long>> edges;
  int i, j;
  long long c;
  while (is >> i >> j >> c) edges.emplace_back(i, j, c);
  if (!is.eof()) throw std::invalid_argument("trailing junk in graph text");
  return make_bigraph_edges(nx, ny, edges);
}

std::string to_string(const Int& v) { return v.str(); }

std::string to_string(const Rat& v) {
  if (boost::multiprecision::denominator(v) == 1)
    return boost::multiprecision::numerator(v).str();
  return boost::multiprecision::numerator(v).str() + "/" +
         boost::multiprecision::denominator(v).str();
}

}  // namespace bg
