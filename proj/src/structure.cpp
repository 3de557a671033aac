#include "bigraph/structure.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>

#include "bigraph/counting.hpp"

namespace bg {

namespace {

std::vector<int> mask_to_set(uint32_t mask) {
  std::vector<int> out;
  for (int i = 0; mask; ++i, mask >>= 1)
    if (mask & 1) out.push_back(i);
  return out;
}

// Bit masks of distinct column neighborhoods per row; requires ny <= 62.
std::vector<uint64_t> row_masks(const Bigraph& g) {
  if (g.ny > 62) throw std::invalid_argument("column count exceeds 62");
  std::vector<uint64_t> rm(g.nx, 0);
  for (int i = 0; i < g.nx; ++i)
    for (int j = 0; j < g.ny; ++j)
      if (g.mult[i][j] > 0) rm[i] |= uint64_t{1} << j;
  return rm;
}

}  // namespace

HallResult hall_check(const Bigraph& g) {
  HallResult res;
  auto match_x = maximum_matching(g);
  int unmatched = -1;
  for (int i = 0; i < g.nx; ++i)
    if (match_x[i] < 0) unmatched = i;
  if (unmatched < 0) {
    res.ok = true;
    return res;
  }
  // Alternating reachability from an unmatched row: every reachable column
  // is matched (otherwise an augmenting path would exist), and its partner
  // is reachable, so |N(S)| = |S| - 1.
  std::vector<int> match_y(g.ny, -1);
  for (int i = 0; i < g.nx; ++i)
    if (match_x[i] >= 0) match_y[match_x[i]] = i;
  std::vector<char> in_s(g.nx, 0), seen_y(g.ny, 0);
  std::vector<int> queue{unmatched};
  in_s[unmatched] = 1;
  while (!queue.empty()) {
    int i = queue.back();
    queue.pop_back();
    for (int j = 0; j < g.ny; ++j) {
      if (g.mult[i][j] > 0 && !seen_y[j]) {
        seen_y[j] = 1;
        int p = match_y[j];
        if (p >= 0 && !in_s[p]) {
          in_s[p] = 1;
          queue.push_back(p);
        }
      }
    }
  }
  res.ok = false;
  for (int i = 0; i < g.nx; ++i)
    if (in_s[i]) res.violator.push_back(i);
  return res;
}

int defect(const Bigraph& g) { return g.nx - max_matching_size(g); }

std::vector<int> max_deficiency_set(const Bigraph& g) {
  if (g.nx <= 20 && g.ny <= 62) {
    auto rm = row_masks(g);
    int best = 0;
    uint32_t unions = 0;
    // First pass: the maximum of |S| - |N(S)| (the empty set gives 0).
    for (uint32_t mask = 1; mask < (uint32_t{1} << g.nx); ++mask) {
      uint64_t nb = 0;
      for (int i = 0; i < g.nx; ++i)
        if (mask & (uint32_t{1} << i)) nb |= rm[i];
      int d = std::popcount(mask) - std::popcount(nb);
      if (d > best) best = d;
    }
    if (best == 0) {
      // Union of all tight sets (deficiency maximizers other than empty).
      for (uint32_t mask = 1; mask < (uint32_t{1} << g.nx); ++mask) {
        uint64_t nb = 0;
        for (int i = 0; i < g.nx; ++i)
          if (mask & (uint32_t{1} << i)) nb |= rm[i];
        if (std::popcount(mask) == std::popcount(nb)) unions |= mask;
      }
      return mask_to_set(unions);
    }
    for (uint32_t mask = 1; mask < (uint32_t{1} << g.nx); ++mask) {
      uint64_t nb = 0;
      for (int i = 0; i < g.nx; ++i)
        if (mask & (uint32_t{1} << i)) nb |= rm[i];
      if (std::popcount(mask) - std::popcount(nb) == best) unions |= mask;
    }
    return mask_to_set(unions);
  }
  // Large graphs: x lies in some maximizer iff removing x together with its
  // whole neighborhood costs alpha' exactly |N(x)| (supermodularity of the
  // deficiency makes the union of maximizers a maximizer).
  const int alpha = max_matching_size(g);
  const int p = g.nx - alpha;
  std::vector<int> out;
  for (int x = 0; x < g.nx; ++x) {
    auto nb = neighbors_x(g, x);
    std::vector<int> rows, cols;
    for (int i = 0; i < g.nx; ++i)
      if (i != x) rows.push_back(i);
    std::vector<char> drop(g.ny, 0);
    for (int j : nb) drop[j] = 1;
    for (int j = 0; j < g.ny; ++j)
      if (!drop[j]) cols.push_back(j);
    Bigraph h = induced_subgraph(g, rows, cols);
    int md = (g.nx - 1) - max_matching_size(h);  // max deficiency within X-x
    if (1 - static_cast<int>(nb.size()) + md == p && p > 0) out.push_back(x);
    if (p == 0 && 1 - static_cast<int>(nb.size()) + md == 0) out.push_back(x);
  }
  return out;
}

bool is_tight(const Bigraph& g, const std::vector<int>& S) {
  if (S.empty()) return false;
  return neighborhood(g, S).size() == S.size();
}

SurplusResult x_surplus_check(const Bigraph& g) {
  SurplusResult res;
  if (g.nx < 2) {
    res.ok = true;
    return res;
  }
  if (g.nx <= 20 && g.ny <= 62) {
    auto rm = row_masks(g);
    for (uint32_t mask = 1; mask + 1 < (uint32_t{1} << g.nx); ++mask) {
      uint64_t nb = 0;
      for (int i = 0; i < g.nx; ++i)
        if (mask & (uint32_t{1} << i)) nb |= rm[i];
      if (std::popcount(nb) <= std::popcount(mask)) {
        res.ok = false;
        res.witness = mask_to_set(mask);
        return res;
      }
    }
    res.ok = true;
    return res;
  }
  // Pair-deletion characterization: surplus iff Hall holds and removing any
  // (x, y) pair still leaves an (X - x)-matching.
  HallResult h = hall_check(g);
  if (!h.ok) {
    res.ok = false;
    res.witness = h.violator;
    return res;
  }
  for (int i = 0; i < g.nx; ++i) {
    for (int j = 0; j < g.ny; ++j) {
      Bigraph sub = remove_vertex_pair(g, i, j);
      if (max_matching_size(sub) < g.nx - 1) {
        HallResult hs = hall_check(sub);
        // Re-map indices past the removed row.
        res.ok = false;
        for (int v : hs.violator) res.witness.push_back(v >= i ? v + 1 : v);
        return res;
      }
    }
  }
  res.ok = true;
  return res;
}

bool is_x_surplus(const Bigraph& g) { return x_surplus_check(g).ok; }

bool is_leafless(const Bigraph& g) {
  for (int i = 0; i < g.nx; ++i)
    if (distinct_degree_x(g, i) < 2) return false;
  for (int j = 0; j < g.ny; ++j)
    if (distinct_degree_y(g, j) < 2) return false;
  return true;
}

int component_count(const Bigraph& g) {
  const int v = g.nx + g.ny;
  std::vector<int> parent(v);
  for (int i = 0; i < v; ++i) parent[i] = i;
  auto find = [&](int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (int i = 0; i < g.nx; ++i)
    for (int j = 0; j < g.ny; ++j)
      if (g.mult[i][j] > 0) parent[find(i)] = find(g.nx + j);
  int comps = 0;
  for (int i = 0; i < v; ++i) comps += find(i) == i;
  return comps;
}

bool is_connected(const Bigraph& g) { return component_count(g) <= 1; }

TightSets tight_sets(const Bigraph& g) {
  if (g.nx > 20) throw std::invalid_argument("tight_sets limited to nx <= 20");
  TightSets out;
  if (g.nx < 2) return out;  // no nonempty proper subsets to speak of
  auto rm = row_masks(g);
  std::vector<uint32_t> tight_masks;
  uint32_t unions = 0;
  for (uint32_t mask = 1; mask + 1 < (uint32_t{1} << g.nx); ++mask) {
    uint64_t nb = 0;
    for (int i = 0; i < g.nx; ++i)
      if (mask & (uint32_t{1} << i)) nb |= rm[i];
    if (std::popcount(nb) == std::popcount(mask)) {
      tight_masks.push_back(mask);
      unions |= mask;
      out.all.push_back(mask_to_set(mask));
    }
  }
  if (tight_masks.empty()) return out;
  out.any = true;
  for (uint32_t m : tight_masks) {
    bool minimal = true;
    for (uint32_t o : tight_masks)
      if (o != m && (o & m) == o) {
        minimal = false;
        break;
      }
    if (minimal) {
      out.minimal = mask_to_set(m);
      break;  // masks ascend, so the first inclusion-minimal is lex-least
    }
  }
  const uint32_t full = (uint32_t{1} << g.nx) - 1;
  if (unions != full && std::find(tight_masks.begin(), tight_masks.end(),
                                  unions) != tight_masks.end()) {
    out.maximal = mask_to_set(unions);
  } else {
    for (uint32_t m : tight_masks) {
      bool maximal = true;
      for (uint32_t o : tight_masks)
        if (o != m && (o & m) == m) {
          maximal = false;
          break;
        }
      if (maximal) {
        out.maximal = mask_to_set(m);
        break;
      }
    }
  }
  return out;
}

bool is_elementary(const Bigraph& g) {
  if (g.nx != g.ny) throw std::invalid_argument("elementary needs |X| == |Y|");
  if (max_matching_size(g) != g.nx)
    throw std::invalid_argument("elementary needs a perfect matching");
  if (g.nx == 1) return true;
  for (int i = 0; i < g.nx; ++i)
    for (int j = 0; j < g.ny; ++j)
      if (max_matching_size(remove_vertex_pair(g, i, j)) != g.nx - 1)
        return false;
  return true;
}

namespace {

struct EarBuilder {
  const Bigraph& g;
  std::vector<int> match_x;              // reference perfect matching
  std::vector<std::vector<long long>> usedm;
  std::vector<char> in_h;                // encoded vertices in the subgraph
  EarDecomposition d;

  explicit EarBuilder(const Bigraph& graph)
      : g(graph),
        match_x(maximum_matching(graph)),
        usedm(graph.nx, std::vector<long long>(graph.ny, 0)),
        in_h(graph.nx + graph.ny, 0) {}

  bool edge_in_m(int xi, int yj) const { return match_x[xi] == yj; }

  void add_chords() {
    bool progress = true;
    while (progress) {
      progress = false;
      for (int i = 0; i < g.nx; ++i) {
        for (int j = 0; j < g.ny; ++j) {
          while (in_h[i] && in_h[g.nx + j] && usedm[i][j] < g.mult[i][j]) {
            d.ears.push_back({i, g.nx + j});
            ++usedm[i][j];
            progress = true;
          }
        }
      }
    }
  }

  // Alternating cycle through the unused boundary edge (bi, bj) in the
  // symmetric difference of the reference matching and a perfect matching
  // forced through that edge; returns the encoded vertex sequence.
  std::vector<int> cycle_through(int bi, int bj) {
    Bigraph sub = remove_vertex_pair(g, bi, bj);
    auto sub_match = maximum_matching(sub);
    std::vector<int> me(g.nx, -1);  // forced matching, x index -> y index
    me[bi] = bj;
    for (int i2 = 0, a = 0; i2 < g.nx; ++i2) {
      if (i2 == bi) continue;
      int jm = sub_match[a++];
      me[i2] = jm >= bj ? jm + 1 : jm;
    }
    // Walk the symmetric-difference cycle containing (bi, bj).
    std::vector<int> mate_m_y(g.ny, -1), mate_e_y(g.ny, -1);
    for (int i2 = 0; i2 < g.nx; ++i2) {
      mate_m_y[match_x[i2]] = i2;
      mate_e_y[me[i2]] = i2;
    }
    std::vector<int> seq;
    int cur = bi;
    bool via_me = true;  // next edge to traverse is from the forced matching
    do {
      seq.push_back(cur);
      if (cur < g.nx) {
        cur = g.nx + (via_me ? me[cur] : match_x[cur]);
      } else {
        cur = via_me ? mate_e_y[cur - g.nx] : mate_m_y[cur - g.nx];
      }
      via_me = !via_me;
    } while (cur != bi);
    return seq;
  }

  void graft_cycle(std::vector<int> seq) {
    const int len = static_cast<int>(seq.size());
    // Rotate so the walk starts at a vertex already in the subgraph (the
    // boundary edge may have either endpoint inside).
    int start = 0;
    while (start < len && !in_h[seq[start]]) ++start;
    std::rotate(seq.begin(), seq.begin() + start, seq.end());
    std::vector<int> anchors;
    for (int p = 0; p < len; ++p)
      if (in_h[seq[p]]) anchors.push_back(p);
    for (size_t a = 0; a < anchors.size(); ++a) {
      int from = anchors[a];
      int to = (a + 1 < anchors.size()) ? anchors[a + 1] : len;  // wraps to 0
      std::vector<int> ear;
      for (int p = from; p < to; ++p) ear.push_back(seq[p]);
      ear.push_back(seq[to % len]);
      if (ear.size() == 2) {
        int xi = ear[0] < g.nx ? ear[0] : ear[1];
        int yj = (ear[0] < g.nx ? ear[1] : ear[0]) - g.nx;
        // A lone matched edge between existing vertices is already present;
        // a chord from the forced matching becomes a length-1 ear if copies
        // remain.
        if (edge_in_m(xi, yj)) continue;
        if (usedm[xi][yj] >= g.mult[xi][yj]) continue;
        d.ears.push_back(ear);
        ++usedm[xi][yj];
        continue;
      }
      d.ears.push_back(ear);
      for (size_t p = 0; p + 1 < ear.size(); ++p) {
        int u = ear[p], w = ear[p + 1];
        int xi = u < g.nx ? u : w;
        int yj = (u < g.nx ? w : u) - g.nx;
        ++usedm[xi][yj];
      }
      for (size_t p = 1; p + 1 < ear.size(); ++p) in_h[ear[p]] = 1;
    }
  }

  EarDecomposition run() {
    d.base = {0, match_x[0]};
    usedm[0][match_x[0]] = 1;
    in_h[0] = in_h[g.nx + match_x[0]] = 1;
    add_chords();
    long long total = 0;
    for (auto& row : g.mult)
      for (long long v : row) total += v;
    for (;;) {
      if (static_cast<long long>(d.ears.size()) > total)
        throw std::logic_error("ear construction failed to make progress");
      int bi = -1, bj = -1;
      for (int i = 0; i < g.nx && bi < 0; ++i)
        for (int j = 0; j < g.ny && bi < 0; ++j)
          if (usedm[i][j] < g.mult[i][j] &&
              (in_h[i] != in_h[g.nx + j])) {
            bi = i;
            bj = j;
          }
      if (bi < 0) break;
      graft_cycle(cycle_through(bi, bj));
      add_chords();
    }
    return d;
  }
};

}  // namespace

EarDecomposition odd_ear_decomposition(const Bigraph& g) {
  if (!is_elementary(g))
    throw std::invalid_argument("ear decomposition needs an elementary graph");
  return EarBuilder(g).run();
}

bool validate_ear_decomposition(const Bigraph& g, const EarDecomposition& d) {
  const int v = g.nx + g.ny;
  auto [b0, b1] = d.base;
  if (b0 < 0 || b0 >= g.nx || b1 < 0 || b1 >= g.ny || g.mult[b0][b1] == 0)
    return false;
  std::vector<std::vector<long long>> usedm(g.nx,
                                            std::vector<long long>(g.ny, 0));
  std::vector<char> in_h(v, 0);
  usedm[b0][b1] = 1;
  in_h[b0] = in_h[g.nx + b1] = 1;
  for (const auto& ear : d.ears) {
    if (ear.size() < 2 || ear.size() % 2 != 0) return false;  // odd edges
    for (int u : ear)
      if (u < 0 || u >= v) return false;
    if (!in_h[ear.front()] || !in_h[ear.back()]) return false;
    // Endpoints on opposite sides; internal vertices fresh and distinct.
    if ((ear.front() < g.nx) == (ear.back() < g.nx)) return false;
    std::vector<char> fresh(v, 0);
    for (size_t p = 1; p + 1 < ear.size(); ++p) {
      if (in_h[ear[p]] || fresh[ear[p]]) return false;
      fresh[ear[p]] = 1;
    }
    for (size_t p = 0; p + 1 < ear.size(); ++p) {
      int u = ear[p], w = ear[p + 1];
      if ((u < g.nx) == (w < g.nx)) return false;  // must alternate sides
      int xi = u < g.nx ? u : w;
      int yj = (u < g.nx ? w : u) - g.nx;
      if (usedm[xi][yj] >= g.mult[xi][yj]) return false;
      ++usedm[xi][yj];
    }
    for (size_t p = 1; p + 1 < ear.size(); ++p) in_h[ear[p]] = 1;
  }
  for (int u = 0; u < v; ++u)
    if (!in_h[u]) return false;
  long long m = 0;
  for (int i = 0; i < g.nx; ++i)
    for (int j = 0; j < g.ny; ++j) {
      if (usedm[i][j] != g.mult[i][j]) return false;
      m += g.mult[i][j];
    }
  return static_cast<long long>(d.ears.size()) + 1 == m - v + 2;
}

bool has_pendant_4cycle(const Bigraph& g) {
  const int base_comps = component_count(g);
  for (int i = 0; i < g.nx; ++i)
    for (int i2 = i + 1; i2 < g.nx; ++i2)
      for (int j = 0; j < g.ny; ++j)
        for (int j2 = j + 1; j2 < g.ny; ++j2) {
          if (!(g.mult[i][j] && g.mult[i][j2] && g.mult[i2][j] &&
                g.mult[i2][j2]))
            continue;
          long long degs[4] = {degree_x(g, i), degree_x(g, i2),
                               degree_y(g, j), degree_y(g, j2)};
          int twos = 0, hub = -1;
          for (int q = 0; q < 4; ++q)
            degs[q] == 2 ? ++twos : hub = q;
          if (twos != 3) continue;
          std::vector<int> rows, cols;
          for (int a = 0; a < g.nx; ++a)
            if (!(hub == 0 && a == i) && !(hub == 1 && a == i2))
              rows.push_back(a);
          for (int b = 0; b < g.ny; ++b)
            if (!(hub == 2 && b == j) && !(hub == 3 && b == j2))
              cols.push_back(b);
          Bigraph h = induced_subgraph(g, rows, cols);
          if (component_count(h) > base_comps) return true;
        }
  return false;
}

std::vector<std::vector<int>> slim_sets(const Bigraph& g) {
  if (g.nx > 12) throw std::invalid_argument("slim_sets limited to nx <= 12");
  std::vector<std::vector<int>> out;
  if (g.ny > 62) return out;
  auto rm = row_masks(g);
  for (uint32_t mask = 1; mask < (uint32_t{1} << g.nx); ++mask) {
    uint64_t nb = 0;
    for (int i = 0; i < g.nx; ++i)
      if (mask & (uint32_t{1} << i)) nb |= rm[i];
    if (std::popcount(nb) != std::popcount(mask) + 1) continue;
    bool witness = false;
    for (int j = 0; j < g.ny && !witness; ++j) {
      if (!(nb & (uint64_t{1} << j))) continue;
      if (distinct_degree_y(g, j) < 3) continue;
      int inside = 0;
      for (int i = 0; i < g.nx; ++i)
        if ((mask & (uint32_t{1} << i)) && g.mult[i][j] > 0) ++inside;
      if (inside == 1) witness = true;
    }
    if (witness) out.push_back(mask_to_set(mask));
  }
  return out;
}

StructureReport analyze(const Bigraph& g) {
  StructureReport r;
  r.p = params(g);
  r.alpha = max_matching_size(g);
  try {
    r.phi = count_max_matchings(g).count;
    r.phi_computed = true;
  } catch (const std::invalid_argument&) {
    r.phi_computed = false;
  }
  HallResult h = hall_check(g);
  r.hall = h.ok;
  r.hall_violator = h.violator;
  r.deficiency = g.nx - r.alpha;
  r.x_surplus = is_x_surplus(g);
  if (g.nx <= 20 && g.ny <= 62) {
    r.tight = tight_sets(g);
    r.tight_computed = true;
  }
  r.leafless = is_leafless(g);
  r.connected = is_connected(g);
  if (g.nx == g.ny && r.alpha == g.nx) r.elementary = is_elementary(g);
  r.pendant_4cycle = has_pendant_4cycle(g);
  if (g.nx <= 12 && g.ny <= 62) {
    r.slim = slim_sets(g);
    r.slim_computed = true;
  }
  return r;
}

}  // namespace bg
