#include "bigraph/normalize.hpp"

#include <algorithm>
#include <stdexcept>

#include "bigraph/counting.hpp"
#include "bigraph/structure.hpp"

namespace bg {

namespace {

long long row_degree(const Bigraph& g, int x) {
  long long d = 0;
  for (long long v : g.mult[x]) d += v;
  return d;
}

// Number of matchings of g - x - y that still saturate the remaining rows.
// Under surplus for proper subsets this equals the count of maximum
// matchings of the deleted graph; the size guard covers the general case.
Int deleted_pair_count(const Bigraph& g, int x, int y) {
  MatchCount mc = count_max_matchings(remove_vertex_pair(g, x, y));
  return mc.size == g.nx - 1 ? mc.count : Int(0);
}

void delete_copies(Bigraph& g, std::vector<ShiftStep>& steps, int x, int y,
                   long long copies) {
  g.mult[x][y] -= copies;
  steps.push_back({x, y, -1, copies});
}

void add_copies(Bigraph& g, std::vector<ShiftStep>& steps, int x, int y,
                long long copies) {
  g.mult[x][y] += copies;
  steps.push_back({x, -1, y, copies});
}

void move_copies(Bigraph& g, std::vector<ShiftStep>& steps, int x, int from,
                 int to, long long copies) {
  g.mult[x][from] -= copies;
  g.mult[x][to] += copies;
  steps.push_back({x, from, to, copies});
}

// Replaces row x by one copy on `mate` plus k-1 copies inside the block's
// columns (a heavy lex-least column, then singles).  Keeping the mate at
// multiplicity one is what stops the rebuilt rows from inflating the count:
// in the result they have exactly one way to extend a block matching.
void rebuild_row(Bigraph& g, std::vector<ShiftStep>& steps, int x, int mate,
                 const std::vector<int>& cols, long long k, long long r) {
  for (int j = 0; j < g.ny; ++j)
    if (g.mult[x][j] > 0) delete_copies(g, steps, x, j, g.mult[x][j]);
  add_copies(g, steps, x, mate, 1);
  long long remaining = k - 1;
  if (remaining > 0) {
    long long heavy = r >= 2 ? k - r + 1 : remaining;
    add_copies(g, steps, x, cols[0], heavy);
    remaining -= heavy;
    for (size_t i = 1; remaining > 0; ++i, --remaining)
      add_copies(g, steps, x, cols[i], 1);
  }
}

NormalizeResult normalize_to(Bigraph g, long long k, long long r);

// A subset of X without surplus is tight under an X-saturating matching;
// its block is normalized recursively and every outside row is rebuilt onto
// its matched partner, which necessarily lies outside the block's columns.
NormalizeResult reduce_through_tight_block(Bigraph g, long long k, long long r,
                                           std::vector<int> s) {
  std::vector<ShiftStep> steps;
  std::sort(s.begin(), s.end());
  std::vector<int> cols = neighborhood(g, s);
  if (cols.size() != s.size())
    throw std::logic_error("tight-block reduction on a non-tight subset");
  std::vector<int> mate = maximum_matching(g);
  std::vector<char> in_s(g.nx, 0);
  for (int x : s) in_s[x] = 1;

  NormalizeResult sub = normalize_to(induced_subgraph(g, s, cols), k, r);
  for (const ShiftStep& st : sub.steps) {
    ShiftStep remapped = st;
    remapped.x = s[st.x];
    if (st.from_y >= 0) remapped.from_y = cols[st.from_y];
    if (st.to_y >= 0) remapped.to_y = cols[st.to_y];
    steps.push_back(remapped);
  }
  for (size_t i = 0; i < s.size(); ++i) {
    for (int j = 0; j < g.ny; ++j) g.mult[s[i]][j] = 0;
    for (size_t j = 0; j < cols.size(); ++j)
      g.mult[s[i]][cols[j]] = sub.g.mult[i][j];
  }
  std::vector<char> in_cols(g.ny, 0);
  for (int j : cols) in_cols[j] = 1;
  if (static_cast<long long>(cols.size()) < std::max(r - 1, 1LL))
    throw std::logic_error("tight block narrower than the distinct floor");
  for (int x = 0; x < g.nx; ++x) {
    if (in_s[x]) continue;
    if (mate[x] < 0 || in_cols[mate[x]])
      throw std::logic_error("saturating matching misses the block complement");
    rebuild_row(g, steps, x, mate[x], cols, k, r);
  }
  NormalizeResult out;
  out.g = std::move(g);
  out.steps = std::move(steps);
  out.k = k;
  out.r = r;
  return out;
}

NormalizeResult normalize_to(Bigraph g, long long k, long long r) {
  std::vector<ShiftStep> steps;
  if (g.nx == 1) {
    // Reroute every stray copy onto the first r neighbors, then trim.
    std::vector<int> kept;
    for (int j = 0; j < g.ny && static_cast<long long>(kept.size()) < r; ++j)
      if (g.mult[0][j] > 0) kept.push_back(j);
    for (int j = 0; j < g.ny; ++j) {
      bool is_kept = std::find(kept.begin(), kept.end(), j) != kept.end();
      if (!is_kept && g.mult[0][j] > 0)
        move_copies(g, steps, 0, j, kept[0], g.mult[0][j]);
    }
    for (size_t i = 1; i < kept.size(); ++i)
      if (g.mult[0][kept[i]] > 1)
        move_copies(g, steps, 0, kept[i], kept[0], g.mult[0][kept[i]] - 1);
    if (g.mult[0][kept[0]] > k - r + 1)
      delete_copies(g, steps, 0, kept[0], g.mult[0][kept[0]] - (k - r + 1));
    NormalizeResult out;
    out.g = std::move(g);
    out.steps = std::move(steps);
    out.k = k;
    out.r = r;
    return out;
  }

  for (;;) {
    bool done;
    if (r >= 2) {
      done = true;
      for (int x = 0; x < g.nx && done; ++x)
        done = row_in_profile(g, x, k, r);
    } else {
      done = false;
      for (int x = 0; x < g.nx && !done; ++x)
        done = row_in_profile(g, x, k, r);
    }
    if (done) break;

    SurplusResult surplus = x_surplus_check(g);
    if (!surplus.ok) {
      NormalizeResult tail =
          reduce_through_tight_block(std::move(g), k, r, surplus.witness);
      steps.insert(steps.end(), tail.steps.begin(), tail.steps.end());
      tail.steps = std::move(steps);
      return tail;
    }

    // Trim one copy from a row above the degree floor.  Multiplicity is
    // preferred; a plain edge deletion keeps Hall's condition because the
    // surplus of the other rows protects every neighborhood.
    int trim_x = -1;
    for (int x = 0; x < g.nx && trim_x < 0; ++x)
      if (row_degree(g, x) > k) trim_x = x;
    if (trim_x >= 0) {
      int best = -1;
      for (int j = 0; j < g.ny; ++j)
        if (g.mult[trim_x][j] > 0 &&
            (best < 0 || g.mult[trim_x][j] > g.mult[trim_x][best]))
          best = j;
      delete_copies(g, steps, trim_x, best, 1);
      continue;
    }

    int x = -1;
    for (int i = 0; i < g.nx && x < 0; ++i)
      if (!row_in_profile(g, i, k, r)) x = i;
    std::vector<int> nbrs = neighbors_x(g, x), heavies;
    for (int j : nbrs)
      if (g.mult[x][j] >= 2) heavies.push_back(j);
    int y1, y2;
    if (heavies.size() >= 2) {
      y1 = heavies[0];
      y2 = heavies[1];
    } else {
      y1 = nbrs[0];
      y2 = nbrs[1];
    }
    Int c1 = deleted_pair_count(g, x, y1), c2 = deleted_pair_count(g, x, y2);
    int dest = c1 <= c2 ? y1 : y2;
    int src = c1 <= c2 ? y2 : y1;
    long long distinct = static_cast<long long>(nbrs.size());
    long long copies = distinct > r ? g.mult[x][src] : g.mult[x][src] - 1;
    if (copies <= 0) throw std::logic_error("empty shift selected");
    move_copies(g, steps, x, src, dest, copies);
  }

  NormalizeResult out;
  out.g = std::move(g);
  out.steps = std::move(steps);
  out.k = k;
  out.r = r;
  return out;
}

}  // namespace

bool row_in_profile(const Bigraph& g, int x, long long k, long long r) {
  long long deg = 0, distinct = 0, heavy = 0;
  for (long long v : g.mult[x]) {
    deg += v;
    if (v > 0) ++distinct;
    if (v > 1) ++heavy;
  }
  if (deg != k || distinct != r) return false;
  if (k == r) return heavy == 0;
  long long want = k - r + 1;
  for (long long v : g.mult[x])
    if (v > 1 && v != want) return false;
  return heavy == 1;
}

NormalizeResult normalize_shift_reduce(const Bigraph& g) {
  if (g.nx == 0 || g.ny == 0)
    throw std::invalid_argument("normalize_shift_reduce needs a nonempty graph");
  GraphParams p = params(g);
  if (p.k < 1)
    throw std::invalid_argument("normalize_shift_reduce needs no empty row");
  if (max_matching_size(g) != g.nx)
    throw std::invalid_argument(
        "normalize_shift_reduce needs an X-saturating matching");
  return normalize_to(g, p.k, p.r);
}

Bigraph apply_steps(const Bigraph& g, const std::vector<ShiftStep>& steps) {
  Bigraph out = g;
  for (const ShiftStep& st : steps) {
    if (st.x < 0 || st.x >= out.nx || st.copies <= 0 ||
        (st.from_y < 0 && st.to_y < 0) || st.from_y >= out.ny ||
        st.to_y >= out.ny)
      throw std::invalid_argument("malformed step");
    if (st.from_y >= 0) {
      if (out.mult[st.x][st.from_y] < st.copies)
        throw std::invalid_argument("step removes missing copies");
      out.mult[st.x][st.from_y] -= st.copies;
    }
    if (st.to_y >= 0) out.mult[st.x][st.to_y] += st.copies;
  }
  return out;
}

Bigraph merge_y(const Bigraph& g, int y1, int y2) {
  if (y1 == y2 || y1 < 0 || y2 < 0 || y1 >= g.ny || y2 >= g.ny)
    throw std::invalid_argument("merge_y needs two distinct columns");
  int lo = std::min(y1, y2), hi = std::max(y1, y2);
  Bigraph out(g.nx, g.ny - 1);
  for (int i = 0; i < g.nx; ++i) {
    int c = 0;
    for (int j = 0; j < g.ny; ++j) {
      if (j == hi) continue;
      out.mult[i][c] = g.mult[i][j] + (j == lo ? g.mult[i][hi] : 0);
      ++c;
    }
  }
  return out;
}

}  // namespace bg
