#include "bigraph/counting.hpp"

#include <bit>
#include <cstdint>
#include <stdexcept>

namespace bg {

Int factorial(long long n) {
  if (n < 0) throw std::invalid_argument("factorial of negative");
  Int f = 1;
  for (long long i = 2; i <= n; ++i) f *= i;
  return f;
}

namespace {

// Kuhn's augmenting-path step on the underlying simple graph.
bool try_augment(const Bigraph& g, int i, std::vector<char>& used,
                 std::vector<int>& match_y) {
  for (int j = 0; j < g.ny; ++j) {
    if (g.mult[i][j] > 0 && !used[j]) {
      used[j] = 1;
      if (match_y[j] < 0 || try_augment(g, match_y[j], used, match_y)) {
        match_y[j] = i;
        return true;
      }
    }
  }
  return false;
}

// Branch over rows: row i is matched to some available column (weight =
// multiplicity) or left unmatched.  Returns, into best/count, the maximum
// matched-row total and the weighted count attaining it.
void oracle_rec(const Bigraph& g, int i, uint64_t used_cols, int matched,
                int& best, Int& count, const Int& weight) {
  if (i == g.nx) {
    if (matched > best) {
      best = matched;
      count = weight;
    } else if (matched == best) {
      count += weight;
    }
    return;
  }
  // Upper-bound prune: even matching every remaining row cannot beat best
  // minus... (kept exact and simple: only prune when strictly impossible to
  // reach `best`).
  if (matched + (g.nx - i) < best) return;
  oracle_rec(g, i + 1, used_cols, matched, best, count, weight);
  for (int j = 0; j < g.ny; ++j) {
    if (g.mult[i][j] > 0 && !(used_cols & (uint64_t{1} << j))) {
      oracle_rec(g, i + 1, used_cols | (uint64_t{1} << j), matched + 1, best,
                 count, weight * g.mult[i][j]);
    }
  }
}

}  // namespace

std::vector<int> maximum_matching(const Bigraph& g) {
  std::vector<int> match_y(g.ny, -1);
  for (int i = 0; i < g.nx; ++i) {
    std::vector<char> used(g.ny, 0);
    try_augment(g, i, used, match_y);
  }
  std::vector<int> match_x(g.nx, -1);
  for (int j = 0; j < g.ny; ++j)
    if (match_y[j] >= 0) match_x[match_y[j]] = j;
  return match_x;
}

int max_matching_size(const Bigraph& g) {
  auto match_x = maximum_matching(g);
  int size = 0;
  for (int j : match_x) size += j >= 0;
  return size;
}

MatchCount count_max_matchings_oracle(const Bigraph& g) {
  if (g.ny > 62) throw std::invalid_argument("oracle limited to ny <= 62");
  int best = -1;  // first leaf (possibly the empty matching) establishes it
  Int count = 0;
  oracle_rec(g, 0, 0, 0, best, count, 1);
  return {best, count};
}

Int permanent(const std::vector<std::vector<long long>>& a) {
  const int d = static_cast<int>(a.size());
  for (auto& row : a)
    if (static_cast<int>(row.size()) != d)
      throw std::invalid_argument("permanent needs a square matrix");
  if (d > 30) throw std::invalid_argument("permanent limited to d <= 30");
  if (d == 0) return 1;
  // Ryser with Gray code: iterate over nonempty column subsets, maintaining
  // row sums incrementally.  Row sums stay within long long for desk-scale
  // inputs (entries are edge multiplicities); guard anyway.
  for (auto& row : a)
    for (long long v : row)
      if (v > (1LL << 40)) throw std::invalid_argument("entry too large");
  std::vector<long long> sums(d, 0);
  Int total = 0;
  const uint64_t full = uint64_t{1} << d;
  uint64_t prev_gray = 0;
  for (uint64_t idx = 1; idx < full; ++idx) {
    const uint64_t gray = idx ^ (idx >> 1);
    const uint64_t diff = gray ^ prev_gray;
    const int bit = std::countr_zero(diff);
    const bool added = gray & diff;
    for (int i = 0; i < d; ++i)
      sums[i] += added ? a[i][bit] : -a[i][bit];
    prev_gray = gray;
    Int prod = 1;
    for (int i = 0; i < d; ++i) {
      if (sums[i] == 0) {
        prod = 0;
        break;
      }
      prod *= sums[i];
    }
    if (prod == 0) continue;
    const int popcnt = std::popcount(gray);
    if ((d - popcnt) % 2 == 0)
      total += prod;
    else
      total -= prod;
  }
  return total;
}

Int count_x_matchings(const Bigraph& g) {
  if (g.ny < g.nx)
    throw std::invalid_argument("count_x_matchings needs ny >= nx");
  const int t = g.ny - g.nx;
  if (g.ny <= 30) {
    std::vector<std::vector<long long>> a(g.ny,
                                          std::vector<long long>(g.ny, 1));
    for (int i = 0; i < g.nx; ++i) a[i] = g.mult[i];
    Int per = permanent(a);
    Int tf = factorial(t);
    Int q = per / tf;
    if (q * tf != per)
      throw std::logic_error("permanent not divisible by t!");
    return q;
  }
  // Large ny: fall back to direct branching if the row count is small.
  if (g.nx <= 12 && g.ny <= 62) {
    MatchCount mc = count_max_matchings_oracle(g);
    return mc.size == g.nx ? mc.count : Int(0);
  }
  throw std::invalid_argument("graph too large for exact counting");
}

MatchCount count_max_matchings(const Bigraph& g) {
  if (g.ny < g.nx) return count_max_matchings(transpose(g));
  MatchCount out;
  out.size = max_matching_size(g);
  const int p = g.nx - out.size;
  if (p == 0) {
    out.count = count_x_matchings(g);
    return out;
  }
  // Deficiency reduction: append p universal columns; X-matchings of the
  // augmented graph correspond to (maximum matching, assignment of the p
  // unmatched rows to the p new columns) pairs, i.e. count * p!.
  Bigraph aug = add_universal_columns(g, p);
  Int per = count_x_matchings(aug);
  Int pf = factorial(p);
  out.count = per / pf;
  if (out.count * pf != per)
    throw std::logic_error("deficiency reduction not divisible by p!");
  return out;
}

Int count_containing_edge(const Bigraph& g, int i, int j) {
  if (i < 0 || i >= g.nx || j < 0 || j >= g.ny)
    throw std::invalid_argument("vertex index out of range");
  if (g.mult[i][j] == 0) return 0;
  const int alpha = max_matching_size(g);
  Bigraph h = remove_vertex_pair(g, i, j);
  MatchCount rest = count_max_matchings(h);
  if (rest.size != alpha - 1) return 0;
  return Int(g.mult[i][j]) * rest.count;
}

}  // namespace bg
