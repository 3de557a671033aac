#include "bigraph/bounds.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "bigraph/counting.hpp"
#include "bigraph/structure.hpp"

namespace bg {

namespace {

void require(bool cond, const char* msg) {
  if (!cond) throw std::invalid_argument(msg);
}

}  // namespace

Int bound_main(long long n, long long k, long long r) {
  require(n >= 1, "bound_main needs n >= 1");
  require(k >= r && r >= 1, "bound_main needs k >= r >= 1");
  if (n >= r) return factorial(r) * (k - r + 1);
  // (r + n(k-r)) * (r-1)! / (r-n)!  — the falling product (r-1)...(r-n+1).
  Int prod = 1;
  for (long long i = 1; i <= n - 1; ++i) prod *= (r - i);
  return (Int(r) + Int(n) * (k - r)) * prod;
}

Int bound_mhall(long long n, long long k) {
  require(n >= 0 && k >= 0, "bound_mhall needs n, k >= 0");
  Int prod = 1;
  for (long long i = 0; i < std::min(n, k); ++i) prod *= (k - i);
  return prod;
}

Int bound_defect(long long k, long long r, long long p) {
  require(p >= 1, "bound_defect needs p >= 1");
  require(k >= r && r >= 1, "bound_defect needs k >= r >= 1");
  return (factorial(r + p) / factorial(p)) * (k - r + 1);
}

Int bound_y2(long long n, long long k) {
  require(n >= 2 && k >= 2, "bound_y2 needs n, k >= 2");
  if (n == 2 || k == 2) return 2 * k - 2;
  if (k == 3) return 2 * k - 1;
  return 2 * k;
}

Int bound_4k(long long n, long long k) {
  require(n >= 2 && k >= 2, "bound_4k needs n, k >= 2");
  return std::min(Int(n) * (k - 2) + 2, Int(4) * k - 4);
}

Int bound_2kt(long long n, long long k, long long t, long long delta_y) {
  require(n >= 2 && t >= 0 && k >= 1, "bound_2kt needs n >= 2, t >= 0, k >= 1");
  require(delta_y >= 1, "bound_2kt needs min Y-degree >= 1");
  // The k(t+1) line needs three X-rows once t >= 1; with two rows and a
  // degree-1 Y-vertex it can fail (e.g. rows [0,1,2,1] and [1,1,2,0] admit
  // only 11 maximum matchings while k(t+1) = 12).  With two rows and
  // delta_y >= 2 it is subsumed by the (2k-t-2)(t+1) line, since every
  // column needing two edge-endpoints forces k >= t + 2.
  require(n >= 3 || t == 0 || delta_y >= 2,
          "bound_2kt with two X-vertices and extra Y-vertices needs min "
          "Y-degree >= 2");
  Int best = 0;
  if (n >= 3 || t == 0) best = Int(k) * (t + 1);
  if (delta_y >= 2 && n == 2) best = std::max(best, Int(2 * k - t - 2) * (t + 1));
  if (delta_y >= 2 && k == 3 && n >= 3)
    best = std::max(best, Int(2) * k * (t + 1) - 1);
  if (delta_y >= 2 && k >= 4 && n >= 3)
    best = std::max(best, Int(2) * k * (t + 1));
  return best;
}

Int bound_kt1(long long k, long long t) {
  require(k >= 1 && t >= 1, "bound_kt1 needs k >= 1, t >= 1");
  return Int(k) * (t + 1);
}

Int bound_2kt_refined(long long n, long long k, long long t) {
  require(n >= 3 && t >= 1 && k >= 1,
          "bound_2kt_refined needs n >= 3, t >= 1, k >= 1");
  Int v = Int(2) * k * (t + 1);
  if (n == 3 && k == 3 && t == 1) v -= 1;
  return v;
}

Int bound_leafmain(long long n, long long t, long long b) {
  require(n >= 1 && t >= 0, "bound_leafmain needs n >= 1, t >= 0");
  return (Int(n - 1) * t + 2 + b) * (t + 1);
}

Int bound_surplus(long long m, long long v) { return Int(m) - v + 2; }

Int bound_t_plus_1(long long t) {
  require(t >= 0, "bound_t_plus_1 needs t >= 0");
  return Int(t) + 1;
}

Int bound_case1(long long k, long long r, long long t) {
  require(k >= r && r >= 1, "bound_case1 needs k >= r >= 1");
  require(t >= 0, "bound_case1 needs t >= 0");
  return factorial(r) * (k - r + 1) * (factorial(r + t) / factorial(t));
}

Int bound_liu_liu(int variant, long long n, long long m, long long t,
                  long long ny) {
  switch (variant) {
    case 1:
      return Int(n) + 1;
    case 2:
      return Int(m) + Int(n - 1) * (t - 2);
    case 3:
      return Int(2) * m - Int(2) * ny;
    default:
      throw std::invalid_argument("bound_liu_liu variant must be 1, 2, or 3");
  }
}

Int bound_composed(long long k, long long r, long long p, long long n_prime,
                   long long t, long long b_prime) {
  require(k >= r && r >= 2, "bound_composed needs k >= r >= 2");
  require(p >= 0 && n_prime >= 1 && t >= 0 && b_prime >= 0,
          "bound_composed needs p, b' >= 0, n' >= 1, t >= 0");
  Int defect_factor = (factorial(r + p) / factorial(p)) * (k - r + 1);
  Int rest = (Int(n_prime - 1) * (t + p) + 2 + b_prime) * (t + p + 1);
  return defect_factor * rest;
}

Rat bound_ef(long long n, long long k) {
  require(n >= 1 && k >= 1, "bound_ef needs n, k >= 1");
  Int num = factorial(n), den = 1;
  for (long long i = 0; i < n; ++i) {
    num *= k;
    den *= n;
  }
  return Rat(num, den);
}

std::vector<std::string> theorem_ids() {
  return {"main",     "mhall",       "defect",    "y2",        "4k",
          "2kt",      "kt1",         "2kt_refined", "leafmain", "surplus",
          "t_plus_1", "case1",       "liu_liu_1", "liu_liu_2", "liu_liu_3",
          "composed", "ef"};
}

EvalContext make_context(const Bigraph& g) {
  EvalContext c;
  c.p = params(g);
  c.hall = hall_check(g).ok;
  c.alpha = max_matching_size(g);
  c.deficiency = g.nx - c.alpha;
  c.simple = true;
  for (auto& row : g.mult)
    for (long long v : row)
      if (v > 1) c.simple = false;
  c.x_surplus = is_x_surplus(g);
  std::vector<int> all(g.nx);
  for (int i = 0; i < g.nx; ++i) all[i] = i;
  c.positive_surplus =
      c.x_surplus &&
      static_cast<int>(neighborhood(g, all).size()) >= g.nx + 1;
  c.leafless = is_leafless(g);
  c.connected = is_connected(g);
  if (g.nx <= 20 && g.ny <= 62) {
    c.tight_known = true;
    c.tight_any = g.nx >= 2 && tight_sets(g).any;
  }
  int rb = (g.nx || g.ny) ? 1 << 30 : 0;
  for (int i = 0; i < g.nx; ++i) rb = std::min(rb, distinct_degree_x(g, i));
  for (int j = 0; j < g.ny; ++j) rb = std::min(rb, distinct_degree_y(g, j));
  c.r_both = rb;
  return c;
}

namespace {

void need(BoundEntry& e, bool cond, const std::string& msg) {
  if (!cond) e.failures.push_back(msg);
}

}  // namespace

BoundEntry evaluate_theorem(const std::string& id, const Bigraph& g) {
  return evaluate_theorem(id, g, make_context(g));
}

BoundEntry evaluate_theorem(const std::string& id, const Bigraph& g,
                            const EvalContext& c) {
  BoundEntry e;
  e.id = id;
  const long long n = c.p.n, t = c.p.t, k = c.p.k, dy = c.p.deltaY;
  const long long r = c.p.r, m = c.p.m;

  if (id == "main") {
    need(e, n >= 1, "X is empty");
    need(e, c.hall, "Hall condition fails");
    need(e, r >= 1, "an X-vertex is isolated");
    if (e.failures.empty()) e.bound = Rat(bound_main(n, k, r));
  } else if (id == "mhall") {
    need(e, c.simple, "graph has parallel edges");
    need(e, c.hall, "Hall condition fails");
    if (e.failures.empty()) e.bound = Rat(bound_mhall(n, k));
  } else if (id == "defect") {
    need(e, c.deficiency >= 1, "graph has no deficiency");
    need(e, r >= 1, "an X-vertex is isolated");
    if (e.failures.empty()) {
      e.bound = Rat(bound_defect(k, r, c.deficiency));
      std::ostringstream os;
      os << "p = " << c.deficiency;
      e.note = os.str();
    }
  } else if (id == "y2") {
    need(e, n >= 2, "fewer than two X-vertices");
    need(e, c.hall, "Hall condition fails");
    need(e, k >= 2, "min X-degree below 2");
    need(e, dy >= 1, "a Y-vertex is isolated");
    need(e, g.ny > g.nx || dy >= 2,
         "needs |Y| > |X| or min Y-degree >= 2");
    if (e.failures.empty()) e.bound = Rat(bound_y2(n, k));
  } else if (id == "4k") {
    need(e, n >= 2, "fewer than two X-vertices");
    need(e, c.hall, "Hall condition fails");
    need(e, k >= 2, "min X-degree below 2");
    need(e, dy >= 2, "min Y-degree below 2");
    need(e, r >= 2, "an X-vertex has fewer than two distinct neighbors");
    if (e.failures.empty()) e.bound = Rat(bound_4k(n, k));
  } else if (id == "2kt") {
    need(e, n >= 2, "fewer than two X-vertices");
    need(e, c.hall, "Hall condition fails");
    need(e, t >= 0, "more X-vertices than Y-vertices");
    need(e, dy >= 1, "a Y-vertex is isolated");
    need(e, n >= 3 || t == 0 || dy >= 2,
         "two X-vertices with extra Y-vertices need min Y-degree >= 2");
    if (e.failures.empty()) e.bound = Rat(bound_2kt(n, k, t, dy));
  } else if (id == "kt1") {
    need(e, n >= 3, "fewer than three X-vertices");
    need(e, c.hall, "Hall condition fails");
    need(e, t >= 1, "needs |Y| > |X|");
    need(e, dy >= 1, "a Y-vertex is isolated");
    if (e.failures.empty()) e.bound = Rat(bound_kt1(k, t));
  } else if (id == "2kt_refined") {
    need(e, n >= 3, "fewer than three X-vertices");
    need(e, c.hall, "Hall condition fails");
    need(e, t >= 1, "needs |Y| > |X|");
    need(e, dy >= 2, "min Y-degree below 2");
    if (e.failures.empty()) e.bound = Rat(bound_2kt_refined(n, k, t));
  } else if (id == "leafmain") {
    need(e, n >= 2, "fewer than two X-vertices");
    need(e, t >= 0, "more X-vertices than Y-vertices");
    need(e, c.leafless, "a vertex has fewer than two distinct neighbors");
    need(e, c.x_surplus, "not X-surplus");
    if (e.failures.empty()) e.bound = Rat(bound_leafmain(n, t, c.p.b));
  } else if (id == "surplus") {
    need(e, g.nx == g.ny, "parts differ in size");
    need(e, g.nx == g.ny && c.alpha == g.nx, "no perfect matching");
    if (e.failures.empty())
      need(e, is_elementary(g), "not elementary");
    if (e.failures.empty()) e.bound = Rat(bound_surplus(m, g.nx + g.ny));
  } else if (id == "t_plus_1") {
    need(e, c.hall, "Hall condition fails");
    need(e, dy >= 1, "a Y-vertex is isolated");
    need(e, n >= 1, "X is empty");
    if (e.failures.empty()) e.bound = Rat(bound_t_plus_1(t));
  } else if (id == "case1") {
    need(e, c.hall, "Hall condition fails");
    need(e, c.r_both >= 1, "an isolated vertex");
    need(e, c.tight_known, "graph too large to enumerate tight sets");
    need(e, !c.tight_known || c.tight_any,
         "no nonempty proper tight subset of X");
    if (e.failures.empty()) e.bound = Rat(bound_case1(k, c.r_both, t));
  } else if (id == "liu_liu_1" || id == "liu_liu_2" || id == "liu_liu_3") {
    need(e, c.simple, "graph has parallel edges");
    need(e, n >= 1, "X is empty");
    need(e, c.positive_surplus,
         "some nonempty subset of X lacks surplus");
    if (id == "liu_liu_1" || id == "liu_liu_2") {
      need(e, c.connected, "graph is disconnected");
      if (e.failures.empty()) {
        e.bound = Rat(bound_liu_liu(id == "liu_liu_1" ? 1 : 2, n, m, t, g.ny));
        if (id == "liu_liu_2")
          e.note = "as printed in the source; duplicated display";
      }
    } else {
      need(e, t == 1, "needs exactly one extra Y-vertex");
      long long min_deg = m;
      for (int i = 0; i < g.nx; ++i) min_deg = std::min(min_deg, degree_x(g, i));
      for (int j = 0; j < g.ny; ++j) min_deg = std::min(min_deg, degree_y(g, j));
      need(e, min_deg >= 2, "minimum degree below 2");
      if (e.failures.empty()) e.bound = Rat(bound_liu_liu(3, n, m, t, g.ny));
    }
  } else if (id == "composed") {
    need(e, r >= 2, "an X-vertex has fewer than two distinct neighbors");
    std::vector<int> S;
    if (c.deficiency >= 1) {
      S = max_deficiency_set(g);
    } else if (g.nx <= 20) {
      TightSets ts = tight_sets(g);
      need(e, ts.any, "no deficiency and no tight set");
      S = ts.maximal;
    } else {
      need(e, false, "graph too large to locate a tight set");
    }
    if (e.failures.empty()) {
      auto ns = neighborhood(g, S);
      std::vector<int> rows, cols;
      std::vector<char> in_s(g.nx, 0), in_ns(g.ny, 0);
      for (int i : S) in_s[i] = 1;
      for (int j : ns) in_ns[j] = 1;
      for (int i = 0; i < g.nx; ++i)
        if (!in_s[i]) rows.push_back(i);
      for (int j = 0; j < g.ny; ++j)
        if (!in_ns[j]) cols.push_back(j);
      const long long n_prime = static_cast<long long>(rows.size());
      if (n_prime == 0) {
        // The deficiency set spans X: only the deficiency factor remains.
        need(e, c.deficiency >= 1, "tight set spans X");
        if (e.failures.empty()) {
          e.bound = Rat(bound_defect(k, r, c.deficiency));
          e.note = "deficiency set spans X; factor for the remainder is 1";
        }
      } else {
        Bigraph rest = induced_subgraph(g, rows, cols);
        need(e, is_leafless(rest),
             "derived remainder is not leafless");
        need(e, is_x_surplus(rest) && rest.nx >= 2,
             "derived remainder lacks X-surplus");
        if (e.failures.empty()) {
          GraphParams rp = params(rest);
          const long long b_prime = rp.b;
          need(e, b_prime >= 0, "derived remainder has too few edges");
          if (e.failures.empty()) {
            e.bound = Rat(bound_composed(k, r, c.deficiency, n_prime, t,
                                         b_prime));
            std::ostringstream os;
            os << "split |S| = " << S.size() << ", p = " << c.deficiency
               << ", remainder " << n_prime << "x" << rest.ny;
            e.note = os.str();
          }
        }
      }
    }
  } else if (id == "ef") {
    need(e, g.nx == g.ny, "parts differ in size");
    need(e, n >= 1, "X is empty");
    bool regular = true;
    for (int i = 0; i < g.nx && regular; ++i)
      if (degree_x(g, i) != k) regular = false;
    for (int j = 0; j < g.ny && regular; ++j)
      if (degree_y(g, j) != k) regular = false;
    need(e, regular && k >= 1, "not k-regular with k >= 1");
    if (e.failures.empty()) e.bound = bound_ef(n, k);
  } else {
    throw std::invalid_argument("unknown theorem id: " + id);
  }

  e.applicable = e.failures.empty();
  return e;
}

std::vector<BoundEntry> applicable_bounds(const Bigraph& g) {
  std::vector<BoundEntry> out;
  for (const auto& id : theorem_ids()) out.push_back(evaluate_theorem(id, g));
  return out;
}

}  // namespace bg
