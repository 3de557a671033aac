#include "bigraph/constructions.hpp"

#include <stdexcept>

#include "bigraph/bounds.hpp"
#include "bigraph/counting.hpp"
#include "bigraph/structure.hpp"

namespace bg {

namespace {

void require(bool cond, const std::string& msg) {
  if (!cond) throw std::invalid_argument(msg);
}

// Internal consistency: a generator that emits a graph violating its own
// family's structural promises is a bug, not a caller error.
void ensure(bool cond, const std::string& msg) {
  if (!cond) throw std::logic_error(msg);
}

Construction finish(std::string family,
                    std::map<std::string, long long> params, Bigraph g,
                    Int predicted) {
  Construction c;
  c.family = std::move(family);
  c.params = std::move(params);
  c.g = std::move(g);
  c.predicted_phi = std::move(predicted);
  return c;
}

long long total_edges(const Bigraph& g) {
  long long m = 0;
  for (auto& row : g.mult)
    for (long long v : row) m += v;
  return m;
}

// Identity block plus a heavy first column; shared by several families.
Bigraph h_block(long long n, long long k) {
  Bigraph g(static_cast<int>(n), static_cast<int>(n));
  for (int i = 0; i < g.nx; ++i) {
    g.mult[i][i] = 1;
    g.mult[i][0] += k - 1;
  }
  return g;
}

}  // namespace

Construction gen_sharp1(long long n, long long k, long long r) {
  require(k >= r && r >= 1 && n >= 1, "gen_sharp1 needs k >= r >= 1, n >= 1");
  int ny = static_cast<int>(std::max(r, n));
  Bigraph g(static_cast<int>(n), ny);
  for (int i = 0; i < g.nx; ++i) {
    for (int j = 0; j < r; ++j) g.mult[i][j] = 1;
    g.mult[i][0] += k - r;
    if (i >= r) g.mult[i][i] = 1;
  }
  GraphParams p = params(g);
  ensure(p.k == k && p.r == r && hall_check(g).ok,
         "gen_sharp1 produced wrong degrees");
  return finish("sharp1", {{"n", n}, {"k", k}, {"r", r}}, g,
                bound_main(n, k, r));
}

Construction gen_F(long long k) {
  require(k >= 2, "gen_F needs k >= 2");
  Bigraph g = make_bigraph(2, 2, {{k - 1, 1}, {k - 1, 1}});
  ensure(params(g).k == k, "gen_F produced wrong degrees");
  return finish("F", {{"k", k}}, g, Int(2) * k - 2);
}

Construction gen_G6() {
  Bigraph g = make_bigraph(3, 3, {{2, 0, 1}, {2, 1, 0}, {1, 1, 1}});
  return finish("G6", {}, g, 5);
}

Construction gen_G7() {
  Bigraph g = make_bigraph(3, 4, {{1, 0, 1, 1}, {1, 1, 0, 1}, {0, 1, 1, 1}});
  return finish("G7", {}, g, 11);
}

Construction gen_H(long long n, long long k) {
  require(n >= 2 && k >= 1, "gen_H needs n >= 2, k >= 1");
  Bigraph g = h_block(n, k);
  ensure(params(g).k == k && hall_check(g).ok, "gen_H produced wrong degrees");
  return finish("H", {{"n", n}, {"k", k}}, g, Int(k));
}

Construction gen_Hp(long long n, long long k) {
  require(n >= 2 && k >= 1, "gen_Hp needs n >= 2, k >= 1");
  Bigraph g = h_block(n, k);
  for (int j = 1; j < g.ny; ++j) g.mult[g.nx - 1][j] += 1;
  return finish("Hp", {{"n", n}, {"k", k}}, g, Int(2) * k);
}

Construction gen_Hpp(long long n, long long k) {
  require(n >= 2 && k >= n, "gen_Hpp needs 2 <= n <= k");
  Bigraph g = h_block(n, k);
  for (int j = 0; j < g.ny; ++j) g.mult[0][j] = 1;
  g.mult[0][0] = k - n + 1;
  ensure(params(g).k == k, "gen_Hpp produced wrong degrees");
  return finish("Hpp", {{"n", n}, {"k", k}}, g, Int(n) * (k - 2) + 2);
}

Construction gen_J(long long n, long long k) {
  require(n >= 4 && k >= 2, "gen_J needs n >= 4, k >= 2");
  Bigraph g(static_cast<int>(n), static_cast<int>(n));
  g.mult[0][0] = g.mult[1][0] = k - 1;
  g.mult[0][1] = g.mult[1][1] = 1;
  long long c = n - 2;  // cycle rows/columns 2 .. n-1
  for (int i = 0; i < c; ++i) {
    g.mult[2 + i][2 + i] += 1;
    g.mult[static_cast<int>(2 + (i + 1) % c)][2 + i] += 1;
    g.mult[2 + i][0] += k - 2;
  }
  GraphParams p = params(g);
  ensure(p.k == k && p.r >= 2 && p.deltaY >= 2 && hall_check(g).ok,
         "gen_J produced wrong degrees");
  return finish("J", {{"n", n}, {"k", k}}, g, Int(4) * k - 4);
}

Construction gen_M(long long n, long long r, long long t, long long b) {
  require(r >= 2 && n >= 2 * r && t >= 0, "gen_M needs r >= 2, n >= 2r, t >= 0");
  long long base = (r - 1) * (n - 2 * r);
  require(b >= base, "gen_M needs b >= (r-1)(n-2r)");
  Bigraph g(static_cast<int>(n), static_cast<int>(n + t));
  // Row groups: R = 0..r-2, S = r-1..2r-3, T = 2r-2..n-2, u = n-1.
  // Column groups: R' = 0..t+r-2, S' = t+r-1..t+2r-3, T' = t+2r-2..t+n-2,
  // u' = n+t-1.
  int u = static_cast<int>(n - 1), up = static_cast<int>(n + t - 1);
  for (int j = 0; j <= t + r - 2; ++j) g.mult[u][j] = 1;
  g.mult[u][up] = 1;
  for (int i = 0; i <= r - 2; ++i) g.mult[i][up] = 1;
  for (long long i = r - 1; i <= 2 * r - 3; ++i) {
    for (long long j = 0; j <= t + r - 2; ++j) g.mult[i][j] = 1;
    for (long long j = t + 2 * r - 2; j <= t + n - 2; ++j) g.mult[i][j] = 1;
  }
  for (long long j = t + r - 1; j <= t + 2 * r - 3; ++j) {
    for (long long i = 0; i <= r - 2; ++i) g.mult[i][j] = 1;
    for (long long i = 2 * r - 2; i <= n - 2; ++i) g.mult[i][j] = 1;
  }
  for (long long i = 0; i <= n - 2 * r; ++i)
    g.mult[2 * r - 2 + i][t + 2 * r - 2 + i] = 1;
  // Spread the remaining copies round-robin over the S x S' rectangle.
  long long extra = b - base, cell = 0, cells = (r - 1) * (r - 1);
  for (long long cidx = 0; cidx < extra; ++cidx, cell = (cell + 1) % cells)
    g.mult[r - 1 + cell / (r - 1)][t + r - 1 + cell % (r - 1)] += 1;
  ensure(total_edges(g) == r * (n + t) + b && is_leafless(g) &&
             is_x_surplus(g),
         "gen_M produced wrong structure");
  Int bracket = Int(b) + r * (t + 1) + (r - 1) * (n - 2 * r + 1) * (r + t - 2);
  Int predicted =
      factorial(r - 1) * (factorial(r + t - 1) / factorial(t)) * bracket;
  return finish("M", {{"n", n}, {"r", r}, {"t", t}, {"b", b}}, g, predicted);
}

Construction gen_C(long long n, long long t, long long b) {
  require(n >= 2 && t >= 0 && b >= 0, "gen_C needs n >= 2, t >= 0, b >= 0");
  Bigraph g(static_cast<int>(n), static_cast<int>(n + t));
  if (n == 2) {
    for (int j = 0; j < g.ny; ++j) g.mult[0][j] = g.mult[1][j] = 1;
    g.mult[0][1] += b;
  } else {
    for (int i = 0; i < n; ++i) {
      g.mult[i][i] = 1;
      g.mult[static_cast<int>((i + 1) % n)][i] = 1;
    }
    for (long long j = n; j < n + t; ++j) g.mult[0][j] = g.mult[1][j] = 1;
    g.mult[0][static_cast<int>(n - 1)] += b;
  }
  ensure(is_leafless(g) && is_x_surplus(g) &&
             total_edges(g) == 2 * (n + t) + b,
         "gen_C produced wrong structure");
  return finish("C", {{"n", n}, {"t", t}, {"b", b}}, g,
                bound_leafmain(n, t, b));
}

Construction gen_L(long long k, long long t) {
  require(t >= 0 && k - 1 > t, "gen_L needs k - 1 > t >= 0");
  Bigraph g(2, static_cast<int>(t + 2));
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j <= t; ++j) g.mult[i][j] = 1;
    g.mult[i][static_cast<int>(t + 1)] = k - t - 1;
  }
  GraphParams p = params(g);
  ensure(p.k == k && p.deltaY == 2, "gen_L produced wrong degrees");
  return finish("L", {{"k", k}, {"t", t}}, g, Int(t + 1) * (2 * k - t - 2));
}

namespace {
Construction gen_gnkt_impl(long long n, long long k, long long t,
                           long long c) {
  require(n >= 3 && k >= 1 && t >= 1, "needs n >= 3, k >= 1, t >= 1");
  Bigraph block = h_block(n - 1, k);
  Bigraph g(static_cast<int>(n), static_cast<int>(n + t));
  for (int i = 0; i < block.nx; ++i)
    for (int j = 0; j < block.ny; ++j) g.mult[i][j] = block.mult[i][j];
  int last = static_cast<int>(n - 1);
  for (int j = 0; j < g.ny; ++j) g.mult[last][j] = c;
  g.mult[last][0] += std::max(0LL, k - c * (n + t));
  GraphParams p = params(g);
  ensure(p.k == k && p.deltaY == c && hall_check(g).ok,
         "construction produced wrong degrees");
  std::string family = c == 1 ? "Gnkt" : "Gpnkt";
  return finish(family, {{"n", n}, {"k", k}, {"t", t}}, g,
                Int(k) * c * (t + 1));
}
}  // namespace

Construction gen_Gnkt(long long n, long long k, long long t) {
  return gen_gnkt_impl(n, k, t, 1);
}

Construction gen_Gpnkt(long long n, long long k, long long t) {
  return gen_gnkt_impl(n, k, t, 2);
}

Construction gen_case1_sharp(long long k, long long r, long long t) {
  require(k >= r && r >= 1 && t >= 0,
          "gen_case1_sharp needs k >= r >= 1, t >= 0");
  long long ns = std::max(r, k - r - t);
  Construction block = gen_sharp1(ns, k, r);
  Bigraph g(static_cast<int>(ns + r), static_cast<int>(ns + r + t));
  for (int i = 0; i < block.g.nx; ++i)
    for (int j = 0; j < block.g.ny; ++j) g.mult[i][j] = block.g.mult[i][j];
  for (long long i = ns; i < ns + r; ++i)
    for (long long j = 0; j < ns + r + t; ++j) g.mult[i][j] = 1;
  GraphParams p = params(g);
  ensure(p.k == k && p.r == r && hall_check(g).ok &&
             is_tight(g, [&] {
               std::vector<int> s;
               for (int i = 0; i < ns; ++i) s.push_back(i);
               return s;
             }()),
         "gen_case1_sharp produced wrong structure");
  return finish("case1_sharp", {{"k", k}, {"r", r}, {"t", t}}, g,
                bound_case1(k, r, t));
}

Construction gen_odd_path_bundle(const std::vector<long long>& lengths) {
  require(!lengths.empty(), "gen_odd_path_bundle needs at least one path");
  long long internal = 0;
  for (long long len : lengths) {
    require(len >= 1 && len % 2 == 1,
            "gen_odd_path_bundle needs odd positive lengths");
    internal += (len - 1) / 2;
  }
  Bigraph g(static_cast<int>(1 + internal), static_cast<int>(1 + internal));
  int xr = 1, yc = 1;  // next fresh row / column; row 0 and column 0 shared
  for (long long len : lengths) {
    long long h = (len - 1) / 2;
    if (h == 0) {
      g.mult[0][0] += 1;
      continue;
    }
    g.mult[0][yc] += 1;
    for (long long i = 0; i < h; ++i) {
      g.mult[xr + i][yc + i] += 1;
      if (i + 1 < h) g.mult[xr + i][yc + i + 1] += 1;
    }
    g.mult[xr + h - 1][0] += 1;
    xr += static_cast<int>(h);
    yc += static_cast<int>(h);
  }
  long long q = static_cast<long long>(lengths.size());
  ensure(total_edges(g) - (g.nx + g.ny) + 2 == q && is_elementary(g),
         "gen_odd_path_bundle produced wrong structure");
  std::map<std::string, long long> ps;
  for (size_t i = 0; i < lengths.size(); ++i)
    ps["len" + std::to_string(i)] = lengths[i];
  return finish("odd_path_bundle", ps, g, Int(q));
}

Construction gen_k33_minus_edge(long long a, long long b, long long c,
                                long long d) {
  require(a >= 1 && b >= 1 && c >= 1 && d >= 1,
          "gen_k33_minus_edge needs positive multiplicities");
  Bigraph g = make_bigraph(3, 3, {{a, b, 1}, {c, d, 1}, {1, 1, 0}});
  ensure(is_elementary(g), "gen_k33_minus_edge produced wrong structure");
  return finish("k33_minus_edge", {{"a", a}, {"b", b}, {"c", c}, {"d", d}}, g,
                Int(a) + b + c + d);
}

Construction gen_t_plus_1_star(long long n, long long t) {
  require(n >= 1 && t >= 0, "gen_t_plus_1_star needs n >= 1, t >= 0");
  Bigraph g(static_cast<int>(n), static_cast<int>(n + t));
  for (int i = 0; i < n; ++i) g.mult[i][i] = 1;
  for (long long j = n; j < n + t; ++j) g.mult[0][j] = 1;
  ensure(hall_check(g).ok, "gen_t_plus_1_star produced wrong structure");
  return finish("t_plus_1_star", {{"n", n}, {"t", t}}, g, Int(t) + 1);
}

Construction gen_three_4cycles() {
  Bigraph g(4, 6);
  for (int j = 0; j < 6; ++j) g.mult[0][j] = 1;
  for (int i = 0; i < 3; ++i)
    g.mult[1 + i][2 * i] = g.mult[1 + i][2 * i + 1] = 1;
  return finish("three_4cycles", {}, g, 24);
}

Construction gen_chain_4cycles() {
  Bigraph g = make_bigraph(4, 6, {{1, 1, 0, 0, 0, 0},
                                  {1, 1, 1, 1, 0, 0},
                                  {0, 0, 1, 1, 1, 1},
                                  {0, 0, 0, 0, 1, 1}});
  return finish("chain_4cycles", {}, g, 28);
}

Construction gen_two_4cycles() {
  Bigraph g = make_bigraph(3, 4, {{1, 1, 1, 1}, {1, 1, 0, 0}, {0, 0, 1, 1}});
  return finish("two_4cycles", {}, g, 8);
}

namespace {
long long pick(const std::map<std::string, long long>& params,
               const std::string& key) {
  auto it = params.find(key);
  if (it == params.end())
    throw std::invalid_argument("missing parameter: " + key);
  return it->second;
}
}  // namespace

Construction generate(const std::string& family,
                      const std::map<std::string, long long>& params) {
  if (family == "sharp1")
    return gen_sharp1(pick(params, "n"), pick(params, "k"), pick(params, "r"));
  if (family == "F") return gen_F(pick(params, "k"));
  if (family == "G6") return gen_G6();
  if (family == "G7") return gen_G7();
  if (family == "H") return gen_H(pick(params, "n"), pick(params, "k"));
  if (family == "Hp") return gen_Hp(pick(params, "n"), pick(params, "k"));
  if (family == "Hpp") return gen_Hpp(pick(params, "n"), pick(params, "k"));
  if (family == "J") return gen_J(pick(params, "n"), pick(params, "k"));
  if (family == "M")
    return gen_M(pick(params, "n"), pick(params, "r"), pick(params, "t"),
                 pick(params, "b"));
  if (family == "C")
    return gen_C(pick(params, "n"), pick(params, "t"), pick(params, "b"));
  if (family == "L") return gen_L(pick(params, "k"), pick(params, "t"));
  if (family == "Gnkt")
    return gen_Gnkt(pick(params, "n"), pick(params, "k"), pick(params, "t"));
  if (family == "Gpnkt")
    return gen_Gpnkt(pick(params, "n"), pick(params, "k"), pick(params, "t"));
  if (family == "case1_sharp")
    return gen_case1_sharp(pick(params, "k"), pick(params, "r"),
                           pick(params, "t"));
  if (family == "odd_path_bundle") {
    std::vector<long long> lengths;
    for (size_t i = 0;; ++i) {
      auto it = params.find("len" + std::to_string(i));
      if (it == params.end()) break;
      lengths.push_back(it->second);
    }
    return gen_odd_path_bundle(lengths);
  }
  if (family == "k33_minus_edge")
    return gen_k33_minus_edge(pick(params, "a"), pick(params, "b"),
                              pick(params, "c"), pick(params, "d"));
  if (family == "t_plus_1_star")
    return gen_t_plus_1_star(pick(params, "n"), pick(params, "t"));
  if (family == "three_4cycles") return gen_three_4cycles();
  if (family == "chain_4cycles") return gen_chain_4cycles();
  if (family == "two_4cycles") return gen_two_4cycles();
  throw std::invalid_argument("unknown construction family: " + family);
}

std::vector<std::string> construction_families() {
  return {"sharp1",      "F",
          "G6",          "G7",
          "H",           "Hp",
          "Hpp",         "J",
          "M",           "C",
          "L",           "Gnkt",
          "Gpnkt",       "odd_path_bundle",
          "k33_minus_edge", "t_plus_1_star",
          "three_4cycles",  "chain_4cycles",
          "two_4cycles", "case1_sharp"};
}

}  // namespace bg
