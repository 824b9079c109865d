// Acceptance criteria 1-9.  One line per criterion; exit status is nonzero if any fails.
#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "kmchev/io.hpp"

using namespace kmchev;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
  void fail(const std::string& d) {
    if (ok) detail = d;
    ok = false;
  }
  void expect(bool cond, const std::string& d) {
    if (!cond) fail(d);
  }
};

WeylGroup group(const char* name) { return WeylGroup(RootDatum(CartanMatrix::preset(name))); }

Weight minus_roots(const RootDatum& rd, Weight mu, const std::vector<Int>& c) {
  for (int i = 0; i < rd.rank(); ++i) mu.add_scaled(-c[static_cast<std::size_t>(i)], rd.simple_root(i));
  return mu;
}

std::vector<NodeSet> proper_subsets(int n) {
  std::vector<NodeSet> out;
  for (std::uint64_t b = 0; b + 1 < (1ULL << n); ++b) out.push_back(NodeSet::from_bits(b));
  return out;
}

int braid_order(const CartanMatrix& a, int i, int j) {
  switch (a(i, j) * a(j, i)) {
    case 0: return 2;
    case 1: return 3;
    case 2: return 4;
    case 3: return 6;
    default: return 0;
  }
}

// --- 1 ---------------------------------------------------------------------

Outcome c1() {
  Outcome o;
  auto g = group("A2");
  const auto& rd = g.roots();
  // gl3 exponent (x1,x2,x3) restricted to sl3: fundamental coordinates (x1-x2, x2-x3)
  auto gl3 = [&](Int a, Int b, Int c) { return rd.weight(std::vector<Int>{a - b, b - c}); };
  Weight lambda = gl3(3, 1, 0);
  o.expect(lambda == rd.weight(std::vector<Int>{2, 1}), "2w1+w2 != (3,1,0)");
  auto w = g.parse("1 2 1"), v = g.parse("1");
  LaurentPoly expect = LaurentPoly::monomial(gl3(0, 2, 2)) + LaurentPoly::monomial(gl3(0, 1, 3));
  auto rec = chevalley_recurrence(g, w, lambda);
  o.expect(rec.count(v) && rec.at(v) == expect, "recurrence coefficient differs");
  o.expect(chevalley_explicit(g, v, lambda, w.word()).total == expect, "explicit coefficient differs");
  return o;
}

// --- 2, 3 ------------------------------------------------------------------

struct Affine {
  WeylGroup g = group("A2~");
  const RootDatum& rd = g.roots();
  Weight lambda = rd.fundamental_weight(0) + rd.fundamental_weight(1);
  WeylElt w = g.parse("0 1 2 1");
  LSModel ls{g, lambda};
  AlcoveModel am{g, lambda};
  LaurentPoly m(std::vector<Int> c) const { return LaurentPoly::monomial(minus_roots(rd, lambda, c)); }
  LaurentPoly md(std::vector<Int> c, Int s) const { return LaurentPoly::monomial(-minus_roots(rd, lambda, c), s); }
};

Outcome c2() {
  Outcome o;
  Affine a;
  auto& g = a.g;
  NilHeckeCoeffs table{
      {g.parse("1 2"), a.m({1, 1, 1}) + a.m({2, 1, 1}) + a.m({3, 1, 1})},
      {g.parse("1 2 1"), a.m({1, 1, 1}) + a.m({2, 1, 1}) + a.m({3, 1, 1})},
      {g.parse("0 1 2"), a.m({3, 1, 1})},
      {a.w, a.m({3, 1, 1})},
  };
  std::size_t pairs = 0;
  for (const auto& z : g.lower_interval(a.w)) pairs += a.ls.paths_up(a.w, z).size();
  o.expect(pairs == 8, "LS (z,p) pairs: " + std::to_string(pairs));
  auto ls = a.ls.chevalley_dominant(a.w);
  o.expect(diff_rows(g, ls, table, "ls", "table").empty(), diff_rows(g, ls, table, "ls", "table"));

  auto t = a.am.tree_dominant(a.w);
  o.expect(t.size() == 8, "tree vertices: " + std::to_string(t.size()));
  std::multiset<std::string> root_edges;
  for (const auto& v : t)
    if (v.label && v.parent == 0) root_edges.insert(a.am.format(*v.label));
  o.expect(root_edges == std::multiset<std::string>{"(0|0,1,0)", "(0|1,2,2)/3", "(1|1,2,2)/3", "(2|1,2,2)/3"},
           "root edges differ");
  auto al = a.am.chevalley_dominant(a.w);
  auto nh = chevalley_recurrence(g, a.w, a.lambda);
  o.expect(al == table && nh == table,
           diff_rows(g, al, table, "alcove", "table") + diff_rows(g, nh, table, "nilhecke", "table"));
  return o;
}

Outcome c3() {
  Outcome o;
  Affine a;
  auto& g = a.g;
  NilHeckeCoeffs table{
      {g.parse("2"), a.md({0, 0, 0}, -1)},
      {g.parse("1 2"), a.md({0, 1, 0}, 1) + a.md({1, 1, 0}, 1)},
      {g.parse("1 2 1"), a.md({0, 1, 1}, -1) + a.md({1, 1, 1}, -1) + a.md({2, 1, 1}, -1)},
      {g.parse("0 2"), a.md({1, 0, 0}, 1)},
      {g.parse("0 1 2"), a.md({2, 1, 0}, -1)},
      {a.w, a.md({3, 1, 1}, 1)},
  };
  // assignment of the nine Demazure paths to lower endpoints
  std::map<std::string, std::size_t> assign;
  std::size_t total = 0;
  for (const auto& z : g.lower_interval(a.w)) {
    auto ps = a.ls.paths_down(a.w, z);
    if (!ps.empty()) assign[g.format(z)] = ps.size();
    total += ps.size();
  }
  o.expect(total == 9, "LS down paths: " + std::to_string(total));
  o.expect(assign == std::map<std::string, std::size_t>{{"2", 1}, {"1 2", 2}, {"1 2 1", 3}, {"0 2", 1}, {"0 1 2", 1},
                                                        {"0 1 2 1", 1}},
           "down-path assignment differs");
  auto ls = a.ls.chevalley_antidominant(a.w);
  o.expect(ls.count(g.parse("1 2")) && ls.at(g.parse("1 2")) == a.md({0, 1, 0}, 1) + a.md({1, 1, 0}, 1),
           "b^w_{s1s2,-lambda} differs");
  o.expect(ls == table, diff_rows(g, ls, table, "ls", "table"));

  auto t = a.am.tree_antidominant(a.w);
  o.expect(t.size() == 9, "tree vertices: " + std::to_string(t.size()));
  bool found = false;
  for (std::size_t v = 0; v < t.size(); ++v)
    if (g.format(t[v].elt) == "0 2") {
      found = true;
      auto H = a.am.sequence_at(t, v);
      o.expect(a.am.wt_dec(H.z, H.hs) == g.act(g.parse("0"), a.lambda), "wt_dec of the s0s2 sequence");
    }
  o.expect(found, "no s0s2 vertex");
  auto al = a.am.chevalley_antidominant(a.w);
  auto nh = chevalley_recurrence(g, a.w, -a.lambda);
  o.expect(al == table && nh == table,
           diff_rows(g, al, table, "alcove", "table") + diff_rows(g, nh, table, "nilhecke", "table"));
  return o;
}

// --- 4 ---------------------------------------------------------------------

void check_bijections(Outcome& o, const WeylGroup& g, const AlcoveModel& am, const LSModel& ls,
                      const std::vector<WeylElt>& ws, const std::string& tag) {
  auto key = [&](const Adapted& h) { return g.format(h.z) + "|" + am.format(h.hs) + "|" + g.format(h.top); };
  for (const auto& w : ws) {
    std::string at = tag + " w=" + g.format(w);
    for (const auto& z : g.lower_interval(w)) {
      for (const auto& p : ls.paths_up(w, z)) {
        auto H = am.ls_to_inc(ls, p, z);
        o.expect(am.inc_to_ls(ls, H) == p && am.wt_inc(z, H.hs) == ls.endpoint(p) && H.top == w,
                 "increasing bijection at " + at + " path " + ls.format(p));
      }
      for (const auto& p : ls.paths_down(w, z)) {
        auto H = am.ls_to_dec(ls, p, w);
        o.expect(am.dec_to_ls(ls, H) == p && am.wt_dec(z, H.hs) == ls.endpoint(p) && H.z == z,
                 "decreasing bijection at " + at + " path " + ls.format(p));
      }
    }
    for (const auto& H : am.sequences(am.tree_dominant(w))) {
      auto p = am.inc_to_ls(ls, H);
      o.expect(key(am.ls_to_inc(ls, p, H.z)) == key(H), "inc round trip from sequence at " + at);
    }
    for (const auto& H : am.sequences(am.tree_antidominant(w))) {
      auto p = am.dec_to_ls(ls, H);
      o.expect(key(am.ls_to_dec(ls, p, w)) == key(H), "dec round trip from sequence at " + at);
    }
  }
}

Outcome c4() {
  Outcome o;
  Affine a;
  check_bijections(o, a.g, a.am, a.ls, {a.w}, "A2~");
  for (const char* type : {"A2", "B2"})
    for (std::vector<Int> lam : {std::vector<Int>{1, 1}, std::vector<Int>{1, 0}}) {
      auto g = group(type);
      Weight lambda = g.roots().weight(lam);
      check_bijections(o, g, AlcoveModel(g, lambda), LSModel(g, lambda), g.bfs_ball(20), type);
    }
  return o;
}

// --- 5 ---------------------------------------------------------------------

Outcome c5() {
  Outcome o;
  for (const char* type : {"A2", "B2", "G2"}) {
    auto g = group(type);
    auto elems = g.bfs_ball(20);  // the whole group: at most 12 elements, so every sample of 20 is covered
    for (std::vector<Int> lam : {std::vector<Int>{1, 0}, {0, 1}, {1, 1}, {2, 1}}) {
      Weight lambda = g.roots().weight(lam);
      LSModel ls(g, lambda);
      AlcoveModel am(g, lambda);
      for (const auto& w : elems) {
        std::string at = std::string(type) + " lambda " + format_weight(g.roots(), lambda) + " w " + g.format(w);
        auto nd = chevalley_recurrence(g, w, lambda), na = chevalley_recurrence(g, w, -lambda);
        o.expect(ls.chevalley_dominant(w) == nd && am.chevalley_dominant(w) == nd, "dominant rows differ at " + at);
        o.expect(ls.chevalley_antidominant(w) == na && am.chevalley_antidominant(w) == na,
                 "antidominant rows differ at " + at);
      }
    }
  }
  return o;
}

// --- 6 ---------------------------------------------------------------------

void check_lifts(Outcome& o, const WeylGroup& g, const std::vector<WeylElt>& ball, NodeSet J, const std::string& tag) {
  int longJ = g.parabolic_longest_length(J);
  for (const auto& v : ball)
    for (const auto& t : ball) {
      if (!(g.coset(t, J).min_rep() == t)) continue;
      Coset tau = g.coset(t, J);
      std::string at = tag + " v=" + g.format(v) + " tau=" + g.format(t);
      if (g.coset_leq(g.coset(v, J), tau))
        o.expect(up(g, v, tau) == up_oracle(g, v, tau, t.length() + longJ), "up differs at " + at);
      if (g.coset_leq(tau, g.coset(v, J))) o.expect(down(g, v, tau) == down_oracle(g, v, tau), "down differs at " + at);
    }
}

Outcome c6() {
  Outcome o;
  for (const char* type : {"A2", "B2"}) {
    auto g = group(type);
    for (NodeSet J : proper_subsets(g.rank())) check_lifts(o, g, g.bfs_ball(20), J, type);
  }
  auto g = group("A2~");
  check_lifts(o, g, g.bfs_ball(5), NodeSet::from_bits(1ULL << g.roots().index_of(2)), "A2~");
  return o;
}

// --- 7 ---------------------------------------------------------------------

bool regular_label(const std::string& s) { return s == "U.1.1" || s == "U.1.2" || s == "U.2.1" || s == "U.2.2"; }

Outcome c7() {
  Outcome o;
  std::size_t strings = 0;
  Affine a;
  auto st = survey_charts(a.ls, a.ls.demazure_crystal(a.w), a.g.bfs_ball(4));
  strings += st.strings;
  o.expect(st.failures.empty(), st.failures.empty() ? "" : st.failures.front());
  for (const char* type : {"A2", "B2", "G2"}) {
    auto g = group(type);
    auto ball = g.bfs_ball(20);
    for (std::vector<Int> lam : {std::vector<Int>{1, 0}, {0, 1}, {1, 1}, {2, 1}}) {
      LSModel ls(g, g.roots().weight(lam));
      auto s = survey_charts(ls, ls.demazure_crystal(ball.back()), ball);
      strings += s.strings;
      o.expect(s.failures.empty(), s.failures.empty() ? "" : std::string(type) + ": " + s.failures.front());
      if (ls.J().empty())
        for (const auto& [label, n] : s.up) o.expect(regular_label(label), std::string(type) + " regular run hit " + label);
    }
  }
  o.expect(strings > 0, "no strings surveyed");
  return o;
}

// --- 8 ---------------------------------------------------------------------

LaurentPoly random_poly(const RootDatum& rd, std::mt19937& rng) {
  std::uniform_int_distribution<Int> coord(-3, 3);
  LaurentPoly p;
  for (int t = 0; t < 3; ++t) {
    Weight mu = rd.zero_weight();
    for (std::size_t k = 0; k < rd.dim(); ++k) mu[k] = coord(rng);
    p.add_term(mu, coord(rng));
  }
  return p;
}

Outcome c8() {
  Outcome o;
  for (auto [type, lam] : {std::pair{"A2", std::vector<Int>{1, 1}}, std::pair{"B2", std::vector<Int>{1, 1}},
                           std::pair{"G2", std::vector<Int>{1, 1}}, std::pair{"A2~", std::vector<Int>{1, 1, 0}},
                           std::pair{"A1~", std::vector<Int>{1, 1}}}) {
    auto g = group(type);
    const auto& rd = g.roots();
    std::mt19937 rng(2024);
    for (int t = 0; t < 50; ++t) {
      LaurentPoly f = random_poly(rd, rng), h = random_poly(rd, rng);
      for (int i = 0; i < rd.rank(); ++i) {
        LaurentPoly ti = apply_Ti(rd, i, f);
        o.expect(apply_Ti(rd, i, ti) == -ti, std::string(type) + ": T_i^2 != -T_i");
        o.expect(apply_Ti(rd, i, f * h) == ti * h + reflect(rd, i, f) * apply_Ti(rd, i, h),
                 std::string(type) + ": twisted Leibniz rule");
        for (int j = 0; j < rd.rank(); ++j) {
          int m = i == j ? 0 : braid_order(rd.cartan(), i, j);
          if (m == 0) continue;
          LaurentPoly x = f, y = f;
          for (int k = 0; k < m; ++k) {
            x = apply_Ti(rd, k % 2 ? j : i, x);
            y = apply_Ti(rd, k % 2 ? i : j, y);
          }
          o.expect(x == y, std::string(type) + ": braid relation");
        }
      }
    }

    AlcoveModel am(g, rd.weight(lam));
    int bound = rd.corank() ? 6 : 20;
    o.expect(lex_chain_violations(am, bound) == 0, std::string(type) + ": lex lambda-chain axioms");

    // reflection order: a positive combination of two coroots sits between them
    auto pos = rd.positive_coroots_up_to(bound);
    std::map<std::vector<Int>, Coroot> by;
    for (const auto& c : pos) by.emplace(c.coeffs(), c);
    std::vector<std::array<std::size_t, 2>> pairs;
    std::vector<Coroot> mids;
    for (std::size_t x = 0; x < pos.size(); ++x)
      for (std::size_t y = 0; y < pos.size(); ++y)
        for (Int p = 1; p <= 3; ++p)
          for (Int q = 1; q <= 3; ++q) {
            if (x == y) continue;
            std::vector<Int> c(pos[x].coeffs());
            for (std::size_t t = 0; t < c.size(); ++t) c[t] = p * c[t] + q * pos[y].coeffs()[t];
            auto it = by.find(c);
            if (it == by.end()) continue;
            pairs.push_back({x, y});
            mids.push_back(it->second);
          }
    o.expect(!pairs.empty(), std::string(type) + ": no triples");
    std::uniform_int_distribution<std::size_t> pick(0, pairs.size() - 1);
    for (int t = 0; t < 200 && !pairs.empty(); ++t) {
      std::size_t k = pick(rng);
      const Coroot &x = pos[pairs[k][0]], &y = pos[pairs[k][1]], &m = mids[k];
      bool between = (am.refl_less(x, m) && am.refl_less(m, y)) || (am.refl_less(y, m) && am.refl_less(m, x));
      o.expect(between, std::string(type) + ": betweenness violated");
    }
  }
  return o;
}

// --- 9 ---------------------------------------------------------------------

Outcome c9() {
  Outcome o;
  auto g = group("A2");
  const auto& rd = g.roots();
  LSModel ls(g, rd.weight(std::vector<Int>{2, 1}));
  auto ch = path_sum(ls, ls.demazure_crystal(g.parse("1 2 1")));
  Int mass = 0;
  for (const auto& [mu, c] : ch.terms()) mass += c;
  o.expect(mass == 15, "mass " + std::to_string(mass));
  for (int i = 0; i < rd.rank(); ++i) o.expect(reflect(rd, i, ch) == ch, "not W-invariant");
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* what;
    double limit;
    std::function<Outcome()> run;
  };
  std::vector<Criterion> all{
      {1, "type A2 nilHecke example (recurrence and explicit)", 1, c1},
      {2, "affine A2 dominant row: LS pairs, tree, three models", 5, c2},
      {3, "affine A2 antidominant row: LS assignment, tree, three models", 5, c3},
      {4, "LS/alcove bijections are inverse and weight preserving", 10, c4},
      {5, "finite-type oracle triangle for +lambda and -lambda", 60, c5},
      {6, "Deodhar lifts match the exhaustive oracles", 30, c6},
      {7, "chart conformance", 60, c7},
      {8, "operator relations, lambda-chain axioms, reflection order", 60, c8},
      {9, "Demazure character of 2w1+w2 at w0 is the Weyl character", 1, c9},
  };
  int failed = 0;
  for (const auto& c : all) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (s > c.limit) o.fail("took " + std::to_string(s) + " s, limit " + std::to_string(c.limit) + " s");
    std::printf("criterion %d: %s  (%.3f s)  %s\n", c.id, o.ok ? "PASS" : "FAIL", s, c.what);
    if (!o.ok) {
      std::printf("  %s\n", o.detail.c_str());
      ++failed;
    }
  }
  return failed ? 1 : 0;
}
