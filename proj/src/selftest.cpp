#include "kmchev/selftest.hpp"

#include <chrono>
#include <random>
#include <sstream>

#include <json.hpp>

#include "kmchev/io.hpp"

namespace kmchev {

namespace {

struct Scenario {
  std::string name;
  std::string cartan;
  std::vector<Int> lambda;
  int max_len;
};

const std::vector<Scenario>& scenario_table() {
  static const std::vector<Scenario> table{
      {"A2-rho", "A2", {1, 1}, 3},         {"A2-2w1+w2", "A2", {2, 1}, 3}, {"A2-w1", "A2", {1, 0}, 3},
      {"B2-w1+w2", "B2", {1, 1}, 4},       {"B2-w1", "B2", {1, 0}, 4},     {"G2-w1", "G2", {1, 0}, 6},
      {"A2~-L0+L1", "A2~", {1, 1, 0}, 4},
  };
  return table;
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

CheckResult operator_relations(const Scenario& s, const RootDatum& rd) {
  CheckResult r{s.name, "operator relations", true, ""};
  std::mt19937 rng(7);
  std::uniform_int_distribution<Int> coord(-3, 3);
  auto random_poly = [&] {
    LaurentPoly p;
    for (int t = 0; t < 3; ++t) {
      Weight mu = rd.zero_weight();
      for (std::size_t k = 0; k < rd.dim(); ++k) mu[k] = coord(rng);
      p.add_term(mu, coord(rng));
    }
    return p;
  };
  for (int t = 0; t < 20 && r.passed; ++t) {
    LaurentPoly f = random_poly(), h = random_poly();
    for (int i = 0; i < rd.rank() && r.passed; ++i) {
      LaurentPoly ti = apply_Ti(rd, i, f);
      if (apply_Ti(rd, i, ti) != -ti) r = {s.name, r.name, false, "T_i^2 != -T_i at i=" + std::to_string(rd.label_of(i))};
      if (apply_Ti(rd, i, f * h) != apply_Ti(rd, i, f) * h + reflect(rd, i, f) * apply_Ti(rd, i, h))
        r = {s.name, r.name, false, "twisted Leibniz rule fails at i=" + std::to_string(rd.label_of(i))};
      for (int j = 0; j < rd.rank(); ++j) {
        int m = i == j ? 0 : braid_order(rd.cartan(), i, j);
        if (m == 0) continue;
        LaurentPoly x = f, y = f;
        for (int k = 0; k < m; ++k) {
          x = apply_Ti(rd, k % 2 ? j : i, x);
          y = apply_Ti(rd, k % 2 ? i : j, y);
        }
        if (x != y)
          r = {s.name, r.name, false,
               "braid relation fails for i=" + std::to_string(rd.label_of(i)) + " j=" + std::to_string(rd.label_of(j))};
      }
    }
  }
  return r;
}

CheckResult oracle_triangle(const Scenario& s, const WeylGroup& g, const AlcoveModel& am, const LSModel& ls) {
  CheckResult r{s.name, "oracle triangle", true, ""};
  for (const auto& w : g.bfs_ball(s.max_len)) {
    for (Sign sign : {Sign::Dominant, Sign::Antidominant}) {
      bool dom = sign == Sign::Dominant;
      auto nh = chevalley_recurrence(g, w, dom ? am.lambda() : -am.lambda());
      auto al = dom ? am.chevalley_dominant(w) : am.chevalley_antidominant(w);
      auto lp = dom ? ls.chevalley_dominant(w) : ls.chevalley_antidominant(w);
      std::string d = diff_rows(g, al, nh, "alcove", "nilhecke") + diff_rows(g, lp, nh, "ls", "nilhecke");
      if (!d.empty()) {
        r.passed = false;
        r.detail = "cartan " + s.cartan + " lambda " + format_weight(g.roots(), am.lambda()) + " sign " +
                   to_string(sign) + " w " + g.format(w) + "\n" + d;
        return r;
      }
    }
  }
  return r;
}

CheckResult bijections(const Scenario& s, const WeylGroup& g, const AlcoveModel& am, const LSModel& ls) {
  CheckResult r{s.name, "bijection round trips", true, ""};
  auto bad = [&](const std::string& what, const WeylElt& w, const WeylElt& z, const LSPath& p) {
    r.passed = false;
    r.detail = what + ": w " + g.format(w) + " z " + g.format(z) + " path " + ls.format(p);
  };
  try {
    for (const auto& w : g.bfs_ball(s.max_len))
      for (const auto& z : g.lower_interval(w)) {
        for (const auto& p : ls.paths_up(w, z)) {
          auto H = am.ls_to_inc(ls, p, z);
          if (!(am.inc_to_ls(ls, H) == p) || am.wt_inc(z, H.hs) != ls.endpoint(p) || !(H.top == w))
            return bad("increasing bijection", w, z, p), r;
        }
        for (const auto& p : ls.paths_down(w, z)) {
          auto H = am.ls_to_dec(ls, p, w);
          if (!(am.dec_to_ls(ls, H) == p) || am.wt_dec(z, H.hs) != ls.endpoint(p) || !(H.z == z))
            return bad("decreasing bijection", w, z, p), r;
        }
      }
  } catch (const std::exception& e) {
    r.passed = false;
    r.detail = e.what();
  }
  return r;
}

CheckResult charts(const Scenario& s, const WeylGroup& g, const LSModel& ls) {
  CheckResult r{s.name, "chart classification", true, ""};
  auto ball = g.bfs_ball(s.max_len);
  auto st = survey_charts(ls, ls.demazure_crystal(ball.back()), ball);
  if (!st.failures.empty()) {
    r.passed = false;
    r.detail = st.failures.front();
    return r;
  }
  if (ls.J().empty())
    for (const auto& [label, n] : st.up)
      if (label != "U.1.1" && label != "U.1.2" && label != "U.2.1" && label != "U.2.2") {
        r.passed = false;
        r.detail = "regular weight produced column " + label;
      }
  return r;
}

}  // namespace

bool SelftestReport::passed() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

std::string SelftestReport::to_json() const {
  nlohmann::ordered_json j;
  j["passed"] = passed();
  auto arr = nlohmann::ordered_json::array();
  for (const auto& c : checks) {
    nlohmann::ordered_json x{{"scenario", c.scenario}, {"check", c.name}, {"passed", c.passed}};
    if (!c.passed) x["detail"] = c.detail;
    arr.push_back(x);
  }
  j["checks"] = arr;
  return j.dump(2);
}

std::vector<std::string> selftest_scenarios() {
  std::vector<std::string> out;
  for (const auto& s : scenario_table()) out.push_back(s.name);
  return out;
}

SelftestReport run_selftest(const SelftestOptions& opt) {
  auto t0 = std::chrono::steady_clock::now();
  std::vector<std::string> wanted;
  if (opt.scenarios) {
    std::stringstream ss(*opt.scenarios);
    std::string tok;
    while (std::getline(ss, tok, ','))
      if (!tok.empty()) wanted.push_back(tok);
  } else {
    wanted = selftest_scenarios();
  }
  SelftestReport rep;
  for (const auto& name : wanted) {
    const Scenario* s = nullptr;
    for (const auto& x : scenario_table())
      if (x.name == name) s = &x;
    if (!s) {
      rep.checks.push_back({name, "scenario lookup", false, "unknown scenario"});
      continue;
    }
    WeylGroup g(RootDatum(CartanMatrix::preset(s->cartan)));
    Weight lambda = g.roots().weight(s->lambda);
    AlcoveModel am(g, lambda);
    am.set_fault_flip_lex(opt.fault_flip_lex);
    LSModel ls(g, lambda);
    rep.checks.push_back(operator_relations(*s, g.roots()));
    rep.checks.push_back(oracle_triangle(*s, g, am, ls));
    rep.checks.push_back(bijections(*s, g, am, ls));
    rep.checks.push_back(charts(*s, g, ls));
  }
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

}  // namespace kmchev
