#include "kmchev/lspath.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

namespace kmchev {

LSModel::LSModel(WeylGroup g, Weight lambda) : g_(std::move(g)), lambda_(std::move(lambda)) {
  if (lambda_.dim() != g_.roots().dim()) throw CartanError("weight dimension does not match the realization");
  if (!g_.roots().is_dominant(lambda_)) throw CartanError("LS paths need a dominant weight");
  J_ = g_.roots().stabilizer(lambda_);
}

LSPath LSModel::straight(const Coset& sigma) const { return LSPath({Rational(0)}, {sigma}); }

LSPath LSModel::make(std::vector<Rational> b, std::vector<Coset> dirs) const {
  if (b.empty() || b.size() != dirs.size()) throw std::invalid_argument("LS path needs one turning point per direction");
  if (b.front() != Rational(0)) throw std::invalid_argument("first turning point must be 0");
  for (std::size_t j = 0; j < b.size(); ++j) {
    if (!(dirs[j].J() == J_)) throw std::invalid_argument("direction is not a coset of the stabilizer of lambda");
    Rational next = j + 1 < b.size() ? b[j + 1] : Rational(1);
    if (!(b[j] < next)) throw std::invalid_argument("turning points must increase strictly inside [0, 1)");
  }
  return LSPath(std::move(b), std::move(dirs));
}

LSPath LSModel::from_steps(const std::vector<std::pair<Rational, WeylElt>>& steps) const {
  std::vector<Seg> segs;
  for (const auto& [len, w] : steps) segs.push_back({len, coset(w)});
  Rational total(0);
  for (const auto& s : segs) {
    if (s.len <= Rational(0)) throw std::invalid_argument("step lengths must be positive");
    total += s.len;
  }
  if (total != Rational(1)) throw std::invalid_argument("step lengths must sum to 1");
  return from_traversal(segs);
}

std::vector<LSModel::Seg> LSModel::traversal(const LSPath& p) const {
  std::vector<Seg> out;
  for (std::size_t j = p.size(); j-- > 0;) out.push_back({p.b_next(j) - p.b()[j], p.dirs()[j]});
  return out;
}

LSPath LSModel::from_traversal(const std::vector<Seg>& segs) const {
  std::vector<Seg> merged;
  for (const auto& s : segs) {
    if (s.len == Rational(0)) continue;
    if (!merged.empty() && merged.back().dir == s.dir)
      merged.back().len += s.len;
    else
      merged.push_back(s);
  }
  std::vector<Rational> b;
  std::vector<Coset> dirs;
  Rational acc(0);
  for (auto it = merged.rbegin(); it != merged.rend(); ++it) {
    b.push_back(acc);
    dirs.push_back(it->dir);
    acc += it->len;
  }
  if (acc != Rational(1)) throw std::logic_error("path segments do not sum to 1");
  return LSPath(std::move(b), std::move(dirs));
}

Int LSModel::slope(int i, const Coset& c) const {
  return g_.roots().pairing(i, g_.act(c.min_rep(), lambda_));
}

bool LSModel::chain_exists(const WeylElt& lo, const WeylElt& hi, const Rational& b) const {
  // Downward search from hi through cocovers that stay in W^J and above lo.
  if (lo == hi) return true;
  if (hi.length() <= lo.length()) return false;
  for (const auto& [v, beta] : g_.cocovers(hi)) {
    if (!(g_.coset(v, J_).min_rep() == v) || !g_.bruhat_leq(lo, v)) continue;
    if (!(b * Rational(g_.roots().pairing(beta, lambda_))).is_integer()) continue;
    if (chain_exists(lo, v, b)) return true;
  }
  return false;
}

Validation LSModel::validate(const LSPath& p) const {
  const auto& b = p.b();
  const auto& d = p.dirs();
  if (b.empty() || b.size() != d.size()) return {false, "turning points and directions differ in number"};
  if (b.front() != Rational(0)) return {false, "first turning point is not 0"};
  for (std::size_t j = 0; j < d.size(); ++j) {
    if (!(d[j].J() == J_)) return {false, "direction is not a coset of W_lambda"};
    if (!(b[j] < p.b_next(j))) return {false, "turning points are not strictly increasing in [0,1)"};
  }
  for (std::size_t j = 0; j + 1 < d.size(); ++j) {
    const WeylElt& lo = d[j].min_rep();
    const WeylElt& hi = d[j + 1].min_rep();
    if (lo == hi || !g_.bruhat_leq(lo, hi))
      return {false, "directions are not strictly increasing at position " + std::to_string(j + 1)};
    if (!chain_exists(lo, hi, b[j + 1]))
      return {false, "no admissible chain for turning point " + b[j + 1].str()};
  }
  return {};
}

Weight LSModel::endpoint(const LSPath& p) const {
  std::vector<Rational> acc(lambda_.dim(), Rational(0));
  for (std::size_t j = 0; j < p.size(); ++j) {
    Rational len = p.b_next(j) - p.b()[j];
    Weight v = g_.act(p.dirs()[j].min_rep(), lambda_);
    for (std::size_t k = 0; k < acc.size(); ++k) acc[k] += len * Rational(v[k]);
  }
  Weight out = Weight::zero(lambda_.dim());
  for (std::size_t k = 0; k < acc.size(); ++k) {
    if (!acc[k].is_integer()) throw std::logic_error("LS path endpoint is not a lattice weight");
    out[k] = acc[k].num();
  }
  return out;
}

// Root operators on the exact height function h(t) = <alpha_i^vee, p(t)>.
std::optional<LSPath> LSModel::f(int i, const LSPath& p) const {
  auto segs = traversal(p);
  const std::size_t K = segs.size();
  std::vector<Rational> H{Rational(0)};
  std::vector<Int> n;
  for (const auto& s : segs) {
    n.push_back(slope(i, s.dir));
    H.push_back(H.back() + s.len * Rational(n.back()));
  }
  Rational m = *std::min_element(H.begin(), H.end());
  if (H.back() - m < Rational(1)) return std::nullopt;
  std::size_t k0 = K;
  while (H[k0] != m) --k0;
  std::size_t k1 = k0 + 1;
  while (H[k1] < m + Rational(1)) ++k1;
  Rational s = (m + Rational(1) - H[k1 - 1]) / Rational(n[k1 - 1]);

  std::vector<Seg> out;
  for (std::size_t k = 0; k < K; ++k) {
    const Seg& sg = segs[k];
    if (k < k0 || k >= k1) {
      out.push_back(sg);
    } else if (k + 1 < k1) {
      out.push_back({sg.len, g_.left_mult(i, sg.dir)});
    } else {
      out.push_back({s, g_.left_mult(i, sg.dir)});
      out.push_back({sg.len - s, sg.dir});
    }
  }
  return from_traversal(out);
}

std::optional<LSPath> LSModel::e(int i, const LSPath& p) const {
  auto segs = traversal(p);
  const std::size_t K = segs.size();
  std::vector<Rational> H{Rational(0)};
  std::vector<Int> n;
  for (const auto& s : segs) {
    n.push_back(slope(i, s.dir));
    H.push_back(H.back() + s.len * Rational(n.back()));
  }
  Rational m = *std::min_element(H.begin(), H.end());
  if (m > Rational(-1)) return std::nullopt;
  std::size_t k1 = 0;
  while (H[k1] != m) ++k1;
  std::size_t k0 = k1;
  while (H[k0 - 1] < m + Rational(1)) --k0;
  // Segment k0 - 1 runs from H[k0 - 1] >= m + 1 down past m + 1.
  Rational s = (m + Rational(1) - H[k0 - 1]) / Rational(n[k0 - 1]);

  std::vector<Seg> out;
  for (std::size_t k = 0; k < K; ++k) {
    const Seg& sg = segs[k];
    if (k + 1 < k0 || k >= k1) {
      out.push_back(sg);
    } else if (k + 1 == k0) {
      out.push_back({s, sg.dir});
      out.push_back({sg.len - s, g_.left_mult(i, sg.dir)});
    } else {
      out.push_back({sg.len, g_.left_mult(i, sg.dir)});
    }
  }
  return from_traversal(out);
}

IString LSModel::string_through(int i, const LSPath& p) const {
  LSPath h = p;
  while (auto prev = e(i, h)) h = *prev;
  IString s{i, {h}};
  while (auto next = f(i, s.elems.back())) s.elems.push_back(*next);
  return s;
}

std::set<LSPath> LSModel::demazure_crystal(const WeylElt& w) const {
  std::set<LSPath> cur{straight(coset(g_.identity()))};
  const auto& word = w.word();
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    std::set<LSPath> next = cur;
    for (const auto& p : cur) {
      auto q = f(*it, p);
      while (q) {
        next.insert(*q);
        q = f(*it, *q);
      }
    }
    cur = std::move(next);
  }
  return cur;
}

bool LSModel::in_demazure(const LSPath& p, const WeylElt& w) const { return g_.coset_leq(p.iota(), coset(w)); }

WeylElt LSModel::up_path(const WeylElt& z, const LSPath& p) const {
  WeylElt x = z;
  for (const auto& sigma : p.dirs()) x = up(g_, x, sigma);
  return x;
}

WeylElt LSModel::down_path(const WeylElt& w, const LSPath& p) const {
  WeylElt x = w;
  for (auto it = p.dirs().rbegin(); it != p.dirs().rend(); ++it) x = down(g_, x, *it);
  return x;
}

std::set<LSPath> LSModel::paths_up(const WeylElt& w, const WeylElt& z) const {
  std::set<LSPath> out;
  Coset cz = coset(z);
  for (const auto& p : demazure_crystal(w))
    if (g_.coset_leq(cz, p.phi()) && up_path(z, p) == w) out.insert(p);
  return out;
}

std::set<LSPath> LSModel::paths_down(const WeylElt& w, const WeylElt& z) const {
  std::set<LSPath> out;
  for (const auto& p : demazure_crystal(w))
    if (down_path(w, p) == z) out.insert(p);
  return out;
}

ChevalleyRow LSModel::chevalley_dominant(const WeylElt& w) const {
  ChevalleyRow row;
  Coset cw = coset(w);
  auto interval = g_.lower_interval(w);
  for (const auto& p : demazure_crystal(w)) {
    if (!(p.iota() == cw)) continue;
    Weight end = endpoint(p);
    for (const auto& z : interval)
      if (g_.coset_leq(coset(z), p.phi()) && up_path(z, p) == w) row[z].add_term(end, 1);
  }
  return row;
}

ChevalleyRow LSModel::chevalley_antidominant(const WeylElt& w) const {
  ChevalleyRow row;
  for (const auto& p : demazure_crystal(w)) {
    WeylElt z = down_path(w, p);
    row[z].add_term(-endpoint(p), (w.length() - z.length()) % 2 == 0 ? 1 : -1);
  }
  for (auto it = row.begin(); it != row.end();) it = it->second.is_zero() ? row.erase(it) : std::next(it);
  return row;
}

std::string LSModel::format(const LSPath& p) const {
  std::ostringstream os;
  os << '(';
  bool first = true;
  for (const auto& s : traversal(p)) {
    if (!first) os << ", ";
    first = false;
    if (s.len != Rational(1)) os << s.len.str() << ' ';
    const WeylElt& r = s.dir.min_rep();
    if (r.is_identity()) {
      os << 'e';
    } else {
      for (int i : r.word()) os << 's' << g_.roots().label_of(i);
    }
  }
  os << ')';
  return os.str();
}

LaurentPoly path_sum(const LSModel& m, const std::set<LSPath>& paths) {
  LaurentPoly out;
  for (const auto& p : paths) out.add_term(m.endpoint(p), 1);
  return out;
}

namespace {

using PathSet = std::set<LSPath>;

struct Column {
  const char* label;
  std::size_t min_size;
  std::function<std::vector<PathSet>(const PathSet& S, const PathSet& h, const PathSet& t, const PathSet& mid)> rows;
};

PathSet minus(const PathSet& a, const PathSet& b) {
  PathSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.begin()));
  return out;
}

PathSet unite(const PathSet& a, const PathSet& b) {
  PathSet out = a;
  out.insert(b.begin(), b.end());
  return out;
}

const std::vector<Column>& up_columns() {
  static const std::vector<Column> cols{
      {"U.1.1", 1, [](auto& S, auto&, auto& t, auto&) { return std::vector<PathSet>{S, {}, t, {}}; }},
      {"U.1.2", 2, [](auto& S, auto&, auto&, auto&) { return std::vector<PathSet>{S, {}, S, {}}; }},
      {"U.1.3", 3, [](auto& S, auto& h, auto& t, auto& m) { return std::vector<PathSet>{S, {}, unite(h, t), m}; }},
      {"U.2.1", 1, [](auto& S, auto& h, auto& t, auto&) { return std::vector<PathSet>{h, minus(S, h), {}, t}; }},
      {"U.2.2", 2, [](auto& S, auto& h, auto&, auto&) { return std::vector<PathSet>{h, minus(S, h), h, minus(S, h)}; }},
      {"U.2.3", 3, [](auto& S, auto& h, auto& t, auto&) { return std::vector<PathSet>{h, minus(S, h), minus(S, t), t}; }},
      {"U.3.1", 2, [](auto& S, auto&, auto& t, auto&) { return std::vector<PathSet>{{}, {}, minus(S, t), {}}; }},
      {"U.3.2", 3, [](auto&, auto& h, auto&, auto& m) { return std::vector<PathSet>{{}, {}, h, m}; }},
  };
  return cols;
}

const std::vector<Column>& down_columns() {
  static const std::vector<Column> cols{
      {"D.1.1", 1, [](auto& S, auto& h, auto&, auto&) { return std::vector<PathSet>{S, {}, h, {}}; }},
      {"D.1.2", 2, [](auto& S, auto&, auto&, auto&) { return std::vector<PathSet>{S, {}, S, {}}; }},
      {"D.1.3", 3, [](auto& S, auto& h, auto& t, auto& m) { return std::vector<PathSet>{S, {}, unite(h, t), m}; }},
      {"D.2.1", 1, [](auto& S, auto& h, auto& t, auto&) { return std::vector<PathSet>{t, minus(S, t), {}, h}; }},
      {"D.2.2", 2, [](auto& S, auto&, auto& t, auto&) { return std::vector<PathSet>{t, minus(S, t), t, minus(S, t)}; }},
      {"D.2.3", 3, [](auto& S, auto& h, auto& t, auto&) { return std::vector<PathSet>{t, minus(S, t), minus(S, h), h}; }},
      {"D.3.1", 2, [](auto& S, auto& h, auto&, auto&) { return std::vector<PathSet>{{}, {}, minus(S, h), {}}; }},
      {"D.3.2", 3, [](auto&, auto&, auto& t, auto& m) { return std::vector<PathSet>{{}, {}, t, m}; }},
  };
  return cols;
}

std::string match(const std::vector<Column>& cols, const IString& s, const ChartRows& rows) {
  if (std::all_of(rows.rows.begin(), rows.rows.end(), [](const PathSet& r) { return r.empty(); })) return "";
  PathSet S(s.elems.begin(), s.elems.end());
  PathSet h{s.head()};
  PathSet t{s.tail()};
  PathSet mid = minus(minus(S, h), t);
  std::string found;
  for (const auto& c : cols) {
    if (S.size() < c.min_size) continue;
    if (c.rows(S, h, t, mid) != rows.rows) continue;
    if (!found.empty()) throw std::logic_error("chart columns " + found + " and " + c.label + " both fit");
    found = c.label;
  }
  if (found.empty()) throw std::logic_error("no chart column fits the string");
  return found;
}

}  // namespace

ChartRows up_chart_rows(const LSModel& m, const IString& s, const WeylElt& z, const WeylElt& x) {
  const auto& g = m.group();
  int i = s.node;
  WeylElt sz = g.left_mult(i, z);
  WeylElt sx = g.left_mult(i, x);
  auto pu = [&](const WeylElt& target, const WeylElt& start) {
    PathSet out;
    Coset c = m.coset(start);
    for (const auto& p : s.elems)
      if (g.coset_leq(c, p.phi()) && m.up_path(start, p) == target) out.insert(p);
    return out;
  };
  return {{pu(x, z), pu(sx, z), pu(x, sz), pu(sx, sz)}};
}

ChartRows down_chart_rows(const LSModel& m, const IString& s, const WeylElt& w, const WeylElt& x) {
  const auto& g = m.group();
  int i = s.node;
  WeylElt sw = g.left_mult(i, w);
  WeylElt sx = g.left_mult(i, x);
  auto pd = [&](const WeylElt& start, const WeylElt& target) {
    PathSet out;
    Coset c = m.coset(start);
    for (const auto& p : s.elems)
      if (g.coset_leq(p.iota(), c) && m.down_path(start, p) == target) out.insert(p);
    return out;
  };
  return {{pd(w, x), pd(w, sx), pd(sw, x), pd(sw, sx)}};
}

std::string classify_up(const LSModel& m, const IString& s, const WeylElt& z, const WeylElt& x) {
  const auto& g = m.group();
  if (g.is_left_descent(z, s.node) || g.is_left_descent(x, s.node))
    throw std::invalid_argument("up chart needs s z > z and s x > x");
  if (!g.coset_leq(m.coset(z), s.head().phi())) throw std::invalid_argument("up chart needs z W_lambda <= phi(h)");
  return match(up_columns(), s, up_chart_rows(m, s, z, x));
}

std::string classify_down(const LSModel& m, const IString& s, const WeylElt& w, const WeylElt& x) {
  const auto& g = m.group();
  if (!g.is_left_descent(w, s.node) || !g.is_left_descent(x, s.node))
    throw std::invalid_argument("down chart needs s w < w and s x < x");
  if (!g.coset_leq(s.tail().iota(), m.coset(w))) throw std::invalid_argument("down chart needs iota(t) <= w W_lambda");
  return match(down_columns(), s, down_chart_rows(m, s, w, x));
}

}  // namespace kmchev

namespace kmchev {

ChartSurvey survey_charts(const LSModel& m, const std::set<LSPath>& crystal, const std::vector<WeylElt>& ball) {
  const auto& g = m.group();
  const auto& rd = g.roots();
  ChartSurvey st;
  std::set<std::pair<int, LSPath>> seen;
  auto fail = [&](const std::string& what, int i, const IString& s, const WeylElt& a, const WeylElt& x) {
    st.failures.push_back(what + ": i=" + std::to_string(rd.label_of(i)) + " head=" + m.format(s.head()) +
                          " anchor=" + g.format(a) + " x=" + g.format(x));
  };
  for (const auto& p : crystal)
    for (int i = 0; i < g.rank(); ++i) {
      auto S = m.string_through(i, p);
      if (!seen.insert({i, S.head()}).second) continue;
      ++st.strings;
      for (const auto& z : ball) {
        if (g.is_left_descent(z, i) || !g.coset_leq(m.coset(z), S.head().phi())) continue;
        WeylElt sz = g.left_mult(i, z);
        std::set<WeylElt> xs;
        for (const auto& q : S.elems)
          for (const auto& start : {z, sz})
            if (g.coset_leq(m.coset(start), q.phi())) {
              WeylElt u = m.up_path(start, q);
              xs.insert(u);
              xs.insert(g.left_mult(i, u));
            }
        for (const auto& x : xs) {
          if (g.is_left_descent(x, i)) continue;
          try {
            auto label = classify_up(m, S, z, x);
            if (!label.empty()) ++st.up[label];
          } catch (const std::logic_error& e) {
            fail(std::string("up chart ") + e.what(), i, S, z, x);
          }
          auto r = up_chart_rows(m, S, z, x).rows;
          LaurentPoly a = path_sum(m, r[0]), b = path_sum(m, r[1]), c = path_sum(m, r[2]), d = path_sum(m, r[3]);
          if (b != apply_Ti(rd, i, a) || d != apply_Ti(rd, i, c) + reflect(rd, i, a - c))
            fail("up recurrence mismatch", i, S, z, x);
        }
      }
      for (const auto& w : ball) {
        if (!g.is_left_descent(w, i) || !g.coset_leq(S.tail().iota(), m.coset(w))) continue;
        WeylElt sw = g.left_mult(i, w);
        std::set<WeylElt> xs;
        for (const auto& q : S.elems)
          for (const auto& start : {w, sw})
            if (g.coset_leq(q.iota(), m.coset(start))) {
              WeylElt d = m.down_path(start, q);
              xs.insert(d);
              xs.insert(g.left_mult(i, d));
            }
        for (const auto& x : xs) {
          if (!g.is_left_descent(x, i)) continue;
          try {
            auto label = classify_down(m, S, w, x);
            if (!label.empty()) ++st.down[label];
          } catch (const std::logic_error& e) {
            fail(std::string("down chart ") + e.what(), i, S, w, x);
          }
        }
      }
    }
  return st;
}

}  // namespace kmchev
