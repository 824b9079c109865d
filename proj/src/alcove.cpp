#include "kmchev/alcove.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace kmchev {

namespace {

// Lexicographic compare of u / pu against v / pv, with pu, pv > 0.
int compare_scaled(const std::vector<Int>& u, Int pu, const std::vector<Int>& v, Int pv) {
  for (std::size_t t = 0; t < u.size(); ++t) {
    Int x = checked::mul(u[t], pv);
    Int y = checked::mul(v[t], pu);
    if (x != y) return x < y ? -1 : 1;
  }
  return 0;
}

Int coroot_height(const Coroot& a) {
  Int h = 0;
  for (Int c : a.coeffs()) h = checked::add(h, c);
  return h;
}

}  // namespace

AlcoveModel::AlcoveModel(WeylGroup g, Weight lambda) : g_(std::move(g)), lambda_(std::move(lambda)) {
  if (lambda_.dim() != g_.roots().dim()) throw CartanError("weight dimension does not match the realization");
  if (!g_.roots().is_dominant(lambda_)) throw CartanError("the alcove model needs a dominant weight");
  J_ = g_.roots().stabilizer(lambda_);
}

Hyperplane AlcoveModel::hyperplane(const Coroot& alpha, Int k) const {
  if (!alpha.is_positive()) throw std::invalid_argument("hyperplane coroot must be positive");
  Int p = g_.roots().pairing(alpha, lambda_);
  if (k < 0 || k >= p) throw std::invalid_argument("hyperplane height out of range [0, <alpha, lambda>)");
  return Hyperplane{alpha, k, p};
}

std::vector<Hyperplane> AlcoveModel::hyperplanes_of(const Coroot& alpha) const {
  std::vector<Hyperplane> out;
  Int p = g_.roots().pairing(alpha, lambda_);
  for (Int k = 0; k < p; ++k) out.push_back(Hyperplane{alpha, k, p});
  return out;
}

bool AlcoveModel::lex_less(const Hyperplane& a, const Hyperplane& b) const {
  std::vector<Int> u{a.k}, v{b.k};
  u.insert(u.end(), a.alpha.coeffs().begin(), a.alpha.coeffs().end());
  v.insert(v.end(), b.alpha.coeffs().begin(), b.alpha.coeffs().end());
  int c = compare_scaled(u, a.pair, v, b.pair);
  return flip_lex_ ? c > 0 : c < 0;
}

bool AlcoveModel::refl_less(const Coroot& a, const Coroot& b) const {
  Int pa = g_.roots().pairing(a, lambda_);
  Int pb = g_.roots().pairing(b, lambda_);
  if (pa > 0 && pb > 0) return compare_scaled(a.coeffs(), pa, b.coeffs(), pb) < 0;
  if (pa > 0 || pb > 0) return pa > 0;
  // Both orthogonal to lambda: the same recipe with rho.
  return compare_scaled(a.coeffs(), coroot_height(a), b.coeffs(), coroot_height(b)) < 0;
}

Weight AlcoveModel::hs_apply(const Hyperplane& h, const Weight& mu) const {
  Weight r = g_.roots().reflect(h.alpha, mu);
  return r.add_scaled(h.k, h.alpha.root());
}

Weight AlcoveModel::ts_apply(const Hyperplane& h, const Weight& mu) const {
  Weight r = g_.roots().reflect(h.alpha, mu);
  return r.add_scaled(h.pair - h.k, h.alpha.root());
}

Weight AlcoveModel::wt_inc(const WeylElt& z, const std::vector<Hyperplane>& hs) const {
  Weight mu = lambda_;
  for (auto it = hs.rbegin(); it != hs.rend(); ++it) mu = hs_apply(*it, mu);
  return g_.act(z, mu);
}

Weight AlcoveModel::wt_dec(const WeylElt& z, const std::vector<Hyperplane>& hs) const {
  Weight mu = lambda_;
  for (auto it = hs.rbegin(); it != hs.rend(); ++it) mu = ts_apply(*it, mu);
  return g_.act(z, mu);
}

std::vector<TreeVertex> AlcoveModel::tree(const WeylElt& w, bool increasing) const {
  std::vector<TreeVertex> out;
  out.push_back(TreeVertex{w, -1, std::nullopt, 0});
  // Children of a vertex come in cocover order, then by k.
  auto expand = [&](std::size_t v) {
    std::vector<TreeVertex> kids;
    const TreeVertex& tv = out[v];
    for (const auto& [x, alpha] : g_.cocovers(tv.elt)) {
      for (const auto& h : hyperplanes_of(alpha)) {
        if (tv.label && !(increasing ? lex_less(h, *tv.label) : lex_less(*tv.label, h))) continue;
        kids.push_back(TreeVertex{x, static_cast<int>(v), h, tv.depth + 1});
      }
    }
    return kids;
  };
  std::function<void(std::size_t)> visit = [&](std::size_t v) {
    for (auto& kid : expand(v)) {
      out.push_back(std::move(kid));
      visit(out.size() - 1);
    }
  };
  visit(0);
  return out;
}

std::vector<TreeVertex> AlcoveModel::tree_dominant(const WeylElt& w) const { return tree(w, true); }
std::vector<TreeVertex> AlcoveModel::tree_antidominant(const WeylElt& w) const { return tree(w, false); }

Adapted AlcoveModel::sequence_at(const std::vector<TreeVertex>& t, std::size_t v) const {
  Adapted a{t.at(v).elt, {}, t.front().elt};
  for (int u = static_cast<int>(v); t[static_cast<std::size_t>(u)].parent >= 0; u = t[static_cast<std::size_t>(u)].parent)
    a.hs.push_back(*t[static_cast<std::size_t>(u)].label);
  return a;
}

std::vector<Adapted> AlcoveModel::sequences(const std::vector<TreeVertex>& t) const {
  std::vector<Adapted> out;
  for (std::size_t v = 0; v < t.size(); ++v) out.push_back(sequence_at(t, v));
  return out;
}

AdaptedEnumeration AlcoveModel::enumerate_z_adapted(const WeylElt& z, Monotone mono, int length_bound) const {
  if (length_bound < z.length()) throw std::invalid_argument("length bound below the length of z");
  AdaptedEnumeration res;
  auto admissible = [&](const std::vector<Hyperplane>& hs, const Hyperplane& h) {
    if (hs.empty()) return true;
    return mono == Monotone::Increasing ? lex_less(hs.back(), h) : lex_less(h, hs.back());
  };
  std::function<void(const WeylElt&, std::vector<Hyperplane>&)> visit = [&](const WeylElt& x,
                                                                           std::vector<Hyperplane>& hs) {
    res.seqs.push_back(Adapted{z, hs, x});
    if (x.length() >= length_bound) {
      if (!res.truncated)
        for (const auto& [y, alpha] : g_.covers_within(x, length_bound + 1))
          for (const auto& h : hyperplanes_of(alpha))
            if (admissible(hs, h)) res.truncated = true;
      return;
    }
    for (const auto& [y, alpha] : g_.covers_within(x, length_bound))
      for (const auto& h : hyperplanes_of(alpha)) {
        if (!admissible(hs, h)) continue;
        hs.push_back(h);
        visit(y, hs);
        hs.pop_back();
      }
  };
  std::vector<Hyperplane> hs;
  visit(z, hs);
  return res;
}

ChevalleyRow AlcoveModel::chevalley_dominant(const WeylElt& w) const {
  ChevalleyRow row;
  for (const auto& a : sequences(tree_dominant(w))) row[a.z] += LaurentPoly::monomial(wt_inc(a.z, a.hs));
  return row;
}

ChevalleyRow AlcoveModel::chevalley_antidominant(const WeylElt& w) const {
  ChevalleyRow row;
  for (const auto& a : sequences(tree_antidominant(w))) {
    Int sign = a.hs.size() % 2 ? -1 : 1;
    row[a.z] += LaurentPoly::monomial(-wt_dec(a.z, a.hs), sign);
  }
  for (auto it = row.begin(); it != row.end();) it = it->second.is_zero() ? row.erase(it) : std::next(it);
  return row;
}

void AlcoveModel::chains(const WeylElt& a, const WeylElt& x, const std::optional<Coroot>& above, bool dual,
                         std::vector<Coroot>& cur, std::vector<std::vector<Coroot>>& out, std::size_t limit) const {
  if (out.size() >= limit) return;
  if (x == a) {
    out.emplace_back(cur.rbegin(), cur.rend());
    return;
  }
  if (x.length() <= a.length()) return;
  for (const auto& [y, beta] : g_.cocovers(x)) {
    if (above && !(dual ? refl_less(*above, beta) : refl_less(beta, *above))) continue;
    if (!g_.bruhat_leq(a, y)) continue;
    cur.push_back(beta);
    chains(a, y, beta, dual, cur, out, limit);
    cur.pop_back();
  }
}

std::vector<Coroot> AlcoveModel::increasing_chain(const WeylElt& a, const WeylElt& b, bool dual) const {
  if (!g_.bruhat_leq(a, b)) throw std::invalid_argument("increasing_chain needs a <= b");
  std::vector<Coroot> cur;
  std::vector<std::vector<Coroot>> out;
  chains(a, b, std::nullopt, dual, cur, out, 2);
  if (out.size() != 1) throw std::logic_error("label-increasing chain is not unique");
  return out.front();
}

std::size_t AlcoveModel::count_increasing_chains(const WeylElt& a, const WeylElt& b, bool dual) const {
  if (!g_.bruhat_leq(a, b)) return 0;
  std::vector<Coroot> cur;
  std::vector<std::vector<Coroot>> out;
  chains(a, b, std::nullopt, dual, cur, out, static_cast<std::size_t>(-1));
  return out.size();
}

Adapted AlcoveModel::ls_to_inc(const LSModel& m, const LSPath& p, const WeylElt& z) const {
  if (!g_.coset_leq(m.coset(z), p.phi())) throw LiftPreconditionError("ls_to_inc needs zW_lambda <= phi(p)");
  Adapted out{z, {}, z};
  for (std::size_t j = 0; j < p.size(); ++j) {
    WeylElt next = up(g_, out.top, p.dirs()[j]);
    for (const auto& beta : increasing_chain(out.top, next)) {
      Int pb = g_.roots().pairing(beta, lambda_);
      Rational k = p.b()[j] * Rational(pb);
      if (pb <= 0 || !k.is_integer()) throw std::logic_error("chain label outside Phi_b^*");
      out.hs.push_back(hyperplane(beta, k.to_integer()));
    }
    out.top = next;
  }
  return out;
}

LSPath AlcoveModel::inc_to_ls(const LSModel& m, const Adapted& a) const {
  std::vector<Rational> b{Rational(0)};
  std::vector<Coset> dirs;
  WeylElt x = a.z;
  Rational cur(0);
  for (const auto& h : a.hs) {
    Rational r = h.rel_height();
    if (r < cur) throw std::invalid_argument("relative heights must weakly increase");
    if (r > cur) {
      dirs.push_back(m.coset(x));
      b.push_back(r);
      cur = r;
    }
    x = g_.times_reflection(x, h.alpha);
  }
  dirs.push_back(m.coset(x));
  if (!(x == a.top)) throw std::invalid_argument("sequence does not end at its top element");
  return m.make(std::move(b), std::move(dirs));
}

Adapted AlcoveModel::ls_to_dec(const LSModel& m, const LSPath& p, const WeylElt& w) const {
  if (!g_.coset_leq(p.iota(), m.coset(w))) throw LiftPreconditionError("ls_to_dec needs iota(p) <= wW_lambda");
  std::size_t n = p.size();
  std::vector<WeylElt> ws(n + 1);
  ws[n] = w;
  for (std::size_t j = n; j-- > 0;) ws[j] = down(g_, ws[j + 1], p.dirs()[j]);
  Adapted out{ws[0], {}, w};
  for (std::size_t j = 1; j <= n; ++j) {
    Rational cobt = p.b_next(j - 1);
    for (const auto& beta : increasing_chain(ws[j - 1], ws[j], true)) {
      Int pb = g_.roots().pairing(beta, lambda_);
      Rational k = (Rational(1) - cobt) * Rational(pb);
      if (pb <= 0 || !k.is_integer()) throw std::logic_error("chain label outside Phi_b^*");
      out.hs.push_back(hyperplane(beta, k.to_integer()));
    }
  }
  return out;
}

LSPath AlcoveModel::dec_to_ls(const LSModel& m, const Adapted& a) const {
  std::vector<Rational> b{Rational(0)};
  std::vector<Coset> dirs{m.coset(a.z)};
  WeylElt x = a.z;
  Rational cur(0);
  for (const auto& h : a.hs) {
    Rational c = h.rel_coheight();
    if (c < cur) throw std::invalid_argument("relative coheights must weakly increase");
    if (c > cur && cur > Rational(0) && cur < Rational(1)) {
      dirs.push_back(m.coset(x));
      b.push_back(cur);
    }
    cur = c;
    x = g_.times_reflection(x, h.alpha);
  }
  if (cur > Rational(0) && cur < Rational(1)) {
    dirs.push_back(m.coset(x));
    b.push_back(cur);
  }
  if (!(x == a.top)) throw std::invalid_argument("sequence does not end at its top element");
  return m.make(std::move(b), std::move(dirs));
}

std::vector<Adapted> AlcoveModel::demazure(const WeylElt& w) const { return sequences(tree_antidominant(w)); }

AdaptedEnumeration AlcoveModel::opposite_demazure(const WeylElt& z, int length_bound) const {
  return enumerate_z_adapted(z, Monotone::Increasing, length_bound);
}

std::string AlcoveModel::format(const Hyperplane& h) const {
  std::ostringstream os;
  os << '(' << h.k << '|';
  for (std::size_t t = 0; t < h.alpha.coeffs().size(); ++t) os << (t ? "," : "") << h.alpha.coeffs()[t];
  os << ')';
  if (h.pair != 1) os << '/' << h.pair;
  return os.str();
}

std::string AlcoveModel::format(const std::vector<Hyperplane>& hs) const {
  std::string s = "(";
  for (std::size_t t = 0; t < hs.size(); ++t) s += (t ? ", " : "") + format(hs[t]);
  return s + ")";
}

namespace {

std::vector<Coroot> all_positive_finite(const RootDatum& rd) {
  if (rd.corank() != 0) throw std::invalid_argument("finite root system required");
  // Heights in finite type stay below 4 * rank (G2 tops at 5).
  return rd.positive_coroots_up_to(4 * rd.rank() + 2);
}

std::optional<Coroot> find(const std::map<std::vector<Int>, Coroot>& by, const std::vector<Int>& c) {
  auto it = by.find(c);
  if (it == by.end()) return std::nullopt;
  return it->second;
}

std::vector<Int> combine(const Coroot& a, Int m, const Coroot& b) {
  std::vector<Int> c(a.coeffs());
  for (std::size_t t = 0; t < c.size(); ++t) c[t] = checked::add(c[t], checked::mul(m, b.coeffs()[t]));
  return c;
}

}  // namespace

bool validate_lambda_chain_finite(const AlcoveModel& am, const std::vector<Hyperplane>& order) {
  const RootDatum& rd = am.group().roots();
  auto pos = all_positive_finite(rd);
  std::map<std::vector<Int>, Coroot> by;
  for (const auto& a : pos) by.emplace(a.coeffs(), a);

  // Condition (1) and multiplicities.
  std::map<std::vector<Int>, Int> seen;
  for (const auto& h : order) {
    if (!by.count(h.alpha.coeffs())) return false;
    Int p = rd.pairing(h.alpha, am.lambda());
    if (h.k < 0 || h.k >= p) return false;
    Int& c = seen[h.alpha.coeffs()];
    if (h.k != c) return false;
    ++c;
  }
  for (const auto& a : pos)
    if (seen[a.coeffs()] != rd.pairing(a, am.lambda())) return false;

  // Interlacing for gamma = alpha + beta.
  for (const auto& a : pos)
    for (const auto& b : pos) {
      if (!(a < b)) continue;
      auto g = find(by, combine(a, 1, b));
      if (!g) continue;
      std::vector<const Coroot*> sub;
      for (const auto& h : order)
        if (h.alpha == a || h.alpha == b || h.alpha == *g) sub.push_back(&h.alpha);
      if (sub.size() % 2) return false;
      for (std::size_t t = 0; t < sub.size(); t += 2)
        if (*sub[t] == *g || !(*sub[t + 1] == *g)) return false;
    }

  // Counting identity of condition (2).
  Int maxm = 0;
  for (const auto& a : pos) maxm = std::max(maxm, coroot_height(a));
  std::map<std::vector<Int>, Int> before;
  for (const auto& h : order) {
    for (const auto& a : pos) {
      if (a == h.alpha) continue;
      for (Int m = -maxm; m <= maxm; ++m) {
        auto g = find(by, combine(a, m, h.alpha));
        if (!g) continue;
        if (before[g->coeffs()] != before[a.coeffs()] + m * before[h.alpha.coeffs()]) return false;
      }
    }
    ++before[h.alpha.coeffs()];
  }
  return true;
}

std::size_t lex_chain_violations(const AlcoveModel& am, int height_bound) {
  const RootDatum& rd = am.group().roots();
  auto pos = rd.positive_coroots_up_to(height_bound);
  std::map<std::vector<Int>, Coroot> by;
  for (const auto& a : pos) by.emplace(a.coeffs(), a);
  std::vector<Hyperplane> hs;
  for (const auto& a : pos)
    for (const auto& h : am.hyperplanes_of(a)) hs.push_back(h);

  std::size_t bad = 0;
  // Totality, antisymmetry, and condition (1).
  for (const auto& x : hs)
    for (const auto& y : hs) {
      bool xy = am.lex_less(x, y), yx = am.lex_less(y, x);
      if (x == y ? (xy || yx) : (xy == yx)) ++bad;
      if (x.alpha == y.alpha && x.k < y.k && !xy) ++bad;
    }
  auto below = [&](const Coroot& eta, const Hyperplane& h) {
    Int n = 0;
    for (const auto& x : am.hyperplanes_of(eta))
      if (am.lex_less(x, h)) ++n;
    return n;
  };
  Int maxm = static_cast<Int>(height_bound);
  for (const auto& h : hs)
    for (const auto& a : pos) {
      if (a == h.alpha) continue;
      for (Int m = -maxm; m <= maxm; ++m) {
        auto g = find(by, combine(a, m, h.alpha));
        if (!g) continue;
        if (below(*g, h) != below(a, h) + m * below(h.alpha, h)) ++bad;
      }
    }
  return bad;
}

ChevalleyRow divisor_product(const WeylGroup& g, int i, const WeylElt& w) {
  const RootDatum& rd = g.roots();
  AlcoveModel am(g, rd.fundamental_weight(i));
  ChevalleyRow out;
  LaurentPoly shift = LaurentPoly::monomial(rd.fundamental_weight(i));
  for (const auto& [z, f] : am.chevalley_antidominant(w)) out[z] = -(shift * f);
  out[w] += LaurentPoly::monomial(rd.zero_weight());
  for (auto it = out.begin(); it != out.end();) it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

}  // namespace kmchev
