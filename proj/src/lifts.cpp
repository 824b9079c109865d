#include "kmchev/lifts.hpp"

#include <algorithm>

namespace kmchev {

WeylElt up(const WeylGroup& g, const WeylElt& v, const Coset& tau) {
  if (!g.coset_leq(g.coset(v, tau.J()), tau))
    throw LiftPreconditionError("up: the coset of v is not below tau");
  // Peel descents off tau; each step records the letter to re-apply on the way out.
  std::vector<int> letters;
  WeylElt x = v;
  Coset t = tau;
  while (!t.min_rep().is_identity()) {
    int i = 0;
    while (g.coset_compare_shift(i, t) >= 0) ++i;
    if (g.is_left_descent(x, i)) x = g.left_mult(i, x);
    t = g.left_mult(i, t);
    letters.push_back(i);
  }
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) x = g.left_mult(*it, x);
  return x;
}

WeylElt down(const WeylGroup& g, const WeylElt& w, const Coset& tau) {
  if (!g.coset_leq(tau, g.coset(w, tau.J())))
    throw LiftPreconditionError("down: tau is not below the coset of w");
  const WeylElt* best = nullptr;
  int count = 0;
  auto interval = g.lower_interval(w);
  for (const auto& v : interval) {
    if (!(g.coset(v, tau.J()) == tau)) continue;
    if (best == nullptr || v.length() > best->length()) {
      best = &v;
      count = 1;
    } else if (v.length() == best->length()) {
      ++count;
    }
  }
  if (best == nullptr || count != 1) throw std::logic_error("down: Bruhat maximum is not unique");
  return *best;
}

WeylElt up_oracle(const WeylGroup& g, const WeylElt& v, const Coset& tau, int search_bound) {
  std::vector<WeylElt> cands;
  for (const auto& w : g.bfs_ball(search_bound))
    if (g.bruhat_leq(v, w) && g.coset(w, tau.J()) == tau) cands.push_back(w);
  if (cands.empty()) throw LiftPreconditionError("up_oracle: no candidate within the search bound");
  const WeylElt& m = *std::min_element(cands.begin(), cands.end());
  for (const auto& w : cands)
    if (!g.bruhat_leq(m, w)) throw std::logic_error("up_oracle: candidates have no Bruhat minimum");
  return m;
}

WeylElt down_oracle(const WeylGroup& g, const WeylElt& w, const Coset& tau) {
  std::vector<WeylElt> cands;
  for (const auto& v : g.bfs_ball(w.length()))
    if (g.bruhat_leq(v, w) && g.coset(v, tau.J()) == tau) cands.push_back(v);
  if (cands.empty()) throw LiftPreconditionError("down_oracle: no element of tau below w");
  const WeylElt& m = *std::max_element(cands.begin(), cands.end(),
                                       [](const WeylElt& a, const WeylElt& b) { return a.length() < b.length(); });
  for (const auto& v : cands)
    if (!g.bruhat_leq(v, m)) throw std::logic_error("down_oracle: candidates have no Bruhat maximum");
  return m;
}

}  // namespace kmchev
