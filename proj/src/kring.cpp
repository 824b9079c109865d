#include "kmchev/kring.hpp"

#include <algorithm>

namespace kmchev {

LaurentPoly LaurentPoly::monomial(const Weight& mu, Int coeff) {
  LaurentPoly p;
  p.add_term(mu, coeff);
  return p;
}

Int LaurentPoly::coeff(const Weight& mu) const {
  auto it = terms_.find(mu);
  return it == terms_.end() ? 0 : it->second;
}

void LaurentPoly::add_term(const Weight& mu, Int c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(mu, c);
  if (inserted) return;
  it->second = checked::add(it->second, c);
  if (it->second == 0) terms_.erase(it);
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [mu, c] : o.terms_) add_term(mu, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [mu, c] : o.terms_) add_term(mu, checked::sub(0, c));
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(Int k) {
  if (k == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [mu, c] : terms_) c = checked::mul(c, k);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out;
  for (const auto& [mu, c] : a.terms_)
    for (const auto& [nu, d] : b.terms_) out.add_term(mu + nu, checked::mul(c, d));
  return out;
}

LaurentPoly LaurentPoly::dual() const {
  LaurentPoly out;
  for (const auto& [mu, c] : terms_) out.add_term(-mu, c);
  return out;
}

bool LaurentPoly::has_nonnegative_coefficients() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second >= 0; });
}

LaurentPoly reflect(const RootDatum& rd, int i, const LaurentPoly& f) {
  LaurentPoly out;
  for (const auto& [mu, c] : f.terms()) out.add_term(rd.simple_reflection(i, mu), c);
  return out;
}

LaurentPoly act(const WeylGroup& g, const WeylElt& w, const LaurentPoly& f) {
  LaurentPoly out;
  for (const auto& [mu, c] : f.terms()) out.add_term(g.act(w, mu), c);
  return out;
}

LaurentPoly apply_Ti(const RootDatum& rd, int i, const LaurentPoly& f) {
  LaurentPoly out;
  const Weight& a = rd.simple_root(i);
  for (const auto& [mu, c] : f.terms()) {
    Int n = rd.pairing(i, mu);
    if (n > 0) {
      Weight x = mu;
      for (Int k = 1; k <= n; ++k) {
        x -= a;
        out.add_term(x, c);
      }
    } else if (n < 0) {
      Weight x = mu;
      for (Int k = 0; k <= -1 - n; ++k) {
        out.add_term(x, checked::sub(0, c));
        x += a;
      }
    }
  }
  return out;
}

LaurentPoly apply_Di(const RootDatum& rd, int i, const LaurentPoly& f) { return f + apply_Ti(rd, i, f); }

NilHeckeCoeffs hecke_compose(const WeylGroup& g, int i, const NilHeckeCoeffs& x) {
  // T_i (b T_y) = (T_i . b) T_y + s_i(b) T_i T_y, and T_i T_y = T_{s_i y} or -T_y.
  const RootDatum& rd = g.roots();
  NilHeckeCoeffs out;
  auto add = [&](const WeylElt& y, const LaurentPoly& p) {
    if (p.is_zero()) return;
    auto& slot = out[y];
    slot += p;
    if (slot.is_zero()) out.erase(y);
  };
  for (const auto& [y, b] : x) {
    add(y, apply_Ti(rd, i, b));
    if (g.is_left_descent(y, i))
      add(y, -reflect(rd, i, b));
    else
      add(g.left_mult(i, y), reflect(rd, i, b));
  }
  return out;
}

NilHeckeCoeffs chevalley_recurrence(const WeylGroup& g, const WeylElt& w, const Weight& lambda) {
  NilHeckeCoeffs row{{g.identity(), LaurentPoly::monomial(lambda)}};
  const auto& word = w.word();
  for (auto it = word.rbegin(); it != word.rend(); ++it) row = hecke_compose(g, *it, row);
  return row;
}

ExplicitResult chevalley_explicit(const WeylGroup& g, const WeylElt& v, const Weight& lambda,
                                  const std::vector<int>& word) {
  const std::size_t n = word.size();
  if (n > kExplicitMaxLetters) throw std::invalid_argument("explicit formula is capped at 20 letters");
  if (g.from_word(word).length() != static_cast<int>(n)) throw std::invalid_argument("word is not reduced");
  const RootDatum& rd = g.roots();
  ExplicitResult res;
  for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
    // Hecke part: product of T_{a_j} over eps_j = 1, left to right.
    WeylElt y = g.identity();
    int sign = 1;
    for (std::size_t j = 0; j < n; ++j) {
      if (!(mask & (1U << (n - 1 - j)))) continue;
      if (g.is_right_descent(y, word[j]))
        sign = -sign;
      else
        y = g.right_mult(y, word[j]);
    }
    if (!(y == v)) continue;
    LaurentPoly f = LaurentPoly::monomial(lambda);
    for (std::size_t j = n; j-- > 0;) {
      bool eps = mask & (1U << (n - 1 - j));
      f = eps ? reflect(rd, word[j], f) : apply_Ti(rd, word[j], f);
    }
    ExplicitTerm t;
    for (std::size_t j = 0; j < n; ++j) t.eps.push_back((mask >> (n - 1 - j)) & 1U);
    t.sign = sign;
    t.value = sign * f;
    res.total += t.value;
    res.terms.push_back(std::move(t));
  }
  return res;
}

}  // namespace kmchev
