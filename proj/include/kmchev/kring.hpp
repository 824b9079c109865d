#pragma once

#include <map>
#include <string>
#include <vector>

#include "kmchev/weyl.hpp"

namespace kmchev {

/// Finite integer combination of weight exponentials e^mu.  Zero
/// coefficients are never stored.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  static LaurentPoly monomial(const Weight& mu, Int coeff = 1);

  const std::map<Weight, Int>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Int coeff(const Weight& mu) const;
  void add_term(const Weight& mu, Int c);

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(Int k);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(Int k, LaurentPoly a) { return a *= k; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly operator-() const { return (-1) * (*this); }
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  /// Substitutes e^mu -> e^{-mu}.
  LaurentPoly dual() const;
  bool has_nonnegative_coefficients() const;

 private:
  std::map<Weight, Int> terms_;
};

/// A row z -> b_z of polynomial coefficients in the T-basis, i.e. the
/// element sum_z b_z T_z of the nilHecke ring (coefficients on the left).
using NilHeckeCoeffs = std::map<WeylElt, LaurentPoly>;

/// s_i acting on exponents.
LaurentPoly reflect(const RootDatum& rd, int i, const LaurentPoly& f);
/// w acting on exponents.
LaurentPoly act(const WeylGroup& g, const WeylElt& w, const LaurentPoly& f);

/// Demazure-Lusztig type operator T_i on R(T).
LaurentPoly apply_Ti(const RootDatum& rd, int i, const LaurentPoly& f);
/// Demazure operator D_i = 1 + T_i.
LaurentPoly apply_Di(const RootDatum& rd, int i, const LaurentPoly& f);

/// Left multiplication by T_i in the nilHecke ring.
NilHeckeCoeffs hecke_compose(const WeylGroup& g, int i, const NilHeckeCoeffs& x);

/// The row {z -> b^w_{z,lambda}} defined by T_w e^lambda = sum_z b^w_{z,lambda} T_z.
NilHeckeCoeffs chevalley_recurrence(const WeylGroup& g, const WeylElt& w, const Weight& lambda);

struct ExplicitTerm {
  std::vector<int> eps;  // 0/1 per letter of the word
  int sign = 1;
  LaurentPoly value;  // already multiplied by sign
};

struct ExplicitResult {
  LaurentPoly total;
  std::vector<ExplicitTerm> terms;  // the subsets contributing to T_v, in lexicographic eps order
};

inline constexpr std::size_t kExplicitMaxLetters = 20;

/// Signed subword expansion of the T_v coefficient of T_w e^lambda for a
/// reduced word of w (internal node indices).
ExplicitResult chevalley_explicit(const WeylGroup& g, const WeylElt& v, const Weight& lambda,
                                  const std::vector<int>& word);

}  // namespace kmchev
