#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "kmchev/kring.hpp"
#include "kmchev/lifts.hpp"

namespace kmchev {

/// Fixed-w row z -> coefficient, as produced by any of the three models.
using ChevalleyRow = NilHeckeCoeffs;

/// LS path of shape lambda in normal form: turning points
/// 0 = b_1 < ... < b_m < 1 and cosets sigma_1 < ... < sigma_m.  The path
/// runs along (b_{j+1} - b_j) sigma_j lambda for j = m down to 1, so
/// sigma_m is the initial direction and sigma_1 the final one.
class LSPath {
 public:
  const std::vector<Rational>& b() const { return b_; }
  const std::vector<Coset>& dirs() const { return dirs_; }
  std::size_t size() const { return dirs_.size(); }
  /// b_{j+1}, with b_{m+1} = 1.
  Rational b_next(std::size_t j) const { return j + 1 < b_.size() ? b_[j + 1] : Rational(1); }
  const Coset& iota() const { return dirs_.back(); }
  const Coset& phi() const { return dirs_.front(); }

  friend bool operator==(const LSPath& p, const LSPath& q) { return p.b_ == q.b_ && p.dirs_ == q.dirs_; }
  friend bool operator<(const LSPath& p, const LSPath& q) {
    if (p.dirs_.size() != q.dirs_.size()) return p.dirs_.size() < q.dirs_.size();
    if (p.b_ != q.b_) return p.b_ < q.b_;
    return p.dirs_ < q.dirs_;
  }

 private:
  friend class LSModel;
  LSPath(std::vector<Rational> b, std::vector<Coset> d) : b_(std::move(b)), dirs_(std::move(d)) {}
  std::vector<Rational> b_;
  std::vector<Coset> dirs_;
};

struct Validation {
  bool ok = true;
  std::string reason;
};

/// i-string h = p_0, ..., p_m = t with p_k = f_i^k(h).
struct IString {
  int node = 0;
  std::vector<LSPath> elems;
  const LSPath& head() const { return elems.front(); }
  const LSPath& tail() const { return elems.back(); }
};

class LSModel {
 public:
  LSModel(WeylGroup g, Weight lambda);

  const WeylGroup& group() const { return g_; }
  const Weight& lambda() const { return lambda_; }
  NodeSet J() const { return J_; }

  Coset coset(const WeylElt& w) const { return g_.coset(w, J_); }
  LSPath straight(const Coset& sigma) const;
  /// Builds a path from (b, dirs) without checking the chain condition.
  LSPath make(std::vector<Rational> b, std::vector<Coset> dirs) const;
  /// Builds a path from steps listed in traversal order as (length, element);
  /// equal neighbours are merged.
  LSPath from_steps(const std::vector<std::pair<Rational, WeylElt>>& steps) const;

  Validation validate(const LSPath& p) const;
  Weight endpoint(const LSPath& p) const;

  std::optional<LSPath> f(int i, const LSPath& p) const;
  std::optional<LSPath> e(int i, const LSPath& p) const;
  /// The full i-string through p.
  IString string_through(int i, const LSPath& p) const;

  /// Closure of {(lambda)} under F_{i_1} ... F_{i_k} along the canonical word of w.
  std::set<LSPath> demazure_crystal(const WeylElt& w) const;
  bool in_demazure(const LSPath& p, const WeylElt& w) const;

  WeylElt up_path(const WeylElt& z, const LSPath& p) const;
  WeylElt down_path(const WeylElt& w, const LSPath& p) const;

  std::set<LSPath> paths_up(const WeylElt& w, const WeylElt& z) const;
  std::set<LSPath> paths_down(const WeylElt& w, const WeylElt& z) const;

  /// Row z -> sum over Pu_{w,z} of e^{p(1)}.
  ChevalleyRow chevalley_dominant(const WeylElt& w) const;
  /// Row z -> sum over Pd_{w,z} of (-1)^{l(w)-l(z)} e^{-p(1)}; the row of -lambda.
  ChevalleyRow chevalley_antidominant(const WeylElt& w) const;

  /// "(1/3 s0s2s1, 2/3 s2s1)" in traversal order; unit lengths are omitted.
  std::string format(const LSPath& p) const;

 private:
  struct Seg {
    Rational len;
    Coset dir;
  };
  std::vector<Seg> traversal(const LSPath& p) const;
  LSPath from_traversal(const std::vector<Seg>& segs) const;
  Int slope(int i, const Coset& c) const;
  bool chain_exists(const WeylElt& lo, const WeylElt& hi, const Rational& b) const;

  WeylGroup g_;
  Weight lambda_;
  NodeSet J_;
};

/// Sets of string elements in the four chart rows.
struct ChartRows {
  std::vector<std::set<LSPath>> rows;  // 4 rows in chart order
};

/// Up chart: rows Pu_{x,z}(S), Pu_{sx,z}(S), Pu_{x,sz}(S), Pu_{sx,sz}(S) for
/// s z > z and s x > x.  Returns "" when all four rows are empty and throws
/// std::logic_error when no column of the chart fits.
std::string classify_up(const LSModel& m, const IString& s, const WeylElt& z, const WeylElt& x);
/// Down chart: rows Pd_{w,x}(S), Pd_{w,sx}(S), Pd_{sw,x}(S), Pd_{sw,sx}(S) for
/// s w < w and s x < x.
std::string classify_down(const LSModel& m, const IString& s, const WeylElt& w, const WeylElt& x);

ChartRows up_chart_rows(const LSModel& m, const IString& s, const WeylElt& z, const WeylElt& x);
ChartRows down_chart_rows(const LSModel& m, const IString& s, const WeylElt& w, const WeylElt& x);

/// Exhaustive chart run over all i-strings of a crystal, with z, w ranging over ball.
struct ChartSurvey {
  std::map<std::string, int> up, down;  // column label -> count
  std::vector<std::string> failures;    // unclassified cases and recurrence mismatches
  std::size_t strings = 0;
};
ChartSurvey survey_charts(const LSModel& m, const std::set<LSPath>& crystal, const std::vector<WeylElt>& ball);

/// Sum of e^{p(1)} over a set of paths.
LaurentPoly path_sum(const LSModel& m, const std::set<LSPath>& paths);

}  // namespace kmchev
