#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kmchev/lspath.hpp"

namespace kmchev {

/// lambda-hyperplane H_{alpha,k} with 0 <= k < <alpha, lambda>.
struct Hyperplane {
  Coroot alpha;
  Int k = 0;
  Int pair = 0;  // <alpha, lambda>

  Rational rel_height() const { return Rational(k, pair); }
  Rational rel_coheight() const { return Rational(1) - rel_height(); }
  friend bool operator==(const Hyperplane& a, const Hyperplane& b) { return a.alpha == b.alpha && a.k == b.k; }
};

/// Sequence of hyperplanes tracing a saturated chain z <. z s_{h_1} <. ... <. top.
struct Adapted {
  WeylElt z;
  std::vector<Hyperplane> hs;
  WeylElt top;
};

/// Vertex of a fixed-w tree.  Reading edge labels toward the root gives the sequence.
struct TreeVertex {
  WeylElt elt;
  int parent = -1;
  std::optional<Hyperplane> label;  // edge to the parent
  int depth = 0;
};

enum class Monotone { Increasing, Decreasing };

struct AdaptedEnumeration {
  std::vector<Adapted> seqs;
  bool truncated = false;
};

class AlcoveModel {
 public:
  AlcoveModel(WeylGroup g, Weight lambda);

  const WeylGroup& group() const { return g_; }
  const Weight& lambda() const { return lambda_; }
  NodeSet J() const { return J_; }

  /// Negative control: flips the lex comparison of hyperplanes.
  void set_fault_flip_lex(bool on) { flip_lex_ = on; }
  bool fault_flip_lex() const { return flip_lex_; }

  Hyperplane hyperplane(const Coroot& alpha, Int k) const;
  /// All k for one coroot, in increasing height.
  std::vector<Hyperplane> hyperplanes_of(const Coroot& alpha) const;

  /// Lex lambda-chain: compares (k, c_1, ..., c_r) / <alpha, lambda>.
  bool lex_less(const Hyperplane& a, const Hyperplane& b) const;
  /// Reflection order <_lambda on positive coroots.
  bool refl_less(const Coroot& a, const Coroot& b) const;
  /// Its dual (reverse) order; coroots orthogonal to lambda come first.
  bool refl_less_dual(const Coroot& a, const Coroot& b) const { return refl_less(b, a); }

  Weight hs_apply(const Hyperplane& h, const Weight& mu) const;
  Weight ts_apply(const Hyperplane& h, const Weight& mu) const;
  Weight wt_inc(const WeylElt& z, const std::vector<Hyperplane>& hs) const;
  Weight wt_dec(const WeylElt& z, const std::vector<Hyperplane>& hs) const;

  /// Depth-first trees rooted at w; vertex 0 is the root.
  std::vector<TreeVertex> tree_dominant(const WeylElt& w) const;
  std::vector<TreeVertex> tree_antidominant(const WeylElt& w) const;
  /// The sequence read from vertex v up to the root.
  Adapted sequence_at(const std::vector<TreeVertex>& tree, std::size_t v) const;
  std::vector<Adapted> sequences(const std::vector<TreeVertex>& tree) const;

  /// Monotone z-adapted sequences whose chains stay within length_bound.
  AdaptedEnumeration enumerate_z_adapted(const WeylElt& z, Monotone mono, int length_bound) const;

  ChevalleyRow chevalley_dominant(const WeylElt& w) const;
  ChevalleyRow chevalley_antidominant(const WeylElt& w) const;

  /// Unique saturated chain a <. ... <. b whose labels increase in the given order.
  std::vector<Coroot> increasing_chain(const WeylElt& a, const WeylElt& b, bool dual = false) const;
  /// Number of label-increasing saturated chains from a to b (exhaustive).
  std::size_t count_increasing_chains(const WeylElt& a, const WeylElt& b, bool dual = false) const;

  /// Bijection Pu_{w,z} <-> Inc_{w,z}; w is up(z, p).
  Adapted ls_to_inc(const LSModel& m, const LSPath& p, const WeylElt& z) const;
  LSPath inc_to_ls(const LSModel& m, const Adapted& a) const;
  /// Bijection Pd_{w,z} <-> Dec_{w,z}; z is down(w, p).
  Adapted ls_to_dec(const LSModel& m, const LSPath& p, const WeylElt& w) const;
  LSPath dec_to_ls(const LSModel& m, const Adapted& a) const;

  /// Lex-decreasing sequences adapted to [z, w] for some z.
  std::vector<Adapted> demazure(const WeylElt& w) const;
  /// Lex-increasing z-adapted sequences, truncated by length in infinite type.
  AdaptedEnumeration opposite_demazure(const WeylElt& z, int length_bound) const;

  /// "(k|c_0,c_1,c_2)/p", denominator omitted when it is 1.
  std::string format(const Hyperplane& h) const;
  std::string format(const std::vector<Hyperplane>& hs) const;

 private:
  std::vector<TreeVertex> tree(const WeylElt& w, bool increasing) const;
  void chains(const WeylElt& a, const WeylElt& x, const std::optional<Coroot>& above, bool dual,
              std::vector<Coroot>& cur, std::vector<std::vector<Coroot>>& out, std::size_t limit) const;

  WeylGroup g_;
  Weight lambda_;
  NodeSet J_;
  bool flip_lex_ = false;
};

/// Finite type: checks a candidate lambda-chain given as an ordered hyperplane list.
bool validate_lambda_chain_finite(const AlcoveModel& am, const std::vector<Hyperplane>& order);

/// Lex-chain axiom check over coroots of height <= bound.  Returns the number of violations.
std::size_t lex_chain_violations(const AlcoveModel& am, int height_bound);

/// Fixed-w row of [O_{X_{s_i}}] [O_z]: delta_{z,w} - e^{Lambda_i} (row of -Lambda_i).
ChevalleyRow divisor_product(const WeylGroup& g, int i, const WeylElt& w);

}  // namespace kmchev
