#pragma once

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "kmchev/cartan.hpp"

namespace kmchev {

/// Raised when a breadth-first ball layer would exceed the configured cap.
class LayerCapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Weyl group element identified by its image of rho.  The word is the
/// canonical reduced word obtained by repeatedly stripping the smallest-index
/// left descent; entries are internal node indices.
class WeylElt {
 public:
  WeylElt() = default;

  const std::vector<int>& word() const { return word_; }
  const Weight& rho_image() const { return rho_; }
  int length() const { return static_cast<int>(word_.size()); }
  bool is_identity() const { return word_.empty(); }

  friend bool operator==(const WeylElt& a, const WeylElt& b) { return a.rho_ == b.rho_; }
  /// Graded order: by length, then lexicographically by canonical word.
  friend bool operator<(const WeylElt& a, const WeylElt& b) {
    if (a.word_.size() != b.word_.size()) return a.word_.size() < b.word_.size();
    return a.word_ < b.word_;
  }
  std::size_t hash() const { return rho_.hash(); }

 private:
  friend class WeylGroup;
  WeylElt(std::vector<int> w, Weight r) : word_(std::move(w)), rho_(std::move(r)) {}
  std::vector<int> word_;
  Weight rho_;
};

struct WeylEltHash {
  std::size_t operator()(const WeylElt& w) const { return w.hash(); }
};

/// Left coset x W_J, stored via its minimal-length representative.
class Coset {
 public:
  const WeylElt& min_rep() const { return rep_; }
  NodeSet J() const { return j_; }
  friend bool operator==(const Coset& a, const Coset& b) { return a.j_ == b.j_ && a.rep_ == b.rep_; }
  friend bool operator<(const Coset& a, const Coset& b) { return a.rep_ < b.rep_; }

 private:
  friend class WeylGroup;
  Coset(WeylElt r, NodeSet j) : rep_(std::move(r)), j_(j) {}
  WeylElt rep_;
  NodeSet j_;
};

enum class Side { Left, Right };

inline constexpr std::size_t kDefaultLayerCap = 100000;

class WeylGroup {
 public:
  explicit WeylGroup(RootDatum rd, std::size_t layer_cap = kDefaultLayerCap);

  const RootDatum& roots() const { return rd_; }
  int rank() const { return rd_.rank(); }
  std::size_t layer_cap() const { return cap_; }

  WeylElt identity() const;
  WeylElt simple(int i) const;
  /// Product of the simple reflections in word (internal indices), canonicalized.
  WeylElt from_word(const std::vector<int>& word) const;
  /// Element with the given image of rho; throws if mu is not in the orbit.
  WeylElt from_rho_image(const Weight& mu) const;

  /// Parses "e", "", "1 2 1" or "1,2,1" in external node labels.
  WeylElt parse(std::string_view text) const;
  /// Space-separated external labels, or "e".
  std::string format(const WeylElt& w) const;
  std::vector<int> parse_word(std::string_view text) const;

  Weight act(const WeylElt& w, Weight mu) const;
  Weight act_inverse(const WeylElt& w, Weight mu) const;
  Coroot act(const WeylElt& w, Coroot beta) const;

  WeylElt left_mult(int i, const WeylElt& w) const;
  WeylElt right_mult(const WeylElt& w, int i) const;
  WeylElt mult(const WeylElt& w, const WeylElt& v) const;
  WeylElt inverse(const WeylElt& w) const;

  bool is_left_descent(const WeylElt& w, int i) const;
  bool is_right_descent(const WeylElt& w, int i) const;
  NodeSet descents(const WeylElt& w, Side side) const;

  bool bruhat_leq(const WeylElt& v, const WeylElt& w) const;
  /// Positive coroots beta with w(beta) negative, one per letter of the word.
  std::vector<Coroot> inversions(const WeylElt& w) const;
  /// w s_beta for a real coroot beta.
  WeylElt times_reflection(const WeylElt& w, const Coroot& beta) const;
  /// Pairs (w s_alpha, alpha) with length l(w) - 1, sorted by element then coroot.
  std::vector<std::pair<WeylElt, Coroot>> cocovers(const WeylElt& w) const;
  /// Pairs (z s_alpha, alpha) covering z whose length is at most length_bound.
  std::vector<std::pair<WeylElt, Coroot>> covers_within(const WeylElt& z, int length_bound) const;

  /// All elements of length <= bound, sorted by (length, word).
  std::vector<WeylElt> bfs_ball(int bound) const;
  /// Elements of exactly the given length.
  const std::vector<WeylElt>& layer(int length) const;
  /// The Bruhat interval [e, w], sorted by (length, word).
  std::vector<WeylElt> lower_interval(const WeylElt& w) const;

  Coset coset(const WeylElt& w, NodeSet J) const;
  /// (w^J, w_J) with w = w^J w_J and lengths adding.
  std::pair<WeylElt, WeylElt> coset_decompose(const WeylElt& w, NodeSet J) const;
  bool coset_leq(const Coset& a, const Coset& b) const;
  Coset left_mult(int i, const Coset& c) const;
  /// s_i applied to the coset: -1 if s_i c < c, 0 if equal, +1 if greater.
  int coset_compare_shift(int i, const Coset& c) const;
  /// Length of the longest element of the parabolic subgroup W_J.
  int parabolic_longest_length(NodeSet J) const;
  bool in_parabolic(const WeylElt& w, NodeSet J) const;

 private:
  WeylElt canonical(Weight rho_image) const;
  void ensure_layers(int bound) const;

  RootDatum rd_;
  std::size_t cap_;
  struct BallCache;
  std::shared_ptr<BallCache> cache_;
};

}  // namespace kmchev
