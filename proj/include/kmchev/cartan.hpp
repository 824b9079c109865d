#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "kmchev/rational.hpp"

namespace kmchev {

/// Raised for malformed Cartan data, bad node indices and dimension mismatches.
class CartanError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Lattice vector in the ambient coordinates of a realization: the first n
/// entries are fundamental-weight coordinates, the rest are null-space
/// (e.g. delta) coordinates.
class Weight {
 public:
  Weight() = default;
  explicit Weight(std::vector<Int> coords) : c_(std::move(coords)) {}
  static Weight zero(std::size_t dim) { return Weight(std::vector<Int>(dim, 0)); }

  std::size_t dim() const { return c_.size(); }
  Int operator[](std::size_t i) const { return c_[i]; }
  Int& operator[](std::size_t i) { return c_[i]; }
  std::span<const Int> coords() const { return c_; }
  bool is_zero() const;

  Weight& operator+=(const Weight& o);
  Weight& operator-=(const Weight& o);
  Weight& operator*=(Int k);
  /// this += k * o
  Weight& add_scaled(Int k, const Weight& o);

  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator*(Int k, Weight a) { return a *= k; }
  Weight operator-() const { return (*this) * -1; }
  Weight operator*(Int k) const {
    Weight r = *this;
    return r *= k;
  }

  friend bool operator==(const Weight&, const Weight&) = default;
  friend auto operator<=>(const Weight& a, const Weight& b) { return a.c_ <=> b.c_; }

  std::size_t hash() const;

 private:
  std::vector<Int> c_;
};

struct WeightHash {
  std::size_t operator()(const Weight& w) const { return w.hash(); }
};

/// Real coroot alpha = sum_i c_i alpha_i^vee together with its associated real
/// root, generated in tandem.  Only RootDatum constructs these, so every
/// instance carries an implicit realness certificate.
class Coroot {
 public:
  Coroot() = default;

  const std::vector<Int>& coeffs() const { return c_; }
  /// The associated root alpha^vee in ambient coordinates.
  const Weight& root() const { return root_; }
  Int height() const;
  bool is_positive() const;
  bool is_negative() const;
  Coroot operator-() const;

  friend bool operator==(const Coroot& a, const Coroot& b) { return a.c_ == b.c_; }
  friend auto operator<=>(const Coroot& a, const Coroot& b) { return a.c_ <=> b.c_; }

 private:
  friend class RootDatum;
  Coroot(std::vector<Int> c, Weight r) : c_(std::move(c)), root_(std::move(r)) {}
  std::vector<Int> c_;
  Weight root_;
};

/// Small set of Dynkin node indices (rank <= 64).
class NodeSet {
 public:
  NodeSet() = default;
  static NodeSet from_bits(std::uint64_t bits) {
    NodeSet s;
    s.bits_ = bits;
    return s;
  }
  bool contains(int i) const { return (bits_ >> i) & 1U; }
  void insert(int i) { bits_ |= (std::uint64_t{1} << i); }
  bool empty() const { return bits_ == 0; }
  std::uint64_t bits() const { return bits_; }
  std::vector<int> members() const;
  friend bool operator==(const NodeSet&, const NodeSet&) = default;

 private:
  std::uint64_t bits_ = 0;
};

/// Symmetrizable generalized Cartan matrix a[i][j] = <alpha_i^vee, alpha_j>.
class CartanMatrix {
 public:
  /// labels: external node names (defaults to 0..n-1).  The symmetrizer is
  /// derived when absent and validated when given.
  CartanMatrix(std::vector<std::vector<int>> a, std::vector<int> labels = {},
               std::optional<std::vector<Rational>> symmetrizer = std::nullopt,
               std::string name = "custom");

  /// "A<n>", "B<n>", "C<n>", "D<n>", "G2" (nodes 1..n) and "A<n>~" for the
  /// untwisted affine type A_n^(1) (nodes 0..n).
  static CartanMatrix preset(std::string_view name);
  /// {"matrix": [[...]], "symmetrizer": [...]?, "labels": [...]?}
  static CartanMatrix from_json_text(std::string_view text);
  static CartanMatrix from_json_file(const std::string& path);

  int rank() const { return n_; }
  int operator()(int i, int j) const { return a_[static_cast<std::size_t>(i * n_ + j)]; }
  const std::vector<Rational>& symmetrizer() const { return d_; }
  const std::vector<int>& labels() const { return labels_; }
  const std::string& name() const { return name_; }
  /// Rank of the matrix over Q.
  int matrix_rank() const;
  std::vector<std::vector<int>> rows() const;

 private:
  int n_ = 0;
  std::vector<int> a_;
  std::vector<Rational> d_;
  std::vector<int> labels_;
  std::string name_;
};

/// A GCM together with its minimal realization: ambient dimension
/// N = 2n - rank(a), basis (Lambda_0, ..., Lambda_{n-1}, d_1, ..., d_c).
/// Simple coroots act as the first n coordinate functionals.
class RootDatum {
 public:
  explicit RootDatum(CartanMatrix a);

  const CartanMatrix& cartan() const { return a_; }
  int rank() const { return a_.rank(); }
  std::size_t dim() const { return dim_; }
  std::size_t corank() const { return dim_ - static_cast<std::size_t>(rank()); }

  int index_of(int label) const;
  int label_of(int index) const { return a_.labels()[static_cast<std::size_t>(index)]; }
  void check_index(int i) const;

  const Weight& simple_root(int i) const { return simple_roots_[static_cast<std::size_t>(i)]; }
  const Weight& fundamental_weight(int i) const { return fund_[static_cast<std::size_t>(i)]; }
  /// i-th null-space completion vector (delta for untwisted affine presets).
  const Weight& extra_basis(std::size_t t) const { return extra_[t]; }
  const Weight& rho() const { return rho_; }
  Weight zero_weight() const { return Weight::zero(dim_); }
  /// Weight with the given fundamental coordinates and extra coordinates.
  Weight weight(std::span<const Int> fund, std::span<const Int> extra = {}) const;

  Int pairing(int i, const Weight& mu) const;
  Int pairing(const Coroot& alpha, const Weight& mu) const;
  /// <alpha, beta^vee> where beta^vee is the root associated with beta.
  Int pairing(const Coroot& alpha, const Coroot& beta) const { return pairing(alpha, beta.root()); }
  bool is_dominant(const Weight& mu) const;
  /// Nodes fixed by mu: {i : <alpha_i^vee, mu> = 0}.
  NodeSet stabilizer(const Weight& mu) const;

  Weight simple_reflection(int i, Weight mu) const;
  /// s_alpha(mu) = mu - <alpha, mu> alpha^vee.
  Weight reflect(const Coroot& alpha, Weight mu) const;

  Coroot simple_coroot(int i) const;
  /// s_i acting on a coroot (and its root, in tandem).
  Coroot reflect(int i, const Coroot& beta) const;
  /// Looks up a real coroot by its simple-coroot coordinates; throws if the
  /// vector is not a real coroot.
  Coroot coroot(std::span<const Int> coeffs) const;
  /// All positive real coroots of height <= bound, sorted by (height, coeffs).
  std::vector<Coroot> positive_coroots_up_to(int bound) const;
  /// The root attached to alpha computed from the invariant form instead of
  /// the tandem orbit data.
  Weight root_via_invariant_form(const Coroot& alpha) const;

  /// Simple-root expansion of a weight in the root lattice shifted by base:
  /// returns c with mu - base = sum c_i alpha_i, or nullopt.
  std::optional<std::vector<Int>> root_coordinates(const Weight& diff) const;

  /// Kernel generator of a (marks), when the corank is 1.
  std::optional<std::vector<Int>> null_root_marks() const;

 private:
  CartanMatrix a_;
  std::size_t dim_ = 0;
  std::vector<Weight> simple_roots_;
  std::vector<Weight> fund_;
  std::vector<Weight> extra_;
  std::vector<int> extra_node_;  // node whose root carries each extra basis vector
  std::vector<int> label_index_;
  int min_label_ = 0;
  Weight rho_;
};

}  // namespace kmchev
