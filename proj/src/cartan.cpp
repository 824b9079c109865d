#include "kmchev/cartan.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <queue>
#include <set>
#include <sstream>

#include <json.hpp>

namespace kmchev {

// ---------------------------------------------------------------- Weight

bool Weight::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](Int x) { return x == 0; });
}

Weight& Weight::operator+=(const Weight& o) {
  if (o.c_.size() != c_.size()) throw CartanError("weight dimension mismatch");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] = checked::add(c_[i], o.c_[i]);
  return *this;
}

Weight& Weight::operator-=(const Weight& o) {
  if (o.c_.size() != c_.size()) throw CartanError("weight dimension mismatch");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] = checked::sub(c_[i], o.c_[i]);
  return *this;
}

Weight& Weight::operator*=(Int k) {
  for (auto& x : c_) x = checked::mul(x, k);
  return *this;
}

Weight& Weight::add_scaled(Int k, const Weight& o) {
  if (o.c_.size() != c_.size()) throw CartanError("weight dimension mismatch");
  if (k == 0) return *this;
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] = checked::add(c_[i], checked::mul(k, o.c_[i]));
  return *this;
}

std::size_t Weight::hash() const {
  std::size_t h = 0x9e3779b97f4a7c15ULL;
  for (Int x : c_) h ^= std::hash<Int>{}(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

// ---------------------------------------------------------------- Coroot

Int Coroot::height() const {
  Int h = 0;
  for (Int x : c_) h = checked::add(h, x);
  return h;
}

bool Coroot::is_positive() const {
  return std::all_of(c_.begin(), c_.end(), [](Int x) { return x >= 0; }) &&
         std::any_of(c_.begin(), c_.end(), [](Int x) { return x > 0; });
}

bool Coroot::is_negative() const {
  return std::all_of(c_.begin(), c_.end(), [](Int x) { return x <= 0; }) &&
         std::any_of(c_.begin(), c_.end(), [](Int x) { return x < 0; });
}

Coroot Coroot::operator-() const {
  std::vector<Int> c(c_.size());
  std::transform(c_.begin(), c_.end(), c.begin(), [](Int x) { return -x; });
  return Coroot(std::move(c), -root_);
}

std::vector<int> NodeSet::members() const {
  std::vector<int> out;
  for (int i = 0; i < 64; ++i)
    if (contains(i)) out.push_back(i);
  return out;
}

// ---------------------------------------------------------------- CartanMatrix

namespace {

int rational_rank(std::vector<std::vector<Rational>> m) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows == 0 ? 0 : m[0].size();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t piv = rank;
    while (piv < rows && m[piv][col] == Rational(0)) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[rank]);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || m[r][col] == Rational(0)) continue;
      Rational f = m[r][col] / m[rank][col];
      for (std::size_t c = col; c < cols; ++c) m[r][c] -= f * m[rank][c];
    }
    ++rank;
  }
  return static_cast<int>(rank);
}

std::vector<Rational> derive_symmetrizer(int n, const std::vector<int>& a) {
  auto at = [&](int i, int j) { return a[static_cast<std::size_t>(i * n + j)]; };
  std::vector<std::optional<Rational>> d(static_cast<std::size_t>(n));
  for (int start = 0; start < n; ++start) {
    if (d[static_cast<std::size_t>(start)]) continue;
    d[static_cast<std::size_t>(start)] = Rational(1);
    std::queue<int> q;
    q.push(start);
    while (!q.empty()) {
      int i = q.front();
      q.pop();
      for (int j = 0; j < n; ++j) {
        if (j == i || at(i, j) == 0) continue;
        Rational dj = *d[static_cast<std::size_t>(i)] * Rational(at(i, j), at(j, i));
        auto& slot = d[static_cast<std::size_t>(j)];
        if (!slot) {
          slot = dj;
          q.push(j);
        } else if (*slot != dj) {
          throw CartanError("generalized Cartan matrix is not symmetrizable");
        }
      }
    }
  }
  std::vector<Rational> out;
  for (auto& x : d) out.push_back(*x);
  return out;
}

std::string lower(std::string_view s) {
  std::string r(s);
  for (auto& ch : r) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  return r;
}

}  // namespace

CartanMatrix::CartanMatrix(std::vector<std::vector<int>> a, std::vector<int> labels,
                           std::optional<std::vector<Rational>> symmetrizer, std::string name)
    : n_(static_cast<int>(a.size())), labels_(std::move(labels)), name_(std::move(name)) {
  if (n_ == 0) throw CartanError("empty Cartan matrix");
  if (n_ > 64) throw CartanError("rank above 64 is not supported");
  for (const auto& row : a) {
    if (static_cast<int>(row.size()) != n_) throw CartanError("Cartan matrix must be square");
    a_.insert(a_.end(), row.begin(), row.end());
  }
  for (int i = 0; i < n_; ++i) {
    if ((*this)(i, i) != 2) throw CartanError("diagonal entries of a GCM must be 2");
    for (int j = 0; j < n_; ++j) {
      if (i == j) continue;
      if ((*this)(i, j) > 0) throw CartanError("off-diagonal GCM entries must be <= 0");
      if (((*this)(i, j) == 0) != ((*this)(j, i) == 0))
        throw CartanError("a[i][j] = 0 must imply a[j][i] = 0");
    }
  }
  if (labels_.empty()) {
    for (int i = 0; i < n_; ++i) labels_.push_back(i);
  }
  if (static_cast<int>(labels_.size()) != n_) throw CartanError("label count must equal the rank");
  if (std::set<int>(labels_.begin(), labels_.end()).size() != labels_.size())
    throw CartanError("node labels must be distinct");

  if (symmetrizer) {
    if (static_cast<int>(symmetrizer->size()) != n_) throw CartanError("symmetrizer has wrong length");
    for (const auto& d : *symmetrizer)
      if (d <= Rational(0)) throw CartanError("symmetrizer entries must be positive");
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j)
        if ((*symmetrizer)[static_cast<std::size_t>(i)] * Rational((*this)(i, j)) !=
            (*symmetrizer)[static_cast<std::size_t>(j)] * Rational((*this)(j, i)))
          throw CartanError("symmetrizer does not symmetrize the matrix");
    d_ = *symmetrizer;
  } else {
    d_ = derive_symmetrizer(n_, a_);
  }
}

int CartanMatrix::matrix_rank() const {
  std::vector<std::vector<Rational>> m(static_cast<std::size_t>(n_));
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) m[static_cast<std::size_t>(i)].emplace_back((*this)(i, j));
  return rational_rank(std::move(m));
}

std::vector<std::vector<int>> CartanMatrix::rows() const {
  std::vector<std::vector<int>> out(static_cast<std::size_t>(n_));
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) out[static_cast<std::size_t>(i)].push_back((*this)(i, j));
  return out;
}

CartanMatrix CartanMatrix::preset(std::string_view name) {
  std::string s = lower(name);
  bool affine = !s.empty() && s.back() == '~';
  if (affine) s.pop_back();
  if (s.size() < 2) throw CartanError("unknown Cartan preset '" + std::string(name) + "'");
  char family = s[0];
  int n = 0;
  try {
    std::size_t used = 0;
    n = std::stoi(s.substr(1), &used);
    if (used != s.size() - 1) throw std::invalid_argument("trailing");
  } catch (const std::logic_error&) {
    throw CartanError("unknown Cartan preset '" + std::string(name) + "'");
  }

  auto blank = [](int size) {
    std::vector<std::vector<int>> a(static_cast<std::size_t>(size), std::vector<int>(static_cast<std::size_t>(size), 0));
    for (int i = 0; i < size; ++i) a[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 2;
    return a;
  };
  auto link = [](std::vector<std::vector<int>>& a, int i, int j, int aij, int aji) {
    a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = aij;
    a[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = aji;
  };
  std::vector<int> labels;

  if (affine) {
    if (family != 'a' || n < 1) throw CartanError("unknown affine preset '" + std::string(name) + "'");
    auto a = blank(n + 1);
    if (n == 1) {
      link(a, 0, 1, -2, -2);
    } else {
      for (int i = 0; i <= n; ++i) link(a, i, (i + 1) % (n + 1), -1, -1);
    }
    for (int i = 0; i <= n; ++i) labels.push_back(i);
    return CartanMatrix(std::move(a), std::move(labels), std::nullopt, std::string(name));
  }

  auto a = blank(n);
  for (int i = 1; i <= n; ++i) labels.push_back(i);
  switch (family) {
    case 'a':
      if (n < 1) break;
      for (int i = 0; i + 1 < n; ++i) link(a, i, i + 1, -1, -1);
      return CartanMatrix(std::move(a), std::move(labels), std::nullopt, std::string(name));
    case 'b':
    case 'c':
      if (n < 2) break;
      for (int i = 0; i + 2 < n; ++i) link(a, i, i + 1, -1, -1);
      // alpha_n is short in B_n and long in C_n.
      if (family == 'b')
        link(a, n - 2, n - 1, -1, -2);
      else
        link(a, n - 2, n - 1, -2, -1);
      return CartanMatrix(std::move(a), std::move(labels), std::nullopt, std::string(name));
    case 'd':
      if (n < 4) break;
      for (int i = 0; i + 2 < n; ++i) link(a, i, i + 1, -1, -1);
      link(a, n - 3, n - 1, -1, -1);
      return CartanMatrix(std::move(a), std::move(labels), std::nullopt, std::string(name));
    case 'g':
      if (n != 2) break;
      link(a, 0, 1, -3, -1);
      return CartanMatrix(std::move(a), std::move(labels), std::nullopt, std::string(name));
    default:
      break;
  }
  throw CartanError("unknown Cartan preset '" + std::string(name) + "'");
}

CartanMatrix CartanMatrix::from_json_text(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw CartanError(std::string("invalid GCM JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("matrix")) throw CartanError("GCM JSON needs a \"matrix\" field");
  std::vector<std::vector<int>> a;
  std::vector<int> labels;
  std::optional<std::vector<Rational>> sym;
  try {
    a = j.at("matrix").get<std::vector<std::vector<int>>>();
    if (j.contains("labels")) labels = j.at("labels").get<std::vector<int>>();
    if (j.contains("symmetrizer")) {
      std::vector<Rational> d;
      for (const auto& x : j.at("symmetrizer")) {
        if (x.is_string())
          d.push_back(Rational::parse(x.get<std::string>()));
        else
          d.emplace_back(x.get<Int>());
      }
      sym = std::move(d);
    }
  } catch (const nlohmann::json::exception& e) {
    throw CartanError(std::string("malformed GCM JSON: ") + e.what());
  }
  return CartanMatrix(std::move(a), std::move(labels), std::move(sym), "custom");
}

CartanMatrix CartanMatrix::from_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CartanError("cannot open GCM file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return from_json_text(ss.str());
}

// ---------------------------------------------------------------- RootDatum

RootDatum::RootDatum(CartanMatrix a) : a_(std::move(a)) {
  const int n = a_.rank();
  const int r = a_.matrix_rank();
  dim_ = static_cast<std::size_t>(2 * n - r);

  // Pick a maximal independent set of columns scanning from the last node, so
  // for affine presets the extra vector (delta) lands on node 0.
  std::vector<std::vector<Rational>> chosen;
  for (int i = n - 1; i >= 0; --i) {
    std::vector<Rational> col;
    for (int j = 0; j < n; ++j) col.emplace_back(a_(j, i));
    auto trial = chosen;
    trial.push_back(col);
    if (rational_rank(trial) > static_cast<int>(chosen.size()))
      chosen = std::move(trial);
    else
      extra_node_.push_back(i);
  }
  std::sort(extra_node_.begin(), extra_node_.end());

  for (int i = 0; i < n; ++i) {
    Weight w = Weight::zero(dim_);
    w[static_cast<std::size_t>(i)] = 1;
    fund_.push_back(w);
  }
  for (std::size_t t = 0; t < extra_node_.size(); ++t) {
    Weight w = Weight::zero(dim_);
    w[static_cast<std::size_t>(n) + t] = 1;
    extra_.push_back(w);
  }
  for (int i = 0; i < n; ++i) {
    Weight w = Weight::zero(dim_);
    for (int j = 0; j < n; ++j) w[static_cast<std::size_t>(j)] = a_(j, i);
    for (std::size_t t = 0; t < extra_node_.size(); ++t)
      if (extra_node_[t] == i) w[static_cast<std::size_t>(n) + t] = 1;
    simple_roots_.push_back(std::move(w));
  }
  rho_ = Weight::zero(dim_);
  for (const auto& f : fund_) rho_ += f;

  const auto& labels = a_.labels();
  min_label_ = *std::min_element(labels.begin(), labels.end());
  int max_label = *std::max_element(labels.begin(), labels.end());
  label_index_.assign(static_cast<std::size_t>(max_label - min_label_ + 1), -1);
  for (int i = 0; i < n; ++i) label_index_[static_cast<std::size_t>(labels[static_cast<std::size_t>(i)] - min_label_)] = i;
}

int RootDatum::index_of(int label) const {
  int off = label - min_label_;
  if (off < 0 || off >= static_cast<int>(label_index_.size()) || label_index_[static_cast<std::size_t>(off)] < 0)
    throw CartanError("unknown Dynkin node label " + std::to_string(label));
  return label_index_[static_cast<std::size_t>(off)];
}

void RootDatum::check_index(int i) const {
  if (i < 0 || i >= rank()) throw CartanError("node index " + std::to_string(i) + " out of range");
}

Weight RootDatum::weight(std::span<const Int> fund, std::span<const Int> extra) const {
  if (fund.size() != static_cast<std::size_t>(rank()))
    throw CartanError("expected " + std::to_string(rank()) + " fundamental coordinates, got " +
                      std::to_string(fund.size()));
  if (extra.size() > corank()) throw CartanError("too many null-space coordinates");
  Weight w = Weight::zero(dim_);
  for (std::size_t i = 0; i < fund.size(); ++i) w[i] = fund[i];
  for (std::size_t t = 0; t < extra.size(); ++t) w[fund.size() + t] = extra[t];
  return w;
}

Int RootDatum::pairing(int i, const Weight& mu) const {
  check_index(i);
  if (mu.dim() != dim_) throw CartanError("weight dimension does not match the realization");
  return mu[static_cast<std::size_t>(i)];
}

Int RootDatum::pairing(const Coroot& alpha, const Weight& mu) const {
  if (mu.dim() != dim_ || alpha.coeffs().size() != static_cast<std::size_t>(rank()))
    throw CartanError("dimension mismatch in pairing");
  Int s = 0;
  for (std::size_t i = 0; i < alpha.coeffs().size(); ++i) s = checked::add(s, checked::mul(alpha.coeffs()[i], mu[i]));
  return s;
}

bool RootDatum::is_dominant(const Weight& mu) const {
  for (int i = 0; i < rank(); ++i)
    if (mu[static_cast<std::size_t>(i)] < 0) return false;
  return true;
}

NodeSet RootDatum::stabilizer(const Weight& mu) const {
  NodeSet s;
  for (int i = 0; i < rank(); ++i)
    if (mu[static_cast<std::size_t>(i)] == 0) s.insert(i);
  return s;
}

Weight RootDatum::simple_reflection(int i, Weight mu) const {
  Int p = pairing(i, mu);
  if (p != 0) mu.add_scaled(-p, simple_root(i));
  return mu;
}

Weight RootDatum::reflect(const Coroot& alpha, Weight mu) const {
  Int p = pairing(alpha, mu);
  if (p != 0) mu.add_scaled(-p, alpha.root());
  return mu;
}

Coroot RootDatum::simple_coroot(int i) const {
  check_index(i);
  std::vector<Int> c(static_cast<std::size_t>(rank()), 0);
  c[static_cast<std::size_t>(i)] = 1;
  return Coroot(std::move(c), simple_root(i));
}

Coroot RootDatum::reflect(int i, const Coroot& beta) const {
  check_index(i);
  // <beta, alpha_i> = sum_j c_j a[j][i]
  Int p = 0;
  for (int j = 0; j < rank(); ++j)
    p = checked::add(p, checked::mul(beta.coeffs()[static_cast<std::size_t>(j)], a_(j, i)));
  std::vector<Int> c = beta.coeffs();
  c[static_cast<std::size_t>(i)] = checked::sub(c[static_cast<std::size_t>(i)], p);
  return Coroot(std::move(c), simple_reflection(i, beta.root()));
}

Coroot RootDatum::coroot(std::span<const Int> coeffs) const {
  if (coeffs.size() != static_cast<std::size_t>(rank())) throw CartanError("coroot has wrong length");
  std::vector<Int> c(coeffs.begin(), coeffs.end());
  bool pos = std::all_of(c.begin(), c.end(), [](Int x) { return x >= 0; });
  bool neg = std::all_of(c.begin(), c.end(), [](Int x) { return x <= 0; });
  if ((!pos && !neg) || std::all_of(c.begin(), c.end(), [](Int x) { return x == 0; }))
    throw CartanError("not a real coroot (mixed signs or zero)");
  if (!pos)
    for (auto& x : c) x = -x;

  std::vector<int> path;
  auto height = [](const std::vector<Int>& v) {
    Int h = 0;
    for (Int x : v) h += x;
    return h;
  };
  while (height(c) > 1) {
    int found = -1;
    Int p = 0;
    for (int i = 0; i < rank() && found < 0; ++i) {
      p = 0;
      for (int j = 0; j < rank(); ++j) p = checked::add(p, checked::mul(c[static_cast<std::size_t>(j)], a_(j, i)));
      if (p > 0) found = i;
    }
    if (found < 0) throw CartanError("not a real coroot (imaginary direction)");
    c[static_cast<std::size_t>(found)] -= p;
    if (std::any_of(c.begin(), c.end(), [](Int x) { return x < 0; }))
      throw CartanError("not a real coroot");
    path.push_back(found);
  }
  int j = static_cast<int>(std::find(c.begin(), c.end(), 1) - c.begin());
  if (height(c) != 1 || j >= rank()) throw CartanError("not a real coroot");
  Coroot result = simple_coroot(j);
  for (auto it = path.rbegin(); it != path.rend(); ++it) result = reflect(*it, result);
  return pos ? result : -result;
}

std::vector<Coroot> RootDatum::positive_coroots_up_to(int bound) const {
  std::map<std::vector<Int>, Coroot> seen;
  std::vector<Coroot> frontier;
  if (bound < 1) return {};
  for (int i = 0; i < rank(); ++i) {
    Coroot c = simple_coroot(i);
    seen.emplace(c.coeffs(), c);
    frontier.push_back(c);
  }
  while (!frontier.empty()) {
    std::vector<Coroot> next;
    for (const auto& beta : frontier) {
      for (int i = 0; i < rank(); ++i) {
        Coroot g = reflect(i, beta);
        if (!g.is_positive() || g.height() > bound || seen.count(g.coeffs())) continue;
        seen.emplace(g.coeffs(), g);
        next.push_back(g);
      }
    }
    frontier = std::move(next);
  }
  std::vector<Coroot> out;
  for (auto& [k, v] : seen) out.push_back(v);
  std::sort(out.begin(), out.end(), [](const Coroot& x, const Coroot& y) {
    if (x.height() != y.height()) return x.height() < y.height();
    return x.coeffs() < y.coeffs();
  });
  return out;
}

Weight RootDatum::root_via_invariant_form(const Coroot& alpha) const {
  // (alpha_i, alpha_k) = d_i a[i][k]; alpha_i^vee corresponds to alpha_i / d_i.
  const auto& d = a_.symmetrizer();
  const int n = rank();
  std::vector<Rational> nu(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) nu[static_cast<std::size_t>(i)] = Rational(alpha.coeffs()[static_cast<std::size_t>(i)]) / d[static_cast<std::size_t>(i)];
  Rational norm(0);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k)
      norm += nu[static_cast<std::size_t>(i)] * nu[static_cast<std::size_t>(k)] * d[static_cast<std::size_t>(i)] * Rational(a_(i, k));
  if (norm <= Rational(0)) throw CartanError("coroot has non-positive norm; not real");
  Weight out = zero_weight();
  for (int i = 0; i < n; ++i) {
    Rational c = Rational(2) * nu[static_cast<std::size_t>(i)] / norm;
    out.add_scaled(c.to_integer(), simple_root(i));
  }
  return out;
}

std::optional<std::vector<Int>> RootDatum::root_coordinates(const Weight& diff) const {
  // Solve sum_i c_i alpha_i = diff over Q via elimination on the augmented system.
  const int n = rank();
  std::vector<std::vector<Rational>> m(dim_, std::vector<Rational>(static_cast<std::size_t>(n) + 1));
  for (std::size_t r = 0; r < dim_; ++r) {
    for (int i = 0; i < n; ++i) m[r][static_cast<std::size_t>(i)] = Rational(simple_root(i)[r]);
    m[r][static_cast<std::size_t>(n)] = Rational(diff[r]);
  }
  std::vector<int> pivot_col;
  std::size_t row = 0;
  for (int col = 0; col < n && row < dim_; ++col) {
    std::size_t piv = row;
    while (piv < dim_ && m[piv][static_cast<std::size_t>(col)] == Rational(0)) ++piv;
    if (piv == dim_) continue;
    std::swap(m[piv], m[row]);
    Rational inv = Rational(1) / m[row][static_cast<std::size_t>(col)];
    for (auto& x : m[row]) x *= inv;
    for (std::size_t r = 0; r < dim_; ++r) {
      if (r == row || m[r][static_cast<std::size_t>(col)] == Rational(0)) continue;
      Rational f = m[r][static_cast<std::size_t>(col)];
      for (std::size_t c = 0; c <= static_cast<std::size_t>(n); ++c) m[r][c] -= f * m[row][c];
    }
    pivot_col.push_back(col);
    ++row;
  }
  for (std::size_t r = row; r < dim_; ++r)
    if (m[r][static_cast<std::size_t>(n)] != Rational(0)) return std::nullopt;
  std::vector<Int> out(static_cast<std::size_t>(n), 0);
  for (std::size_t r = 0; r < pivot_col.size(); ++r) {
    const Rational& v = m[r][static_cast<std::size_t>(n)];
    if (!v.is_integer()) return std::nullopt;
    out[static_cast<std::size_t>(pivot_col[r])] = v.num();
  }
  return out;
}

std::optional<std::vector<Int>> RootDatum::null_root_marks() const {
  if (corank() != 1) return std::nullopt;
  // delta = sum_i a_i alpha_i with zero fundamental part: its coordinates are
  // read off the kernel of a.  Solve for the primitive positive integer kernel.
  const int n = rank();
  std::vector<std::vector<Rational>> m(static_cast<std::size_t>(n), std::vector<Rational>(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = Rational(a_(i, j));
  // Reduced row echelon form.
  std::vector<int> pivots;
  std::size_t row = 0;
  for (int col = 0; col < n; ++col) {
    std::size_t piv = row;
    while (piv < m.size() && m[piv][static_cast<std::size_t>(col)] == Rational(0)) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[row]);
    Rational inv = Rational(1) / m[row][static_cast<std::size_t>(col)];
    for (auto& x : m[row]) x *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][static_cast<std::size_t>(col)] == Rational(0)) continue;
      Rational f = m[r][static_cast<std::size_t>(col)];
      for (int c = 0; c < n; ++c) m[r][static_cast<std::size_t>(c)] -= f * m[row][static_cast<std::size_t>(c)];
    }
    pivots.push_back(col);
    ++row;
  }
  int free_col = -1;
  for (int c = 0; c < n; ++c)
    if (std::find(pivots.begin(), pivots.end(), c) == pivots.end()) free_col = c;
  std::vector<Rational> v(static_cast<std::size_t>(n), Rational(0));
  v[static_cast<std::size_t>(free_col)] = Rational(1);
  for (std::size_t r = 0; r < pivots.size(); ++r) v[static_cast<std::size_t>(pivots[r])] = -m[r][static_cast<std::size_t>(free_col)];
  Int l = 1;
  for (const auto& x : v) l = std::lcm(l, x.den());
  std::vector<Int> out;
  Int g = 0;
  for (const auto& x : v) {
    out.push_back((x * Rational(l)).to_integer());
    g = std::gcd(g, out.back());
  }
  bool negative = std::any_of(out.begin(), out.end(), [](Int x) { return x < 0; });
  for (auto& x : out) x = (negative ? -x : x) / g;
  return out;
}

}  // namespace kmchev
