#include "kmchev/weyl.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <set>
#include <unordered_set>

namespace kmchev {

struct WeylGroup::BallCache {
  std::mutex mu;
  std::deque<std::vector<WeylElt>> layers;
  bool complete = false;  // the group is finite and every layer is present
};

WeylGroup::WeylGroup(RootDatum rd, std::size_t layer_cap)
    : rd_(std::move(rd)), cap_(layer_cap), cache_(std::make_shared<BallCache>()) {}

WeylElt WeylGroup::canonical(Weight rho_image) const {
  std::vector<int> word;
  Weight mu = rho_image;
  for (;;) {
    int i = 0;
    while (i < rank() && mu[static_cast<std::size_t>(i)] >= 0) ++i;
    if (i == rank()) break;
    word.push_back(i);
    mu = rd_.simple_reflection(i, std::move(mu));
  }
  if (mu != rd_.rho()) throw CartanError("weight is not in the Weyl orbit of rho");
  return WeylElt(std::move(word), std::move(rho_image));
}

WeylElt WeylGroup::identity() const { return WeylElt({}, rd_.rho()); }

WeylElt WeylGroup::simple(int i) const {
  rd_.check_index(i);
  return WeylElt({i}, rd_.simple_reflection(i, rd_.rho()));
}

WeylElt WeylGroup::from_word(const std::vector<int>& word) const {
  Weight mu = rd_.rho();
  for (auto it = word.rbegin(); it != word.rend(); ++it) mu = rd_.simple_reflection(*it, std::move(mu));
  return canonical(std::move(mu));
}

WeylElt WeylGroup::from_rho_image(const Weight& mu) const {
  if (mu.dim() != rd_.dim()) throw CartanError("weight dimension does not match the realization");
  return canonical(mu);
}

std::vector<int> WeylGroup::parse_word(std::string_view text) const {
  std::vector<int> out;
  std::string tok;
  auto flush = [&] {
    if (tok.empty()) return;
    if (tok != "e") {
      std::size_t used = 0;
      int label = 0;
      try {
        label = std::stoi(tok, &used);
      } catch (const std::logic_error&) {
        used = 0;
      }
      if (used != tok.size()) throw CartanError("bad letter '" + tok + "' in Weyl word");
      out.push_back(rd_.index_of(label));
    }
    tok.clear();
  };
  for (char ch : text) {
    if (ch == ' ' || ch == ',' || ch == '\t')
      flush();
    else
      tok.push_back(ch);
  }
  flush();
  return out;
}

WeylElt WeylGroup::parse(std::string_view text) const { return from_word(parse_word(text)); }

std::string WeylGroup::format(const WeylElt& w) const {
  if (w.is_identity()) return "e";
  std::string s;
  for (int i : w.word()) {
    if (!s.empty()) s += ' ';
    s += std::to_string(rd_.label_of(i));
  }
  return s;
}

Weight WeylGroup::act(const WeylElt& w, Weight mu) const {
  for (auto it = w.word().rbegin(); it != w.word().rend(); ++it) mu = rd_.simple_reflection(*it, std::move(mu));
  return mu;
}

Weight WeylGroup::act_inverse(const WeylElt& w, Weight mu) const {
  for (int i : w.word()) mu = rd_.simple_reflection(i, std::move(mu));
  return mu;
}

Coroot WeylGroup::act(const WeylElt& w, Coroot beta) const {
  for (auto it = w.word().rbegin(); it != w.word().rend(); ++it) beta = rd_.reflect(*it, beta);
  return beta;
}

WeylElt WeylGroup::left_mult(int i, const WeylElt& w) const {
  return canonical(rd_.simple_reflection(i, w.rho_image()));
}

WeylElt WeylGroup::right_mult(const WeylElt& w, int i) const {
  // w s_i rho = w rho - w(alpha_i)
  return canonical(w.rho_image() - act(w, rd_.simple_root(i)));
}

WeylElt WeylGroup::mult(const WeylElt& w, const WeylElt& v) const { return canonical(act(w, v.rho_image())); }

WeylElt WeylGroup::inverse(const WeylElt& w) const {
  std::vector<int> rev(w.word().rbegin(), w.word().rend());
  return from_word(rev);
}

bool WeylGroup::is_left_descent(const WeylElt& w, int i) const { return rd_.pairing(i, w.rho_image()) < 0; }

bool WeylGroup::is_right_descent(const WeylElt& w, int i) const {
  rd_.check_index(i);
  return act(w, rd_.simple_coroot(i)).is_negative();
}

NodeSet WeylGroup::descents(const WeylElt& w, Side side) const {
  NodeSet s;
  for (int i = 0; i < rank(); ++i)
    if (side == Side::Left ? is_left_descent(w, i) : is_right_descent(w, i)) s.insert(i);
  return s;
}

bool WeylGroup::bruhat_leq(const WeylElt& v, const WeylElt& w) const {
  // Z-property recursion carried out on rho-images with length counters.
  Weight x = v.rho_image();
  Weight y = w.rho_image();
  int lx = v.length();
  int ly = w.length();
  for (;;) {
    if (lx == 0) return true;
    if (lx > ly) return false;
    if (lx == ly) return x == y;
    int i = 0;
    while (y[static_cast<std::size_t>(i)] >= 0) ++i;
    if (x[static_cast<std::size_t>(i)] < 0) {
      x = rd_.simple_reflection(i, std::move(x));
      --lx;
    }
    y = rd_.simple_reflection(i, std::move(y));
    --ly;
  }
}

std::vector<Coroot> WeylGroup::inversions(const WeylElt& w) const {
  const auto& word = w.word();
  std::vector<Coroot> out;
  for (std::size_t j = 0; j < word.size(); ++j) {
    Coroot beta = rd_.simple_coroot(word[j]);
    for (std::size_t k = j + 1; k < word.size(); ++k) beta = rd_.reflect(word[k], beta);
    out.push_back(std::move(beta));
  }
  return out;
}

WeylElt WeylGroup::times_reflection(const WeylElt& w, const Coroot& beta) const {
  // w s_beta rho = w rho - <beta, rho> w(beta^vee)
  Weight mu = w.rho_image();
  mu.add_scaled(-beta.height(), act(w, beta.root()));
  return canonical(std::move(mu));
}

std::vector<std::pair<WeylElt, Coroot>> WeylGroup::cocovers(const WeylElt& w) const {
  std::vector<std::pair<WeylElt, Coroot>> out;
  for (const auto& beta : inversions(w)) {
    WeylElt v = times_reflection(w, beta);
    if (v.length() == w.length() - 1) out.emplace_back(std::move(v), beta);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.first == b.first) return a.second < b.second;
    return a.first < b.first;
  });
  return out;
}

std::vector<std::pair<WeylElt, Coroot>> WeylGroup::covers_within(const WeylElt& z, int length_bound) const {
  std::vector<std::pair<WeylElt, Coroot>> out;
  if (length_bound < z.length() + 1) return out;
  for (const auto& w : layer(z.length() + 1)) {
    if (!bruhat_leq(z, w)) continue;
    for (auto& [v, beta] : cocovers(w))
      if (v == z) out.emplace_back(w, beta);
  }
  return out;
}

void WeylGroup::ensure_layers(int bound) const {
  std::lock_guard<std::mutex> lock(cache_->mu);
  auto& layers = cache_->layers;
  if (layers.empty()) layers.push_back({identity()});
  while (!cache_->complete && static_cast<int>(layers.size()) <= bound) {
    std::unordered_set<WeylElt, WeylEltHash> next;
    for (const auto& w : layers.back()) {
      for (int i = 0; i < rank(); ++i) {
        if (rd_.pairing(i, w.rho_image()) <= 0) continue;
        next.insert(left_mult(i, w));
        if (next.size() > cap_)
          throw LayerCapExceeded("Weyl group layer of length " + std::to_string(layers.size()) +
                                 " exceeds the cap of " + std::to_string(cap_) + " elements");
      }
    }
    if (next.empty()) {
      cache_->complete = true;
      break;
    }
    std::vector<WeylElt> v(next.begin(), next.end());
    std::sort(v.begin(), v.end());
    layers.push_back(std::move(v));
  }
}

const std::vector<WeylElt>& WeylGroup::layer(int length) const {
  static const std::vector<WeylElt> empty;
  if (length < 0) return empty;
  ensure_layers(length);
  std::lock_guard<std::mutex> lock(cache_->mu);
  if (length >= static_cast<int>(cache_->layers.size())) return empty;
  return cache_->layers[static_cast<std::size_t>(length)];
}

std::vector<WeylElt> WeylGroup::bfs_ball(int bound) const {
  std::vector<WeylElt> out;
  for (int k = 0; k <= bound; ++k) {
    const auto& l = layer(k);
    if (l.empty()) break;
    out.insert(out.end(), l.begin(), l.end());
  }
  return out;
}

std::vector<WeylElt> WeylGroup::lower_interval(const WeylElt& w) const {
  // Subword products, letters absorbed from the right end of the word.
  std::unordered_set<WeylElt, WeylEltHash> seen{identity()};
  std::vector<WeylElt> all{identity()};
  const auto& word = w.word();
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    std::size_t n = all.size();
    for (std::size_t k = 0; k < n; ++k) {
      WeylElt x = left_mult(*it, all[k]);
      if (seen.insert(x).second) all.push_back(std::move(x));
    }
  }
  std::sort(all.begin(), all.end());
  return all;
}

namespace {

Weight lambda_J(const RootDatum& rd, NodeSet J) {
  Weight mu = rd.zero_weight();
  for (int i = 0; i < rd.rank(); ++i)
    if (!J.contains(i)) mu += rd.fundamental_weight(i);
  return mu;
}

}  // namespace

Coset WeylGroup::coset(const WeylElt& w, NodeSet J) const {
  Weight mu = act(w, lambda_J(rd_, J));
  std::vector<int> word;
  for (;;) {
    int i = 0;
    while (i < rank() && mu[static_cast<std::size_t>(i)] >= 0) ++i;
    if (i == rank()) break;
    word.push_back(i);
    mu = rd_.simple_reflection(i, std::move(mu));
  }
  WeylElt rep = from_word(word);
  return Coset(std::move(rep), J);
}

std::pair<WeylElt, WeylElt> WeylGroup::coset_decompose(const WeylElt& w, NodeSet J) const {
  WeylElt wJ = coset(w, J).min_rep();
  WeylElt rest = mult(inverse(wJ), w);
  if (wJ.length() + rest.length() != w.length() || !in_parabolic(rest, J))
    throw std::logic_error("parabolic decomposition failed");
  return {wJ, rest};
}

bool WeylGroup::coset_leq(const Coset& a, const Coset& b) const {
  if (!(a.J() == b.J())) throw CartanError("cosets of different parabolic subgroups");
  return bruhat_leq(a.min_rep(), b.min_rep());
}

Coset WeylGroup::left_mult(int i, const Coset& c) const { return coset(left_mult(i, c.min_rep()), c.J()); }

int WeylGroup::coset_compare_shift(int i, const Coset& c) const {
  Int p = rd_.pairing(i, act(c.min_rep(), lambda_J(rd_, c.J())));
  return p < 0 ? -1 : (p == 0 ? 0 : 1);
}

bool WeylGroup::in_parabolic(const WeylElt& w, NodeSet J) const {
  return std::all_of(w.word().begin(), w.word().end(), [&](int i) { return J.contains(i); });
}

int WeylGroup::parabolic_longest_length(NodeSet J) const {
  std::vector<WeylElt> cur{identity()};
  int len = 0;
  for (;;) {
    std::unordered_set<WeylElt, WeylEltHash> next;
    for (const auto& w : cur)
      for (int i : J.members()) {
        if (i >= rank()) throw CartanError("node set outside the Dynkin diagram");
        if (rd_.pairing(i, w.rho_image()) > 0) next.insert(left_mult(i, w));
      }
    if (next.empty()) return len;
    if (next.size() > cap_ || len > 8192) throw LayerCapExceeded("parabolic subgroup is too large (or infinite)");
    cur.assign(next.begin(), next.end());
    ++len;
  }
}

}  // namespace kmchev
