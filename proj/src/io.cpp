#include "kmchev/io.hpp"

#include <map>
#include <sstream>

#include <json.hpp>

namespace kmchev {

using nlohmann::ordered_json;

std::optional<Weight> delta_weight(const RootDatum& rd) {
  auto marks = rd.null_root_marks();
  if (!marks) return std::nullopt;
  Weight d = rd.zero_weight();
  for (int i = 0; i < rd.rank(); ++i) d.add_scaled((*marks)[static_cast<std::size_t>(i)], rd.simple_root(i));
  return d;
}

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t");
  auto e = s.find_last_not_of(" \t");
  return b == std::string::npos ? "" : s.substr(b, e - b + 1);
}

Int parse_int(const std::string& s) {
  std::size_t pos = 0;
  Int v = 0;
  try {
    v = std::stoll(s, &pos);
  } catch (const std::exception&) {
    throw std::invalid_argument("not an integer: '" + s + "'");
  }
  if (pos != s.size()) throw std::invalid_argument("not an integer: '" + s + "'");
  return v;
}

// Extra (null) coordinates of mu after removing the fundamental part.
std::vector<Int> extra_part(const RootDatum& rd, const Weight& mu) {
  std::vector<Int> out;
  for (std::size_t t = static_cast<std::size_t>(rd.rank()); t < rd.dim(); ++t) out.push_back(mu[t]);
  return out;
}

Rational delta_coefficient(const RootDatum& rd, const Weight& mu) {
  auto d = delta_weight(rd);
  Int dn = (*d)[static_cast<std::size_t>(rd.rank())];
  return Rational(mu[static_cast<std::size_t>(rd.rank())], dn);
}

ordered_json weight_json(const RootDatum& rd, const Weight& mu) {
  ordered_json j;
  std::vector<Int> fund(mu.coords().begin(), mu.coords().begin() + rd.rank());
  j["fund"] = fund;
  if (rd.corank() == 1) {
    Rational q = delta_coefficient(rd, mu);
    if (q.is_integer())
      j["delta"] = q.num();
    else
      j["delta"] = q.str();
  } else if (rd.corank() > 1) {
    j["delta"] = extra_part(rd, mu);
  }
  return j;
}

Weight weight_from_json(const RootDatum& rd, const ordered_json& j) {
  auto fund = j.at("fund").get<std::vector<Int>>();
  if (fund.size() != static_cast<std::size_t>(rd.rank())) throw std::invalid_argument("weight has the wrong rank");
  Weight mu = rd.weight(fund);
  if (j.contains("delta")) {
    if (rd.corank() == 1) {
      Rational q = j["delta"].is_string() ? Rational::parse(j["delta"].get<std::string>())
                                          : Rational(j["delta"].get<Int>());
      Rational c = q * Rational((*delta_weight(rd))[static_cast<std::size_t>(rd.rank())]);
      mu[static_cast<std::size_t>(rd.rank())] = c.to_integer();
    } else {
      auto ex = j["delta"].get<std::vector<Int>>();
      if (ex.size() != rd.corank()) throw std::invalid_argument("extra coordinates have the wrong size");
      for (std::size_t t = 0; t < ex.size(); ++t) mu[static_cast<std::size_t>(rd.rank()) + t] = ex[t];
    }
  }
  return mu;
}

std::vector<int> labels(const WeylGroup& g, const WeylElt& w) {
  std::vector<int> out;
  for (int i : w.word()) out.push_back(g.roots().label_of(i));
  return out;
}

WeylElt from_labels(const WeylGroup& g, const std::vector<int>& ls) {
  std::vector<int> word;
  for (int l : ls) word.push_back(g.roots().index_of(l));
  return g.from_word(word);
}

std::string poly_text(const RootDatum& rd, const LaurentPoly& f) {
  if (f.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [mu, c] : f.terms()) {
    if (!first) s += c < 0 ? " - " : " + ";
    else if (c < 0) s += "-";
    first = false;
    Int a = c < 0 ? -c : c;
    if (a != 1) s += std::to_string(a);
    s += "e^(" + format_weight(rd, mu) + ")";
  }
  return s;
}

}  // namespace

Weight parse_weight(const RootDatum& rd, const std::string& text) {
  std::vector<Int> fund;
  std::optional<Rational> delta;
  std::vector<Int> extra;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    tok = trim(tok);
    if (tok.rfind("delta=", 0) == 0) {
      if (rd.corank() != 1) throw std::invalid_argument("delta part needs a corank-one Cartan matrix");
      delta = Rational::parse(tok.substr(6));
    } else if (tok.rfind("extra=", 0) == 0) {
      std::stringstream es(tok.substr(6));
      std::string x;
      while (std::getline(es, x, ':')) extra.push_back(parse_int(trim(x)));
      if (extra.size() != rd.corank()) throw std::invalid_argument("extra= needs one entry per extra coordinate");
    } else {
      if (delta || !extra.empty()) throw std::invalid_argument("delta/extra must come last in a weight");
      fund.push_back(parse_int(tok));
    }
  }
  if (fund.size() != static_cast<std::size_t>(rd.rank()))
    throw std::invalid_argument("weight needs " + std::to_string(rd.rank()) + " fundamental coordinates");
  Weight mu = rd.weight(fund);
  if (delta) {
    Rational c = *delta * Rational((*delta_weight(rd))[static_cast<std::size_t>(rd.rank())]);
    if (!c.is_integer()) throw std::invalid_argument("delta coefficient leaves the weight lattice");
    mu[static_cast<std::size_t>(rd.rank())] = c.to_integer();
  }
  for (std::size_t t = 0; t < extra.size(); ++t) mu[static_cast<std::size_t>(rd.rank()) + t] = extra[t];
  return mu;
}

std::string format_weight(const RootDatum& rd, const Weight& mu) {
  std::string s;
  for (int i = 0; i < rd.rank(); ++i) s += (i ? "," : "") + std::to_string(mu[static_cast<std::size_t>(i)]);
  if (rd.corank() == 1) {
    Rational q = delta_coefficient(rd, mu);
    if (q != Rational(0)) s += ",delta=" + q.str();
  } else {
    for (Int x : extra_part(rd, mu))
      if (x != 0) {
        s += ",extra=";
        for (std::size_t t = 0; t < rd.corank(); ++t) s += (t ? ":" : "") + std::to_string(extra_part(rd, mu)[t]);
        break;
      }
  }
  return s;
}

std::string to_string(Sign s) { return s == Sign::Dominant ? "dominant" : "antidominant"; }

std::string to_string(Model m) {
  switch (m) {
    case Model::LS: return "ls";
    case Model::Alcove: return "alcove";
    default: return "nilhecke";
  }
}

Sign parse_sign(const std::string& s) {
  if (s == "dominant" || s == "+") return Sign::Dominant;
  if (s == "antidominant" || s == "-") return Sign::Antidominant;
  throw std::invalid_argument("sign must be dominant or antidominant");
}

Model parse_model(const std::string& s) {
  if (s == "ls") return Model::LS;
  if (s == "alcove") return Model::Alcove;
  if (s == "nilhecke") return Model::NilHecke;
  throw std::invalid_argument("model must be ls, alcove or nilhecke");
}

namespace {

ChevalleyRow row_for(const WeylGroup& g, const Weight& lambda, Sign sign, Model model, const WeylElt& w) {
  switch (model) {
    case Model::LS: {
      LSModel m(g, lambda);
      return sign == Sign::Dominant ? m.chevalley_dominant(w) : m.chevalley_antidominant(w);
    }
    case Model::Alcove: {
      AlcoveModel am(g, lambda);
      return sign == Sign::Dominant ? am.chevalley_dominant(w) : am.chevalley_antidominant(w);
    }
    default:
      if (!g.roots().is_dominant(lambda)) throw CartanError("the Chevalley rows need a dominant weight");
      return chevalley_recurrence(g, w, sign == Sign::Dominant ? lambda : -lambda);
  }
}

}  // namespace

ChevalleyResult compute_row(const WeylGroup& g, const std::string& cartan, const Weight& lambda, Sign sign,
                            Model model, const WeylElt& w) {
  return ChevalleyResult{cartan, lambda, sign, false, w, row_for(g, lambda, sign, model, w), false};
}

ChevalleyResult compute_row_fixed_z(const WeylGroup& g, const std::string& cartan, const Weight& lambda, Sign sign,
                                    Model model, const WeylElt& z, int max_length) {
  if (max_length < z.length()) throw std::invalid_argument("--max-length is below the length of z");
  ChevalleyResult r{cartan, lambda, sign, true, z, {}, !g.layer(max_length + 1).empty()};
  if (model == Model::Alcove) {
    AlcoveModel am(g, lambda);
    if (sign == Sign::Dominant) {
      for (const auto& a : am.enumerate_z_adapted(z, Monotone::Increasing, max_length).seqs)
        r.rows[a.top] += LaurentPoly::monomial(am.wt_inc(z, a.hs));
    } else {
      for (const auto& a : am.enumerate_z_adapted(z, Monotone::Decreasing, max_length).seqs)
        r.rows[a.top] += LaurentPoly::monomial(-am.wt_dec(z, a.hs), a.hs.size() % 2 ? -1 : 1);
    }
  } else {
    for (const auto& w : g.bfs_ball(max_length)) {
      if (!g.bruhat_leq(z, w)) continue;
      auto row = row_for(g, lambda, sign, model, w);
      auto it = row.find(z);
      if (it != row.end()) r.rows[w] = it->second;
    }
  }
  for (auto it = r.rows.begin(); it != r.rows.end();) it = it->second.is_zero() ? r.rows.erase(it) : std::next(it);
  return r;
}

std::string to_json(const WeylGroup& g, const ChevalleyResult& r, int indent) {
  const RootDatum& rd = g.roots();
  ordered_json j;
  j["cartan"] = r.cartan;
  j["lambda"] = weight_json(rd, r.lambda);
  j["sign"] = to_string(r.sign);
  j[r.fixed_z ? "z" : "w"] = labels(g, r.anchor);
  ordered_json rows = ordered_json::array();
  for (const auto& [x, f] : r.rows) {
    ordered_json row;
    row[r.fixed_z ? "w" : "z"] = labels(g, x);
    ordered_json terms = ordered_json::array();
    for (const auto& [mu, c] : f.terms()) terms.push_back({{"weight", weight_json(rd, mu)}, {"mult", c}});
    row["terms"] = terms;
    rows.push_back(row);
  }
  j["rows"] = rows;
  j["truncated"] = r.truncated;
  return j.dump(indent);
}

ChevalleyResult result_from_json(const WeylGroup& g, const std::string& text) {
  const RootDatum& rd = g.roots();
  auto j = ordered_json::parse(text);
  ChevalleyResult r;
  r.cartan = j.at("cartan").get<std::string>();
  r.lambda = weight_from_json(rd, j.at("lambda"));
  r.sign = parse_sign(j.at("sign").get<std::string>());
  r.fixed_z = j.contains("z");
  r.anchor = from_labels(g, j.at(r.fixed_z ? "z" : "w").get<std::vector<int>>());
  for (const auto& row : j.at("rows")) {
    LaurentPoly f;
    for (const auto& t : row.at("terms")) f.add_term(weight_from_json(rd, t.at("weight")), t.at("mult").get<Int>());
    r.rows[from_labels(g, row.at(r.fixed_z ? "w" : "z").get<std::vector<int>>())] = f;
  }
  r.truncated = j.at("truncated").get<bool>();
  return r;
}

std::string to_table(const WeylGroup& g, const ChevalleyResult& r) {
  const RootDatum& rd = g.roots();
  std::ostringstream os;
  os << "cartan " << r.cartan << "  lambda " << format_weight(rd, r.lambda) << "  sign " << to_string(r.sign) << "  "
     << (r.fixed_z ? "z " : "w ") << g.format(r.anchor) << "\n";
  std::size_t width = 4;
  for (const auto& [x, f] : r.rows) width = std::max(width, g.format(x).size());
  for (const auto& [x, f] : r.rows) {
    std::string name = g.format(x);
    os << name << std::string(width + 2 - name.size(), ' ') << poly_text(rd, f) << "\n";
  }
  if (r.truncated) os << "(truncated at the length bound)\n";
  return os.str();
}

std::string diff_rows(const WeylGroup& g, const ChevalleyRow& a, const ChevalleyRow& b, const std::string& name_a,
                      const std::string& name_b) {
  std::set<WeylElt> keys;
  for (const auto& kv : a) keys.insert(kv.first);
  for (const auto& kv : b) keys.insert(kv.first);
  std::ostringstream os;
  for (const auto& x : keys) {
    auto ia = a.find(x);
    auto ib = b.find(x);
    LaurentPoly fa = ia == a.end() ? LaurentPoly() : ia->second;
    LaurentPoly fb = ib == b.end() ? LaurentPoly() : ib->second;
    if (fa == fb) continue;
    os << g.format(x) << ": " << name_a << " = " << poly_text(g.roots(), fa) << "; " << name_b << " = "
       << poly_text(g.roots(), fb) << "\n";
  }
  return os.str();
}

namespace {

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

// Arrows f_i between listed vertices, given their LS images.
std::vector<std::tuple<std::size_t, std::size_t, int>> arrows(const LSModel& m, const std::vector<LSPath>& paths) {
  std::map<LSPath, std::size_t> id;
  for (std::size_t k = 0; k < paths.size(); ++k) id.emplace(paths[k], k);
  std::vector<std::tuple<std::size_t, std::size_t, int>> out;
  for (std::size_t k = 0; k < paths.size(); ++k)
    for (int i = 0; i < m.group().rank(); ++i)
      if (auto q = m.f(i, paths[k]))
        if (auto it = id.find(*q); it != id.end()) out.emplace_back(k, it->second, i);
  return out;
}

std::string dot(const std::vector<std::string>& names, const std::vector<std::tuple<std::size_t, std::size_t, int>>& es,
                const RootDatum& rd) {
  std::ostringstream os;
  os << "digraph crystal {\n";
  for (std::size_t k = 0; k < names.size(); ++k) os << "  v" << k << " [label=\"" << dot_escape(names[k]) << "\"];\n";
  for (const auto& [a, b, i] : es) os << "  v" << a << " -> v" << b << " [label=\"" << rd.label_of(i) << "\"];\n";
  os << "}\n";
  return os.str();
}

std::vector<LSPath> images(const AlcoveModel& am, const LSModel& m, const std::vector<Adapted>& seqs, bool increasing) {
  std::vector<LSPath> out;
  for (const auto& a : seqs) out.push_back(increasing ? am.inc_to_ls(m, a) : am.dec_to_ls(m, a));
  return out;
}

}  // namespace

std::string crystal_dot(const LSModel& m, const std::set<LSPath>& crystal) {
  std::vector<LSPath> paths(crystal.begin(), crystal.end());
  std::vector<std::string> names;
  for (const auto& p : paths) names.push_back(m.format(p));
  return dot(names, arrows(m, paths), m.group().roots());
}

std::string crystal_json(const LSModel& m, const std::set<LSPath>& crystal, const std::string& cartan) {
  const RootDatum& rd = m.group().roots();
  std::vector<LSPath> paths(crystal.begin(), crystal.end());
  ordered_json j;
  j["cartan"] = cartan;
  j["lambda"] = weight_json(rd, m.lambda());
  j["model"] = "ls";
  ordered_json vs = ordered_json::array();
  for (std::size_t k = 0; k < paths.size(); ++k)
    vs.push_back({{"id", k}, {"path", m.format(paths[k])}, {"weight", weight_json(rd, m.endpoint(paths[k]))}});
  j["vertices"] = vs;
  ordered_json es = ordered_json::array();
  for (const auto& [a, b, i] : arrows(m, paths)) es.push_back({{"from", a}, {"to", b}, {"i", rd.label_of(i)}});
  j["edges"] = es;
  return j.dump(2);
}

std::string alcove_crystal_dot(const AlcoveModel& am, const LSModel& m, const std::vector<Adapted>& seqs,
                               bool increasing) {
  std::vector<std::string> names;
  for (const auto& a : seqs) names.push_back(am.group().format(a.z) + " | " + am.format(a.hs));
  return dot(names, arrows(m, images(am, m, seqs, increasing)), am.group().roots());
}

std::string alcove_crystal_json(const AlcoveModel& am, const LSModel& m, const std::vector<Adapted>& seqs,
                                bool increasing, const std::string& cartan) {
  const RootDatum& rd = am.group().roots();
  auto paths = images(am, m, seqs, increasing);
  ordered_json j;
  j["cartan"] = cartan;
  j["lambda"] = weight_json(rd, am.lambda());
  j["model"] = "alcove";
  ordered_json vs = ordered_json::array();
  for (std::size_t k = 0; k < seqs.size(); ++k) {
    Weight wt = increasing ? am.wt_inc(seqs[k].z, seqs[k].hs) : am.wt_dec(seqs[k].z, seqs[k].hs);
    vs.push_back({{"id", k},
                  {"z", labels(am.group(), seqs[k].z)},
                  {"hyperplanes", am.format(seqs[k].hs)},
                  {"weight", weight_json(rd, wt)}});
  }
  j["vertices"] = vs;
  ordered_json es = ordered_json::array();
  for (const auto& [a, b, i] : arrows(m, paths)) es.push_back({{"from", a}, {"to", b}, {"i", rd.label_of(i)}});
  j["edges"] = es;
  return j.dump(2);
}

std::string tree_dot(const AlcoveModel& am, const std::vector<TreeVertex>& tree) {
  std::ostringstream os;
  os << "digraph tree {\n  rankdir=BT;\n";
  for (std::size_t k = 0; k < tree.size(); ++k)
    os << "  v" << k << " [label=\"" << am.group().format(tree[k].elt) << "\"];\n";
  for (std::size_t k = 0; k < tree.size(); ++k)
    if (tree[k].parent >= 0)
      os << "  v" << k << " -> v" << tree[k].parent << " [label=\"" << am.format(*tree[k].label) << "\"];\n";
  os << "}\n";
  return os.str();
}

}  // namespace kmchev
