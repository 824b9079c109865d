#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <future>
#include <iostream>
#include <map>

#include <CLI11.hpp>

#include "kmchev/io.hpp"
#include "kmchev/selftest.hpp"

using namespace kmchev;

namespace {

struct Common {
  std::string cartan;
  std::string gcm_file;
  std::string weight;
  std::string w, z;
  int max_length = -1;
  std::string format;
  std::string out;
};

void add_common(CLI::App* cmd, Common& c) {
  auto* preset = cmd->add_option("--cartan", c.cartan, "Cartan preset: A<n>, B<n>, C<n>, D<n>, G2, A<n>~");
  auto* file = cmd->add_option("--gcm-file", c.gcm_file, "JSON file with {\"matrix\": [[...]]}");
  preset->excludes(file);
  cmd->add_option("--weight", c.weight, "dominant weight c_0,c_1,...[,delta=q]")->required();
  auto* wo = cmd->add_option("--w", c.w, "fixed w as space-separated node labels, or e");
  auto* zo = cmd->add_option("--z", c.z, "fixed z (requires --max-length)");
  wo->excludes(zo);
  cmd->add_option("--max-length", c.max_length, "length bound for fixed-z enumerations");
  cmd->add_option("--out", c.out, "write output to this file");
}

std::size_t layer_cap() {
  if (const char* v = std::getenv("KMCHEV_LAYER_CAP")) {
    try {
      return static_cast<std::size_t>(std::stoull(v));
    } catch (const std::exception&) {
      throw std::invalid_argument(std::string("KMCHEV_LAYER_CAP is not a number: ") + v);
    }
  }
  return kDefaultLayerCap;
}

std::pair<CartanMatrix, std::string> load_cartan(const Common& c) {
  if (!c.gcm_file.empty()) return {CartanMatrix::from_json_file(c.gcm_file), c.gcm_file};
  if (c.cartan.empty()) throw std::invalid_argument("one of --cartan or --gcm-file is required");
  return {CartanMatrix::preset(c.cartan), c.cartan};
}

void emit(const Common& c, const std::string& text) {
  if (c.out.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream f(c.out);
  if (!f) throw std::runtime_error("cannot open " + c.out);
  f << text;
  if (!text.empty() && text.back() != '\n') f << '\n';
}

int cmd_chevalley(const Common& c, const std::string& sign_s, const std::string& model_s) {
  auto [cm, name] = load_cartan(c);
  WeylGroup g(RootDatum(cm), layer_cap());
  Weight lambda = parse_weight(g.roots(), c.weight);
  Sign sign = parse_sign(sign_s);
  bool fixed_z = !c.z.empty();
  if (fixed_z && c.max_length < 0) throw std::invalid_argument("--z needs --max-length");
  WeylElt anchor = g.parse(fixed_z ? c.z : (c.w.empty() ? "e" : c.w));
  std::string fmt = c.format.empty() ? "table" : c.format;

  if (fmt == "dot") {
    if (model_s != "alcove" || fixed_z) throw std::invalid_argument("--format dot needs --model alcove and --w");
    AlcoveModel am(g, lambda);
    emit(c, tree_dot(am, sign == Sign::Dominant ? am.tree_dominant(anchor) : am.tree_antidominant(anchor)));
    return 0;
  }
  if (fmt != "json" && fmt != "table") throw std::invalid_argument("--format must be json, table or dot");

  auto run = [&, lambda = lambda, name = name](Model m) {
    return fixed_z ? compute_row_fixed_z(g, name, lambda, sign, m, anchor, c.max_length)
                   : compute_row(g, name, lambda, sign, m, anchor);
  };
  std::vector<Model> models;
  if (model_s == "all")
    models = {Model::LS, Model::Alcove, Model::NilHecke};
  else
    models = {parse_model(model_s)};

  std::vector<std::future<ChevalleyResult>> jobs;
  for (Model m : models) jobs.push_back(std::async(std::launch::async, run, m));
  std::vector<ChevalleyResult> results;
  for (auto& j : jobs) results.push_back(j.get());

  std::string diff;
  for (std::size_t k = 1; k < results.size(); ++k)
    diff += diff_rows(g, results[k].rows, results[0].rows, to_string(models[k]), to_string(models[0]));

  if (fmt == "json") {
    emit(c, to_json(g, results.back()));
  } else {
    std::string text;
    for (std::size_t k = 0; k < results.size(); ++k) {
      if (results.size() > 1) text += "model " + to_string(models[k]) + "\n";
      text += to_table(g, results[k]);
    }
    emit(c, text);
  }
  if (!diff.empty()) {
    std::cerr << "models disagree:\n" << diff;
    return 2;
  }
  return 0;
}

int cmd_crystal(const Common& c, const std::string& model_s) {
  auto [cm, name] = load_cartan(c);
  WeylGroup g(RootDatum(cm), layer_cap());
  Weight lambda = parse_weight(g.roots(), c.weight);
  LSModel ls(g, lambda);
  AlcoveModel am(g, lambda);
  bool opposite = !c.z.empty();
  if (opposite && c.max_length < 0) throw std::invalid_argument("--z needs --max-length");
  std::string fmt = c.format.empty() ? "dot" : c.format;
  if (fmt != "dot" && fmt != "json") throw std::invalid_argument("--format must be dot or json");

  std::set<LSPath> paths;
  std::vector<Adapted> seqs;
  bool truncated = false;
  if (opposite) {
    WeylElt z = g.parse(c.z);
    auto e = am.opposite_demazure(z, c.max_length);
    seqs = e.seqs;
    truncated = e.truncated;
    for (const auto& w : g.bfs_ball(c.max_length))
      if (g.bruhat_leq(z, w))
        for (const auto& p : ls.paths_up(w, z)) paths.insert(p);
  } else {
    WeylElt w = g.parse(c.w.empty() ? "e" : c.w);
    paths = ls.demazure_crystal(w);
    seqs = am.demazure(w);
  }

  if (model_s == "all") {
    std::multiset<Weight> a, b;
    for (const auto& p : paths) a.insert(ls.endpoint(p));
    for (const auto& s : seqs) b.insert(opposite ? am.wt_inc(s.z, s.hs) : am.wt_dec(s.z, s.hs));
    if (a != b) {
      std::cerr << "realizations disagree: " << paths.size() << " LS paths, " << seqs.size() << " sequences\n";
      return 2;
    }
  }
  std::string text;
  if (model_s == "alcove")
    text = fmt == "dot" ? alcove_crystal_dot(am, ls, seqs, opposite) : alcove_crystal_json(am, ls, seqs, opposite, name);
  else if (model_s == "ls" || model_s == "all")
    text = fmt == "dot" ? crystal_dot(ls, paths) : crystal_json(ls, paths, name);
  else
    throw std::invalid_argument("crystal --model must be ls, alcove or all");
  emit(c, text);
  std::cerr << "vertices: " << (model_s == "alcove" ? seqs.size() : paths.size())
            << (truncated ? " (truncated at the length bound)" : "") << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Equivariant K-theory Chevalley coefficients for Kac-Moody flag manifolds"};
  app.require_subcommand(1);

  Common cc;
  std::string sign = "dominant", model = "all";
  auto* chev = app.add_subcommand("chevalley", "Chevalley row in the LS, alcove or nilHecke model");
  add_common(chev, cc);
  chev->add_option("--sign", sign, "dominant or antidominant")->check(CLI::IsMember({"dominant", "antidominant"}));
  chev->add_option("--model", model, "ls, alcove, nilhecke or all")
      ->check(CLI::IsMember({"ls", "alcove", "nilhecke", "all"}));
  chev->add_option("--format", cc.format, "table (default), json, or dot (alcove tree)");

  Common cr;
  std::string cmodel = "ls";
  auto* crys = app.add_subcommand("crystal", "Demazure (--w) or opposite Demazure (--z) crystal");
  add_common(crys, cr);
  crys->add_option("--model", cmodel, "ls, alcove or all")->check(CLI::IsMember({"ls", "alcove", "all"}));
  crys->add_option("--format", cr.format, "dot (default) or json");

  std::optional<std::string> scen;
  bool fault = false;
  std::string sfmt = "json", sout;
  auto* self = app.add_subcommand("selftest", "Run the invariant suite");
  self->add_option("--scenario", scen, "comma-separated scenario names (default: all)");
  self->add_flag("--inject-fault", fault, "flip the lex comparator (negative control)");
  self->add_option("--format", sfmt, "json or table")->check(CLI::IsMember({"json", "table"}));
  self->add_option("--out", sout, "write the report to this file");
  self->add_flag_callback("--list", [] {
    for (const auto& s : selftest_scenarios()) std::cout << s << "\n";
    std::exit(0);
  }, "list scenario names");

  CLI11_PARSE(app, argc, argv);

  try {
    if (chev->parsed()) return cmd_chevalley(cc, sign, model);
    if (crys->parsed()) return cmd_crystal(cr, cmodel);
    if (self->parsed()) {
      auto rep = run_selftest(SelftestOptions{scen, fault});
      std::string text;
      if (sfmt == "json") {
        text = rep.to_json() + "\n";
      } else {
        for (const auto& c : rep.checks) {
          text += (c.passed ? "PASS " : "FAIL ") + c.scenario + " / " + c.name + "\n";
          if (!c.passed) text += "  " + c.detail + "\n";
        }
        text += rep.passed() ? "all checks passed\n" : "some checks failed\n";
      }
      if (sout.empty())
        std::cout << text;
      else
        std::ofstream(sout) << text;
      std::fprintf(stderr, "%zu checks in %.2f s\n", rep.checks.size(), rep.seconds);
      return rep.passed() ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
