#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "kmchev/alcove.hpp"

namespace kmchev {

/// delta = sum a_i alpha_i for corank-one matrices.
std::optional<Weight> delta_weight(const RootDatum& rd);

/// "c_0,c_1,...[,delta=q]" in fundamental coordinates.
Weight parse_weight(const RootDatum& rd, const std::string& text);
std::string format_weight(const RootDatum& rd, const Weight& mu);

enum class Sign { Dominant, Antidominant };
enum class Model { LS, Alcove, NilHecke };

std::string to_string(Sign s);
std::string to_string(Model m);
Sign parse_sign(const std::string& s);
Model parse_model(const std::string& s);

/// One computed Chevalley row.  Fixed-w rows are keyed by z; fixed-z rows by w.
struct ChevalleyResult {
  std::string cartan;
  Weight lambda;
  Sign sign = Sign::Dominant;
  bool fixed_z = false;
  WeylElt anchor;  // w in fixed-w mode, z in fixed-z mode
  ChevalleyRow rows;
  bool truncated = false;

  friend bool operator==(const ChevalleyResult&, const ChevalleyResult&) = default;
};

ChevalleyResult compute_row(const WeylGroup& g, const std::string& cartan, const Weight& lambda, Sign sign,
                            Model model, const WeylElt& w);
/// Coefficients of [O_w] in [L^{+-lambda}][O_z] for l(w) <= max_length.
ChevalleyResult compute_row_fixed_z(const WeylGroup& g, const std::string& cartan, const Weight& lambda, Sign sign,
                                    Model model, const WeylElt& z, int max_length);

std::string to_json(const WeylGroup& g, const ChevalleyResult& r, int indent = 2);
ChevalleyResult result_from_json(const WeylGroup& g, const std::string& text);
std::string to_table(const WeylGroup& g, const ChevalleyResult& r);
/// Human-readable diff; empty when equal.
std::string diff_rows(const WeylGroup& g, const ChevalleyRow& a, const ChevalleyRow& b, const std::string& name_a,
                      const std::string& name_b);

/// Crystal exports.  Edges are f_i arrows.
std::string crystal_dot(const LSModel& m, const std::set<LSPath>& crystal);
std::string crystal_json(const LSModel& m, const std::set<LSPath>& crystal, const std::string& cartan);
/// Alcove realization: vertices are sequences, arrows transported from LS paths.
std::string alcove_crystal_dot(const AlcoveModel& am, const LSModel& m, const std::vector<Adapted>& seqs, bool increasing);
std::string alcove_crystal_json(const AlcoveModel& am, const LSModel& m, const std::vector<Adapted>& seqs,
                                bool increasing, const std::string& cartan);
std::string tree_dot(const AlcoveModel& am, const std::vector<TreeVertex>& tree);

}  // namespace kmchev
