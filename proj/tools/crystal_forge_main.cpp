// Copyright 2026 The crystal-forge Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// crystal-forge: command-line front end for the crystal-forge library.
//
// Output is assembled in memory and written only after the command has
// succeeded, so a failing command never leaves partial JSON behind.
// Exit codes: 0 success, 1 invalid request, 2 resource cap exceeded.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "crystal_forge/acceptance.hpp"
#include "crystal_forge/adhm.hpp"
#include "crystal_forge/crystal.hpp"
#include "crystal_forge/decompose.hpp"
#include "crystal_forge/errors.hpp"
#include "crystal_forge/ls_path.hpp"
#include "crystal_forge/quiver_calc.hpp"
#include "crystal_forge/root_data.hpp"
#include "crystal_forge/serialize.hpp"
#include "crystal_forge/sl2.hpp"

namespace cf = crystal_forge;

namespace {

struct Common {
  std::string diagram = "A1";
  std::string format = "json";
  std::size_t max_vertices = cf::BuildOptions{}.max_vertices;
  std::uint64_t seed = cf::SuiteOptions{}.seed;
};

std::vector<cf::Weight> parse_weights(const std::vector<std::string>& texts) {
  std::vector<cf::Weight> out;
  for (const auto& t : texts) out.push_back(cf::parse_weight(t));
  return out;
}

std::vector<int> parse_nodes(const std::string& text) {
  return cf::parse_weight(text).vector();
}

std::string palette_help() {
  std::string out = "DOT edge colors, indexed by diagram vertex i (mod 9):";
  for (std::size_t i = 0; i < cf::kDotPalette.size(); ++i) {
    out += (i ? ", " : " ") + std::to_string(i) + "=" +
           std::string(cf::kDotPalette[i]);
  }
  return out;
}

std::string emit_crystal(const cf::CrystalGraph& c, const std::string& format) {
  if (format == "dot") return cf::crystal_dot(c);
  if (format == "table") return cf::crystal_table(c);
  return cf::crystal_json(c).dump(2) + "\n";
}

std::string emit_decomposition(const cf::Decomposition& d,
                               const std::string& format) {
  if (format == "table") return cf::decomposition_table(d);
  if (format == "dot") {
    throw cf::DomainError("decompositions have no DOT form; use json or table");
  }
  return cf::decomposition_json(d).dump(2) + "\n";
}

cf::CrystalGraph tensor_of(const cf::DynkinData& dd,
                           const std::vector<cf::Weight>& factors,
                           const cf::BuildOptions& build) {
  if (factors.empty()) throw cf::DomainError("at least one factor is needed");
  std::vector<cf::CrystalGraph> crystals;
  for (const auto& mu : factors) crystals.push_back(cf::build_crystal(dd, mu, build));
  return cf::tensor_all(dd, crystals);
}

cf::Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw cf::DomainError("cannot open " + path);
  try {
    return cf::Json::parse(in);
  } catch (const cf::Json::parse_error& e) {
    throw cf::DomainError(path + " is not valid JSON: " + e.what());
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Crystals of ADE type, their tensor products, and quiver "
               "variety numerics.\nWeights are comma-separated integers in "
               "fundamental-weight coordinates.",
               "crystal-forge"};
  app.require_subcommand(1);
  app.footer(palette_help());

  Common common;
  auto add_diagram = [&](CLI::App* sub) {
    sub->add_option("--diagram", common.diagram,
                    "A1..A9, D4..D9, E6, E7 or E8")
        ->capture_default_str();
  };
  auto add_format = [&](CLI::App* sub, std::vector<std::string> allowed) {
    sub->add_option("--format", common.format, "output format")
        ->check(CLI::IsMember(allowed))
        ->capture_default_str();
  };
  auto add_cap = [&](CLI::App* sub) {
    sub->add_option("--max-vertices", common.max_vertices,
                    "abort with exit code 2 past this many crystal vertices")
        ->capture_default_str();
  };

  // Each subcommand stores a callback producing the full output text.
  std::function<std::string()> action;

  auto* roots = app.add_subcommand("roots", "Cartan data of a diagram");
  add_diagram(roots);
  roots->callback([&] {
    action = [&] {
      const auto dd = cf::DynkinData::parse(common.diagram);
      cf::Json arrows = cf::Json::array();
      for (const auto& h : dd.arrows()) {
        arrows.push_back({{"out", h.out}, {"in", h.in}, {"epsilon", h.sign}});
      }
      cf::Json roots_json = cf::Json::array();
      for (const auto& r : dd.positive_roots()) roots_json.push_back(r.vector());
      cf::Json doc = {{"schema", cf::kSchema},
                      {"diagram", dd.name()},
                      {"rank", dd.rank()},
                      {"cartan", dd.cartan()},
                      {"x", dd.x_matrix()},
                      {"arrows", arrows},
                      {"positive_roots", roots_json}};
      return doc.dump(2) + "\n";
    };
  });

  std::string hw;
  bool with_paths = false;
  auto* crystal = app.add_subcommand("crystal", "highest-weight crystal B(λ)");
  add_diagram(crystal);
  crystal->add_option("--hw", hw, "dominant highest weight")->required();
  crystal->add_flag("--paths", with_paths,
                    "attach the realizing paths (json format only)");
  add_format(crystal, {"json", "dot", "table"});
  add_cap(crystal);
  crystal->footer(palette_help());
  crystal->callback([&] {
    action = [&] {
      const auto dd = cf::DynkinData::parse(common.diagram);
      const auto built = cf::build_path_crystal(
          dd, cf::parse_weight(hw), {common.max_vertices});
      if (with_paths && common.format == "json") {
        auto doc = cf::crystal_json(built.graph);
        for (std::size_t v = 0; v < built.paths.size(); ++v) {
          doc["vertices"][v]["path"] = cf::path_json(built.paths[v]);
        }
        return doc.dump(2) + "\n";
      }
      return emit_crystal(built.graph, common.format);
    };
  });

  std::vector<std::string> factors;
  auto* tensor = app.add_subcommand(
      "tensor", "left-nested tensor product B(μ1) ⊗ … ⊗ B(μn)");
  add_diagram(tensor);
  tensor->add_option("--factors", factors, "dominant weights")->required();
  add_format(tensor, {"json", "dot", "table"});
  add_cap(tensor);
  tensor->footer(palette_help());
  tensor->callback([&] {
    action = [&] {
      const auto dd = cf::DynkinData::parse(common.diagram);
      return emit_crystal(
          tensor_of(dd, parse_weights(factors), {common.max_vertices}),
          common.format);
    };
  });

  auto* decompose = app.add_subcommand(
      "decompose", "decompose B(μ1) ⊗ … ⊗ B(μn) into highest-weight crystals");
  add_diagram(decompose);
  decompose->add_option("--factors", factors, "dominant weights")->required();
  add_format(decompose, {"json", "table"});
  add_cap(decompose);
  decompose->callback([&] {
    action = [&] {
      const auto dd = cf::DynkinData::parse(common.diagram);
      const cf::BuildOptions build{common.max_vertices};
      return emit_decomposition(
          cf::decompose(tensor_of(dd, parse_weights(factors), build), build),
          common.format);
    };
  });

  std::string target;
  auto* mult = app.add_subcommand(
      "mult", "multiplicity of B(μ0) in B(μ1) ⊗ … ⊗ B(μn)");
  add_diagram(mult);
  mult->add_option("--target", target, "dominant weight μ0")->required();
  mult->add_option("--factors", factors, "dominant weights μ1..μn")
      ->required();
  add_format(mult, {"json", "table"});
  add_cap(mult);
  mult->callback([&] {
    action = [&] {
      const auto dd = cf::DynkinData::parse(common.diagram);
      const int m = cf::multiplicity(dd, cf::parse_weight(target),
                                     parse_weights(factors),
                                     {common.max_vertices});
      return std::to_string(m) + "\n";
    };
  });

  std::string levi;
  auto* branch = app.add_subcommand(
      "branch", "restrict B(λ) to the Levi subdiagram on the given nodes");
  add_diagram(branch);
  branch->add_option("--hw", hw, "dominant highest weight")->required();
  branch->add_option("--levi", levi,
                     "increasing comma-separated node list (may be empty)")
      ->required();
  add_format(branch, {"json", "table"});
  add_cap(branch);
  branch->callback([&] {
    action = [&] {
      const auto dd = cf::DynkinData::parse(common.diagram);
      const cf::BuildOptions build{common.max_vertices};
      const auto nodes = parse_nodes(levi);
      return emit_decomposition(
          cf::branch(cf::build_crystal(dd, cf::parse_weight(hw), build), nodes,
                     build),
          common.format);
    };
  });

  std::string d_text, v_text, v0_text;
  std::vector<std::string> d_tuple, v_tuple, vt_tuple;
  std::string u_text;
  auto* dims = app.add_subcommand("dims", "quiver variety dimension formulas");
  add_diagram(dims);
  dims->add_option("--d", d_text, "dim D")->required();
  dims->add_option("--v", v_text, "dim V")->required();
  dims->add_option("--v0", v0_text, "v0 (defaults to v)");
  dims->add_option("--d-tuple", d_tuple, "graded pieces of the flag in D");
  dims->add_option("--v-tuple", v_tuple, "the tuple 𝐯");
  dims->add_option("--vt-tuple", vt_tuple, "the tuple 𝐯̃");
  dims->add_option("--u", u_text, "u for the γ fibre (t = v − u)");
  dims->callback([&] {
    action = [&] {
      const auto dd = cf::DynkinData::parse(common.diagram);
      const auto d = cf::parse_weight(d_text);
      const auto v = cf::parse_weight(v_text);
      const auto v0 = v0_text.empty() ? v : cf::parse_weight(v0_text);
      cf::Json doc = {{"schema", cf::kSchema}, {"diagram", dd.name()}};
      doc["basic"] = cf::basic_dims_json(cf::basic_dims(dd, d, v, v0));
      doc["weights"] = cf::weight_dicts_json(cf::weight_dicts(dd, d, v0));
      if (!d_tuple.empty() || !v_tuple.empty() || !vt_tuple.empty()) {
        cf::QuiverParams p{dd, d, v, v0, parse_weights(d_tuple),
                           parse_weights(v_tuple), std::nullopt};
        if (!vt_tuple.empty()) p.vt_tuple = parse_weights(vt_tuple);
        doc["strata"] = cf::strat_dims_json(cf::strat_dims(p));
        if (p.vt_tuple) {
          // ρ₂ fibre for each split 0 < k < n of the flag.
          cf::Json rho2 = cf::Json::array();
          for (int k = 1; k < static_cast<int>(p.d_tuple.size()); ++k) {
            rho2.push_back(cf::rho2_fiber_dim(p, k));
          }
          doc["strata"]["rho2Fibers"] = rho2;
        }
      }
      if (!u_text.empty()) {
        const auto u = cf::parse_weight(u_text);
        doc["gamma"] = {{"u", u.vector()},
                        {"fiber", cf::gamma_fiber_dim(dd, d, u, v - u)},
                        {"lambdaDVU", cf::lambda_dvu_dim(dd, d, v, u)},
                        {"grassmannian", cf::grassmannian_dim(u, v)}};
      }
      return doc.dump(2) + "\n";
    };
  });

  int d1 = 0, v1 = 0, u1 = 0, d2 = 0, v2 = 0, u2 = 0, sd = 0, sv0 = 0, sv = 0;
  auto* sl2 = app.add_subcommand("sl2", "the explicit one-vertex formulas");
  sl2->require_subcommand(1);
  auto* sl2_crystal_cmd = sl2->add_subcommand("crystal", "the crystal M(d, v0)");
  sl2_crystal_cmd->add_option("--d", sd, "d")->required();
  sl2_crystal_cmd->add_option("--v0", sv0, "v0")->required();
  add_format(sl2_crystal_cmd, {"json", "dot", "table"});
  sl2_crystal_cmd->callback([&] {
    action = [&] {
      return emit_crystal(cf::sl2_crystal(sd, sv0), common.format);
    };
  });
  auto add_pair = [&](CLI::App* sub) {
    sub->add_option("--d1", d1, "d¹")->required();
    sub->add_option("--v1", v1, "v¹")->required();
    sub->add_option("--d2", d2, "d²")->required();
    sub->add_option("--v2", v2, "v²")->required();
  };
  auto* sl2_tau = sl2->add_subcommand("tau2", "image label (v0, u1 + u2)");
  add_pair(sl2_tau);
  sl2_tau->add_option("--u1", u1, "u¹")->required();
  sl2_tau->add_option("--u2", u2, "u²")->required();
  sl2_tau->callback([&] {
    action = [&] {
      const auto r = cf::sl2_tau2(d1, v1, u1, d2, v2, u2);
      return cf::Json{{"schema", cf::kSchema}, {"v0", r.v0}, {"u", r.u}}
                 .dump(2) +
             "\n";
    };
  });
  auto* sl2_range = sl2->add_subcommand("range", "the v0 summand range");
  add_pair(sl2_range);
  sl2_range->callback([&] {
    action = [&] {
      return cf::Json{{"schema", cf::kSchema},
                      {"v0", cf::sl2_mult_range(d1, v1, d2, v2)}}
                 .dump(2) +
             "\n";
    };
  });
  auto* sl2_nonempty = sl2->add_subcommand(
      "nonempty", "whether the multiplicity variety for v is non-empty");
  add_pair(sl2_nonempty);
  sl2_nonempty->add_option("--v", sv, "v")->required();
  sl2_nonempty->callback([&] {
    action = [&] {
      return std::string(cf::sl2_S_nonempty(d1, v1, d2, v2, sv) ? "true"
                                                                 : "false") +
             "\n";
    };
  });

  std::string adhm_file;
  auto* adhm = app.add_subcommand("adhm", "checks on explicit ADHM data");
  adhm->require_subcommand(1);
  adhm->footer(
      "Input: {\"diagram\": \"A2\", \"d\": [..], \"v\": [..], "
      "\"x\": [{\"from\": i, \"to\": j, \"matrix\": rows}], "
      "\"p\": [rows per vertex], \"q\": [rows per vertex], "
      "\"flag\": [[[vectors] per vertex] per step]}; entries are [num, den] "
      "or integers; ε(h) = +1 from lower to higher vertex.");
  auto* adhm_check = adhm->add_subcommand(
      "check", "preprojective relation, stability, nilpotency");
  adhm_check->add_option("file", adhm_file, "JSON datum")->required();
  adhm_check->callback([&] {
    action = [&] {
      const auto input = cf::parse_adhm(read_json_file(adhm_file));
      const auto& datum = input.datum;
      const auto pre = cf::check_preprojective(datum);
      cf::Json residual = cf::Json::array();
      for (const auto& m : pre.residual) residual.push_back(cf::matrix_json(m));
      cf::Json doc = {{"schema", cf::kSchema},
                      {"preprojective", pre.holds},
                      {"residual", residual},
                      {"stable", cf::is_stable(datum)},
                      {"astStable", cf::is_ast_stable(datum)},
                      {"nilpotent", cf::is_nilpotent(datum)}};
      return doc.dump(2) + "\n";
    };
  });
  auto* adhm_stratum = adhm->add_subcommand(
      "stratum", "tensor-product stratum (𝐯, 𝐯̃) of a stable datum");
  adhm_stratum->add_option("file", adhm_file, "JSON datum with a flag")
      ->required();
  adhm_stratum->callback([&] {
    action = [&] {
      const auto input = cf::parse_adhm(read_json_file(adhm_file));
      if (!input.flag) throw cf::DomainError("the input has no \"flag\"");
      const auto point = cf::stratum_membership(input.datum, *input.flag);
      cf::Json doc = {{"schema", cf::kSchema}, {"member", point.has_value()}};
      if (point) {
        cf::Json vs = cf::Json::array();
        cf::Json vts = cf::Json::array();
        for (const auto& w : point->v_tuple) vs.push_back(w.vector());
        for (const auto& w : point->vt_tuple) vts.push_back(w.vector());
        doc["v"] = vs;
        doc["vt"] = vts;
      }
      return doc.dump(2) + "\n";
    };
  });

  auto* selftest = app.add_subcommand("selftest", "run the acceptance suite");
  selftest->add_option("--seed", common.seed, "random seed")
      ->capture_default_str();
  add_format(selftest, {"json", "table"});
  int selftest_status = 0;
  selftest->callback([&] {
    action = [&] {
      cf::SuiteOptions options;
      options.seed = common.seed;
      const auto report = cf::run_acceptance_suite(options);
      selftest_status = report.all_passed() ? 0 : 3;
      return common.format == "table" ? cf::format_report(report)
                                      : cf::report_json(report);
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    const std::string output = action();
    std::cout << output << std::flush;
    return selftest_status;
  } catch (const cf::ResourceLimitError& e) {
    std::cerr << "crystal-forge: resource limit: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "crystal-forge: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "crystal-forge: internal error: " << e.what() << '\n';
    return 1;
  }
}
