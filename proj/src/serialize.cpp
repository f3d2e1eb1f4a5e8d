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

#include "crystal_forge/serialize.hpp"

#include <sstream>

#include "crystal_forge/errors.hpp"

namespace crystal_forge {

namespace {

Weight parse_weight_json(const Json& value, const std::string& what) {
  if (!value.is_array()) throw DomainError(what + " must be an integer array");
  std::vector<int> coords;
  for (const Json& x : value) {
    if (!x.is_number_integer()) {
      throw DomainError(what + " must be an integer array");
    }
    coords.push_back(x.get<int>());
  }
  return Weight(std::move(coords));
}

const Json& require(const Json& doc, const char* key) {
  if (!doc.contains(key)) {
    throw DomainError(std::string("missing field \"") + key + "\"");
  }
  return doc.at(key);
}

}  // namespace

std::string_view dot_color(int color) {
  return kDotPalette[static_cast<std::size_t>(color) % kDotPalette.size()];
}

Json weight_json(const Weight& w) { return Json(w.vector()); }

Json crystal_json(const CrystalGraph& crystal) {
  Json vertices = Json::array();
  const bool labelled = !crystal.labels().empty();
  for (int a = 0; a < crystal.size(); ++a) {
    Json v = {{"id", a}, {"wt", weight_json(crystal.weight(a))}};
    if (labelled) v["label"] = crystal.labels()[a];
    vertices.push_back(std::move(v));
  }
  Json edges = Json::array();
  for (const ColoredEdge& e : crystal.f_edges()) {
    edges.push_back({{"color", e.color}, {"from", e.from}, {"to", e.to}});
  }
  return {{"schema", kSchema},
          {"diagram", crystal.diagram().name()},
          {"vertices", std::move(vertices)},
          {"edges", std::move(edges)}};
}

std::string crystal_dot(const CrystalGraph& crystal) {
  std::ostringstream out;
  out << "digraph crystal {\n";
  out << "  // " << kSchema << ", diagram " << crystal.diagram().name()
      << ", edges follow f_i\n";
  for (int a = 0; a < crystal.size(); ++a) {
    out << "  v" << a << " [label=\"" << crystal.weight(a).to_string()
        << "\"];\n";
  }
  for (const ColoredEdge& e : crystal.f_edges()) {
    out << "  v" << e.from << " -> v" << e.to << " [color=" << dot_color(e.color)
        << ", label=\"" << e.color << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

std::string crystal_table(const CrystalGraph& crystal) {
  std::ostringstream out;
  out << "id\twt";
  for (int i = 0; i < crystal.rank(); ++i) out << "\tf" << i;
  out << '\n';
  for (int a = 0; a < crystal.size(); ++a) {
    out << a << '\t' << crystal.weight(a).to_string();
    for (int i = 0; i < crystal.rank(); ++i) {
      const int b = crystal.f(a, i);
      out << '\t';
      if (b == kAbsent) {
        out << '-';
      } else {
        out << b;
      }
    }
    out << '\n';
  }
  return out.str();
}

Json decomposition_json(const Decomposition& decomposition) {
  Json summands = Json::array();
  for (const Summand& s : decomposition.summands) {
    summands.push_back(
        {{"weight", weight_json(s.highest)}, {"mult", s.multiplicity}});
  }
  Json assignment = Json::object();
  for (std::size_t v = 0; v < decomposition.assignment.size(); ++v) {
    assignment[std::to_string(v)] = decomposition.assignment[v];
  }
  return {{"schema", kSchema},
          {"diagram", decomposition.diagram.name()},
          {"summands", std::move(summands)},
          {"assignment", std::move(assignment)}};
}

std::string decomposition_table(const Decomposition& decomposition) {
  std::ostringstream out;
  out << "weight\tmult\n";
  for (const Summand& s : decomposition.summands) {
    out << s.highest.to_string() << '\t' << s.multiplicity << '\n';
  }
  return out.str();
}

Json path_json(const LSPath& path) {
  Json segments = Json::array();
  for (int k = 0; k < path.segment_count(); ++k) {
    Json seg = Json::array();
    for (const Rational& x : path.segment(k)) {
      seg.push_back({x.numerator(), x.denominator()});
    }
    segments.push_back(std::move(seg));
  }
  return segments;
}

Json basic_dims_json(const BasicDims& d) {
  return {{"dimLambda", d.lambda},       {"dimLambdaS", d.lambda_s},
          {"dimLambdaSS", d.lambda_ss},  {"dimMs", d.ms},
          {"dimMss", d.mss},             {"dimMs3", d.ms3},
          {"ssNonempty", d.ss_nonempty}, {"deltaVec", weight_json(d.delta)}};
}

Json strat_dims_json(const StratDims& d) {
  Json out = {{"dimPiV", d.pi_v},
              {"dimPiSS", d.pi_ss},
              {"dimT", d.tensor_variety},
              {"dimTClosed", d.tensor_variety_closed},
              {"dimS", d.multiplicity_variety},
              {"dimSClosed", d.multiplicity_variety_closed}};
  if (d.pi_flag) {
    out["dimPiFlag"] = *d.pi_flag;
    out["dimFlagVariety"] = *d.flag_variety;
    out["dimPiVVt"] = *d.pi_v_vt;
  }
  return out;
}

Json weight_dicts_json(const WeightDicts& w) {
  return {{"hwWeight", weight_json(w.hw_weight)},
          {"vFromWeight", w.v_from_weight ? weight_json(*w.v_from_weight)
                                          : Json(nullptr)},
          {"gprimeWeight",
           Json::array({weight_json(w.gprime_weight.first),
                        weight_json(w.gprime_weight.second)})},
          {"gprimeIntegrable", w.gprime_integrable}};
}

Json rational_json(const BigRational& x) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  const auto num = numerator(x);
  const auto den = denominator(x);
  if (num >= std::numeric_limits<long long>::min() &&
      num <= std::numeric_limits<long long>::max() &&
      den <= std::numeric_limits<long long>::max()) {
    return Json::array({num.convert_to<long long>(),
                        den.convert_to<long long>()});
  }
  return Json::array({num.str(), den.str()});
}

Json matrix_json(const Matrix& m) {
  Json rows = Json::array();
  for (int r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(rational_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

BigRational parse_rational(const Json& value) {
  using boost::multiprecision::cpp_int;
  auto integer = [](const Json& x) -> cpp_int {
    if (x.is_number_integer()) return cpp_int(x.get<long long>());
    if (x.is_string()) {
      const auto s = x.get<std::string>();
      if (s.empty() ||
          s.find_first_not_of("+-0123456789") != std::string::npos) {
        throw DomainError("\"" + s + "\" is not an integer");
      }
      return cpp_int(s);
    }
    throw DomainError("expected an integer, got " + x.dump());
  };
  if (value.is_array()) {
    if (value.size() != 2) {
      throw DomainError("a rational is [num, den], got " + value.dump());
    }
    const cpp_int den = integer(value[1]);
    if (den == 0) throw DomainError("zero denominator in " + value.dump());
    return BigRational(integer(value[0]), den);
  }
  if (value.is_string()) {
    const auto s = value.get<std::string>();
    const auto slash = s.find('/');
    if (slash == std::string::npos) return BigRational(integer(value));
    const cpp_int den = integer(Json(s.substr(slash + 1)));
    if (den == 0) throw DomainError("zero denominator in " + s);
    return BigRational(integer(Json(s.substr(0, slash))), den);
  }
  return BigRational(integer(value));
}

Matrix parse_matrix(const Json& value, int rows, int cols,
                    const std::string& what) {
  if (!value.is_array()) throw DomainError(what + " must be an array of rows");
  if (static_cast<int>(value.size()) != rows) {
    throw DomainError(what + " has " + std::to_string(value.size()) +
                      " rows, expected " + std::to_string(rows));
  }
  Matrix m(rows, cols);
  for (int r = 0; r < rows; ++r) {
    const Json& row = value[r];
    if (!row.is_array() || static_cast<int>(row.size()) != cols) {
      throw DomainError(what + " row " + std::to_string(r) + " must have " +
                        std::to_string(cols) + " entries");
    }
    for (int c = 0; c < cols; ++c) m(r, c) = parse_rational(row[c]);
  }
  return m;
}

ADHMInput parse_adhm(const Json& doc) {
  if (!doc.is_object()) throw DomainError("ADHM input must be a JSON object");
  const auto& name = require(doc, "diagram");
  if (!name.is_string()) throw DomainError("\"diagram\" must be a string");
  const DynkinData dd = DynkinData::parse(name.get<std::string>());
  const Weight d = parse_weight_json(require(doc, "d"), "\"d\"");
  const Weight v = parse_weight_json(require(doc, "v"), "\"v\"");
  ADHMInput out{ADHMDatum::zero(dd, d, v), std::nullopt};
  ADHMDatum& datum = out.datum;

  if (doc.contains("x")) {
    const Json& xs = doc.at("x");
    if (!xs.is_array()) throw DomainError("\"x\" must be an array");
    std::vector<char> seen(dd.arrows().size(), 0);
    for (const Json& entry : xs) {
      if (!entry.is_object()) throw DomainError("\"x\" entries are objects");
      const Json& from = require(entry, "from");
      const Json& to = require(entry, "to");
      if (!from.is_number_integer() || !to.is_number_integer()) {
        throw DomainError("\"from\"/\"to\" must be vertex numbers");
      }
      const int a = from.get<int>();
      const int b = to.get<int>();
      int index = -1;
      for (std::size_t h = 0; h < dd.arrows().size(); ++h) {
        if (dd.arrows()[h].out == a && dd.arrows()[h].in == b) {
          index = static_cast<int>(h);
        }
      }
      const std::string what =
          "x " + std::to_string(a) + "->" + std::to_string(b);
      if (index < 0) throw DomainError(what + " is not an arrow of " + dd.name());
      if (seen[index]) throw DomainError(what + " given twice");
      seen[index] = 1;
      datum.x[index] = parse_matrix(require(entry, "matrix"), v[b], v[a], what);
    }
  }
  auto per_vertex = [&](const char* key, std::vector<Matrix>& target,
                        bool to_v) {
    if (!doc.contains(key)) return;
    const Json& list = doc.at(key);
    if (!list.is_array() || static_cast<int>(list.size()) != dd.rank()) {
      throw DomainError(std::string("\"") + key + "\" must list " +
                        std::to_string(dd.rank()) + " matrices");
    }
    for (int i = 0; i < dd.rank(); ++i) {
      const int rows = to_v ? v[i] : d[i];
      const int cols = to_v ? d[i] : v[i];
      target[i] = parse_matrix(list[i], rows, cols,
                               std::string(key) + " at vertex " +
                                   std::to_string(i));
    }
  };
  per_vertex("p", datum.p, true);
  per_vertex("q", datum.q, false);

  if (doc.contains("flag")) {
    const Json& steps = doc.at("flag");
    if (!steps.is_array()) throw DomainError("\"flag\" must be an array");
    GradedFlag flag{d, {}};
    for (std::size_t k = 0; k < steps.size(); ++k) {
      const Json& step = steps[k];
      const std::string what = "flag step " + std::to_string(k + 1);
      if (!step.is_array() || static_cast<int>(step.size()) != dd.rank()) {
        throw DomainError(what + " must list spanning vectors per vertex");
      }
      GradedSubspace sub;
      for (int i = 0; i < dd.rank(); ++i) {
        const Json& vectors = step[i];
        if (!vectors.is_array()) {
          throw DomainError(what + " vertex " + std::to_string(i) +
                            " must be a list of vectors");
        }
        Matrix rows = parse_matrix(vectors, static_cast<int>(vectors.size()),
                                   d[i], what + " vertex " + std::to_string(i));
        sub.parts.push_back(Subspace::column_span(rows.transpose()));
      }
      flag.steps.push_back(std::move(sub));
    }
    flag.validate();
    out.flag = std::move(flag);
  }
  datum.validate();
  return out;
}

Json adhm_json(const ADHMDatum& datum) {
  Json xs = Json::array();
  const auto& arrows = datum.diagram.arrows();
  for (std::size_t h = 0; h < arrows.size(); ++h) {
    xs.push_back({{"from", arrows[h].out},
                  {"to", arrows[h].in},
                  {"matrix", matrix_json(datum.x[h])}});
  }
  Json ps = Json::array();
  Json qs = Json::array();
  for (int i = 0; i < datum.diagram.rank(); ++i) {
    ps.push_back(matrix_json(datum.p[i]));
    qs.push_back(matrix_json(datum.q[i]));
  }
  return {{"schema", kSchema},
          {"diagram", datum.diagram.name()},
          {"d", weight_json(datum.d)},
          {"v", weight_json(datum.v)},
          {"x", std::move(xs)},
          {"p", std::move(ps)},
          {"q", std::move(qs)}};
}

}  // namespace crystal_forge
