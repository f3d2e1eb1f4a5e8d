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

#ifndef CRYSTAL_FORGE_CRYSTAL_HPP_
#define CRYSTAL_FORGE_CRYSTAL_HPP_

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "crystal_forge/root_data.hpp"

namespace crystal_forge {

// Marks an undefined operator result (the "0" element).
inline constexpr int kAbsent = -1;
// ε/φ of a vertex whose string does not terminate (corrupted input only).
inline constexpr int kUnbounded = -1;

// f_color(from) = to.
struct ColoredEdge {
  int color = 0;
  int from = 0;
  int to = 0;
  friend bool operator==(const ColoredEdge&, const ColoredEdge&) = default;
};

// A finite crystal graph: vertices 0..size()-1 with weights and partial maps
// e_i, f_i per color. Immutable after construction.
//
// ε_i and φ_i are never supplied; they are derived from string lengths when
// the graph is built and cached.
class CrystalGraph {
 public:
  // The empty crystal.
  explicit CrystalGraph(DynkinData diagram);

  // The usual constructor: e_i is derived as the inverse of f_i. Throws
  // DomainError when two f-edges of one color leave or enter the same vertex.
  static CrystalGraph from_f_edges(DynkinData diagram,
                                   std::vector<Weight> weights,
                                   std::span<const ColoredEdge> edges);

  // Raw construction with independently given maps, laid out as
  // map[vertex * rank + color] with kAbsent for "undefined". Nothing beyond
  // shapes and index ranges is checked here; verify_axioms reports the rest.
  static CrystalGraph from_maps(DynkinData diagram,
                                std::vector<int> flat_weights,
                                std::vector<int> f_map,
                                std::vector<int> e_map);

  const DynkinData& diagram() const { return diagram_; }
  int rank() const { return rank_; }
  int size() const { return size_; }

  std::span<const int> weight_span(int a) const {
    return {weights_.data() + static_cast<std::size_t>(a) * rank_,
            static_cast<std::size_t>(rank_)};
  }
  Weight weight(int a) const { return Weight(weight_span(a)); }

  int f(int a, int i) const { return f_[index(a, i)]; }
  int e(int a, int i) const { return e_[index(a, i)]; }
  // max{n : e_i^n a defined}, or kUnbounded.
  int epsilon(int a, int i) const { return eps_[index(a, i)]; }
  // max{n : f_i^n a defined}, or kUnbounded.
  int phi(int a, int i) const { return phi_[index(a, i)]; }

  // All f-edges, ordered by (from, color).
  std::vector<ColoredEdge> f_edges() const;

  // Optional per-vertex labels (path text, tensor pairs) used by exporters.
  const std::vector<std::string>& labels() const { return labels_; }
  void set_labels(std::vector<std::string> labels);

  // Throws DomainError for an unknown vertex.
  void check_vertex(int a) const;

 private:
  std::size_t index(int a, int i) const {
    return static_cast<std::size_t>(a) * rank_ + i;
  }
  void derive_string_lengths();

  DynkinData diagram_;
  int rank_ = 0;
  int size_ = 0;
  std::vector<int> weights_;
  std::vector<int> f_;
  std::vector<int> e_;
  std::vector<int> eps_;
  std::vector<int> phi_;
  std::vector<std::string> labels_;
};

enum class Axiom {
  kInverseMaps,     // f_i(a) = b ⇔ e_i(b) = a
  kWeightShift,     // wt(e_i a) = wt(a) + î, wt(f_i a) = wt(a) − î
  kNormality,       // finite strings and wt(a)_i = φ_i(a) − ε_i(a)
};

std::string_view axiom_name(Axiom axiom);

struct AxiomViolation {
  int vertex = 0;
  int color = 0;
  Axiom axiom = Axiom::kInverseMaps;
  std::string detail;
};

// Empty iff every crystal axiom holds at every vertex and color.
std::vector<AxiomViolation> verify_axioms(const CrystalGraph& crystal);

// Checked accessors mirroring the operation names.
int epsilon(const CrystalGraph& crystal, int a, int i);
int phi(const CrystalGraph& crystal, int a, int i);

// A ⊗ B on the product set. Vertex (a,b) gets id a·|B| + b.
//   e_i(a,b) = (e_i a, b) if φ_i(a) ≥ ε_i(b), else (a, e_i b)
//   f_i(a,b) = (f_i a, b) if φ_i(a) > ε_i(b), else (a, f_i b)
CrystalGraph tensor(const CrystalGraph& left, const CrystalGraph& right);

using TensorProduct =
    std::function<CrystalGraph(const CrystalGraph&, const CrystalGraph&)>;

// Left-nested product ((c0 ⊗ c1) ⊗ c2) ⊗ …; the 1-element trivial crystal
// for an empty list.
CrystalGraph tensor_all(const DynkinData& diagram,
                        std::span<const CrystalGraph> factors,
                        const TensorProduct& product = tensor);

// Disjoint union; summand k occupies a contiguous id block in list order.
CrystalGraph direct_sum(const DynkinData& diagram,
                        std::span<const CrystalGraph> summands);

// n isolated vertices of weight 0.
CrystalGraph trivial_crystal(const DynkinData& diagram, int n);

// Sorted multiset of vertex weights.
std::vector<Weight> character(const CrystalGraph& crystal);
std::map<Weight, int> character_counts(const CrystalGraph& crystal);
inline int cardinality(const CrystalGraph& crystal) { return crystal.size(); }

// Vertices with every e_i undefined.
std::vector<int> source_vertices(const CrystalGraph& crystal);

// Connected components (edge colors and directions ignored), ordered by
// their smallest vertex id; vertices inside a component in BFS order.
std::vector<std::vector<int>> connected_components(const CrystalGraph& crystal);

// Parallel breadth-first traversal from a_root and b_root, pairing vertices
// reached through identical operator applications. Returns the (a, b) pairs
// covering both components, or nullopt if the components differ.
std::optional<std::vector<std::pair<int, int>>> match_components(
    const CrystalGraph& a, int a_root, const CrystalGraph& b, int b_root);

// An isomorphism as a map a-vertex → b-vertex, or nullopt. Every component of
// either crystal must have exactly one source; otherwise StructureError.
std::optional<std::vector<int>> is_isomorphic(const CrystalGraph& a,
                                              const CrystalGraph& b);

}  // namespace crystal_forge

#endif  // CRYSTAL_FORGE_CRYSTAL_HPP_
