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

#ifndef CRYSTAL_FORGE_DECOMPOSE_HPP_
#define CRYSTAL_FORGE_DECOMPOSE_HPP_

#include <map>
#include <span>
#include <vector>

#include "crystal_forge/crystal.hpp"
#include "crystal_forge/ls_path.hpp"
#include "crystal_forge/root_data.hpp"

namespace crystal_forge {

struct Summand {
  Weight highest;
  int multiplicity = 0;
  friend bool operator==(const Summand&, const Summand&) = default;
};

// One connected component of the decomposed crystal.
struct SummandInstance {
  Weight highest;
  int source = 0;
  // Component vertices and their images in build_crystal(highest), paired
  // index by index.
  std::vector<int> vertices;
  std::vector<int> reference_vertices;
};

struct Decomposition {
  DynkinData diagram;
  // Sorted by highest weight (lexicographically descending).
  std::vector<Summand> summands;
  // assignment[v] = instance id of vertex v.
  std::vector<int> assignment;
  // Instance ids follow the order of the components' smallest vertex ids.
  std::vector<SummandInstance> instances;

  std::map<Weight, int> multiset() const;
  int multiplicity_of(const Weight& lambda) const;
};

// Exactly the vertices with every e_i undefined.
std::vector<int> highest_vertices(const CrystalGraph& crystal);

// Splits a normal crystal into highest-weight components and identifies
// each with build_crystal of its root weight. Throws StructureError for a
// component without a unique source or not isomorphic to that crystal.
Decomposition decompose(const CrystalGraph& crystal,
                        const BuildOptions& options = {});

// Number of weight-`target` highest vertices of `crystal`.
int count_highest(const CrystalGraph& crystal, const Weight& target);

// dim Hom(L(target), L(factors[0]) ⊗ … ⊗ L(factors[n-1])), counted in the
// left-nested tensor product of path crystals.
int multiplicity(const DynkinData& diagram, const Weight& target,
                 std::span<const Weight> factors,
                 const BuildOptions& options = {});

// Keeps only the colors in `levi` (strictly increasing node list) and
// restricts weights to those coordinates; the result lives over
// diagram.induced(levi) and keeps the vertex ids.
CrystalGraph restrict_to_levi(const CrystalGraph& crystal,
                              std::span<const int> levi);

// Decomposition of the Levi restriction over the induced subdiagram.
Decomposition branch(const CrystalGraph& crystal, std::span<const int> levi,
                     const BuildOptions& options = {});

// (ρ(v))_i = v_i for i in the Levi subset.
Weight levi_restrict(const DynkinData& diagram, const Weight& v,
                     std::span<const int> levi);

struct LeviDicts {
  Weight delta;  // (δ(d,v))_i = d_i + Σ_{h boundary, out(h) = i} v_in(h)
  Weight rho;    // ρ(v)
};

LeviDicts levi_dicts(const DynkinData& diagram, const Weight& d,
                     const Weight& v, std::span<const int> levi);

}  // namespace crystal_forge

#endif  // CRYSTAL_FORGE_DECOMPOSE_HPP_
