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

#include "crystal_forge/decompose.hpp"

#include <algorithm>
#include <set>

#include "crystal_forge/errors.hpp"

namespace crystal_forge {

namespace {

void check_levi(const DynkinData& diagram, std::span<const int> levi) {
  for (std::size_t k = 0; k < levi.size(); ++k) {
    if (levi[k] < 0 || levi[k] >= diagram.rank()) {
      throw DomainError("Levi node " + std::to_string(levi[k]) +
                        " is not a node of " + diagram.name());
    }
    if (k > 0 && levi[k] <= levi[k - 1]) {
      throw DomainError(
          "Levi subset must list distinct nodes in increasing order");
    }
  }
}

}  // namespace

std::map<Weight, int> Decomposition::multiset() const {
  std::map<Weight, int> out;
  for (const Summand& s : summands) out[s.highest] += s.multiplicity;
  return out;
}

int Decomposition::multiplicity_of(const Weight& lambda) const {
  for (const Summand& s : summands) {
    if (s.highest == lambda) return s.multiplicity;
  }
  return 0;
}

std::vector<int> highest_vertices(const CrystalGraph& crystal) {
  return source_vertices(crystal);
}

Decomposition decompose(const CrystalGraph& crystal,
                        const BuildOptions& options) {
  const DynkinData& dd = crystal.diagram();
  Decomposition out{dd, {}, {}, {}};
  out.assignment.assign(static_cast<std::size_t>(crystal.size()), kAbsent);
  std::map<Weight, CrystalGraph> references;
  std::map<Weight, int, std::greater<>> counts;

  const auto components = connected_components(crystal);
  for (std::size_t k = 0; k < components.size(); ++k) {
    const auto& comp = components[k];
    int source = kAbsent;
    int sources = 0;
    for (int v : comp) {
      bool top = true;
      for (int i = 0; i < crystal.rank() && top; ++i) {
        top = crystal.e(v, i) == kAbsent;
      }
      if (top) {
        ++sources;
        source = v;
      }
    }
    if (sources != 1) {
      throw StructureError("component " + std::to_string(k) +
                           " (containing vertex " +
                           std::to_string(comp.front()) + ") has " +
                           std::to_string(sources) +
                           " source vertices; the crystal is not normal");
    }
    Weight lambda = crystal.weight(source);
    if (!is_dominant(lambda)) {
      throw StructureError("component " + std::to_string(k) +
                           " has a source of non-dominant weight " +
                           lambda.to_string());
    }
    auto ref = references.find(lambda);
    if (ref == references.end()) {
      ref = references.emplace(lambda, build_crystal(dd, lambda, options))
                .first;
    }
    auto pairs = match_components(crystal, source, ref->second, 0);
    if (!pairs || pairs->size() != comp.size() ||
        static_cast<int>(pairs->size()) != ref->second.size()) {
      throw StructureError("component " + std::to_string(k) +
                           " rooted at vertex " + std::to_string(source) +
                           " is not isomorphic to B" + lambda.to_string());
    }
    SummandInstance instance{lambda, source, {}, {}};
    instance.vertices.reserve(pairs->size());
    instance.reference_vertices.reserve(pairs->size());
    for (const auto& [x, y] : *pairs) {
      instance.vertices.push_back(x);
      instance.reference_vertices.push_back(y);
      out.assignment[x] = static_cast<int>(k);
    }
    ++counts[lambda];
    out.instances.push_back(std::move(instance));
  }
  for (const auto& [lambda, mult] : counts) {
    out.summands.push_back({lambda, mult});
  }
  return out;
}

int count_highest(const CrystalGraph& crystal, const Weight& target) {
  crystal.diagram().check_weight(target, "target weight");
  int count = 0;
  for (int v : highest_vertices(crystal)) {
    const auto w = crystal.weight_span(v);
    if (std::equal(w.begin(), w.end(), target.coords().begin(),
                   target.coords().end())) {
      ++count;
    }
  }
  return count;
}

int multiplicity(const DynkinData& diagram, const Weight& target,
                 std::span<const Weight> factors,
                 const BuildOptions& options) {
  diagram.check_weight(target, "target weight");
  if (!is_dominant(target)) {
    throw DomainError("target weight " + target.to_string() +
                      " is not dominant");
  }
  std::vector<CrystalGraph> crystals;
  crystals.reserve(factors.size());
  for (const Weight& mu : factors) {
    crystals.push_back(build_crystal(diagram, mu, options));
  }
  return count_highest(tensor_all(diagram, crystals), target);
}

Weight levi_restrict(const DynkinData& diagram, const Weight& v,
                     std::span<const int> levi) {
  check_levi(diagram, levi);
  diagram.check_weight(v);
  Weight out(levi.size());
  for (std::size_t k = 0; k < levi.size(); ++k) out[k] = v[levi[k]];
  return out;
}

CrystalGraph restrict_to_levi(const CrystalGraph& crystal,
                              std::span<const int> levi) {
  const DynkinData& dd = crystal.diagram();
  check_levi(dd, levi);
  DynkinData sub = dd.induced(levi);
  std::vector<Weight> weights;
  weights.reserve(static_cast<std::size_t>(crystal.size()));
  for (int a = 0; a < crystal.size(); ++a) {
    weights.push_back(levi_restrict(dd, crystal.weight(a), levi));
  }
  std::vector<ColoredEdge> edges;
  for (int a = 0; a < crystal.size(); ++a) {
    for (std::size_t k = 0; k < levi.size(); ++k) {
      const int b = crystal.f(a, levi[k]);
      if (b != kAbsent) edges.push_back({static_cast<int>(k), a, b});
    }
  }
  return CrystalGraph::from_f_edges(std::move(sub), std::move(weights), edges);
}

Decomposition branch(const CrystalGraph& crystal, std::span<const int> levi,
                     const BuildOptions& options) {
  return decompose(restrict_to_levi(crystal, levi), options);
}

LeviDicts levi_dicts(const DynkinData& diagram, const Weight& d,
                     const Weight& v, std::span<const int> levi) {
  check_levi(diagram, levi);
  diagram.check_weight(d, "d");
  diagram.check_weight(v, "v");
  std::vector<char> inside(static_cast<std::size_t>(diagram.rank()), 0);
  for (int i : levi) inside[i] = 1;
  std::vector<int> position(static_cast<std::size_t>(diagram.rank()), -1);
  for (std::size_t k = 0; k < levi.size(); ++k) {
    position[levi[k]] = static_cast<int>(k);
  }
  Weight delta = levi_restrict(diagram, d, levi);
  for (const Arrow& h : diagram.arrows()) {
    // H^{QQ'}: arrows joining the Levi subset to its complement.
    if (inside[h.out] && !inside[h.in]) delta[position[h.out]] += v[h.in];
  }
  return {std::move(delta), levi_restrict(diagram, v, levi)};
}

}  // namespace crystal_forge
