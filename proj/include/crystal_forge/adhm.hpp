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

#ifndef CRYSTAL_FORGE_ADHM_HPP_
#define CRYSTAL_FORGE_ADHM_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "crystal_forge/exact_linalg.hpp"
#include "crystal_forge/root_data.hpp"

namespace crystal_forge {

// A subspace E_i ⊆ Q^{dims_i} at every vertex.
struct GradedSubspace {
  std::vector<Subspace> parts;

  static GradedSubspace zero(const Weight& dims);
  static GradedSubspace full(const Weight& dims);
  Weight dims() const;
  bool contains(const GradedSubspace& other) const;
  friend bool operator==(const GradedSubspace&, const GradedSubspace&) =
      default;
};

GradedSubspace sum(const GradedSubspace& a, const GradedSubspace& b);
GradedSubspace intersection(const GradedSubspace& a, const GradedSubspace& b);

// An explicit point (x, p, q) of the ADHM space for graded spaces of
// dimensions d and v. x[h] is indexed like diagram.arrows() and maps
// V_out(h) → V_in(h); p[i]: D_i → V_i; q[i]: V_i → D_i.
struct ADHMDatum {
  DynkinData diagram;
  Weight d;
  Weight v;
  std::vector<Matrix> x;
  std::vector<Matrix> p;
  std::vector<Matrix> q;

  // The all-zero datum of the given shape.
  static ADHMDatum zero(const DynkinData& diagram, const Weight& d,
                        const Weight& v);
  // Throws DomainError on any shape mismatch.
  void validate() const;
};

// 0 = D^0 ⊂ steps[0] ⊂ … ⊂ steps[n-1] = D.
struct GradedFlag {
  Weight dims;
  std::vector<GradedSubspace> steps;

  void validate() const;
};

struct PreprojectiveReport {
  bool holds = false;
  // Σ_{in(h)=i} ε(h) x_h x_h̄ − p_i q_i at every vertex i.
  std::vector<Matrix> residual;
};

PreprojectiveReport check_preprojective(const ADHMDatum& datum);

// Smallest x-invariant graded subspace of V containing e.
GradedSubspace closure(const ADHMDatum& datum, const GradedSubspace& e);
// Largest x-invariant graded subspace of V contained in e.
GradedSubspace core(const ADHMDatum& datum, const GradedSubspace& e);

GradedSubspace image_of_p(const ADHMDatum& datum, const GradedSubspace& dsub);
GradedSubspace preimage_of_q(const ADHMDatum& datum,
                             const GradedSubspace& dsub);

// closure(p(D)) = V
bool is_stable(const ADHMDatum& datum);
// core(ker q) = 0
bool is_ast_stable(const ADHMDatum& datum);
// Every path of length |dim V| in the x_h acts by zero.
bool is_nilpotent(const ADHMDatum& datum);

struct StratumPoint {
  std::vector<Weight> v_tuple;
  std::vector<Weight> vt_tuple;
};

// The (𝐯, 𝐯̃) stratum of a stable datum for the given flag in D, or
// nothing when some closure(p(D^k)) is not inside core(q⁻¹(D^k)). Throws
// DomainError for an unstable datum.
std::optional<StratumPoint> stratum_membership(const ADHMDatum& datum,
                                               const GradedFlag& flag);

// A random solution of the preprojective relation: x on the canonical
// orientation and q are drawn at random, and the reversed x and p are a
// random point of the solution space of the (then linear) relation.
// Retries until the reversed x is nonzero when that is possible.
ADHMDatum random_preprojective(const DynkinData& diagram, const Weight& d,
                               const Weight& v, std::uint64_t seed);

}  // namespace crystal_forge

#endif  // CRYSTAL_FORGE_ADHM_HPP_
