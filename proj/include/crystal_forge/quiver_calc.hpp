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

#ifndef CRYSTAL_FORGE_QUIVER_CALC_HPP_
#define CRYSTAL_FORGE_QUIVER_CALC_HPP_

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "crystal_forge/root_data.hpp"

namespace crystal_forge {

// Dimension formulas for quiver varieties and their strata. All formulas
// are evaluated on arbitrary integer vectors; whether the variety is
// non-empty is separate data (see BasicDims::ss_nonempty).

// doubled / 2. Throws std::logic_error if `doubled` is odd, since every
// formula here is integral on valid input.
std::int64_t halve(std::int64_t doubled, std::string_view what);

// ⟨Xv,v⟩ + 2⟨d,v⟩ − 2⟨v,v⟩
std::int64_t dim_ms(const DynkinData& diagram, const Weight& d,
                    const Weight& v);
// Same value; kept separate because the two varieties differ.
std::int64_t dim_mss(const DynkinData& diagram, const Weight& d,
                     const Weight& v);

struct BasicDims {
  std::int64_t lambda = 0;         // Λ_{D,V} (nilpotent)
  std::int64_t lambda_s = 0;       // Λ^s, Λ^{*s}, Λ^{s,*s}
  std::int64_t lambda_ss = 0;
  std::int64_t ms = 0;             // 𝔐^s(d,v)
  std::int64_t mss = 0;            // 𝔐^{s,*s}(d,v)
  std::int64_t ms3 = 0;            // 𝔐^s(d,v0,v)
  bool ss_nonempty = false;        // d − 2v + Xv ≥ 0
  Weight delta;                    // d − 2v + Xv
};

BasicDims basic_dims(const DynkinData& diagram, const Weight& d,
                     const Weight& v, const Weight& v0);

// Parameters of the tensor product and multiplicity strata: a flag in D
// with graded pieces d_tuple (summing to d), V of dimension v, and the
// subquotient dimensions v_tuple (and optionally vt_tuple).
struct QuiverParams {
  DynkinData diagram;
  Weight d;
  Weight v;
  Weight v0;
  std::vector<Weight> d_tuple;
  std::vector<Weight> v_tuple;
  std::optional<std::vector<Weight>> vt_tuple;

  // Throws DomainError on rank mismatch, an empty or ragged tuple,
  // Σ d_tuple ≠ d, or (with vt_tuple) Σ v_tuple + Σ vt_tuple ≠ v.
  void validate() const;
};

struct StratDims {
  // Present only with vt_tuple.
  std::optional<std::int64_t> pi_flag;        // Π^s_{D,𝐃,V,𝐕}
  std::optional<std::int64_t> flag_variety;   // 2n-step flags in V
  std::optional<std::int64_t> pi_v_vt;        // Π^s_{D,𝐃,V,𝐯,𝐯̃}
  std::int64_t pi_v = 0;                      // Π^s_{D,𝐃,V,𝐯}
  std::int64_t pi_ss = 0;                     // Π^{s,*s}_{D,𝐃,V,𝐯}
  std::int64_t tensor_variety = 0;            // 𝔗(d,𝐝,v,𝐯), sum form
  std::int64_t tensor_variety_closed = 0;     // ½(dim 𝔐^s + Σ dim 𝔐^{s,*s})
  std::int64_t multiplicity_variety = 0;      // 𝔖(d,𝐝,v,𝐯), sum form
  std::int64_t multiplicity_variety_closed = 0;
};

StratDims strat_dims(const QuiverParams& params);

// Fibre of γ on Λ^s_{D,V,U}: ⟨d,u⟩ + ⟨Xt,u⟩ − ⟨t,u⟩.
std::int64_t gamma_fiber_dim(const DynkinData& diagram, const Weight& d,
                             const Weight& u, const Weight& t);

// Λ^s_{D,V,U} with u = dim U, t = v − u.
std::int64_t lambda_dvu_dim(const DynkinData& diagram, const Weight& d,
                            const Weight& v, const Weight& u);

// Λ^s_{D,V,v0}.
std::int64_t lambda_dvv0_dim(const DynkinData& diagram, const Weight& d,
                             const Weight& v, const Weight& v0);

// ⟨w, v − w⟩
std::int64_t grassmannian_dim(const Weight& w, const Weight& v);

// Graded 2n-step flags in V with subquotients 𝐯̃^1, 𝐯^1, …, 𝐯̃^n, 𝐯^n.
std::int64_t flag_variety_dim(const Weight& v,
                              const std::vector<Weight>& v_tuple,
                              const std::vector<Weight>& vt_tuple);

// Fibre of ρ₂: ⟨Xu,v−u⟩ + ⟨c,v−u⟩ + ⟨d−c,u⟩ − ⟨u,v−u⟩.
std::int64_t rho2_fiber_dim(const DynkinData& diagram, const Weight& d,
                            const Weight& c, const Weight& v,
                            const Weight& u);
// The split after position k (0 < k < n): c = Σ_{s>k} 𝐝^s and
// u = Σ_{s>k} (𝐯^s + 𝐯̃^s). Needs vt_tuple.
std::int64_t rho2_fiber_dim(const QuiverParams& params, int k);

// Fibre of σ₂ for V = V¹ ⊕ U ⊕ V², D = D¹ ⊕ D².
std::int64_t sigma2_fiber_dim(const DynkinData& diagram, const Weight& d1,
                              const Weight& d2, const Weight& v1,
                              const Weight& u, const Weight& v2);

// d − 2v0 + Xv0
Weight hw_weight(const DynkinData& diagram, const Weight& d, const Weight& v0);
// A⁻¹(d − μ) when integral and ≥ 0.
std::optional<Weight> v_from_weight(const DynkinData& diagram,
                                    const Weight& d, const Weight& mu);
// (d − v + Xv, v)
GPrimeWeight gprime_weight(const DynkinData& diagram, const Weight& d,
                           const Weight& v);
// second ≥ 0 and first − second ≥ 0.
bool gprime_integrable(const GPrimeWeight& w);

struct WeightDicts {
  Weight hw_weight;
  std::optional<Weight> v_from_weight;  // of hw_weight
  GPrimeWeight gprime_weight;
  bool gprime_integrable = false;
};

WeightDicts weight_dicts(const DynkinData& diagram, const Weight& d,
                         const Weight& v);

}  // namespace crystal_forge

#endif  // CRYSTAL_FORGE_QUIVER_CALC_HPP_
