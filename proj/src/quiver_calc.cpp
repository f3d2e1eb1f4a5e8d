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

#include "crystal_forge/quiver_calc.hpp"

#include <stdexcept>
#include <string>

#include "crystal_forge/errors.hpp"

namespace crystal_forge {

namespace {

using i64 = std::int64_t;

// ⟨Xv,v⟩
i64 xvv(const DynkinData& dd, const Weight& v) {
  return pairing(dd.apply_x(v), v);
}

i64 xvu(const DynkinData& dd, const Weight& v, const Weight& u) {
  return pairing(dd.apply_x(v), u);
}

// 2·(½⟨Xv,v⟩ + ⟨d,v⟩ − ⟨v,v⟩): twice the per-factor term of the strata
// formulas, which is also dim 𝔐^{s,*s}(d,v).
i64 factor_term2(const DynkinData& dd, const Weight& d, const Weight& v) {
  return xvv(dd, v) + 2 * pairing(d, v) - 2 * pairing(v, v);
}

Weight sum(const DynkinData& dd, const std::vector<Weight>& ws) {
  Weight out(static_cast<std::size_t>(dd.rank()));
  for (const Weight& w : ws) out += w;
  return out;
}

void check_same(const Weight& a, const Weight& b, std::string_view what) {
  if (a.size() != b.size()) {
    throw DomainError(std::string(what) + ": length " +
                      std::to_string(a.size()) + " vs " +
                      std::to_string(b.size()));
  }
}

}  // namespace

i64 halve(i64 doubled, std::string_view what) {
  if (doubled % 2 != 0) {
    throw std::logic_error("odd numerator " + std::to_string(doubled) +
                           " in " + std::string(what));
  }
  return doubled / 2;
}

i64 dim_ms(const DynkinData& dd, const Weight& d, const Weight& v) {
  dd.check_weight(d, "d");
  dd.check_weight(v, "v");
  return xvv(dd, v) + 2 * pairing(d, v) - 2 * pairing(v, v);
}

i64 dim_mss(const DynkinData& dd, const Weight& d, const Weight& v) {
  return dim_ms(dd, d, v);
}

BasicDims basic_dims(const DynkinData& dd, const Weight& d, const Weight& v,
                     const Weight& v0) {
  dd.check_weight(d, "d");
  dd.check_weight(v, "v");
  dd.check_weight(v0, "v0");
  BasicDims out;
  out.lambda = halve(xvv(dd, v), "dim Λ");
  out.lambda_s = xvv(dd, v) + 2 * pairing(d, v) - pairing(v, v);
  out.lambda_ss = out.lambda_s;
  out.ms = dim_ms(dd, d, v);
  out.mss = dim_mss(dd, d, v);
  out.ms3 = halve(dim_ms(dd, d, v) + dim_mss(dd, d, v0), "dim 𝔐^s(d,v0,v)");
  out.delta = d - 2 * v + dd.apply_x(v);
  out.ss_nonempty = out.delta.is_nonnegative();
  return out;
}

void QuiverParams::validate() const {
  diagram.check_weight(d, "d");
  diagram.check_weight(v, "v");
  diagram.check_weight(v0, "v0");
  if (d_tuple.empty()) throw DomainError("the d tuple is empty");
  if (d_tuple.size() != v_tuple.size()) {
    throw DomainError("the d and v tuples have different lengths (" +
                      std::to_string(d_tuple.size()) + " vs " +
                      std::to_string(v_tuple.size()) + ")");
  }
  for (const Weight& w : d_tuple) diagram.check_weight(w, "d tuple entry");
  for (const Weight& w : v_tuple) diagram.check_weight(w, "v tuple entry");
  if (sum(diagram, d_tuple) != d) {
    throw DomainError("the d tuple sums to " +
                      sum(diagram, d_tuple).to_string() + ", not d = " +
                      d.to_string());
  }
  if (vt_tuple) {
    if (vt_tuple->size() != v_tuple.size()) {
      throw DomainError("the v and vt tuples have different lengths");
    }
    for (const Weight& w : *vt_tuple) {
      diagram.check_weight(w, "vt tuple entry");
    }
    const Weight total = sum(diagram, v_tuple) + sum(diagram, *vt_tuple);
    if (total != v) {
      throw DomainError("Σ v tuple + Σ vt tuple = " + total.to_string() +
                        ", not v = " + v.to_string());
    }
  }
}

StratDims strat_dims(const QuiverParams& p) {
  p.validate();
  const DynkinData& dd = p.diagram;
  const std::size_t n = p.d_tuple.size();
  StratDims out;

  i64 factors2 = 0;  // 2·Σ(½⟨X𝐯ˢ,𝐯ˢ⟩ + ⟨𝐝ˢ,𝐯ˢ⟩ − ⟨𝐯ˢ,𝐯ˢ⟩)
  i64 mss_sum = 0;
  for (std::size_t s = 0; s < n; ++s) {
    factors2 += factor_term2(dd, p.d_tuple[s], p.v_tuple[s]);
    mss_sum += dim_mss(dd, p.d_tuple[s], p.v_tuple[s]);
  }

  out.pi_v = halve(xvv(dd, p.v) + 2 * pairing(p.d, p.v) + factors2,
                   "dim Π^s_{D,𝐃,V,𝐯}");
  out.pi_ss = halve(xvv(dd, p.v) + 2 * pairing(p.d, p.v) + factors2,
                    "dim Π^{s,*s}_{D,𝐃,V,𝐯}");
  out.tensor_variety =
      halve(xvv(dd, p.v) + 2 * pairing(p.d, p.v) - 2 * pairing(p.v, p.v) +
                factors2,
            "dim 𝔗");
  out.tensor_variety_closed =
      halve(dim_ms(dd, p.d, p.v) + mss_sum, "dim 𝔗 (closed form)");
  out.multiplicity_variety =
      halve(xvv(dd, p.v) + 2 * pairing(p.d, p.v) - 2 * pairing(p.v, p.v) +
                factors2,
            "dim 𝔖");
  out.multiplicity_variety_closed =
      halve(dim_mss(dd, p.d, p.v) + mss_sum, "dim 𝔖 (closed form)");

  if (p.vt_tuple) {
    const auto& vt = *p.vt_tuple;
    i64 flag2 = xvv(dd, p.v) + 2 * pairing(p.d, p.v) - pairing(p.v, p.v);
    for (std::size_t s = 0; s < n; ++s) {
      const Weight& vs = p.v_tuple[s];
      flag2 += xvv(dd, vs) + 2 * pairing(p.d_tuple[s], vs) -
               pairing(vs, vs) + pairing(vt[s], vt[s]);
    }
    out.pi_flag = halve(flag2, "dim Π^s_{D,𝐃,V,𝐕}");
    out.flag_variety = flag_variety_dim(p.v, p.v_tuple, vt);
    // A fibration over the flag variety with fibre Π^s_{D,𝐃,V,𝐕}.
    out.pi_v_vt = *out.pi_flag + *out.flag_variety;
  }
  return out;
}

i64 gamma_fiber_dim(const DynkinData& dd, const Weight& d, const Weight& u,
                    const Weight& t) {
  dd.check_weight(d, "d");
  dd.check_weight(u, "u");
  dd.check_weight(t, "t");
  return pairing(d, u) + xvu(dd, t, u) - pairing(t, u);
}

i64 lambda_dvu_dim(const DynkinData& dd, const Weight& d, const Weight& v,
                   const Weight& u) {
  dd.check_weight(d, "d");
  dd.check_weight(v, "v");
  dd.check_weight(u, "u");
  const Weight t = v - u;
  return halve(xvv(dd, u), "½⟨Xu,u⟩") + xvu(dd, t, v) + pairing(d, v) +
         pairing(d, t) - pairing(t, v);
}

i64 lambda_dvv0_dim(const DynkinData& dd, const Weight& d, const Weight& v,
                    const Weight& v0) {
  dd.check_weight(d, "d");
  dd.check_weight(v, "v");
  dd.check_weight(v0, "v0");
  return halve(xvv(dd, v) + xvv(dd, v0), "dim Λ^s_{D,V,v0}") +
         pairing(d, v) + pairing(d, v0) - pairing(v0, v0);
}

i64 grassmannian_dim(const Weight& w, const Weight& v) {
  check_same(w, v, "Grassmannian");
  return pairing(w, v - w);
}

i64 flag_variety_dim(const Weight& v, const std::vector<Weight>& v_tuple,
                     const std::vector<Weight>& vt_tuple) {
  if (v_tuple.size() != vt_tuple.size()) {
    throw DomainError("the v and vt tuples have different lengths");
  }
  Weight total(v.size());
  i64 doubled = pairing(v, v);
  for (std::size_t s = 0; s < v_tuple.size(); ++s) {
    check_same(v, v_tuple[s], "flag variety");
    check_same(v, vt_tuple[s], "flag variety");
    doubled -= pairing(v_tuple[s], v_tuple[s]) +
               pairing(vt_tuple[s], vt_tuple[s]);
    total += v_tuple[s];
    total += vt_tuple[s];
  }
  if (total != v) {
    throw DomainError("flag subquotients sum to " + total.to_string() +
                      ", not " + v.to_string());
  }
  return halve(doubled, "flag variety dimension");
}

i64 rho2_fiber_dim(const DynkinData& dd, const Weight& d, const Weight& c,
                   const Weight& v, const Weight& u) {
  dd.check_weight(d, "d");
  dd.check_weight(c, "c");
  dd.check_weight(v, "v");
  dd.check_weight(u, "u");
  const Weight rest = v - u;
  return xvu(dd, u, rest) + pairing(c, rest) + pairing(d - c, u) -
         pairing(u, rest);
}

i64 rho2_fiber_dim(const QuiverParams& p, int k) {
  p.validate();
  const int n = static_cast<int>(p.d_tuple.size());
  if (!p.vt_tuple) throw DomainError("the ρ₂ split needs a vt tuple");
  if (k <= 0 || k >= n) {
    throw DomainError("split position " + std::to_string(k) +
                      " must satisfy 0 < k < " + std::to_string(n));
  }
  Weight c(static_cast<std::size_t>(p.diagram.rank()));
  Weight u(static_cast<std::size_t>(p.diagram.rank()));
  for (int s = k; s < n; ++s) {
    c += p.d_tuple[s];
    u += p.v_tuple[s];
    u += (*p.vt_tuple)[s];
  }
  return rho2_fiber_dim(p.diagram, p.d, c, p.v, u);
}

i64 sigma2_fiber_dim(const DynkinData& dd, const Weight& d1, const Weight& d2,
                     const Weight& v1, const Weight& u, const Weight& v2) {
  for (const Weight* w : {&d1, &d2, &v1, &u, &v2}) dd.check_weight(*w);
  const Weight v = v1 + u + v2;
  const Weight d = d1 + d2;
  const i64 x2 = xvv(dd, v) - xvv(dd, v1) - xvv(dd, u) - xvv(dd, v2);
  const i64 q2 = pairing(v, v) - pairing(v1, v1) - pairing(u, u) -
                 pairing(v2, v2);
  return halve(x2, "σ₂ fibre, X part") + pairing(d, u) - pairing(d1, v1) -
         pairing(d2, v2) + halve(q2, "σ₂ fibre, pairing part");
}

Weight hw_weight(const DynkinData& dd, const Weight& d, const Weight& v0) {
  dd.check_weight(d, "d");
  dd.check_weight(v0, "v0");
  return d - 2 * v0 + dd.apply_x(v0);
}

std::optional<Weight> v_from_weight(const DynkinData& dd, const Weight& d,
                                    const Weight& mu) {
  dd.check_weight(d, "d");
  dd.check_weight(mu, "weight");
  auto v = dd.solve_cartan(d - mu);
  if (!v || !v->is_nonnegative()) return std::nullopt;
  return v;
}

GPrimeWeight gprime_weight(const DynkinData& dd, const Weight& d,
                           const Weight& v) {
  dd.check_weight(d, "d");
  dd.check_weight(v, "v");
  return {d - v + dd.apply_x(v), v};
}

bool gprime_integrable(const GPrimeWeight& w) {
  check_same(w.first, w.second, "g′ weight");
  return w.second.is_nonnegative() && (w.first - w.second).is_nonnegative();
}

WeightDicts weight_dicts(const DynkinData& dd, const Weight& d,
                         const Weight& v) {
  WeightDicts out;
  out.hw_weight = hw_weight(dd, d, v);
  out.v_from_weight = v_from_weight(dd, d, out.hw_weight);
  out.gprime_weight = gprime_weight(dd, d, v);
  out.gprime_integrable = gprime_integrable(out.gprime_weight);
  return out;
}

}  // namespace crystal_forge
