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

#ifndef CRYSTAL_FORGE_SL2_HPP_
#define CRYSTAL_FORGE_SL2_HPP_

#include <vector>

#include "crystal_forge/crystal.hpp"

namespace crystal_forge {

// The component label (d, v0, v) of the one-vertex quiver. It is non-empty
// iff v0 <= v <= d - v0.
struct Sl2Component {
  int d = 0;
  int v0 = 0;
  int v = 0;

  bool nonempty() const { return 0 <= v0 && v0 <= v && v <= d - v0; }
  int weight() const { return d - 2 * v; }
  int highest_weight() const { return d - 2 * v0; }
  friend bool operator==(const Sl2Component&, const Sl2Component&) = default;
};

// Chain over A1 with vertex k standing for v = v0 + k, weight d - 2v,
// ε = v - v0, φ = d - v - v0. Empty when 2·v0 > d.
CrystalGraph sl2_crystal(int d, int v0);

struct Sl2Tau2 {
  int v0 = 0;
  int u = 0;
  friend bool operator==(const Sl2Tau2&, const Sl2Tau2&) = default;
};

// v0 = min(u2 + v1, d1 - u1 + v2), u = u1 + u2. Throws DomainError unless
// both labels are non-empty.
Sl2Tau2 sl2_tau2(int d1, int v1, int u1, int d2, int v2, int u2);

// v0 from v1 + v2 to min(d2 - v2 + v1, d1 - v1 + v2), inclusive.
std::vector<int> sl2_mult_range(int d1, int v1, int d2, int v2);

// False iff v < v1 + v2, v > d2 - v2 + v1 or v > d1 - v1 + v2.
bool sl2_S_nonempty(int d1, int v1, int d2, int v2, int v);

}  // namespace crystal_forge

#endif  // CRYSTAL_FORGE_SL2_HPP_
