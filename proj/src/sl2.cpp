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

#include "crystal_forge/sl2.hpp"

#include <algorithm>
#include <string>

#include "crystal_forge/errors.hpp"

namespace crystal_forge {

namespace {

void check_label(int d, int v0, int u, const char* which) {
  if (!Sl2Component{d, v0, u}.nonempty()) {
    throw DomainError(std::string("label ") + which + " = (d=" +
                      std::to_string(d) + ", v0=" + std::to_string(v0) +
                      ", v=" + std::to_string(u) +
                      ") is empty; need v0 <= v <= d - v0");
  }
}

void check_pair(int d, int v, const char* which) {
  if (v < 0 || 2 * v > d) {
    throw DomainError(std::string("label ") + which + " = (d=" +
                      std::to_string(d) + ", v=" + std::to_string(v) +
                      ") is empty; need 0 <= 2v <= d");
  }
}

}  // namespace

CrystalGraph sl2_crystal(int d, int v0) {
  const DynkinData a1 = dynkin(Family::kA, 1);
  if (v0 < 0 || 2 * v0 > d) return CrystalGraph(a1);
  const int n = d - 2 * v0 + 1;
  std::vector<Weight> weights;
  std::vector<std::string> labels;
  std::vector<ColoredEdge> edges;
  for (int k = 0; k < n; ++k) {
    const int v = v0 + k;
    weights.push_back(Weight{d - 2 * v});
    labels.push_back("M(" + std::to_string(d) + "," + std::to_string(v0) +
                     "," + std::to_string(v) + ")");
    if (k + 1 < n) edges.push_back({0, k, k + 1});
  }
  CrystalGraph out = CrystalGraph::from_f_edges(a1, std::move(weights), edges);
  out.set_labels(std::move(labels));
  return out;
}

Sl2Tau2 sl2_tau2(int d1, int v1, int u1, int d2, int v2, int u2) {
  check_label(d1, v1, u1, "1");
  check_label(d2, v2, u2, "2");
  return {std::min(u2 + v1, d1 - u1 + v2), u1 + u2};
}

std::vector<int> sl2_mult_range(int d1, int v1, int d2, int v2) {
  check_pair(d1, v1, "1");
  check_pair(d2, v2, "2");
  std::vector<int> out;
  const int stop = std::min(d2 - v2 + v1, d1 - v1 + v2);
  for (int v0 = v1 + v2; v0 <= stop; ++v0) out.push_back(v0);
  return out;
}

bool sl2_S_nonempty(int d1, int v1, int d2, int v2, int v) {
  return !(v < v1 + v2 || v > d2 - v2 + v1 || v > d1 - v1 + v2);
}

}  // namespace crystal_forge
