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

// Independent reference computations used only by the tests. Nothing here
// touches crystals: characters come from Freudenthal's formula, orbits from
// brute-force reflection closure.

#ifndef CRYSTAL_FORGE_TESTS_ORACLES_HPP_
#define CRYSTAL_FORGE_TESTS_ORACLES_HPP_

#include <map>
#include <set>

#include "crystal_forge/root_data.hpp"

namespace crystal_forge::oracle {

// Weight multiplicities of the irreducible module L(λ).
std::map<Weight, int> freudenthal_character(const DynkinData& diagram,
                                            const Weight& lambda);

// Multiset of highest weights of a module with the given character, peeled
// off one irreducible character at a time from the top.
std::map<Weight, int> subtract_characters(const DynkinData& diagram,
                                          std::map<Weight, int> character);

// W·λ by closing {λ} under the simple reflections.
std::set<Weight> weyl_orbit(const DynkinData& diagram, const Weight& lambda);

// The multiset sum {a + b} of two characters.
std::map<Weight, int> minkowski(const std::map<Weight, int>& a,
                                const std::map<Weight, int>& b);

}  // namespace crystal_forge::oracle

#endif  // CRYSTAL_FORGE_TESTS_ORACLES_HPP_
