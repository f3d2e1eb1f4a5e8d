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

#ifndef CRYSTAL_FORGE_LS_PATH_HPP_
#define CRYSTAL_FORGE_LS_PATH_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "crystal_forge/crystal.hpp"
#include "crystal_forge/root_data.hpp"

namespace crystal_forge {

using Rational = boost::rational<std::int64_t>;

// A piecewise-linear path in the rational weight space, starting at 0 and
// stored as its sequence of segment displacements. The parametrization is
// irrelevant to the root operators, so only displacements are kept.
//
// The stored form is canonical: zero segments are dropped and consecutive
// positively proportional segments are merged. Two paths are the same
// crystal element exactly when their canonical segment lists are equal.
class LSPath {
 public:
  LSPath() = default;
  // `flat` holds the segments back to back, `rank` coordinates each.
  LSPath(int rank, std::vector<Rational> flat);

  int rank() const { return rank_; }
  int segment_count() const {
    return rank_ == 0 ? 0 : static_cast<int>(flat_.size()) / rank_;
  }
  std::span<const Rational> segment(int k) const {
    return {flat_.data() + static_cast<std::size_t>(k) * rank_,
            static_cast<std::size_t>(rank_)};
  }
  const std::vector<Rational>& flat() const { return flat_; }

  std::vector<Rational> endpoint_rational() const;
  // Throws StructureError if the endpoint is not integral.
  Weight endpoint() const;

  // "[(1/2,0),(-1/2,1)]"
  std::string to_string() const;

  friend bool operator==(const LSPath&, const LSPath&) = default;

 private:
  int rank_ = 0;
  std::vector<Rational> flat_;
};

struct LSPathHash {
  std::size_t operator()(const LSPath& path) const noexcept;
};

// The straight path t ↦ tλ. Throws DomainError unless λ is dominant.
LSPath highest_path(const DynkinData& diagram, const Weight& lambda);

// Root operators. With h(t) the i-th coordinate of the path and m = min h:
// f reflects the piece between the last time h = m and the next time
// h = m + 1 (undefined when h(1) − m < 1); e reflects the piece between the
// last time h = m + 1 before the first minimum and that minimum (undefined
// when m > −1). Reflection is s_i applied to segment directions.
std::optional<LSPath> path_f(const DynkinData& diagram, int i,
                             const LSPath& path);
std::optional<LSPath> path_e(const DynkinData& diagram, int i,
                             const LSPath& path);

struct BuildOptions {
  std::size_t max_vertices = 200000;
};

struct PathCrystal {
  CrystalGraph graph;
  std::vector<LSPath> paths;  // paths[v] realizes vertex v
};

// Breadth-first closure of the highest path under all f_i. Throws
// DomainError for non-dominant λ and ResourceLimitError past the cap.
PathCrystal build_path_crystal(const DynkinData& diagram, const Weight& lambda,
                               const BuildOptions& options = {});
CrystalGraph build_crystal(const DynkinData& diagram, const Weight& lambda,
                           const BuildOptions& options = {});

}  // namespace crystal_forge

#endif  // CRYSTAL_FORGE_LS_PATH_HPP_
