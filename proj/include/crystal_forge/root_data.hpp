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

#ifndef CRYSTAL_FORGE_ROOT_DATA_HPP_
#define CRYSTAL_FORGE_ROOT_DATA_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace crystal_forge {

// An element of Z[I], written in fundamental-weight coordinates. The same
// type carries dimension vectors (d, v, u, ...) of graded spaces.
class Weight {
 public:
  Weight() = default;
  explicit Weight(std::size_t rank) : coords_(rank, 0) {}
  explicit Weight(std::vector<int> coords) : coords_(std::move(coords)) {}
  Weight(std::initializer_list<int> coords) : coords_(coords) {}
  explicit Weight(std::span<const int> coords)
      : coords_(coords.begin(), coords.end()) {}

  static Weight unit(std::size_t rank, int i) {
    Weight w(rank);
    w.coords_.at(static_cast<std::size_t>(i)) = 1;
    return w;
  }

  std::size_t size() const { return coords_.size(); }
  int operator[](std::size_t i) const { return coords_[i]; }
  int& operator[](std::size_t i) { return coords_[i]; }
  std::span<const int> coords() const { return coords_; }
  const std::vector<int>& vector() const { return coords_; }

  bool is_zero() const;
  bool is_nonnegative() const;

  Weight& operator+=(const Weight& other);
  Weight& operator-=(const Weight& other);
  Weight& operator*=(int scalar);

  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator*(int s, Weight a) { return a *= s; }
  friend Weight operator-(Weight a) { return a *= -1; }
  friend bool operator==(const Weight&, const Weight&) = default;
  friend auto operator<=>(const Weight&, const Weight&) = default;

  // "(1,-2,0)"
  std::string to_string() const;
  // "1,-2,0"; the CLI syntax.
  std::string to_csv() const;

 private:
  std::vector<int> coords_;
};

// Parses the CLI syntax "1,-2,0". An empty string is the rank-0 weight.
Weight parse_weight(std::string_view text);

// ⟨v,u⟩ = Σ v_i u_i. Throws DomainError on length mismatch.
std::int64_t pairing(const Weight& v, const Weight& u);

// All coordinates non-negative.
bool is_dominant(const Weight& lambda);

struct WeightHash {
  std::size_t operator()(const Weight& w) const noexcept;
};

// A pair (v,u) in Z[I] ⊕ Z[I], the weight lattice of g' = g ⊕ t.
struct GPrimeWeight {
  Weight first;
  Weight second;
  friend bool operator==(const GPrimeWeight&, const GPrimeWeight&) = default;
};

enum class Family { kA, kD, kE, kInduced };

// An oriented edge h ∈ H. The ADHM map x_h goes V_out → V_in.
struct Arrow {
  int out = 0;
  int in = 0;
  int reverse = 0;  // index of h̄ in DynkinData::arrows()
  int sign = 1;     // ε(h): +1 when out < in, −1 otherwise
};

using IntMatrix = std::vector<std::vector<int>>;

// A simply-laced Dynkin diagram with its Cartan matrix A and X = 2·Id − A.
//
// Node numbering:
//   A_n  0-1-…-(n−1)
//   D_n  0-1-…-(n−3), with n−2 and n−1 both attached to n−3
//   E_n  Bourbaki order shifted to start at 0: chain 0-2-3-…-(n−1) and
//        node 1 attached to node 3.
// Induced subdiagrams (Levi restriction) keep the parent's node order and
// may be disconnected.
class DynkinData {
 public:
  // Throws DomainError for an invalid family/rank combination.
  static DynkinData make(Family family, int rank);
  // "A1".."A9", "D4".."D9", "E6", "E7", "E8" (larger ranks accepted too).
  static DynkinData parse(std::string_view name);
  // Builds a simply-laced diagram from an explicit edge list.
  static DynkinData from_edges(int rank,
                               std::vector<std::pair<int, int>> edges,
                               std::string name = "custom");

  // Full subdiagram on `nodes` (strictly increasing parent indices);
  // node k of the result is nodes[k] of the parent.
  DynkinData induced(std::span<const int> nodes) const;

  Family family() const { return family_; }
  int rank() const { return rank_; }
  const std::string& name() const { return name_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  const IntMatrix& cartan() const { return cartan_; }
  const IntMatrix& x_matrix() const { return x_; }
  int degree(int i) const;
  bool adjacent(int i, int j) const { return cartan_[i][j] == -1; }

  // A·w and X·w.
  Weight apply_cartan(const Weight& w) const;
  Weight apply_x(const Weight& w) const;

  // î = A·i, i.e. column i of A.
  Weight simple_root(int i) const;
  // s_i λ = λ − λ_i · î.
  Weight weyl_reflect(int i, const Weight& lambda) const;
  // A⁻¹·w when it is integral, nullopt otherwise. Root coordinates.
  std::optional<Weight> solve_cartan(const Weight& w) const;

  // Positive roots in simple-root coordinates, sorted by height.
  const std::vector<Weight>& positive_roots() const { return positive_roots_; }
  // Weyl dimension formula for the irreducible module with highest
  // weight lambda (dominant). Throws DomainError on overflow.
  std::uint64_t weyl_dimension(const Weight& lambda) const;

  void check_vertex(int i) const;
  void check_weight(const Weight& w, std::string_view what = "weight") const;

  friend bool operator==(const DynkinData& a, const DynkinData& b) {
    return a.rank_ == b.rank_ && a.edges_ == b.edges_;
  }

 private:
  DynkinData() = default;
  void finish();

  Family family_ = Family::kInduced;
  int rank_ = 0;
  std::string name_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<Arrow> arrows_;
  IntMatrix cartan_;
  IntMatrix x_;
  // det(A) · A⁻¹, integral.
  IntMatrix adjugate_;
  int determinant_ = 1;
  std::vector<Weight> positive_roots_;
};

// Convenience wrapper matching the operation name used throughout the docs.
inline DynkinData dynkin(Family family, int rank) {
  return DynkinData::make(family, rank);
}

}  // namespace crystal_forge

#endif  // CRYSTAL_FORGE_ROOT_DATA_HPP_
