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

#include "crystal_forge/root_data.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <map>
#include <set>
#include <sstream>

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

#include "crystal_forge/errors.hpp"

namespace crystal_forge {

bool Weight::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(),
                     [](int c) { return c == 0; });
}

bool Weight::is_nonnegative() const {
  return std::all_of(coords_.begin(), coords_.end(),
                     [](int c) { return c >= 0; });
}

Weight& Weight::operator+=(const Weight& other) {
  if (other.size() != size()) {
    throw DomainError("weight length mismatch: " + to_string() + " + " +
                      other.to_string());
  }
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += other[i];
  return *this;
}

Weight& Weight::operator-=(const Weight& other) {
  if (other.size() != size()) {
    throw DomainError("weight length mismatch: " + to_string() + " - " +
                      other.to_string());
  }
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= other[i];
  return *this;
}

Weight& Weight::operator*=(int scalar) {
  for (int& c : coords_) c *= scalar;
  return *this;
}

std::string Weight::to_string() const { return "(" + to_csv() + ")"; }

std::string Weight::to_csv() const {
  std::string out;
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(coords_[i]);
  }
  return out;
}

Weight parse_weight(std::string_view text) {
  std::vector<int> coords;
  if (text.empty()) return Weight(std::move(coords));
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = text.find(',', pos);
    std::string_view token = text.substr(
        pos, comma == std::string_view::npos ? std::string_view::npos
                                             : comma - pos);
    int value = 0;
    const char* first = token.data();
    if (!token.empty() && token.front() == '+') ++first;
    const auto [ptr, ec] =
        std::from_chars(first, token.data() + token.size(), value);
    if (token.empty() || ec != std::errc() ||
        ptr != token.data() + token.size()) {
      throw DomainError("cannot parse weight '" + std::string(text) +
                        "': expected comma-separated integers");
    }
    coords.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return Weight(std::move(coords));
}

std::int64_t pairing(const Weight& v, const Weight& u) {
  if (v.size() != u.size()) {
    throw DomainError("pairing of weights of different length: " +
                      v.to_string() + ", " + u.to_string());
  }
  std::int64_t sum = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    sum += static_cast<std::int64_t>(v[i]) * u[i];
  }
  return sum;
}

bool is_dominant(const Weight& lambda) { return lambda.is_nonnegative(); }

std::size_t WeightHash::operator()(const Weight& w) const noexcept {
  std::size_t h = 0x9e3779b97f4a7c15ULL ^ w.size();
  for (int c : w.coords()) {
    h ^= std::hash<int>{}(c) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

namespace {

using SmallRational = boost::rational<std::int64_t>;

// Comparisons against plain integers recurse forever under C++20 rewritten
// operators in some Boost releases; compare against rationals instead.
const SmallRational kZero(0);

std::vector<std::pair<int, int>> standard_edges(Family family, int rank) {
  std::vector<std::pair<int, int>> edges;
  switch (family) {
    case Family::kA:
      for (int i = 0; i + 1 < rank; ++i) edges.emplace_back(i, i + 1);
      break;
    case Family::kD:
      for (int i = 0; i + 1 < rank - 2; ++i) edges.emplace_back(i, i + 1);
      edges.emplace_back(rank - 3, rank - 2);
      edges.emplace_back(rank - 3, rank - 1);
      break;
    case Family::kE:
      edges.emplace_back(0, 2);
      edges.emplace_back(1, 3);
      for (int i = 2; i + 1 < rank; ++i) edges.emplace_back(i, i + 1);
      break;
    case Family::kInduced:
      break;
  }
  return edges;
}

}  // namespace

DynkinData DynkinData::make(Family family, int rank) {
  bool valid = false;
  std::string name;
  switch (family) {
    case Family::kA:
      valid = rank >= 1;
      name = "A";
      break;
    case Family::kD:
      valid = rank >= 4;
      name = "D";
      break;
    case Family::kE:
      valid = rank >= 6 && rank <= 8;
      name = "E";
      break;
    case Family::kInduced:
      break;
  }
  if (!valid) {
    throw DomainError("invalid Dynkin family/rank combination: " +
                      (name.empty() ? std::string("?") : name) +
                      std::to_string(rank));
  }
  DynkinData data;
  data.family_ = family;
  data.rank_ = rank;
  data.name_ = name + std::to_string(rank);
  data.edges_ = standard_edges(family, rank);
  data.finish();
  return data;
}

DynkinData DynkinData::parse(std::string_view name) {
  if (name.size() < 2) {
    throw DomainError("cannot parse diagram '" + std::string(name) +
                      "': expected e.g. A2, D4, E6");
  }
  Family family;
  switch (name.front()) {
    case 'A': case 'a': family = Family::kA; break;
    case 'D': case 'd': family = Family::kD; break;
    case 'E': case 'e': family = Family::kE; break;
    default:
      throw DomainError("unknown Dynkin family in '" + std::string(name) +
                        "': only A, D, E are simply laced");
  }
  int rank = 0;
  const auto digits = name.substr(1);
  const auto [ptr, ec] =
      std::from_chars(digits.data(), digits.data() + digits.size(), rank);
  if (ec != std::errc() || ptr != digits.data() + digits.size()) {
    throw DomainError("cannot parse rank in diagram '" + std::string(name) +
                      "'");
  }
  return make(family, rank);
}

DynkinData DynkinData::from_edges(int rank,
                                  std::vector<std::pair<int, int>> edges,
                                  std::string name) {
  if (rank < 0) throw DomainError("negative diagram rank");
  std::set<std::pair<int, int>> seen;
  for (auto& [a, b] : edges) {
    if (a < 0 || b < 0 || a >= rank || b >= rank || a == b) {
      throw DomainError("invalid edge {" + std::to_string(a) + "," +
                        std::to_string(b) + "}");
    }
    if (a > b) std::swap(a, b);
    if (!seen.insert({a, b}).second) {
      throw DomainError("duplicate edge {" + std::to_string(a) + "," +
                        std::to_string(b) + "}");
    }
  }
  DynkinData data;
  data.family_ = Family::kInduced;
  data.rank_ = rank;
  data.name_ = std::move(name);
  data.edges_ = std::move(edges);
  data.finish();
  return data;
}

DynkinData DynkinData::induced(std::span<const int> nodes) const {
  std::map<int, int> position;
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    check_vertex(nodes[k]);
    if (k > 0 && nodes[k] <= nodes[k - 1]) {
      throw DomainError("Levi subset must be strictly increasing");
    }
    position[nodes[k]] = static_cast<int>(k);
  }
  std::vector<std::pair<int, int>> sub_edges;
  for (const auto& [a, b] : edges_) {
    auto ia = position.find(a);
    auto ib = position.find(b);
    if (ia != position.end() && ib != position.end()) {
      sub_edges.emplace_back(ia->second, ib->second);
    }
  }
  std::string sub_name = name_ + "[";
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    if (k) sub_name += ',';
    sub_name += std::to_string(nodes[k]);
  }
  sub_name += "]";
  DynkinData data =
      from_edges(static_cast<int>(nodes.size()), std::move(sub_edges),
                 std::move(sub_name));
  if (nodes.size() == static_cast<std::size_t>(rank_)) {
    data.family_ = family_;
    data.name_ = name_;
  }
  return data;
}

void DynkinData::finish() {
  std::sort(edges_.begin(), edges_.end());
  const auto n = static_cast<std::size_t>(rank_);
  cartan_.assign(n, std::vector<int>(n, 0));
  x_.assign(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < n; ++i) cartan_[i][i] = 2;
  arrows_.clear();
  for (const auto& [a, b] : edges_) {
    cartan_[a][b] = cartan_[b][a] = -1;
    x_[a][b] = x_[b][a] = 1;
    const int forward = static_cast<int>(arrows_.size());
    arrows_.push_back({a, b, forward + 1, +1});
    arrows_.push_back({b, a, forward, -1});
  }

  // Gauss–Jordan over the rationals for det(A) and A⁻¹.
  std::vector<std::vector<SmallRational>> m(
      n, std::vector<SmallRational>(2 * n, SmallRational(0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] = cartan_[i][j];
    m[i][n + i] = 1;
  }
  SmallRational det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col] == kZero) ++pivot;
    if (pivot == n) {
      throw DomainError("Cartan matrix of " + name_ +
                        " is singular; not a finite-type diagram");
    }
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    const SmallRational p = m[col][col];
    det *= p;
    for (auto& entry : m[col]) entry /= p;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || m[r][col] == kZero) continue;
      const SmallRational factor = m[r][col];
      for (std::size_t c = 0; c < 2 * n; ++c) m[r][c] -= factor * m[col][c];
    }
  }
  if (det <= kZero || det.denominator() != 1) {
    throw DomainError("Cartan matrix of " + name_ +
                      " is not positive definite");
  }
  determinant_ = static_cast<int>(det.numerator());
  adjugate_.assign(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const SmallRational scaled = m[i][n + j] * SmallRational(determinant_);
      adjugate_[i][j] = static_cast<int>(scaled.numerator());
    }
  }

  // Positive roots: for simply-laced diagrams β + α_i is a root exactly when
  // ⟨β, α_i^∨⟩ = −1, so closing the simple roots under that step is enough.
  positive_roots_.clear();
  std::set<Weight> seen;
  std::vector<Weight> frontier;
  for (std::size_t i = 0; i < n; ++i) {
    Weight alpha = Weight::unit(n, static_cast<int>(i));
    seen.insert(alpha);
    frontier.push_back(alpha);
  }
  while (!frontier.empty()) {
    std::vector<Weight> next;
    for (const Weight& beta : frontier) {
      positive_roots_.push_back(beta);
      const Weight paired = apply_cartan(beta);
      for (std::size_t i = 0; i < n; ++i) {
        if (paired[i] != -1) continue;
        Weight gamma = beta;
        gamma[i] += 1;
        if (seen.insert(gamma).second) next.push_back(std::move(gamma));
      }
    }
    frontier = std::move(next);
  }
}

int DynkinData::degree(int i) const {
  check_vertex(i);
  int deg = 0;
  for (int j = 0; j < rank_; ++j) deg += (cartan_[i][j] == -1);
  return deg;
}

Weight DynkinData::apply_cartan(const Weight& w) const {
  check_weight(w);
  Weight out(static_cast<std::size_t>(rank_));
  for (int i = 0; i < rank_; ++i) {
    int sum = 0;
    for (int j = 0; j < rank_; ++j) sum += cartan_[i][j] * w[j];
    out[i] = sum;
  }
  return out;
}

Weight DynkinData::apply_x(const Weight& w) const {
  check_weight(w);
  Weight out(static_cast<std::size_t>(rank_));
  for (int i = 0; i < rank_; ++i) {
    int sum = 0;
    for (int j = 0; j < rank_; ++j) sum += x_[i][j] * w[j];
    out[i] = sum;
  }
  return out;
}

Weight DynkinData::simple_root(int i) const {
  check_vertex(i);
  Weight out(static_cast<std::size_t>(rank_));
  for (int j = 0; j < rank_; ++j) out[j] = cartan_[j][i];
  return out;
}

Weight DynkinData::weyl_reflect(int i, const Weight& lambda) const {
  check_vertex(i);
  check_weight(lambda);
  Weight out = lambda;
  const int li = lambda[i];
  for (int j = 0; j < rank_; ++j) out[j] -= li * cartan_[j][i];
  return out;
}

std::optional<Weight> DynkinData::solve_cartan(const Weight& w) const {
  check_weight(w);
  Weight out(static_cast<std::size_t>(rank_));
  for (int i = 0; i < rank_; ++i) {
    std::int64_t sum = 0;
    for (int j = 0; j < rank_; ++j) {
      sum += static_cast<std::int64_t>(adjugate_[i][j]) * w[j];
    }
    if (sum % determinant_ != 0) return std::nullopt;
    out[i] = static_cast<int>(sum / determinant_);
  }
  return out;
}

std::uint64_t DynkinData::weyl_dimension(const Weight& lambda) const {
  check_weight(lambda, "highest weight");
  if (!is_dominant(lambda)) {
    throw DomainError("Weyl dimension needs a dominant weight, got " +
                      lambda.to_string());
  }
  using boost::multiprecision::cpp_int;
  cpp_int numerator = 1;
  cpp_int denominator = 1;
  for (const Weight& alpha : positive_roots_) {
    std::int64_t shifted = 0;
    std::int64_t height = 0;
    for (int i = 0; i < rank_; ++i) {
      shifted += static_cast<std::int64_t>(alpha[i]) * (lambda[i] + 1);
      height += alpha[i];
    }
    numerator *= shifted;
    denominator *= height;
  }
  const cpp_int dim = numerator / denominator;
  if (dim > cpp_int(std::numeric_limits<std::int64_t>::max())) {
    throw DomainError("Weyl dimension of " + lambda.to_string() +
                      " overflows 64 bits");
  }
  return static_cast<std::uint64_t>(dim);
}

void DynkinData::check_vertex(int i) const {
  if (i < 0 || i >= rank_) {
    throw DomainError("vertex " + std::to_string(i) + " is not a node of " +
                      name_);
  }
}

void DynkinData::check_weight(const Weight& w, std::string_view what) const {
  if (w.size() != static_cast<std::size_t>(rank_)) {
    throw DomainError(std::string(what) + " " + w.to_string() + " has " +
                      std::to_string(w.size()) + " coordinates but " + name_ +
                      " has rank " + std::to_string(rank_));
  }
}

}  // namespace crystal_forge
