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

#include "crystal_forge/ls_path.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>

#include "crystal_forge/errors.hpp"

namespace crystal_forge {

namespace {

// Comparisons against plain integers recurse forever under C++20 rewritten
// operators in some Boost releases; compare against rationals instead.
const Rational kZero(0);
const Rational kOne(1);

bool is_zero_segment(std::span<const Rational> s) {
  return std::all_of(s.begin(), s.end(),
                     [](const Rational& x) { return x == kZero; });
}

// a = c·b for some c > 0; both nonzero.
bool positively_proportional(std::span<const Rational> a,
                             std::span<const Rational> b) {
  std::size_t k = 0;
  while (b[k] == kZero) ++k;
  const Rational c = a[k] / b[k];
  if (c <= kZero) return false;
  for (std::size_t j = 0; j < a.size(); ++j) {
    if (a[j] != c * b[j]) return false;
  }
  return true;
}

// Appends c·s, or its s_i-reflection when `reflect` is set.
void append_segment(std::vector<Rational>& out, std::span<const Rational> s,
                    const Rational& c, const DynkinData& dd, int i,
                    bool reflect) {
  const int rank = dd.rank();
  const Rational coeff = s[i];
  for (int j = 0; j < rank; ++j) {
    Rational v = s[j];
    if (reflect) v -= coeff * dd.cartan()[j][i];
    out.push_back(c * v);
  }
}

std::vector<Rational> heights(const LSPath& path, int i) {
  std::vector<Rational> h(static_cast<std::size_t>(path.segment_count()) + 1);
  h[0] = 0;
  for (int k = 0; k < path.segment_count(); ++k) {
    h[k + 1] = h[k] + path.segment(k)[i];
  }
  return h;
}

Rational integral_minimum(const std::vector<Rational>& h, int i) {
  const Rational m = *std::min_element(h.begin(), h.end());
  if (m.denominator() != 1) {
    throw StructureError("path height h_" + std::to_string(i) +
                         " has a non-integral minimum " +
                         std::to_string(m.numerator()) + "/" +
                         std::to_string(m.denominator()) +
                         "; the path is not reachable from a dominant path");
  }
  return m;
}

void check_path(const DynkinData& dd, int i, const LSPath& path) {
  dd.check_vertex(i);
  if (path.rank() != dd.rank()) {
    throw DomainError("path rank " + std::to_string(path.rank()) +
                      " does not match diagram " + dd.name());
  }
}

}  // namespace

LSPath::LSPath(int rank, std::vector<Rational> flat) : rank_(rank) {
  if (rank < 0 || (rank > 0 && flat.size() % rank != 0) ||
      (rank == 0 && !flat.empty())) {
    throw DomainError("path coordinates do not split into rank-" +
                      std::to_string(rank) + " segments");
  }
  if (rank == 0) return;
  flat_.reserve(flat.size());
  const std::size_t n = flat.size() / rank;
  for (std::size_t k = 0; k < n; ++k) {
    std::span<const Rational> s(flat.data() + k * rank,
                                static_cast<std::size_t>(rank));
    if (is_zero_segment(s)) continue;
    const std::size_t have = flat_.size() / rank;
    if (have > 0) {
      std::span<Rational> last(flat_.data() + (have - 1) * rank,
                               static_cast<std::size_t>(rank));
      if (positively_proportional(s, last)) {
        for (int j = 0; j < rank; ++j) last[j] += s[j];
        continue;
      }
    }
    flat_.insert(flat_.end(), s.begin(), s.end());
  }
}

std::vector<Rational> LSPath::endpoint_rational() const {
  std::vector<Rational> end(static_cast<std::size_t>(rank_), Rational(0));
  for (int k = 0; k < segment_count(); ++k) {
    const auto s = segment(k);
    for (int j = 0; j < rank_; ++j) end[j] += s[j];
  }
  return end;
}

Weight LSPath::endpoint() const {
  const auto end = endpoint_rational();
  Weight w(static_cast<std::size_t>(rank_));
  for (int j = 0; j < rank_; ++j) {
    if (end[j].denominator() != 1) {
      throw StructureError("path endpoint is not integral: " + to_string());
    }
    w[j] = static_cast<int>(end[j].numerator());
  }
  return w;
}

std::string LSPath::to_string() const {
  std::string out = "[";
  for (int k = 0; k < segment_count(); ++k) {
    if (k) out += ',';
    out += '(';
    const auto s = segment(k);
    for (int j = 0; j < rank_; ++j) {
      if (j) out += ',';
      out += std::to_string(s[j].numerator());
      if (s[j].denominator() != 1) {
        out += '/' + std::to_string(s[j].denominator());
      }
    }
    out += ')';
  }
  return out + "]";
}

std::size_t LSPathHash::operator()(const LSPath& path) const noexcept {
  std::size_t h = static_cast<std::size_t>(path.flat().size());
  for (const Rational& x : path.flat()) {
    const auto part = static_cast<std::size_t>(x.numerator()) * 1000003u +
                      static_cast<std::size_t>(x.denominator());
    h ^= part + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

LSPath highest_path(const DynkinData& diagram, const Weight& lambda) {
  diagram.check_weight(lambda, "highest weight");
  if (!is_dominant(lambda)) {
    throw DomainError("highest weight " + lambda.to_string() +
                      " is not dominant (all coordinates must be >= 0)");
  }
  std::vector<Rational> flat;
  for (int c : lambda.coords()) flat.emplace_back(c);
  return LSPath(diagram.rank(), std::move(flat));
}

std::optional<LSPath> path_f(const DynkinData& diagram, int i,
                             const LSPath& path) {
  check_path(diagram, i, path);
  const auto h = heights(path, i);
  const int n = path.segment_count();
  const Rational m = integral_minimum(h, i);
  if (h[n] - m < kOne) return std::nullopt;
  int start = n;
  while (h[start] != m) --start;
  int stop = start + 1;
  while (h[stop] < m + 1) ++stop;
  // Segment stop-1 reaches m+1 at this fraction of its length.
  const Rational frac = (m + 1 - h[stop - 1]) / (h[stop] - h[stop - 1]);

  std::vector<Rational> out;
  out.reserve(path.flat().size() + path.rank());
  for (int k = 0; k < start; ++k) {
    append_segment(out, path.segment(k), Rational(1), diagram, i, false);
  }
  for (int k = start; k < stop - 1; ++k) {
    append_segment(out, path.segment(k), Rational(1), diagram, i, true);
  }
  append_segment(out, path.segment(stop - 1), frac, diagram, i, true);
  if (frac < kOne) {
    append_segment(out, path.segment(stop - 1), 1 - frac, diagram, i, false);
  }
  for (int k = stop; k < n; ++k) {
    append_segment(out, path.segment(k), Rational(1), diagram, i, false);
  }
  return LSPath(diagram.rank(), std::move(out));
}

std::optional<LSPath> path_e(const DynkinData& diagram, int i,
                             const LSPath& path) {
  check_path(diagram, i, path);
  const auto h = heights(path, i);
  const int n = path.segment_count();
  const Rational m = integral_minimum(h, i);
  if (m > -kOne) return std::nullopt;
  int stop = 0;
  while (h[stop] != m) ++stop;
  int start = stop - 1;
  while (h[start] < m + 1) --start;
  // Segment `start` leaves level m+1 after this fraction of its length.
  const Rational frac =
      (h[start] - (m + 1)) / (h[start] - h[start + 1]);

  std::vector<Rational> out;
  out.reserve(path.flat().size() + path.rank());
  for (int k = 0; k < start; ++k) {
    append_segment(out, path.segment(k), Rational(1), diagram, i, false);
  }
  if (frac > kZero) {
    append_segment(out, path.segment(start), frac, diagram, i, false);
  }
  append_segment(out, path.segment(start), 1 - frac, diagram, i, true);
  for (int k = start + 1; k < stop; ++k) {
    append_segment(out, path.segment(k), Rational(1), diagram, i, true);
  }
  for (int k = stop; k < n; ++k) {
    append_segment(out, path.segment(k), Rational(1), diagram, i, false);
  }
  return LSPath(diagram.rank(), std::move(out));
}

PathCrystal build_path_crystal(const DynkinData& diagram, const Weight& lambda,
                               const BuildOptions& options) {
  std::vector<LSPath> paths{highest_path(diagram, lambda)};
  std::unordered_map<LSPath, int, LSPathHash> index{{paths.front(), 0}};
  std::vector<ColoredEdge> edges;
  for (std::size_t head = 0; head < paths.size(); ++head) {
    for (int i = 0; i < diagram.rank(); ++i) {
      auto next = path_f(diagram, i, paths[head]);
      if (!next) continue;
      auto [it, inserted] =
          index.try_emplace(*next, static_cast<int>(paths.size()));
      if (inserted) {
        if (paths.size() >= options.max_vertices) {
          throw ResourceLimitError(
              "crystal B" + lambda.to_string() + " over " + diagram.name() +
              " exceeds the vertex cap of " +
              std::to_string(options.max_vertices));
        }
        paths.push_back(std::move(*next));
      }
      edges.push_back({i, static_cast<int>(head), it->second});
    }
  }
  std::vector<Weight> weights;
  weights.reserve(paths.size());
  for (const LSPath& p : paths) weights.push_back(p.endpoint());
  return {CrystalGraph::from_f_edges(diagram, std::move(weights), edges),
          std::move(paths)};
}

CrystalGraph build_crystal(const DynkinData& diagram, const Weight& lambda,
                           const BuildOptions& options) {
  return build_path_crystal(diagram, lambda, options).graph;
}

}  // namespace crystal_forge
