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

#include "crystal_forge/crystal.hpp"

#include <algorithm>
#include <deque>
#include <limits>

#include "crystal_forge/errors.hpp"

namespace crystal_forge {

namespace {

constexpr int kUnknown = -2;
constexpr int kOnStack = -3;

// Length of the walk a → next(a) → … until kAbsent, per vertex; kUnbounded
// when the walk cycles.
void string_lengths(int size, int rank, int color, const std::vector<int>& next,
                    std::vector<int>& out) {
  std::vector<int> state(static_cast<std::size_t>(size), kUnknown);
  std::vector<int> stack;
  for (int start = 0; start < size; ++start) {
    if (state[start] != kUnknown) continue;
    stack.clear();
    int cur = start;
    int length = -1;
    bool unbounded = false;
    while (true) {
      if (cur == kAbsent) break;
      if (state[cur] == kOnStack || state[cur] == kUnbounded) {
        unbounded = true;
        break;
      }
      if (state[cur] != kUnknown) {
        length = state[cur];
        break;
      }
      state[cur] = kOnStack;
      stack.push_back(cur);
      cur = next[static_cast<std::size_t>(cur) * rank + color];
    }
    for (auto it = stack.rbegin(); it != stack.rend(); ++it) {
      state[*it] = unbounded ? kUnbounded : ++length;
    }
  }
  for (int a = 0; a < size; ++a) {
    out[static_cast<std::size_t>(a) * rank + color] = state[a];
  }
}

}  // namespace

CrystalGraph::CrystalGraph(DynkinData diagram)
    : diagram_(std::move(diagram)), rank_(diagram_.rank()) {}

CrystalGraph CrystalGraph::from_f_edges(DynkinData diagram,
                                        std::vector<Weight> weights,
                                        std::span<const ColoredEdge> edges) {
  CrystalGraph c(std::move(diagram));
  c.size_ = static_cast<int>(weights.size());
  const auto cells = static_cast<std::size_t>(c.size_) * c.rank_;
  c.weights_.reserve(cells);
  for (const Weight& w : weights) {
    c.diagram_.check_weight(w, "vertex weight");
    c.weights_.insert(c.weights_.end(), w.coords().begin(), w.coords().end());
  }
  c.f_.assign(cells, kAbsent);
  c.e_.assign(cells, kAbsent);
  for (const ColoredEdge& edge : edges) {
    c.diagram_.check_vertex(edge.color);
    c.check_vertex(edge.from);
    c.check_vertex(edge.to);
    int& fwd = c.f_[c.index(edge.from, edge.color)];
    int& back = c.e_[c.index(edge.to, edge.color)];
    if (fwd != kAbsent || back != kAbsent) {
      throw DomainError("f_" + std::to_string(edge.color) +
                        " is not a partial bijection at edge " +
                        std::to_string(edge.from) + " -> " +
                        std::to_string(edge.to));
    }
    fwd = edge.to;
    back = edge.from;
  }
  c.derive_string_lengths();
  return c;
}

CrystalGraph CrystalGraph::from_maps(DynkinData diagram,
                                     std::vector<int> flat_weights,
                                     std::vector<int> f_map,
                                     std::vector<int> e_map) {
  CrystalGraph c(std::move(diagram));
  if (c.rank_ == 0) {
    if (!f_map.empty() || !e_map.empty()) {
      throw DomainError("rank-0 crystal cannot carry operator maps");
    }
    throw DomainError(
        "from_maps cannot infer the vertex count of a rank-0 crystal");
  }
  if (flat_weights.size() % c.rank_ != 0 ||
      f_map.size() != flat_weights.size() ||
      e_map.size() != flat_weights.size()) {
    throw DomainError("crystal map shapes do not match the diagram rank");
  }
  c.size_ = static_cast<int>(flat_weights.size() / c.rank_);
  for (int v : f_map) {
    if (v < kAbsent || v >= c.size_) throw DomainError("f map out of range");
  }
  for (int v : e_map) {
    if (v < kAbsent || v >= c.size_) throw DomainError("e map out of range");
  }
  c.weights_ = std::move(flat_weights);
  c.f_ = std::move(f_map);
  c.e_ = std::move(e_map);
  c.derive_string_lengths();
  return c;
}

void CrystalGraph::derive_string_lengths() {
  const auto cells = static_cast<std::size_t>(size_) * rank_;
  eps_.assign(cells, 0);
  phi_.assign(cells, 0);
  for (int i = 0; i < rank_; ++i) {
    string_lengths(size_, rank_, i, e_, eps_);
    string_lengths(size_, rank_, i, f_, phi_);
  }
}

std::vector<ColoredEdge> CrystalGraph::f_edges() const {
  std::vector<ColoredEdge> edges;
  for (int a = 0; a < size_; ++a) {
    for (int i = 0; i < rank_; ++i) {
      const int b = f(a, i);
      if (b != kAbsent) edges.push_back({i, a, b});
    }
  }
  return edges;
}

void CrystalGraph::set_labels(std::vector<std::string> labels) {
  if (!labels.empty() && labels.size() != static_cast<std::size_t>(size_)) {
    throw DomainError("label count does not match crystal size");
  }
  labels_ = std::move(labels);
}

void CrystalGraph::check_vertex(int a) const {
  if (a < 0 || a >= size_) {
    throw DomainError("unknown crystal vertex " + std::to_string(a) +
                      " (crystal has " + std::to_string(size_) + ")");
  }
}

std::string_view axiom_name(Axiom axiom) {
  switch (axiom) {
    case Axiom::kInverseMaps: return "inverse-maps";
    case Axiom::kWeightShift: return "weight-shift";
    case Axiom::kNormality: return "normality";
  }
  return "?";
}

std::vector<AxiomViolation> verify_axioms(const CrystalGraph& c) {
  std::vector<AxiomViolation> report;
  const DynkinData& dd = c.diagram();
  const int rank = c.rank();
  auto shifted_ok = [&](int from, int to, int i, int sign) {
    const auto wf = c.weight_span(from);
    const auto wt = c.weight_span(to);
    for (int j = 0; j < rank; ++j) {
      if (wt[j] != wf[j] + sign * dd.cartan()[j][i]) return false;
    }
    return true;
  };
  for (int a = 0; a < c.size(); ++a) {
    for (int i = 0; i < rank; ++i) {
      const int b = c.f(a, i);
      if (b != kAbsent) {
        if (c.e(b, i) != a) {
          report.push_back({a, i, Axiom::kInverseMaps,
                            "f_" + std::to_string(i) + "(" + std::to_string(a) +
                                ") = " + std::to_string(b) + " but e_" +
                                std::to_string(i) + "(" + std::to_string(b) +
                                ") = " + std::to_string(c.e(b, i))});
        }
        if (!shifted_ok(a, b, i, -1)) {
          report.push_back({a, i, Axiom::kWeightShift,
                            "wt(f_" + std::to_string(i) + " " +
                                std::to_string(a) + ") = " +
                                c.weight(b).to_string() + " != wt - alpha_" +
                                std::to_string(i)});
        }
      }
      const int up = c.e(a, i);
      if (up != kAbsent) {
        if (c.f(up, i) != a) {
          report.push_back({a, i, Axiom::kInverseMaps,
                            "e_" + std::to_string(i) + "(" + std::to_string(a) +
                                ") = " + std::to_string(up) + " but f_" +
                                std::to_string(i) + "(" + std::to_string(up) +
                                ") = " + std::to_string(c.f(up, i))});
        }
        if (!shifted_ok(a, up, i, +1)) {
          report.push_back({a, i, Axiom::kWeightShift,
                            "wt(e_" + std::to_string(i) + " " +
                                std::to_string(a) + ") = " +
                                c.weight(up).to_string() + " != wt + alpha_" +
                                std::to_string(i)});
        }
      }
      const int eps = c.epsilon(a, i);
      const int ph = c.phi(a, i);
      if (eps == kUnbounded || ph == kUnbounded) {
        report.push_back({a, i, Axiom::kNormality,
                          "color-" + std::to_string(i) +
                              " string through vertex is not a finite chain"});
      } else if (c.weight_span(a)[i] != ph - eps) {
        report.push_back({a, i, Axiom::kNormality,
                          "wt_" + std::to_string(i) + " = " +
                              std::to_string(c.weight_span(a)[i]) +
                              " but phi - eps = " + std::to_string(ph) + " - " +
                              std::to_string(eps)});
      }
    }
  }
  return report;
}

int epsilon(const CrystalGraph& crystal, int a, int i) {
  crystal.check_vertex(a);
  crystal.diagram().check_vertex(i);
  return crystal.epsilon(a, i);
}

int phi(const CrystalGraph& crystal, int a, int i) {
  crystal.check_vertex(a);
  crystal.diagram().check_vertex(i);
  return crystal.phi(a, i);
}

CrystalGraph tensor(const CrystalGraph& left, const CrystalGraph& right) {
  if (!(left.diagram() == right.diagram())) {
    throw DomainError("tensor of crystals over different diagrams: " +
                      left.diagram().name() + " and " +
                      right.diagram().name());
  }
  const int rank = left.rank();
  const std::int64_t total =
      static_cast<std::int64_t>(left.size()) * right.size();
  if (total > std::numeric_limits<int>::max() / std::max(rank, 1)) {
    throw ResourceLimitError("tensor product with " + std::to_string(total) +
                             " vertices exceeds the addressable size");
  }
  const int nb = right.size();
  if (rank == 0) {
    // No operators: just |A|·|B| isolated weightless vertices.
    return trivial_crystal(left.diagram(), static_cast<int>(total));
  }
  const auto cells = static_cast<std::size_t>(total) * rank;
  std::vector<int> weights(cells);
  std::vector<int> f_map(cells, kAbsent);
  std::vector<int> e_map(cells, kAbsent);
  std::size_t cell = 0;
  for (int a = 0; a < left.size(); ++a) {
    const auto wa = left.weight_span(a);
    for (int b = 0; b < nb; ++b) {
      const auto wb = right.weight_span(b);
      for (int i = 0; i < rank; ++i, ++cell) {
        weights[cell] = wa[i] + wb[i];
        const int phi_a = left.phi(a, i);
        const int eps_b = right.epsilon(b, i);
        if (phi_a >= eps_b) {
          const int ea = left.e(a, i);
          if (ea != kAbsent) e_map[cell] = ea * nb + b;
        } else {
          const int eb = right.e(b, i);
          if (eb != kAbsent) e_map[cell] = a * nb + eb;
        }
        if (phi_a > eps_b) {
          const int fa = left.f(a, i);
          if (fa != kAbsent) f_map[cell] = fa * nb + b;
        } else {
          const int fb = right.f(b, i);
          if (fb != kAbsent) f_map[cell] = a * nb + fb;
        }
      }
    }
  }
  return CrystalGraph::from_maps(left.diagram(), std::move(weights),
                                 std::move(f_map), std::move(e_map));
}

CrystalGraph tensor_all(const DynkinData& diagram,
                        std::span<const CrystalGraph> factors,
                        const TensorProduct& product) {
  if (factors.empty()) return trivial_crystal(diagram, 1);
  CrystalGraph acc = factors.front();
  if (!(acc.diagram() == diagram)) {
    throw DomainError("tensor factor over " + acc.diagram().name() +
                      ", expected " + diagram.name());
  }
  for (std::size_t k = 1; k < factors.size(); ++k) {
    acc = product(acc, factors[k]);
  }
  return acc;
}

CrystalGraph direct_sum(const DynkinData& diagram,
                        std::span<const CrystalGraph> summands) {
  std::vector<Weight> weights;
  std::vector<ColoredEdge> edges;
  int offset = 0;
  for (const CrystalGraph& s : summands) {
    if (!(s.diagram() == diagram)) {
      throw DomainError("direct sum of crystals over different diagrams: " +
                        s.diagram().name() + " and " + diagram.name());
    }
    for (int a = 0; a < s.size(); ++a) weights.push_back(s.weight(a));
    for (int a = 0; a < s.size(); ++a) {
      for (int i = 0; i < s.rank(); ++i) {
        if (s.f(a, i) != kAbsent) {
          edges.push_back({i, offset + a, offset + s.f(a, i)});
        }
        if (s.e(a, i) != kAbsent && s.f(s.e(a, i), i) != a) {
          throw DomainError(
              "direct sum needs mutually inverse e/f maps in every summand");
        }
      }
    }
    offset += s.size();
  }
  return CrystalGraph::from_f_edges(diagram, std::move(weights), edges);
}

CrystalGraph trivial_crystal(const DynkinData& diagram, int n) {
  if (n < 0) throw DomainError("trivial crystal needs n >= 0");
  std::vector<Weight> weights(static_cast<std::size_t>(n),
                              Weight(static_cast<std::size_t>(diagram.rank())));
  return CrystalGraph::from_f_edges(diagram, std::move(weights), {});
}

std::vector<Weight> character(const CrystalGraph& crystal) {
  std::vector<Weight> out;
  out.reserve(static_cast<std::size_t>(crystal.size()));
  for (int a = 0; a < crystal.size(); ++a) out.push_back(crystal.weight(a));
  std::sort(out.begin(), out.end());
  return out;
}

std::map<Weight, int> character_counts(const CrystalGraph& crystal) {
  std::map<Weight, int> out;
  for (int a = 0; a < crystal.size(); ++a) ++out[crystal.weight(a)];
  return out;
}

std::vector<int> source_vertices(const CrystalGraph& crystal) {
  std::vector<int> out;
  for (int a = 0; a < crystal.size(); ++a) {
    bool top = true;
    for (int i = 0; i < crystal.rank() && top; ++i) {
      top = crystal.e(a, i) == kAbsent;
    }
    if (top) out.push_back(a);
  }
  return out;
}

std::vector<std::vector<int>> connected_components(
    const CrystalGraph& crystal) {
  std::vector<std::vector<int>> components;
  std::vector<char> seen(static_cast<std::size_t>(crystal.size()), 0);
  for (int start = 0; start < crystal.size(); ++start) {
    if (seen[start]) continue;
    std::vector<int> comp{start};
    seen[start] = 1;
    for (std::size_t head = 0; head < comp.size(); ++head) {
      const int a = comp[head];
      for (int i = 0; i < crystal.rank(); ++i) {
        for (int b : {crystal.f(a, i), crystal.e(a, i)}) {
          if (b != kAbsent && !seen[b]) {
            seen[b] = 1;
            comp.push_back(b);
          }
        }
      }
    }
    components.push_back(std::move(comp));
  }
  return components;
}

std::optional<std::vector<std::pair<int, int>>> match_components(
    const CrystalGraph& a, int a_root, const CrystalGraph& b, int b_root) {
  a.check_vertex(a_root);
  b.check_vertex(b_root);
  if (!(a.diagram() == b.diagram())) return std::nullopt;
  const int rank = a.rank();
  auto same_weight = [&](int x, int y) {
    const auto wx = a.weight_span(x);
    const auto wy = b.weight_span(y);
    return std::equal(wx.begin(), wx.end(), wy.begin(), wy.end());
  };
  if (!same_weight(a_root, b_root)) return std::nullopt;
  std::vector<int> a_to_b(static_cast<std::size_t>(a.size()), kAbsent);
  std::vector<int> b_to_a(static_cast<std::size_t>(b.size()), kAbsent);
  std::vector<std::pair<int, int>> pairs{{a_root, b_root}};
  a_to_b[a_root] = b_root;
  b_to_a[b_root] = a_root;
  auto link = [&](int x, int y) {
    if (x == kAbsent || y == kAbsent) return x == y;
    if (a_to_b[x] == kAbsent && b_to_a[y] == kAbsent) {
      if (!same_weight(x, y)) return false;
      a_to_b[x] = y;
      b_to_a[y] = x;
      pairs.emplace_back(x, y);
      return true;
    }
    return a_to_b[x] == y && b_to_a[y] == x;
  };
  for (std::size_t head = 0; head < pairs.size(); ++head) {
    const auto [x, y] = pairs[head];
    for (int i = 0; i < rank; ++i) {
      if (!link(a.f(x, i), b.f(y, i))) return std::nullopt;
      if (!link(a.e(x, i), b.e(y, i))) return std::nullopt;
    }
  }
  return pairs;
}

namespace {

struct RootedComponent {
  int source;
  std::size_t size;
};

std::vector<RootedComponent> rooted_components(const CrystalGraph& c,
                                               std::string_view which) {
  std::vector<RootedComponent> out;
  const auto comps = connected_components(c);
  for (std::size_t k = 0; k < comps.size(); ++k) {
    int source = kAbsent;
    int count = 0;
    for (int v : comps[k]) {
      bool top = true;
      for (int i = 0; i < c.rank() && top; ++i) top = c.e(v, i) == kAbsent;
      if (top) {
        ++count;
        source = v;
      }
    }
    if (count != 1) {
      throw StructureError(std::string(which) + " crystal component " +
                           std::to_string(k) + " (containing vertex " +
                           std::to_string(comps[k].front()) + ") has " +
                           std::to_string(count) +
                           " source vertices; expected exactly one");
    }
    out.push_back({source, comps[k].size()});
  }
  return out;
}

}  // namespace

std::optional<std::vector<int>> is_isomorphic(const CrystalGraph& a,
                                              const CrystalGraph& b) {
  const auto ra = rooted_components(a, "first");
  const auto rb = rooted_components(b, "second");
  if (a.size() != b.size() || ra.size() != rb.size() ||
      !(a.diagram() == b.diagram())) {
    return std::nullopt;
  }
  std::vector<int> mapping(static_cast<std::size_t>(a.size()), kAbsent);
  std::vector<char> used(rb.size(), 0);
  for (const RootedComponent& ca : ra) {
    bool matched = false;
    for (std::size_t k = 0; k < rb.size() && !matched; ++k) {
      if (used[k] || rb[k].size != ca.size) continue;
      auto pairs = match_components(a, ca.source, b, rb[k].source);
      if (!pairs || pairs->size() != ca.size) continue;
      for (const auto& [x, y] : *pairs) mapping[x] = y;
      used[k] = 1;
      matched = true;
    }
    if (!matched) return std::nullopt;
  }
  return mapping;
}

}  // namespace crystal_forge
