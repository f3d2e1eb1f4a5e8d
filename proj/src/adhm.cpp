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

#include "crystal_forge/adhm.hpp"

#include <random>
#include <string>

#include "crystal_forge/errors.hpp"

namespace crystal_forge {

namespace {

std::string shape(const Matrix& m) {
  return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

void expect_shape(const Matrix& m, int rows, int cols,
                  const std::string& what) {
  if (m.rows() != rows || m.cols() != cols) {
    throw DomainError(what + " has shape " + shape(m) + ", expected " +
                      std::to_string(rows) + "x" + std::to_string(cols));
  }
}

void check_part_dims(const GradedSubspace& e, const Weight& dims,
                     const std::string& what) {
  if (e.parts.size() != dims.size()) {
    throw DomainError(what + " has " + std::to_string(e.parts.size()) +
                      " graded pieces, expected " +
                      std::to_string(dims.size()));
  }
  for (std::size_t i = 0; i < dims.size(); ++i) {
    if (e.parts[i].ambient() != dims[i]) {
      throw DomainError(what + " at vertex " + std::to_string(i) +
                        " lives in dimension " +
                        std::to_string(e.parts[i].ambient()) + ", expected " +
                        std::to_string(dims[i]));
    }
  }
}

// One step of closure: E_in(h) += x_h(E_out(h)).
GradedSubspace push_forward(const ADHMDatum& datum, const GradedSubspace& e) {
  GradedSubspace out = e;
  const auto& arrows = datum.diagram.arrows();
  for (std::size_t h = 0; h < arrows.size(); ++h) {
    out.parts[arrows[h].in] =
        sum(out.parts[arrows[h].in], image(datum.x[h], e.parts[arrows[h].out]));
  }
  return out;
}

// One step of core: E_out(h) ∩= x_h⁻¹(E_in(h)).
GradedSubspace pull_back(const ADHMDatum& datum, const GradedSubspace& e) {
  GradedSubspace out = e;
  const auto& arrows = datum.diagram.arrows();
  for (std::size_t h = 0; h < arrows.size(); ++h) {
    out.parts[arrows[h].out] =
        intersection(out.parts[arrows[h].out],
                     preimage(datum.x[h], e.parts[arrows[h].in]));
  }
  return out;
}

}  // namespace

GradedSubspace GradedSubspace::zero(const Weight& dims) {
  GradedSubspace out;
  for (std::size_t i = 0; i < dims.size(); ++i) {
    out.parts.push_back(Subspace::zero(dims[i]));
  }
  return out;
}

GradedSubspace GradedSubspace::full(const Weight& dims) {
  GradedSubspace out;
  for (std::size_t i = 0; i < dims.size(); ++i) {
    out.parts.push_back(Subspace::full(dims[i]));
  }
  return out;
}

Weight GradedSubspace::dims() const {
  Weight out(parts.size());
  for (std::size_t i = 0; i < parts.size(); ++i) out[i] = parts[i].dim();
  return out;
}

bool GradedSubspace::contains(const GradedSubspace& other) const {
  if (other.parts.size() != parts.size()) {
    throw DomainError("graded subspaces over different vertex sets");
  }
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (!parts[i].contains(other.parts[i])) return false;
  }
  return true;
}

GradedSubspace sum(const GradedSubspace& a, const GradedSubspace& b) {
  if (a.parts.size() != b.parts.size()) {
    throw DomainError("graded subspaces over different vertex sets");
  }
  GradedSubspace out;
  for (std::size_t i = 0; i < a.parts.size(); ++i) {
    out.parts.push_back(sum(a.parts[i], b.parts[i]));
  }
  return out;
}

GradedSubspace intersection(const GradedSubspace& a, const GradedSubspace& b) {
  if (a.parts.size() != b.parts.size()) {
    throw DomainError("graded subspaces over different vertex sets");
  }
  GradedSubspace out;
  for (std::size_t i = 0; i < a.parts.size(); ++i) {
    out.parts.push_back(intersection(a.parts[i], b.parts[i]));
  }
  return out;
}

ADHMDatum ADHMDatum::zero(const DynkinData& diagram, const Weight& d,
                          const Weight& v) {
  diagram.check_weight(d, "d");
  diagram.check_weight(v, "v");
  if (!d.is_nonnegative() || !v.is_nonnegative()) {
    throw DomainError("graded dimensions must be non-negative");
  }
  ADHMDatum out{diagram, d, v, {}, {}, {}};
  for (const Arrow& h : diagram.arrows()) {
    out.x.emplace_back(v[h.in], v[h.out]);
  }
  for (int i = 0; i < diagram.rank(); ++i) {
    out.p.emplace_back(v[i], d[i]);
    out.q.emplace_back(d[i], v[i]);
  }
  return out;
}

void ADHMDatum::validate() const {
  diagram.check_weight(d, "d");
  diagram.check_weight(v, "v");
  if (!d.is_nonnegative() || !v.is_nonnegative()) {
    throw DomainError("graded dimensions must be non-negative");
  }
  const auto& arrows = diagram.arrows();
  if (x.size() != arrows.size()) {
    throw DomainError("expected " + std::to_string(arrows.size()) +
                      " arrow matrices, got " + std::to_string(x.size()));
  }
  const auto n = static_cast<std::size_t>(diagram.rank());
  if (p.size() != n || q.size() != n) {
    throw DomainError("expected one p and one q matrix per vertex");
  }
  for (std::size_t h = 0; h < arrows.size(); ++h) {
    expect_shape(x[h], v[arrows[h].in], v[arrows[h].out],
                 "x for arrow " + std::to_string(arrows[h].out) + "->" +
                     std::to_string(arrows[h].in));
  }
  for (std::size_t i = 0; i < n; ++i) {
    expect_shape(p[i], v[i], d[i], "p at vertex " + std::to_string(i));
    expect_shape(q[i], d[i], v[i], "q at vertex " + std::to_string(i));
  }
}

void GradedFlag::validate() const {
  if (steps.empty()) throw DomainError("a flag needs at least one step");
  GradedSubspace previous = GradedSubspace::zero(dims);
  for (std::size_t k = 0; k < steps.size(); ++k) {
    check_part_dims(steps[k], dims, "flag step " + std::to_string(k + 1));
    if (!steps[k].contains(previous)) {
      throw DomainError("flag step " + std::to_string(k + 1) +
                        " does not contain the previous step");
    }
    previous = steps[k];
  }
  if (previous != GradedSubspace::full(dims)) {
    throw DomainError("the last flag step must be the whole space");
  }
}

PreprojectiveReport check_preprojective(const ADHMDatum& datum) {
  datum.validate();
  const auto& arrows = datum.diagram.arrows();
  PreprojectiveReport out;
  for (int i = 0; i < datum.diagram.rank(); ++i) {
    out.residual.emplace_back(datum.v[i], datum.v[i]);
    out.residual.back() = out.residual.back() - datum.p[i] * datum.q[i];
  }
  for (std::size_t h = 0; h < arrows.size(); ++h) {
    const Arrow& a = arrows[h];
    Matrix term = datum.x[h] * datum.x[a.reverse];
    out.residual[a.in] = out.residual[a.in] + BigRational(a.sign) * term;
  }
  out.holds = true;
  for (const Matrix& r : out.residual) out.holds = out.holds && r.is_zero();
  return out;
}

GradedSubspace closure(const ADHMDatum& datum, const GradedSubspace& e) {
  datum.validate();
  check_part_dims(e, datum.v, "subspace");
  GradedSubspace current = e;
  for (;;) {
    GradedSubspace next = push_forward(datum, current);
    if (next.dims() == current.dims()) return next;
    current = std::move(next);
  }
}

GradedSubspace core(const ADHMDatum& datum, const GradedSubspace& e) {
  datum.validate();
  check_part_dims(e, datum.v, "subspace");
  GradedSubspace current = e;
  for (;;) {
    GradedSubspace next = pull_back(datum, current);
    if (next.dims() == current.dims()) return next;
    current = std::move(next);
  }
}

GradedSubspace image_of_p(const ADHMDatum& datum, const GradedSubspace& dsub) {
  datum.validate();
  check_part_dims(dsub, datum.d, "subspace of D");
  GradedSubspace out;
  for (int i = 0; i < datum.diagram.rank(); ++i) {
    out.parts.push_back(image(datum.p[i], dsub.parts[i]));
  }
  return out;
}

GradedSubspace preimage_of_q(const ADHMDatum& datum,
                             const GradedSubspace& dsub) {
  datum.validate();
  check_part_dims(dsub, datum.d, "subspace of D");
  GradedSubspace out;
  for (int i = 0; i < datum.diagram.rank(); ++i) {
    out.parts.push_back(preimage(datum.q[i], dsub.parts[i]));
  }
  return out;
}

bool is_stable(const ADHMDatum& datum) {
  const auto im = image_of_p(datum, GradedSubspace::full(datum.d));
  return closure(datum, im) == GradedSubspace::full(datum.v);
}

bool is_ast_stable(const ADHMDatum& datum) {
  const auto ker = preimage_of_q(datum, GradedSubspace::zero(datum.d));
  return core(datum, ker) == GradedSubspace::zero(datum.v);
}

bool is_nilpotent(const ADHMDatum& datum) {
  datum.validate();
  int total = 0;
  for (std::size_t i = 0; i < datum.v.size(); ++i) total += datum.v[i];
  const auto& arrows = datum.diagram.arrows();
  // S ↦ Σ_h x_h(S_out(h)), N times from V: the span of all path images.
  GradedSubspace current = GradedSubspace::full(datum.v);
  for (int step = 0; step < total; ++step) {
    GradedSubspace next = GradedSubspace::zero(datum.v);
    for (std::size_t h = 0; h < arrows.size(); ++h) {
      next.parts[arrows[h].in] =
          sum(next.parts[arrows[h].in],
              image(datum.x[h], current.parts[arrows[h].out]));
    }
    current = std::move(next);
  }
  return current == GradedSubspace::zero(datum.v);
}

std::optional<StratumPoint> stratum_membership(const ADHMDatum& datum,
                                               const GradedFlag& flag) {
  datum.validate();
  if (flag.dims != datum.d) {
    throw DomainError("the flag lives in dimension " + flag.dims.to_string() +
                      ", but D has dimension " + datum.d.to_string());
  }
  flag.validate();
  if (!is_stable(datum)) {
    throw DomainError("stratum membership needs a stable datum");
  }
  StratumPoint out;
  GradedSubspace p_prev = GradedSubspace::zero(datum.v);
  GradedSubspace core_prev =
      core(datum, preimage_of_q(datum, GradedSubspace::zero(datum.d)));
  for (const GradedSubspace& step : flag.steps) {
    const GradedSubspace p_k = closure(datum, image_of_p(datum, step));
    const GradedSubspace core_k = core(datum, preimage_of_q(datum, step));
    if (!core_k.contains(p_k)) return std::nullopt;
    const GradedSubspace meet = intersection(p_k, core_prev);
    out.v_tuple.push_back(p_k.dims() - meet.dims());
    out.vt_tuple.push_back(meet.dims() - p_prev.dims());
    p_prev = p_k;
    core_prev = core_k;
  }
  return out;
}

ADHMDatum random_preprojective(const DynkinData& diagram, const Weight& d,
                               const Weight& v, std::uint64_t seed) {
  ADHMDatum datum = ADHMDatum::zero(diagram, d, v);
  const auto& arrows = diagram.arrows();
  std::mt19937_64 rng(seed);
  auto draw = [&](int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
  };

  // Unknowns: entries of x_h for reversed arrows, then of every p_i.
  struct Slot {
    Matrix* m;
    int r;
    int c;
  };
  std::vector<Slot> slots;
  for (std::size_t h = 0; h < arrows.size(); ++h) {
    if (arrows[h].sign > 0) continue;
    for (int r = 0; r < datum.x[h].rows(); ++r) {
      for (int c = 0; c < datum.x[h].cols(); ++c) {
        slots.push_back({&datum.x[h], r, c});
      }
    }
  }
  const std::size_t x_slots = slots.size();
  for (auto& p : datum.p) {
    for (int r = 0; r < p.rows(); ++r) {
      for (int c = 0; c < p.cols(); ++c) slots.push_back({&p, r, c});
    }
  }

  constexpr int kAttempts = 32;
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    // Canonical x of random rank, built as a product through Q^r.
    for (std::size_t h = 0; h < arrows.size(); ++h) {
      if (arrows[h].sign < 0) continue;
      Matrix& x = datum.x[h];
      const int r = draw(0, std::min(x.rows(), x.cols()));
      Matrix left(x.rows(), r), right(r, x.cols());
      for (int a = 0; a < x.rows(); ++a) {
        for (int b = 0; b < r; ++b) left(a, b) = draw(-2, 2);
      }
      for (int a = 0; a < r; ++a) {
        for (int b = 0; b < x.cols(); ++b) right(a, b) = draw(-2, 2);
      }
      x = left * right;
    }
    for (auto& q : datum.q) {
      for (int r = 0; r < q.rows(); ++r) {
        for (int c = 0; c < q.cols(); ++c) q(r, c) = draw(-2, 2);
      }
    }
    // The relation is linear in the unknowns once the rest is fixed; read
    // off its matrix one unit vector at a time.
    for (const Slot& s : slots) (*s.m)(s.r, s.c) = 0;
    std::vector<std::vector<BigRational>> columns;
    for (const Slot& s : slots) {
      (*s.m)(s.r, s.c) = 1;
      std::vector<BigRational> column;
      for (const Matrix& res : check_preprojective(datum).residual) {
        for (int r = 0; r < res.rows(); ++r) {
          for (int c = 0; c < res.cols(); ++c) column.push_back(res(r, c));
        }
      }
      columns.push_back(std::move(column));
      (*s.m)(s.r, s.c) = 0;
    }
    if (slots.empty()) return datum;
    const Matrix system = Matrix::from_rows(columns).transpose();
    const Matrix basis = nullspace(system);
    std::vector<BigRational> solution(slots.size(), BigRational(0));
    for (int k = 0; k < basis.cols(); ++k) {
      const int coeff = draw(-2, 2);
      if (coeff == 0) continue;
      for (std::size_t j = 0; j < slots.size(); ++j) {
        solution[j] += coeff * basis(static_cast<int>(j), k);
      }
    }
    bool reversed_nonzero = false;
    for (std::size_t j = 0; j < slots.size(); ++j) {
      (*slots[j].m)(slots[j].r, slots[j].c) = solution[j];
      if (j < x_slots && solution[j] != 0) reversed_nonzero = true;
    }
    if (reversed_nonzero || x_slots == 0) return datum;
  }
  return datum;
}

}  // namespace crystal_forge
