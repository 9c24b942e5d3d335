// Copyright 2026 The qdstar Authors
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

#include "qdstar/qudit.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "qdstar/errors.hpp"
#include "qdstar/linear_solver.hpp"

namespace qdstar {

namespace {

constexpr Complex kI{0.0, 1.0};

void require_dim(std::size_t dim) {
  if (dim < 2) {
    throw ValidationError("qudit dimension must be at least 2, got " +
                          std::to_string(dim));
  }
}

std::string pair_suffix(const LevelPair& p) {
  return "^{" + std::to_string(p.j) + std::to_string(p.k) + "}";
}

std::string diag_suffix(std::size_t j) {
  return "^{" + std::to_string(j) + std::to_string(j) + "}";
}

std::size_t pair_count(std::size_t dim) { return dim * (dim - 1) / 2; }

std::size_t pair_position(const LevelPair& p) {
  // Canonical order enumerates j = 2.., k = 1..j-1.
  return (p.j - 1) * (p.j - 2) / 2 + (p.k - 1);
}

std::size_t p1_index(const LevelPair& p) { return 2 * pair_position(p); }
std::size_t p2_index(const LevelPair& p) { return 2 * pair_position(p) + 1; }
std::size_t p3_index(std::size_t dim, std::size_t j) {
  return 2 * pair_count(dim) + (j - 2);
}

void require_probability(double v, const std::string& name) {
  if (!(v >= 0.0 && v <= 1.0)) {
    throw ValidationError("probability " + name + " = " + std::to_string(v) +
                          " is outside [0, 1]");
  }
}

// Basis of the Hermitian degrees of freedom, in solver order.
std::vector<ComplexMatrix> hermitian_dof_basis(std::size_t dim) {
  std::vector<ComplexMatrix> basis;
  basis.reserve(dim * dim);
  for (std::size_t r = 0; r < dim; ++r)
    basis.push_back(ComplexMatrix::unit(dim, r, r));
  for (std::size_t r = 1; r < dim; ++r)
    for (std::size_t c = 0; c < r; ++c) {
      ComplexMatrix re(dim), im(dim);
      re(r, c) = 1.0;
      re(c, r) = 1.0;
      im(r, c) = kI;
      im(c, r) = -kI;
      basis.push_back(std::move(re));
      basis.push_back(std::move(im));
    }
  return basis;
}

struct DequantizerSystem {
  LuFactorization lu;
  RealMatrix matrix;
};

DequantizerSystem build_system(const AffineParametrization& par,
                               const SymbolSpecification& spec) {
  const std::size_t d = par.dim;
  const std::size_t n = d * d;
  if (spec.dim != d) {
    throw ValidationError("parametrization dimension " + std::to_string(d) +
                          " does not match symbol specification dimension " +
                          std::to_string(spec.dim));
  }
  if (par.generators.size() != n - 1 || par.constant.dim() != d) {
    throw ValidationError("parametrization must carry d^2 - 1 generators");
  }
  if (spec.rows.size() != n) {
    throw ValidationError("symbol specification must have " +
                          std::to_string(n) + " rows, got " +
                          std::to_string(spec.rows.size()));
  }
  for (const auto& row : spec.rows) {
    if (row.coefficients.size() != n - 1) {
      throw ValidationError("symbol row needs " + std::to_string(n - 1) +
                            " coefficients, got " +
                            std::to_string(row.coefficients.size()));
    }
  }

  const auto dof = hermitian_dof_basis(d);
  RealMatrix a(n);
  for (std::size_t eq = 0; eq < n; ++eq) {
    const ComplexMatrix& m = eq + 1 < n ? par.generators[eq] : par.constant;
    for (std::size_t q = 0; q < n; ++q)
      a(eq, q) = trace_of_product(m, dof[q]).real();
  }
  LuFactorization lu(a);
  if (!lu.full_rank()) {
    throw SolverError("dequantizer system is rank deficient: rank " +
                          std::to_string(lu.rank()) + " of " +
                          std::to_string(n),
                      lu.rank(), std::numeric_limits<double>::infinity());
  }
  return {std::move(lu), std::move(a)};
}

std::vector<double> row_rhs(const AffineRow& row) {
  std::vector<double> b = row.coefficients;
  b.push_back(row.constant);
  return b;
}

std::vector<ComplexMatrix> solve_rows(const AffineParametrization& par,
                                      const SymbolSpecification& spec,
                                      double tol, bool parallel) {
  const DequantizerSystem system = build_system(par, spec);
  const std::size_t d = par.dim;
  const std::size_t n = d * d;
  std::vector<ComplexMatrix> out(n);
  std::vector<double> residuals(n, 0.0);
  const auto rows = static_cast<long>(n);

#pragma omp parallel for schedule(static) if (parallel)
  for (long i = 0; i < rows; ++i) {
    const auto b = row_rhs(spec.rows[i]);
    const auto x = system.lu.solve(b);
    residuals[i] = residual_inf(system.matrix, x, b);
    out[i] = hermitian_from_real(d, x);
  }

  for (std::size_t i = 0; i < n; ++i) {
    if (!(residuals[i] <= tol)) {
      throw NumericalError("dequantizer " + std::to_string(i + 1) +
                           " residual " + std::to_string(residuals[i]) +
                           " exceeds tolerance");
    }
  }
  return out;
}

}  // namespace

std::vector<LevelPair> level_pairs(std::size_t dim) {
  std::vector<LevelPair> pairs;
  for (std::size_t j = 2; j <= dim; ++j)
    for (std::size_t k = 1; k < j; ++k) pairs.push_back({j, k});
  return pairs;
}

int pair_orientation(std::size_t dim, const LevelPair& pair) {
  return dim == 3 && pair.j == 3 ? -1 : 1;
}

QuditProbabilityTable QuditProbabilityTable::uniform(std::size_t dim,
                                                     double pair_value,
                                                     double diagonal_value) {
  require_dim(dim);
  QuditProbabilityTable t;
  t.dim = dim;
  for (const auto& p : level_pairs(dim)) {
    t.p1[p] = pair_value;
    t.p2[p] = pair_value;
  }
  for (std::size_t j = 2; j <= dim; ++j) t.p3[j] = diagonal_value;
  return t;
}

std::vector<double> QuditProbabilityTable::parameters() const {
  validate(*this);
  std::vector<double> out(dim * dim - 1);
  for (const auto& p : level_pairs(dim)) {
    out[p1_index(p)] = p1.at(p);
    out[p2_index(p)] = p2.at(p);
  }
  for (std::size_t j = 2; j <= dim; ++j) out[p3_index(dim, j)] = p3.at(j);
  return out;
}

QuditProbabilityTable QuditProbabilityTable::from_parameters(
    std::size_t dim, const std::vector<double>& params) {
  require_dim(dim);
  if (params.size() != dim * dim - 1) {
    throw ValidationError("expected " + std::to_string(dim * dim - 1) +
                          " parameters, got " + std::to_string(params.size()));
  }
  QuditProbabilityTable t;
  t.dim = dim;
  for (const auto& p : level_pairs(dim)) {
    t.p1[p] = params[p1_index(p)];
    t.p2[p] = params[p2_index(p)];
  }
  for (std::size_t j = 2; j <= dim; ++j) t.p3[j] = params[p3_index(dim, j)];
  validate(t);
  return t;
}

void validate(const QuditProbabilityTable& t) {
  require_dim(t.dim);
  const std::size_t pairs = pair_count(t.dim);
  if (t.p1.size() != pairs || t.p2.size() != pairs || t.p3.size() != t.dim - 1) {
    throw ValidationError("probability table for d = " + std::to_string(t.dim) +
                          " needs " + std::to_string(pairs) +
                          " p1 and p2 entries and " +
                          std::to_string(t.dim - 1) + " p3 entries");
  }
  for (const auto& p : level_pairs(t.dim)) {
    const auto a = t.p1.find(p);
    const auto b = t.p2.find(p);
    if (a == t.p1.end() || b == t.p2.end()) {
      throw ValidationError("probability table is missing pair" +
                            pair_suffix(p));
    }
    require_probability(a->second, "p1" + pair_suffix(p));
    require_probability(b->second, "p2" + pair_suffix(p));
  }
  for (std::size_t j = 2; j <= t.dim; ++j) {
    const auto c = t.p3.find(j);
    if (c == t.p3.end()) {
      throw ValidationError("probability table is missing p3" + diag_suffix(j));
    }
    require_probability(c->second, "p3" + diag_suffix(j));
  }
}

ComplexMatrix qudit_rho_from_probabilities(const QuditProbabilityTable& t) {
  validate(t);
  const std::size_t d = t.dim;
  ComplexMatrix rho(d);
  for (const auto& p : level_pairs(d)) {
    const double s = pair_orientation(d, p);
    const Complex v = (t.p1.at(p) - 0.5) + s * kI * (t.p2.at(p) - 0.5);
    rho(p.j - 1, p.k - 1) = v;
    rho(p.k - 1, p.j - 1) = std::conj(v);
  }
  double first = 2.0 - static_cast<double>(d);
  for (std::size_t j = 2; j <= d; ++j) {
    rho(j - 1, j - 1) = 1.0 - t.p3.at(j);
    first += t.p3.at(j);
  }
  rho(0, 0) = first;
  return rho;
}

ComplexMatrix AffineParametrization::evaluate(
    const std::vector<double>& params) const {
  if (params.size() != generators.size()) {
    throw ValidationError("expected " + std::to_string(generators.size()) +
                          " parameters, got " + std::to_string(params.size()));
  }
  ComplexMatrix out = constant;
  for (std::size_t a = 0; a < generators.size(); ++a)
    out += params[a] * generators[a];
  return out;
}

AffineParametrization build_parametrization(std::size_t dim) {
  require_dim(dim);
  AffineParametrization par;
  par.dim = dim;
  par.generators.resize(dim * dim - 1);
  par.param_labels.resize(dim * dim - 1);

  // The constant term is rho at p = 0.
  ComplexMatrix constant(dim);
  for (const auto& p : level_pairs(dim)) {
    const double s = pair_orientation(dim, p);
    const std::size_t r = p.j - 1, c = p.k - 1;

    ComplexMatrix x(dim);
    x(r, c) = 1.0;
    x(c, r) = 1.0;
    ComplexMatrix y(dim);
    y(r, c) = s * kI;
    y(c, r) = -s * kI;
    par.generators[p1_index(p)] = std::move(x);
    par.generators[p2_index(p)] = std::move(y);
    par.param_labels[p1_index(p)] = "p1" + pair_suffix(p);
    par.param_labels[p2_index(p)] = "p2" + pair_suffix(p);

    const Complex v = -0.5 - s * 0.5 * kI;
    constant(r, c) = v;
    constant(c, r) = std::conj(v);
  }
  for (std::size_t j = 2; j <= dim; ++j) {
    ComplexMatrix z(dim);
    z(0, 0) = 1.0;
    z(j - 1, j - 1) = -1.0;
    par.generators[p3_index(dim, j)] = std::move(z);
    par.param_labels[p3_index(dim, j)] = "p3" + diag_suffix(j);
    constant(j - 1, j - 1) = 1.0;
  }
  constant(0, 0) = 2.0 - static_cast<double>(dim);
  par.constant = std::move(constant);
  return par;
}

double AffineRow::evaluate(const std::vector<double>& params) const {
  if (params.size() != coefficients.size()) {
    throw ValidationError("expected " + std::to_string(coefficients.size()) +
                          " parameters, got " + std::to_string(params.size()));
  }
  double acc = constant;
  for (std::size_t a = 0; a < params.size(); ++a)
    acc += coefficients[a] * params[a];
  return acc;
}

std::vector<double> SymbolSpecification::evaluate(
    const std::vector<double>& params) const {
  std::vector<double> out;
  out.reserve(rows.size());
  for (const auto& row : rows) out.push_back(row.evaluate(params));
  return out;
}

SymbolSpecification qudit_probability_symbol_spec(std::size_t dim) {
  require_dim(dim);
  const std::size_t np = dim * dim - 1;
  SymbolSpecification spec;
  spec.dim = dim;

  auto pick = [&](std::size_t index, std::string label) {
    AffineRow row{std::vector<double>(np, 0.0), 0.0};
    row.coefficients[index] = 1.0;
    spec.rows.push_back(std::move(row));
    spec.labels.push_back(std::move(label));
  };
  auto constant_row = [&](std::string label) {
    spec.rows.push_back({std::vector<double>(np, 0.0), 1.0});
    spec.labels.push_back(std::move(label));
  };

  if (dim == 2) {
    const LevelPair p{2, 1};
    pick(p1_index(p), "p1");
    pick(p2_index(p), "p2");
    pick(p3_index(2, 2), "p3");
    AffineRow completion{std::vector<double>(np, 0.0), 1.0};
    completion.coefficients[p3_index(2, 2)] = -1.0;
    spec.rows.push_back(std::move(completion));
    spec.labels.push_back("p4=1-p3");
    return spec;
  }

  if (dim == 3) {
    const LevelPair p31{3, 1}, p21{2, 1}, p32{3, 2};
    pick(p1_index(p31), "p1" + pair_suffix(p31));
    pick(p2_index(p31), "p2" + pair_suffix(p31));
    pick(p3_index(3, 3), "p3" + diag_suffix(3));
    pick(p1_index(p21), "p1" + pair_suffix(p21));
    pick(p2_index(p21), "p2" + pair_suffix(p21));
    pick(p3_index(3, 2), "p3" + diag_suffix(2));
    pick(p1_index(p32), "p1" + pair_suffix(p32));
    pick(p2_index(p32), "p2" + pair_suffix(p32));
    constant_row("const");
    return spec;
  }

  for (const auto& p : level_pairs(dim)) {
    pick(p1_index(p), "p1" + pair_suffix(p));
    pick(p2_index(p), "p2" + pair_suffix(p));
  }
  for (std::size_t j = 2; j <= dim; ++j)
    pick(p3_index(dim, j), "p3" + diag_suffix(j));
  constant_row("const");
  return spec;
}

SymbolSpecification qudit_meanvalue_symbol_spec(std::size_t dim) {
  require_dim(dim);
  const std::size_t np = dim * dim - 1;
  const double root2 = std::sqrt(2.0);
  SymbolSpecification spec;
  spec.dim = dim;

  // sqrt2 (p - 1/2) for one parameter.
  auto centered = [&](std::size_t index, std::string label) {
    AffineRow row{std::vector<double>(np, 0.0), -root2 / 2.0};
    row.coefficients[index] = root2;
    spec.rows.push_back(std::move(row));
    spec.labels.push_back(std::move(label));
  };

  if (dim == 2) {
    const LevelPair p{2, 1};
    centered(p1_index(p), "x/sqrt2");
    centered(p2_index(p), "y/sqrt2");
    centered(p3_index(2, 2), "z/sqrt2");
    spec.rows.push_back({std::vector<double>(np, 0.0), 1.0 / root2});
    spec.labels.push_back("1/sqrt2");
    return spec;
  }

  for (const auto& p : level_pairs(dim)) {
    centered(p1_index(p), "s1" + pair_suffix(p));
    centered(p2_index(p), "s2" + pair_suffix(p));
  }
  AffineRow first{std::vector<double>(np, 0.0), 2.0 - static_cast<double>(dim)};
  for (std::size_t j = 2; j <= dim; ++j) first.coefficients[p3_index(dim, j)] = 1.0;
  spec.rows.push_back(std::move(first));
  spec.labels.push_back("rho_{11}");
  for (std::size_t j = 2; j <= dim; ++j) {
    AffineRow row{std::vector<double>(np, 0.0), 1.0};
    row.coefficients[p3_index(dim, j)] = -1.0;
    spec.rows.push_back(std::move(row));
    spec.labels.push_back("rho_{" + std::to_string(j) + std::to_string(j) + "}");
  }
  return spec;
}

OperatorBasis qudit_meanvalue_basis(std::size_t dim) {
  require_dim(dim);
  const double inv_root2 = 1.0 / std::sqrt(2.0);
  std::vector<ComplexMatrix> set;
  std::vector<std::string> labels;
  set.reserve(dim * dim);

  for (const auto& p : level_pairs(dim)) {
    const double s = pair_orientation(dim, p);
    const std::size_t r = p.j - 1, c = p.k - 1;
    ComplexMatrix x(dim);
    x(r, c) = inv_root2;
    x(c, r) = inv_root2;
    ComplexMatrix y(dim);
    y(r, c) = s * inv_root2 * kI;
    y(c, r) = -s * inv_root2 * kI;
    set.push_back(std::move(x));
    set.push_back(std::move(y));
    if (dim == 2) {
      labels.insert(labels.end(), {"x/sqrt2", "y/sqrt2"});
    } else {
      labels.push_back("s1" + pair_suffix(p));
      labels.push_back("s2" + pair_suffix(p));
    }
  }

  if (dim == 2) {
    set.push_back({{inv_root2, 0.0}, {0.0, -inv_root2}});
    set.push_back({{inv_root2, 0.0}, {0.0, inv_root2}});
    labels.insert(labels.end(), {"z/sqrt2", "1/sqrt2"});
  } else {
    for (std::size_t j = 1; j <= dim; ++j) {
      set.push_back(ComplexMatrix::unit(dim, j - 1, j - 1));
      labels.push_back("rho_{" + std::to_string(j) + std::to_string(j) + "}");
    }
  }
  std::string name = dim == 2   ? "qubit-meanvalue"
                     : dim == 3 ? "qutrit-meanvalue"
                                : "qudit-meanvalue-d" + std::to_string(dim);
  return OperatorBasis::self_dual(std::move(name), dim, std::move(set),
                                  std::move(labels));
}

std::vector<double> hermitian_to_real(const ComplexMatrix& m) {
  const std::size_t d = m.dim();
  std::vector<double> v;
  v.reserve(d * d);
  for (std::size_t r = 0; r < d; ++r) v.push_back(m(r, r).real());
  for (std::size_t r = 1; r < d; ++r)
    for (std::size_t c = 0; c < r; ++c) {
      v.push_back(m(r, c).real());
      v.push_back(m(r, c).imag());
    }
  return v;
}

ComplexMatrix hermitian_from_real(std::size_t dim, const std::vector<double>& v) {
  if (v.size() != dim * dim) {
    throw ValidationError("expected " + std::to_string(dim * dim) +
                          " real degrees of freedom, got " +
                          std::to_string(v.size()));
  }
  ComplexMatrix m(dim);
  std::size_t q = 0;
  for (std::size_t r = 0; r < dim; ++r) m(r, r) = v[q++];
  for (std::size_t r = 1; r < dim; ++r)
    for (std::size_t c = 0; c < r; ++c) {
      const Complex z{v[q], v[q + 1]};
      q += 2;
      m(r, c) = z;
      m(c, r) = std::conj(z);
    }
  return m;
}

std::vector<ComplexMatrix> solve_dequantizers(const AffineParametrization& par,
                                              const SymbolSpecification& spec,
                                              double tol) {
  return solve_rows(par, spec, tol, /*parallel=*/true);
}

namespace serial {

std::vector<ComplexMatrix> solve_dequantizers(const AffineParametrization& par,
                                              const SymbolSpecification& spec,
                                              double tol) {
  return solve_rows(par, spec, tol, /*parallel=*/false);
}

}  // namespace serial

std::vector<ComplexMatrix> solve_quantizers(
    const std::vector<ComplexMatrix>& dequantizers, double tol) {
  const std::size_t n = dequantizers.size();
  if (n == 0) throw ValidationError("no dequantizers given");
  const std::size_t d = dequantizers.front().dim();
  if (n != d * d) {
    throw ValidationError("need " + std::to_string(d * d) +
                          " dequantizers of dimension " + std::to_string(d) +
                          ", got " + std::to_string(n));
  }
  for (const auto& u : dequantizers) {
    if (u.dim() != d) throw ValidationError("dequantizer dimensions differ");
    if (!u.is_hermitian(1e-9)) throw ValidationError("dequantizer is not Hermitian");
  }

  RealMatrix gram(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      gram(i, j) = trace_of_product(dequantizers[i], dequantizers[j]).real();

  LuFactorization lu(gram);
  if (!lu.full_rank()) {
    throw SolverError("Gram matrix is singular (rank " +
                          std::to_string(lu.rank()) + " of " +
                          std::to_string(n) + "); dequantizers are not a basis",
                      lu.rank(), lu.condition_number_1());
  }
  const RealMatrix inv = lu.inverse();

  std::vector<ComplexMatrix> out(n);
  const auto count = static_cast<long>(n);
#pragma omp parallel for schedule(static)
  for (long i = 0; i < count; ++i) {
    ComplexMatrix acc(d);
    for (std::size_t j = 0; j < n; ++j) {
      const double w = inv(static_cast<std::size_t>(i), j);
      if (w != 0.0) acc += Complex(w) * dequantizers[j];
    }
    out[i] = std::move(acc);
  }

  double worst = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      worst = std::max(worst, std::abs(trace_of_product(out[i], dequantizers[j]) -
                                       (i == j ? 1.0 : 0.0)));
  if (!(worst <= tol)) {
    throw NumericalError("quantizer duality deviation " + std::to_string(worst) +
                         " exceeds tolerance (Gram condition number " +
                         std::to_string(lu.condition_number_1()) + ")");
  }
  return out;
}

bool spectral_positivity_check(const ComplexMatrix& rho, double tol) {
  const auto ev = hermitian_eigenvalues(rho);
  return std::all_of(ev.begin(), ev.end(), [&](double e) { return e >= -tol; });
}

}  // namespace qdstar
