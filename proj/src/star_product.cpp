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

#include "qdstar/star_product.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qdstar/errors.hpp"

namespace qdstar {

namespace {

StarKernel empty_kernel(const OperatorBasis& basis) {
  StarKernel k;
  k.dim = basis.dim();
  k.entries = Rank3Tensor(basis.size());
  k.basis_label = basis.name();
  return k;
}

// Jacobi sums for a fixed first index m over all (n, k, r). `re`/`im` hold
// C[r][l][k] laid out as [k][l][r] so the innermost loop over r is
// contiguous; zero coefficients are skipped.
double jacobi_slice(const StructureConstants& c, const std::vector<double>& re,
                    const std::vector<double>& im, std::size_t m) {
  const std::size_t n = c.n();
  const auto& t = c.entries;
  auto at = [n](std::size_t k, std::size_t l, std::size_t r) {
    return (k * n + l) * n + r;
  };
  std::vector<double> acc_re(n), acc_im(n);
  double worst = 0.0;
  for (std::size_t nn = 0; nn < n; ++nn) {
    for (std::size_t k = 0; k < n; ++k) {
      std::fill(acc_re.begin(), acc_re.end(), 0.0);
      std::fill(acc_im.begin(), acc_im.end(), 0.0);
      auto accumulate = [&](const Complex& a, std::size_t slab, std::size_t l) {
        const double ar = a.real(), ai = a.imag();
        if (ar == 0.0 && ai == 0.0) return;
        const double* br = &re[at(slab, l, 0)];
        const double* bi = &im[at(slab, l, 0)];
        for (std::size_t r = 0; r < n; ++r) {
          acc_re[r] += ar * br[r] - ai * bi[r];
          acc_im[r] += ar * bi[r] + ai * br[r];
        }
      };
      for (std::size_t l = 0; l < n; ++l) {
        accumulate(t(l, m, nn), k, l);
        accumulate(t(l, nn, k), m, l);
        accumulate(t(l, k, m), nn, l);
      }
      for (std::size_t r = 0; r < n; ++r)
        worst = std::max(worst, std::hypot(acc_re[r], acc_im[r]));
    }
  }
  return worst;
}

double jacobi_parallel(const StructureConstants& c) {
  const std::size_t n = c.n();
  // re/im of C[r][l][k], stored at [k][l][r].
  std::vector<double> re(n * n * n), im(n * n * n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t l = 0; l < n; ++l)
      for (std::size_t k = 0; k < n; ++k) {
        const Complex v = c.entries(r, l, k);
        re[(k * n + l) * n + r] = v.real();
        im[(k * n + l) * n + r] = v.imag();
      }
  std::vector<double> per_m(n, 0.0);
  const auto count = static_cast<long>(n);
#pragma omp parallel for schedule(dynamic)
  for (long m = 0; m < count; ++m)
    per_m[m] = jacobi_slice(c, re, im, static_cast<std::size_t>(m));
  return per_m.empty() ? 0.0 : *std::max_element(per_m.begin(), per_m.end());
}

}  // namespace

StarKernel compute_kernel(const OperatorBasis& basis) {
  const auto& d_ops = basis.quantizers();
  const auto& u_ops = basis.dequantizers();
  StarKernel kernel = empty_kernel(basis);
  const std::size_t n = basis.size();
  const auto count = static_cast<long>(n);

  std::vector<ComplexMatrix> products(n * n);
#pragma omp parallel for schedule(static)
  for (long m = 0; m < count; ++m)
    for (std::size_t nn = 0; nn < n; ++nn)
      products[m * n + nn] = d_ops[m] * d_ops[nn];

#pragma omp parallel for schedule(static)
  for (long k = 0; k < count; ++k)
    for (std::size_t m = 0; m < n; ++m)
      for (std::size_t nn = 0; nn < n; ++nn)
        kernel.entries(k, m, nn) = trace_of_product(products[m * n + nn], u_ops[k]);
  return kernel;
}

Symbol star(const Symbol& left, const Symbol& right, const StarKernel& kernel) {
  const std::size_t n = kernel.n();
  if (left.size() != n || right.size() != n) {
    throw ValidationError("star product needs symbols of length " +
                          std::to_string(n) + ", got " +
                          std::to_string(left.size()) + " and " +
                          std::to_string(right.size()));
  }
  Symbol out;
  out.labels = left.labels;
  out.values.assign(n, Complex{});
  for (std::size_t k = 0; k < n; ++k) {
    Complex acc{};
    for (std::size_t m = 0; m < n; ++m) {
      if (left.values[m] == Complex{}) continue;
      Complex row{};
      for (std::size_t nn = 0; nn < n; ++nn)
        row += right.values[nn] * kernel.entries(k, m, nn);
      acc += left.values[m] * row;
    }
    out.values[k] = acc;
  }
  return out;
}

StructureConstants structure_constants(const StarKernel& kernel) {
  const std::size_t n = kernel.n();
  StructureConstants c;
  c.dim = kernel.dim;
  c.entries = Rank3Tensor(n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t m = 0; m < n; ++m)
      for (std::size_t nn = 0; nn < n; ++nn)
        c.entries(k, m, nn) = kernel.entries(k, m, nn) - kernel.entries(k, nn, m);
  return c;
}

CyclicSymmetryReport verify_cyclic_symmetry(const StarKernel& kernel,
                                            double tol) {
  const std::size_t n = kernel.n();
  const auto& K = kernel.entries;
  double worst = 0.0;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t m = 0; m < n; ++m)
      for (std::size_t nn = 0; nn < n; ++nn) {
        // K_mn^k = K_nk^m = K_km^n
        const Complex base = K(k, m, nn);
        worst = std::max(worst, std::abs(base - K(m, nn, k)));
        worst = std::max(worst, std::abs(base - K(nn, k, m)));
        // K_nm^k = K_kn^m = K_mk^n
        const Complex mirrored = K(k, nn, m);
        worst = std::max(worst, std::abs(mirrored - K(m, k, nn)));
        worst = std::max(worst, std::abs(mirrored - K(nn, m, k)));
      }
  return {worst <= tol, worst};
}

double jacobi_deviation(const StructureConstants& constants) {
  return jacobi_parallel(constants);
}

StructureRelationReport verify_structure_relations(
    const StructureConstants& constants, const OperatorBasis& basis,
    double tol) {
  const std::size_t n = constants.n();
  if (n != basis.size()) {
    throw ValidationError("structure constants of size " + std::to_string(n) +
                          " do not match basis of size " +
                          std::to_string(basis.size()));
  }
  const auto& C = constants.entries;
  const auto& gens = basis.quantizers();
  StructureRelationReport report;

  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t m = 0; m < n; ++m)
      for (std::size_t nn = 0; nn < n; ++nn)
        report.antisymmetry_deviation = std::max(
            report.antisymmetry_deviation, std::abs(C(k, m, nn) + C(k, nn, m)));

  std::vector<double> per_m(n, 0.0);
  const auto count = static_cast<long>(n);
#pragma omp parallel for schedule(dynamic)
  for (long m = 0; m < count; ++m) {
    double worst = 0.0;
    for (std::size_t nn = 0; nn < n; ++nn) {
      ComplexMatrix diff = gens[m] * gens[nn] - gens[nn] * gens[m];
      for (std::size_t k = 0; k < n; ++k) {
        const Complex w = C(k, m, nn);
        if (w != Complex{}) diff -= w * gens[k];
      }
      for (const auto& e : diff.entries()) worst = std::max(worst, std::abs(e));
    }
    per_m[m] = worst;
  }
  report.commutator_deviation =
      n == 0 ? 0.0 : *std::max_element(per_m.begin(), per_m.end());

  report.jacobi_deviation = jacobi_deviation(constants);

  report.cyclic_checked = basis.is_self_dual();
  if (report.cyclic_checked) {
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t m = 0; m < n; ++m)
        for (std::size_t nn = 0; nn < n; ++nn) {
          const Complex base = C(k, m, nn);
          report.cyclic_deviation =
              std::max({report.cyclic_deviation, std::abs(base - C(m, nn, k)),
                        std::abs(base - C(nn, k, m))});
        }
  }

  report.pass = report.antisymmetry_deviation == 0.0 &&
                report.commutator_deviation <= tol &&
                report.jacobi_deviation <= tol &&
                (!report.cyclic_checked || report.cyclic_deviation <= tol);
  return report;
}

namespace serial {

StarKernel compute_kernel(const OperatorBasis& basis) {
  const auto& d_ops = basis.quantizers();
  const auto& u_ops = basis.dequantizers();
  StarKernel kernel = empty_kernel(basis);
  const std::size_t n = basis.size();
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t m = 0; m < n; ++m)
      for (std::size_t nn = 0; nn < n; ++nn)
        kernel.entries(k, m, nn) =
            trace_of_product(d_ops[m] * d_ops[nn], u_ops[k]);
  return kernel;
}

double jacobi_deviation(const StructureConstants& constants) {
  const std::size_t n = constants.n();
  const auto& C = constants.entries;
  double worst = 0.0;
  for (std::size_t m = 0; m < n; ++m)
    for (std::size_t nn = 0; nn < n; ++nn)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t r = 0; r < n; ++r) {
          Complex sum{};
          for (std::size_t l = 0; l < n; ++l)
            sum += C(l, m, nn) * C(r, l, k) + C(l, nn, k) * C(r, l, m) +
                   C(l, k, m) * C(r, l, nn);
          worst = std::max(worst, std::abs(sum));
        }
  return worst;
}

}  // namespace serial

}  // namespace qdstar
