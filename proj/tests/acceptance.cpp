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

// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "reference_tables.hpp"
#include "qdstar/cli.hpp"
#include "qdstar/qubit.hpp"
#include "qdstar/representation.hpp"
#include "qdstar/sampling.hpp"
#include "qdstar/serialization.hpp"
#include "qdstar/star_product.hpp"
#include "qdstar/verification.hpp"

namespace {

using namespace qdstar;
using qdstar::testing::kI;
using qdstar::testing::kRoot2;
namespace reference = qdstar::testing::reference;

using Clock = std::chrono::steady_clock;

constexpr std::size_t kMinDim = 2;
constexpr std::size_t kMaxDim = 8;
constexpr Representation kReps[] = {Representation::kProbability,
                                    Representation::kMeanValue};

struct Outcome {
  bool pass = true;
  std::string detail;
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

double set_diff(const std::vector<ComplexMatrix>& a, const std::vector<ComplexMatrix>& b) {
  if (a.size() != b.size()) return INFINITY;
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].dim() != b[i].dim()) return INFINITY;
    worst = std::max(worst, max_abs_diff(a[i], b[i]));
  }
  return worst;
}

double values_diff(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  if (a.size() != b.size()) return INFINITY;
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

// Operator sets as emitted by the command-line front end.
std::vector<ComplexMatrix> emitted(const char* command, const char* rep, std::size_t dim,
                                   const char* key) {
  std::ostringstream out, err;
  if (cli::run({command, "--rep", rep, "--dim", std::to_string(dim)}, out, err) != 0) return {};
  const Json doc = parse_json(out.str());
  std::vector<ComplexMatrix> set;
  for (const auto& m : doc[key]) set.push_back(matrix_from_json(m).matrix);
  return set;
}

Outcome criterion1() {
  const auto start = Clock::now();
  double worst = 0.0;
  auto track = [&](double d) { worst = std::max(worst, d); };
  track(set_diff(emitted("dequantizers", "probability", 2, "dequantizers"),
                 reference::qubit_probability_dequantizers()));
  track(set_diff(emitted("quantizers", "probability", 2, "quantizers"),
                 reference::qubit_probability_quantizers()));
  track(set_diff(emitted("dequantizers", "probability", 3, "dequantizers"),
                 reference::qutrit_probability_dequantizers()));
  track(set_diff(emitted("quantizers", "probability", 3, "quantizers"),
                 reference::qutrit_probability_quantizers()));
  track(set_diff(emitted("dequantizers", "meanvalue", 3, "dequantizers"),
                 reference::qutrit_meanvalue_set()));
  track(set_diff(emitted("quantizers", "meanvalue", 3, "quantizers"),
                 reference::qutrit_meanvalue_set()));
  // The solver must land on the same sets.
  track(set_diff(solved_basis(Representation::kProbability, 2).quantizers(),
                 reference::qubit_probability_quantizers()));
  track(set_diff(solved_basis(Representation::kProbability, 3).quantizers(),
                 reference::qutrit_probability_quantizers()));
  track(set_diff(solved_basis(Representation::kMeanValue, 3).dequantizers(),
                 reference::qutrit_meanvalue_set()));
  const double elapsed = seconds_since(start);
  return {worst <= 1e-12 && elapsed < 1.0,
          "max |delta| = " + sci(worst) + ", " + std::to_string(elapsed) + " s"};
}

Outcome criterion2() {
  auto diff = [](const StarKernel& k,
                 const std::vector<std::vector<std::vector<Complex>>>& expected) {
    double worst = 0.0;
    for (std::size_t a = 0; a < 4; ++a)
      for (std::size_t m = 0; m < 4; ++m)
        for (std::size_t n = 0; n < 4; ++n)
          worst = std::max(worst, std::abs(k.entries(a, m, n) - expected[a][m][n]));
    return worst;
  };
  const double worst =
      std::max(diff(compute_kernel(qubit_probability_basis()), reference::qubit_probability_kernel()),
               diff(compute_kernel(qubit_meanvalue_basis()), reference::qubit_meanvalue_kernel()));
  return {worst <= 1e-12, "max |delta| = " + sci(worst)};
}

Outcome criterion3() {
  const double r = 1.0 / kRoot2;
  const double worst = std::max(
      values_diff(symbol_of(reference::hadamard(), qubit_probability_basis()).values,
                  {r, 0, r, -r}),
      values_diff(symbol_of(reference::hadamard(), qubit_meanvalue_basis()).values,
                  {1, 0, 1, 0}));
  return {worst <= 1e-15, "max |delta| = " + sci(worst)};
}

Outcome criterion4() {
  const auto prob = qubit_probability_basis();
  const auto mean = qubit_meanvalue_basis();
  const auto kp = compute_kernel(prob);
  const auto km = compute_kernel(mean);
  const Symbol fh = symbol_of(reference::hadamard(), prob);
  const Symbol sh = symbol_of(reference::hadamard(), mean);
  const double c = std::pow(2.0, 1.5);
  Rng rng(kCheckSeed);
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    const QubitProbabilities p = random_physical_qubit(rng);
    const double p1 = p.p1, p2 = p.p2, p3 = p.p3;

    Symbol fr;
    fr.values = {p1, p2, p3, 1.0 - p3};
    const std::vector<Complex> f_closed{
        (2 * p3 - 2.0 * kI * p2 + 2 * p1 + kI - 1.0) / c,
        ((1.0 - kI) * p3 + (1.0 + kI) * p1 - 1.0) / kRoot2,
        (2 * p3 + 2.0 * kI * p2 + 2 * p1 - kI - 1.0) / c,
        (2 * p3 - 2.0 * kI * p2 + 2 * p1 + kI - 3.0) / c,
    };
    worst = std::max(worst, values_diff(star(fh, fr, kp).values, f_closed));

    Symbol sr;
    sr.values = {(2 * p1 - 1) / kRoot2, (2 * p2 - 1) / kRoot2, (2 * p3 - 1) / kRoot2,
                 1.0 / kRoot2};
    const std::vector<Complex> s_closed{
        (1.0 + kI - 2.0 * kI * p2) / 2.0,
        kI * p1 - kI * p3,
        (1.0 - kI + 2.0 * kI * p2) / 2.0,
        p3 + p1 - 1.0,
    };
    worst = std::max(worst, values_diff(star(sh, sr, km).values, s_closed));
  }
  return {worst <= 1e-12, "100 points, max |delta| = " + sci(worst)};
}

Outcome criterion5() {
  double worst = 0.0;
  bool all = true;
  for (auto rep : kReps)
    for (std::size_t d = kMinDim; d <= kMaxDim; ++d)
      for (const auto& b : {standard_basis(rep, d), solved_basis(rep, d)}) {
        const auto report = duality_check(b, 1e-10);
        all = all && report.pass;
        worst = std::max(worst, report.max_deviation);
      }
  return {all && worst <= 1e-10, "28 bases, max deviation = " + sci(worst)};
}

Outcome criterion6() {
  double worst = 0.0;
  std::size_t pairs = 0;
  for (auto rep : kReps)
    for (std::size_t d = kMinDim; d <= kMaxDim; ++d) {
      const auto b = standard_basis(rep, d);
      const auto k = compute_kernel(b);
      const int count = d <= 3 ? 1000 : 100;
      Rng rng(kCheckSeed + d);
      for (int i = 0; i < count; ++i) {
        const auto a = random_complex_matrix(d, rng);
        const auto c = random_complex_matrix(d, rng);
        worst = std::max(worst, values_diff(symbol_of(a * c, b).values,
                                            star(symbol_of(a, b), symbol_of(c, b), k).values));
        ++pairs;
      }
    }
  return {worst <= 1e-9, std::to_string(pairs) + " pairs, max deviation = " + sci(worst)};
}

Outcome criterion7() {
  double anti = 0.0, jac = 0.0, comm = 0.0, cyc = 0.0;
  bool all = true;
  for (auto rep : kReps)
    for (std::size_t d = kMinDim; d <= kMaxDim; ++d) {
      const auto b = standard_basis(rep, d);
      const auto r = verify_structure_relations(structure_constants(compute_kernel(b)), b, 1e-10);
      all = all && r.pass && (r.cyclic_checked == b.is_self_dual());
      anti = std::max(anti, r.antisymmetry_deviation);
      jac = std::max(jac, r.jacobi_deviation);
      comm = std::max(comm, r.commutator_deviation);
      if (r.cyclic_checked) cyc = std::max(cyc, r.cyclic_deviation);
    }
  return {all && anti == 0.0, "antisymmetry " + sci(anti) + ", jacobi " + sci(jac) +
                                  ", commutator " + sci(comm) + ", cyclic " + sci(cyc)};
}

Outcome criterion8() {
  Rng rng(kCheckSeed);
  double largest = 0.0;
  constexpr int kSamples = 100000;
  bool inside = true;
  for (int i = 0; i < kSamples; ++i) {
    const QubitProbabilities p = random_physical_qubit(rng);
    inside = inside && qubit_positivity_check(p);
    largest = std::max(largest, malevich_square_sum(p));
  }
  const double mixed = malevich_square_sum({0.5, 0.5, 0.5});
  const double pure = malevich_square_sum({0.5, 0.5, 1.0});
  const bool pass = inside && largest <= 3.0 + 1e-12 && std::abs(mixed - 1.5) <= 1e-12 &&
                    std::abs(pure - 2.5) <= 1e-12;
  return {pass, std::to_string(kSamples) + " samples, max S = " + std::to_string(largest) +
                    ", S(mixed) = " + std::to_string(mixed) +
                    ", S(pure) = " + std::to_string(pure)};
}

Outcome criterion9() {
  double worst = 0.0;
  for (auto rep : kReps)
    for (std::size_t d = kMinDim; d <= kMaxDim; ++d) {
      const auto b = standard_basis(rep, d);
      Rng rng(kCheckSeed ^ (d * 7919));
      for (int i = 0; i < 1000; ++i) {
        const auto h = random_hermitian(d, rng);
        worst = std::max(worst, max_abs_diff(reconstruct(symbol_of(h, b), b), h));
      }
    }
  return {worst <= 1e-10, "14000 operators, max deviation = " + sci(worst)};
}

Outcome criterion10() {
  const auto start = Clock::now();
  bool all = true;
  for (auto rep : kReps) {
    const auto b = solved_basis(rep, 8);
    const auto k = compute_kernel(b);
    all = all && k.n() == 64;
    CheckOptions options;
    options.seed = kCheckSeed;
    for (const auto& r : run_checks(rep, 8, options)) all = all && r.pass;
  }
  const double elapsed = seconds_since(start);
  return {all && elapsed < 60.0, "d = 8 pipeline " + std::to_string(elapsed) + " s"};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"reference operator sets", criterion1},
      {"qubit kernels", criterion2},
      {"Hadamard symbols", criterion3},
      {"Hadamard star products", criterion4},
      {"duality d=2..8", criterion5},
      {"homomorphism", criterion6},
      {"structure constants", criterion7},
      {"Malevich constraint", criterion8},
      {"round trip", criterion9},
      {"d=8 performance", criterion10},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failures;
    std::printf("AC%-2zu %s  %s: %s\n", i + 1, o.pass ? "PASS" : "FAIL", criteria[i].first,
                o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria failed\n", failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
