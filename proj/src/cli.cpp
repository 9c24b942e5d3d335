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

#include "qdstar/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <functional>
#include <optional>
#include <ostream>

#include "qdstar/errors.hpp"
#include "qdstar/qubit.hpp"
#include "qdstar/representation.hpp"
#include "qdstar/sampling.hpp"
#include "qdstar/serialization.hpp"
#include "qdstar/star_product.hpp"
#include "qdstar/verification.hpp"

namespace qdstar::cli {

namespace {

constexpr std::size_t kMaxDim = 32;

struct BasisArgs {
  std::string rep;
  std::size_t dim = 0;
};

void add_basis_options(CLI::App* cmd, BasisArgs& args) {
  cmd->add_option("--rep", args.rep, "probability or meanvalue")->required();
  cmd->add_option("--dim", args.dim, "Hilbert-space dimension d >= 2")->required();
}

OperatorBasis load_basis(const BasisArgs& args) {
  const Representation rep = parse_representation(args.rep);
  if (args.dim < 2 || args.dim > kMaxDim) {
    throw ValidationError("--dim must be between 2 and " + std::to_string(kMaxDim));
  }
  return standard_basis(rep, args.dim);
}

Json basis_header(const BasisArgs& args, const OperatorBasis& basis) {
  Json j;
  j["representation"] = args.rep;
  j["dim"] = basis.dim();
  j["basis"] = basis.name();
  j["labels"] = basis.labels();
  return j;
}

ComplexMatrix load_operator(const std::string& path, std::size_t dim) {
  LabeledMatrix m = matrix_from_json(read_json_file(path));
  if (m.matrix.dim() != dim) {
    throw ValidationError("operator in '" + path + "' has dimension " +
                          std::to_string(m.matrix.dim()) + ", expected " +
                          std::to_string(dim));
  }
  return std::move(m.matrix);
}

Symbol load_symbol(const std::string& path, std::size_t dim) {
  const Json j = read_json_file(path);
  Symbol s = symbol_from_json(j);
  if (j["dim"].get<std::size_t>() != dim) {
    throw ValidationError("symbol in '" + path + "' has dimension " +
                          j["dim"].dump() + ", expected " + std::to_string(dim));
  }
  return s;
}

Json report_to_json(const StructureRelationReport& r) {
  Json j;
  j["antisymmetry_deviation"] = r.antisymmetry_deviation;
  j["commutator_deviation"] = r.commutator_deviation;
  j["jacobi_deviation"] = r.jacobi_deviation;
  j["cyclic_checked"] = r.cyclic_checked;
  if (r.cyclic_checked) j["cyclic_deviation"] = r.cyclic_deviation;
  j["pass"] = r.pass;
  return j;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quantizer-dequantizer operator sets, symbols and star-product kernels",
               "qdstar"};
  app.require_subcommand(1);

  // Each subcommand sets `action`; it runs after parsing so that library
  // errors map onto exit codes in one place.
  std::function<int()> action;
  BasisArgs basis_args;
  std::string operator_path, symbol_path, left_path, right_path;
  std::vector<double> probabilities;
  std::uint64_t seed = kCheckSeed;
  std::size_t samples = 100;
  std::optional<double> tolerance;

  auto* deq = app.add_subcommand("dequantizers", "Emit the dequantizer set");
  add_basis_options(deq, basis_args);
  deq->callback([&] {
    action = [&] {
      const OperatorBasis basis = load_basis(basis_args);
      Json j = basis_header(basis_args, basis);
      j["dequantizers"] = operator_set_to_json(basis.dequantizers(), basis.labels());
      out << dump_json(j);
      return kSuccess;
    };
  });

  auto* quant = app.add_subcommand("quantizers", "Emit the quantizer set");
  add_basis_options(quant, basis_args);
  quant->callback([&] {
    action = [&] {
      const OperatorBasis basis = load_basis(basis_args);
      Json j = basis_header(basis_args, basis);
      j["self_dual"] = basis.is_self_dual();
      j["quantizers"] = operator_set_to_json(basis.quantizers(), basis.labels());
      out << dump_json(j);
      return kSuccess;
    };
  });

  auto* sym = app.add_subcommand("symbol", "Symbol of an operator read from a matrix file");
  add_basis_options(sym, basis_args);
  sym->add_option("--operator", operator_path, "matrix JSON file")->required();
  sym->callback([&] {
    action = [&] {
      const OperatorBasis basis = load_basis(basis_args);
      const ComplexMatrix op = load_operator(operator_path, basis.dim());
      out << dump_json(symbol_to_json(symbol_of(op, basis), basis.dim()));
      return kSuccess;
    };
  });

  auto* rec = app.add_subcommand("reconstruct", "Operator from a symbol file");
  add_basis_options(rec, basis_args);
  rec->add_option("--symbol", symbol_path, "symbol JSON file")->required();
  rec->callback([&] {
    action = [&] {
      const OperatorBasis basis = load_basis(basis_args);
      const Symbol s = load_symbol(symbol_path, basis.dim());
      out << dump_json(matrix_to_json(reconstruct(s, basis), "reconstructed"));
      return kSuccess;
    };
  });

  auto* ker = app.add_subcommand("kernels", "Emit the star-product kernel matrices K^k");
  add_basis_options(ker, basis_args);
  ker->callback([&] {
    action = [&] {
      const OperatorBasis basis = load_basis(basis_args);
      out << dump_json(kernel_to_json(compute_kernel(basis), basis.labels()));
      return kSuccess;
    };
  });

  auto* st = app.add_subcommand("star", "Star product of two symbol files");
  add_basis_options(st, basis_args);
  st->add_option("--left", left_path, "left symbol JSON file")->required();
  st->add_option("--right", right_path, "right symbol JSON file")->required();
  st->callback([&] {
    action = [&] {
      const OperatorBasis basis = load_basis(basis_args);
      const Symbol left = load_symbol(left_path, basis.dim());
      const Symbol right = load_symbol(right_path, basis.dim());
      Symbol product = star(left, right, compute_kernel(basis));
      product.labels = basis.labels();
      out << dump_json(symbol_to_json(product, basis.dim()));
      return kSuccess;
    };
  });

  auto* sc = app.add_subcommand("structure-constants",
                                "Emit Lie-algebra structure constants and their checks");
  add_basis_options(sc, basis_args);
  sc->callback([&] {
    action = [&] {
      const OperatorBasis basis = load_basis(basis_args);
      const StructureConstants c = structure_constants(compute_kernel(basis));
      const StructureRelationReport report = verify_structure_relations(c, basis);
      Json j = structure_constants_to_json(c, basis.labels());
      j["basis"] = basis.name();
      j["verification"] = report_to_json(report);
      out << dump_json(j);
      return report.pass ? kSuccess : kNumericalFailure;
    };
  });

  auto* mal = app.add_subcommand("malevich", "Malevich square sum and triangle sides");
  mal->add_option("--p", probabilities, "p1 p2 p3")->expected(3)->required();
  mal->callback([&] {
    action = [&] {
      const QubitProbabilities p{probabilities[0], probabilities[1], probabilities[2]};
      const double s = malevich_square_sum(p);
      const auto sides = malevich_triangle_sides(p);
      Json j;
      j["p"] = probabilities;
      j["S"] = s;
      j["constraint_satisfied"] = qubit_positivity_check(p);
      j["S_at_most_3"] = s <= 3.0 + 1e-12;
      j["triangle_sides"] = Json::array({sides[0], sides[1], sides[2]});
      out << dump_json(j);
      return kSuccess;
    };
  });

  auto* chk = app.add_subcommand("check", "Run every consistency suite");
  add_basis_options(chk, basis_args);
  chk->add_option("--seed", seed, "seed for sampled suites")->capture_default_str();
  chk->add_option("--samples", samples, "random operator pairs")->capture_default_str();
  chk->add_option("--tol", tolerance, "override every suite tolerance");
  chk->callback([&] {
    action = [&] {
      const Representation rep = parse_representation(basis_args.rep);
      load_basis(basis_args);  // validates --dim
      CheckOptions options;
      options.seed = seed;
      options.samples = samples;
      if (tolerance) {
        options.structural_tolerance = *tolerance;
        options.homomorphism_tolerance = *tolerance;
      }
      const auto results = run_checks(rep, basis_args.dim, options);
      Json suites = Json::array();
      bool all = true;
      for (const auto& r : results) {
        Json s;
        s["name"] = r.name;
        s["max_deviation"] = r.max_deviation;
        s["tolerance"] = r.tolerance;
        s["pass"] = r.pass;
        suites.push_back(std::move(s));
        if (!r.pass) {
          all = false;
          err << "check failed: " << r.name << " deviation " << r.max_deviation << '\n';
        }
      }
      Json j;
      j["representation"] = basis_args.rep;
      j["dim"] = basis_args.dim;
      j["seed"] = seed;
      j["samples"] = samples;
      j["suites"] = std::move(suites);
      j["pass"] = all;
      out << dump_json(j);
      return all ? kSuccess : kNumericalFailure;
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kValidationError;
  }

  try {
    return action();
  } catch (const ValidationError& e) {
    err << "validation error: " << e.what() << '\n';
    return kValidationError;
  } catch (const StateError& e) {
    err << "state error: " << e.what() << '\n';
    return kValidationError;
  } catch (const SolverError& e) {
    err << "solver error: " << e.what() << " (rank " << e.rank() << ", condition "
        << e.condition_number() << ")\n";
    return kNumericalFailure;
  } catch (const NumericalError& e) {
    err << "numerical failure: " << e.what() << '\n';
    return kNumericalFailure;
  } catch (const nlohmann::json::exception& e) {
    err << "validation error: " << e.what() << '\n';
    return kValidationError;
  }
}

}  // namespace qdstar::cli
