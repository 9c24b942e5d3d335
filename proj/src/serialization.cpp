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

#include "qdstar/serialization.hpp"

#include <fmt/format.h>

#include <cmath>
#include <fstream>
#include <sstream>

#include "qdstar/errors.hpp"

namespace qdstar {

namespace {

std::string format_number(const Json& j) {
  if (j.is_number_integer() || j.is_number_unsigned()) return j.dump();
  const double v = j.get<double>();
  if (!std::isfinite(v)) {
    throw ValidationError("cannot serialize non-finite value");
  }
  if (v == 0.0) return "0";
  return fmt::format("{:.17g}", v);
}

bool is_scalar_array(const Json& j) {
  for (const auto& e : j)
    if (e.is_structured()) return false;
  return true;
}

bool is_flat_row(const Json& j) {
  // A row of [re, im] pairs stays on one line.
  for (const auto& e : j)
    if (!e.is_array() || !is_scalar_array(e)) return false;
  return true;
}

void write(const Json& j, std::string& out, int indent);

void write_inline(const Json& j, std::string& out) {
  if (j.is_array()) {
    out += '[';
    bool first = true;
    for (const auto& e : j) {
      if (!first) out += ", ";
      first = false;
      write_inline(e, out);
    }
    out += ']';
  } else if (j.is_number()) {
    out += format_number(j);
  } else {
    out += j.dump();
  }
}

void newline(std::string& out, int indent) {
  out += '\n';
  out.append(static_cast<std::size_t>(indent) * 2, ' ');
}

void write(const Json& j, std::string& out, int indent) {
  if (j.is_object()) {
    if (j.empty()) {
      out += "{}";
      return;
    }
    out += '{';
    bool first = true;
    for (auto it = j.begin(); it != j.end(); ++it) {
      if (!first) out += ',';
      first = false;
      newline(out, indent + 1);
      out += Json(it.key()).dump();
      out += ": ";
      write(it.value(), out, indent + 1);
    }
    newline(out, indent);
    out += '}';
  } else if (j.is_array()) {
    if (j.empty() || is_scalar_array(j) || is_flat_row(j)) {
      write_inline(j, out);
      return;
    }
    out += '[';
    bool first = true;
    for (const auto& e : j) {
      if (!first) out += ',';
      first = false;
      newline(out, indent + 1);
      write(e, out, indent + 1);
    }
    newline(out, indent);
    out += ']';
  } else if (j.is_number()) {
    out += format_number(j);
  } else {
    out += j.dump();
  }
}

std::size_t require_size(const Json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_integer() || j[key].get<long>() <= 0) {
    throw ValidationError(std::string("field '") + key +
                          "' must be a positive integer");
  }
  return j[key].get<std::size_t>();
}

const Json& require_array(const Json& j, const char* key, std::size_t size) {
  if (!j.contains(key) || !j[key].is_array() || j[key].size() != size) {
    throw ValidationError(std::string("field '") + key + "' must be an array of " +
                          std::to_string(size) + " entries");
  }
  return j[key];
}

Json tensor_to_json(const Rank3Tensor& t, const std::vector<std::string>& labels) {
  const std::size_t n = t.extent();
  Json slabs = Json::array();
  for (std::size_t k = 0; k < n; ++k) {
    Json rows = Json::array();
    for (std::size_t m = 0; m < n; ++m) {
      Json row = Json::array();
      for (std::size_t nn = 0; nn < n; ++nn) row.push_back(complex_to_json(t(k, m, nn)));
      rows.push_back(std::move(row));
    }
    Json slab;
    slab["k"] = k + 1;
    slab["label"] = k < labels.size() ? labels[k] : std::string();
    slab["matrix"] = std::move(rows);
    slabs.push_back(std::move(slab));
  }
  return slabs;
}

}  // namespace

std::string dump_json(const Json& doc) {
  std::string out;
  write(doc, out, 0);
  out += '\n';
  return out;
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ValidationError(std::string("malformed JSON: ") + e.what());
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_json(buffer.str());
}

Json complex_to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Complex complex_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw ValidationError("complex value must be [re, im], got " + j.dump());
  }
  const double re = j[0].get<double>();
  const double im = j[1].get<double>();
  if (!std::isfinite(re) || !std::isfinite(im)) {
    throw ValidationError("complex value must be finite");
  }
  return {re, im};
}

Json matrix_to_json(const ComplexMatrix& m, const std::string& label) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.dim(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.dim(); ++c) row.push_back(complex_to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  Json j;
  j["dim"] = m.dim();
  j["label"] = label;
  j["data"] = std::move(rows);
  return j;
}

LabeledMatrix matrix_from_json(const Json& j) {
  if (!j.is_object()) throw ValidationError("matrix file must be a JSON object");
  const std::size_t d = require_size(j, "dim");
  const Json& data = require_array(j, "data", d);
  std::vector<Complex> entries;
  entries.reserve(d * d);
  for (const auto& row : data) {
    if (!row.is_array() || row.size() != d) {
      throw ValidationError("matrix row must have " + std::to_string(d) + " entries");
    }
    for (const auto& e : row) entries.push_back(complex_from_json(e));
  }
  std::string label;
  if (j.contains("label")) {
    if (!j["label"].is_string()) throw ValidationError("'label' must be a string");
    label = j["label"].get<std::string>();
  }
  return {std::move(label), ComplexMatrix(d, std::move(entries))};
}

Json symbol_to_json(const Symbol& s, std::size_t dim) {
  Json values = Json::array();
  for (const auto& v : s.values) values.push_back(complex_to_json(v));
  Json j;
  j["dim"] = dim;
  j["labels"] = s.labels;
  j["values"] = std::move(values);
  return j;
}

Symbol symbol_from_json(const Json& j) {
  if (!j.is_object()) throw ValidationError("symbol file must be a JSON object");
  const std::size_t d = require_size(j, "dim");
  const std::size_t n = d * d;
  const Json& values = require_array(j, "values", n);
  Symbol s;
  for (const auto& v : values) s.values.push_back(complex_from_json(v));
  if (j.contains("labels")) {
    const Json& labels = require_array(j, "labels", n);
    for (const auto& l : labels) {
      if (!l.is_string()) throw ValidationError("symbol labels must be strings");
      s.labels.push_back(l.get<std::string>());
    }
  } else {
    for (std::size_t i = 0; i < n; ++i) s.labels.push_back("f" + std::to_string(i + 1));
  }
  return s;
}

Json kernel_to_json(const StarKernel& kernel, const std::vector<std::string>& labels) {
  Json j;
  j["basis"] = kernel.basis_label;
  j["dim"] = kernel.dim;
  j["n"] = kernel.n();
  j["kernels"] = tensor_to_json(kernel.entries, labels);
  return j;
}

StarKernel kernel_from_json(const Json& j) {
  if (!j.is_object()) throw ValidationError("kernel file must be a JSON object");
  StarKernel kernel;
  kernel.dim = require_size(j, "dim");
  const std::size_t n = require_size(j, "n");
  if (n != kernel.dim * kernel.dim) throw ValidationError("kernel n must equal dim^2");
  if (j.contains("basis") && j["basis"].is_string())
    kernel.basis_label = j["basis"].get<std::string>();
  const Json& slabs = require_array(j, "kernels", n);
  kernel.entries = Rank3Tensor(n);
  for (std::size_t k = 0; k < n; ++k) {
    const Json& rows = require_array(slabs[k], "matrix", n);
    for (std::size_t m = 0; m < n; ++m) {
      if (!rows[m].is_array() || rows[m].size() != n) {
        throw ValidationError("kernel rows must have n entries");
      }
      for (std::size_t nn = 0; nn < n; ++nn)
        kernel.entries(k, m, nn) = complex_from_json(rows[m][nn]);
    }
  }
  return kernel;
}

Json structure_constants_to_json(const StructureConstants& c,
                                 const std::vector<std::string>& labels) {
  Json j;
  j["dim"] = c.dim;
  j["n"] = c.n();
  j["constants"] = tensor_to_json(c.entries, labels);
  return j;
}

Json operator_set_to_json(const std::vector<ComplexMatrix>& set,
                          const std::vector<std::string>& labels) {
  Json out = Json::array();
  for (std::size_t i = 0; i < set.size(); ++i)
    out.push_back(matrix_to_json(set[i], i < labels.size() ? labels[i] : ""));
  return out;
}

}  // namespace qdstar
