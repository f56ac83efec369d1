// Copyright 2026 The entmono authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "entmono/serialize.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <system_error>

namespace entmono {

namespace {

std::vector<double> double_array(const Json &j, const char *key, size_t expected,
                                 const std::string &what) {
  if (!j.contains(key) || !j[key].is_array()) {
    throw ParseError(what + ": missing array \"" + key + "\"");
  }
  const Json &arr = j[key];
  if (arr.size() != expected) {
    throw ParseError(what + ": \"" + std::string(key) + "\" must hold " +
                     std::to_string(expected) + " numbers");
  }
  std::vector<double> out;
  out.reserve(expected);
  for (const Json &v : arr) {
    if (!v.is_number()) throw ParseError(what + ": non-numeric entry");
    out.push_back(v.get<double>());
  }
  return out;
}

int int_field(const Json &j, const char *key, const std::string &what) {
  if (!j.contains(key) || !j[key].is_number_integer()) {
    throw ParseError(what + ": missing integer \"" + key + "\"");
  }
  return j[key].get<int>();
}

}  // namespace

std::string format_double(double value) {
  char buf[64];
  const std::to_chars_result res = std::to_chars(buf, buf + sizeof(buf), value);
  if (res.ec != std::errc()) throw DomainError("double formatting failed");
  return std::string(buf, res.ptr);
}

Json matrix_to_json(const ComplexMatrix &m) {
  Json j;
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  Json re = Json::array();
  Json im = Json::array();
  for (int r = 0; r < m.rows(); ++r) {
    for (int c = 0; c < m.cols(); ++c) {
      re.push_back(m.at(r, c).real());
      im.push_back(m.at(r, c).imag());
    }
  }
  j["re"] = std::move(re);
  j["im"] = std::move(im);
  return j;
}

ComplexMatrix matrix_from_json(const Json &j) {
  const std::string what = "matrix";
  const int rows = int_field(j, "rows", what);
  const int cols = int_field(j, "cols", what);
  if (rows < 1 || cols < 1) throw ParseError("matrix: nonpositive shape");
  const size_t n = static_cast<size_t>(rows) * static_cast<size_t>(cols);
  const std::vector<double> re = double_array(j, "re", n, what);
  const std::vector<double> im = double_array(j, "im", n, what);
  ComplexMatrix m(rows, cols);
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      const size_t k = static_cast<size_t>(r) * cols + c;
      m.at(r, c) = Complex(re[k], im[k]);
    }
  }
  return m;
}

Json density_to_json(const DensityMatrix &rho) {
  Json j = matrix_to_json(rho.matrix());
  j["dims"] = rho.dims().dims;
  return j;
}

DensityMatrix density_from_json(const Json &j) {
  ComplexMatrix m = matrix_from_json(j);
  if (!j.contains("dims") || !j["dims"].is_array()) {
    throw ParseError("density matrix: missing array \"dims\"");
  }
  std::vector<int> dims;
  for (const Json &v : j["dims"]) {
    if (!v.is_number_integer()) throw ParseError("density matrix: bad dims entry");
    dims.push_back(v.get<int>());
  }
  return DensityMatrix(std::move(m), SubsystemDims(std::move(dims)));
}

Json pure_to_json(const PureState &psi) {
  Json j;
  j["dim"] = psi.dim();
  Json re = Json::array();
  Json im = Json::array();
  for (int i = 0; i < psi.dim(); ++i) {
    re.push_back(psi.amplitude(i).real());
    im.push_back(psi.amplitude(i).imag());
  }
  j["re"] = std::move(re);
  j["im"] = std::move(im);
  return j;
}

PureState pure_from_json(const Json &j) {
  const std::string what = "pure state";
  const int dim = int_field(j, "dim", what);
  if (dim < 1) throw ParseError("pure state: nonpositive dim");
  const std::vector<double> re = double_array(j, "re", static_cast<size_t>(dim), what);
  const std::vector<double> im = double_array(j, "im", static_cast<size_t>(dim), what);
  std::vector<Complex> amps(static_cast<size_t>(dim));
  for (int i = 0; i < dim; ++i) amps[i] = Complex(re[i], im[i]);
  return PureState(std::move(amps));
}

Json report_to_json(const MonogamyReport &report) {
  Json j;
  j["inequality_id"] = to_string(report.inequality_id);
  j["internal_term"] = report.internal_term;
  j["external_term"] = report.external_term;
  j["bound"] = report.bound;
  j["slack"] = report.slack;
  j["satisfied"] = report.satisfied;
  j["tol"] = report.tol;
  if (report.three_tangle.has_value()) j["three_tangle"] = *report.three_tangle;
  return j;
}

Json parse_json(const std::string &text, const std::string &what) {
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded()) throw ParseError(what + ": invalid JSON");
  return j;
}

std::string read_text_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  if (!in.good() && !in.eof()) throw ParseError("cannot read " + path);
  return ss.str();
}

void write_text_file(const std::string &path, const std::string &text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw ParseError("cannot open " + path + " for writing");
  out << text;
  out.flush();
  if (!out.good()) throw ParseError("cannot write " + path);
}

std::string counts_to_csv(const std::vector<CountsRecord> &counts) {
  std::string out = "projector_index,count\n";
  for (const CountsRecord &rec : counts) {
    out += std::to_string(rec.projector_index);
    out += ',';
    out += format_double(rec.count);
    out += '\n';
  }
  return out;
}

std::vector<CountsRecord> counts_from_csv(const std::string &text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line != "projector_index,count") {
    throw ParseError("counts CSV: bad header");
  }
  std::vector<CountsRecord> counts;
  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const size_t comma = line.find(',');
    if (comma == std::string::npos) {
      throw ParseError("counts CSV: missing comma on line " + std::to_string(line_no));
    }
    CountsRecord rec;
    const char *ib = line.data();
    const char *ie = line.data() + comma;
    auto ir = std::from_chars(ib, ie, rec.projector_index);
    if (ir.ec != std::errc() || ir.ptr != ie) {
      throw ParseError("counts CSV: bad index on line " + std::to_string(line_no));
    }
    const char *cb = line.data() + comma + 1;
    const char *ce = line.data() + line.size();
    auto cr = std::from_chars(cb, ce, rec.count);
    if (cr.ec != std::errc() || cr.ptr != ce) {
      throw ParseError("counts CSV: bad count on line " + std::to_string(line_no));
    }
    counts.push_back(rec);
  }
  return counts;
}

}  // namespace entmono
