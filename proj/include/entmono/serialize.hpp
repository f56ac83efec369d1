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

#ifndef ENTMONO_SERIALIZE_HPP
#define ENTMONO_SERIALIZE_HPP

#include <string>
#include <vector>

#include "json.hpp"

#include "entmono/monogamy.hpp"
#include "entmono/states.hpp"
#include "entmono/tomosim.hpp"

namespace entmono {

/// Insertion-ordered JSON so emitted documents are byte-stable.
using Json = nlohmann::ordered_json;

/// Shortest round-trip decimal form of a double (std::to_chars).
std::string format_double(double value);

/// Complex matrices as {"rows", "cols", "re", "im"} with row-major entries.
Json matrix_to_json(const ComplexMatrix &m);
ComplexMatrix matrix_from_json(const Json &j);

/// Density operators add "dims"; parsing runs the checked constructor.
Json density_to_json(const DensityMatrix &rho);
DensityMatrix density_from_json(const Json &j);

/// Pure states as {"dim", "re", "im"}; parsing runs the checked constructor.
Json pure_to_json(const PureState &psi);
PureState pure_from_json(const Json &j);

/// MonogamyReport with fields exactly as typed; three_tangle only for CKW.
Json report_to_json(const MonogamyReport &report);

/// Strict JSON parse wrapped into ParseError.
Json parse_json(const std::string &text, const std::string &what);

std::string read_text_file(const std::string &path);
void write_text_file(const std::string &path, const std::string &text);

/// Counts as CSV with the exact header "projector_index,count"; count uses
/// the shortest round-trip form so integral samples stay integral.
std::string counts_to_csv(const std::vector<CountsRecord> &counts);
std::vector<CountsRecord> counts_from_csv(const std::string &text);

}  // namespace entmono

#endif
