// Copyright 2026 The gammahom Authors
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

#ifndef GAMMAHOM_IO_HPP
#define GAMMAHOM_IO_HPP

#include <string>
#include <string_view>

#include "gammahom/chain_complex.hpp"
#include "gammahom/stable.hpp"

namespace gammahom {

/// Version stamped into every JSON document this library writes.
inline constexpr int kSchemaVersion = 1;

/// Coordinate format: {"rows", "cols", "entries": [[row, col, value], ...]}
/// with entries in column-major order.
std::string matrix_to_json(const SparseMatrix& m);
SparseMatrix matrix_from_json(std::string_view text);

/// Ranks per degree plus each boundary C_d -> C_{d-1} in coordinate format.
std::string complex_to_json(const ChainComplex& c);
/// Inverse of complex_to_json. Throws ParseError on malformed input and
/// ValidationError on inconsistent shapes.
ChainComplex complex_from_json(std::string_view text);

std::string table_to_json(const HomologyTable& t);
std::string result_to_json(const StableResult& r);
std::string report_to_json(const CheckReport& r);

/// Aligned text, one row per degree.
std::string render_text(const HomologyTable& t);
std::string render_text(const StableResult& r);
std::string render_text(const CheckReport& r);

/// degree,group,rank,torsion[,n,bound]
std::string render_csv(const HomologyTable& t);
std::string render_csv(const StableResult& r);
std::string render_csv(const CheckReport& r);

}  // namespace gammahom

#endif  // GAMMAHOM_IO_HPP
