/* Copyright 2026 The scx Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// The .scx text format, one complex per file:
//
//   # comment
//   scx <d> <n>
//   <v_0> <v_1> ... <v_d> <weight>
//   ...
//
// Fields are separated by single spaces and lines end in LF. The writer
// emits simplices in lexicographic order with ascending vertex ids and
// weights in shortest round-trip decimal, so serialize() output is
// canonical and byte-comparable.

#ifndef SCX_FORMAT_HPP
#define SCX_FORMAT_HPP

#include <filesystem>
#include <string>
#include <string_view>

#include "scx/complex.hpp"

namespace scx {

/// Throws ParseError with the offending line for bad tokens, wrong arity,
/// out-of-range or repeated vertices, duplicate simplices and non-finite
/// weights. Negative weights parse; validate() reports them.
WeightedComplex parse_scx(std::string_view text);

std::string serialize_scx(const WeightedComplex& complex);

/// Shortest decimal that reads back to the same double.
std::string format_weight(double w);

/// Throws Error(IoError) if the file cannot be read, otherwise as parse_scx.
WeightedComplex load_scx(const std::filesystem::path& path);
void save_scx(const WeightedComplex& complex, const std::filesystem::path& path);

}  // namespace scx

#endif  // SCX_FORMAT_HPP
