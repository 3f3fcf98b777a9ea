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

#include "scx/format.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>
#include <vector>

#include "scx/error.hpp"

namespace scx {

namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

template <typename T>
bool parse_number(std::string_view tok, T& out) {
  const auto [end, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
  return ec == std::errc() && end == tok.data() + tok.size();
}

}  // namespace

WeightedComplex parse_scx(std::string_view text) {
  int dim = 0;
  Vertex n = 0;
  bool have_header = false;
  std::vector<TopSimplex> tops;
  std::map<Simplex, std::size_t> first_seen;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const std::size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(pos, eol == text.npos ? text.npos : eol - pos);
    pos = eol == text.npos ? text.size() : eol + 1;
    ++line_no;

    if (const auto hash = line.find('#'); hash != line.npos) line = line.substr(0, hash);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    const auto fields = split_fields(line);
    if (fields.empty()) continue;

    if (!have_header) {
      if (fields.size() != 3 || fields[0] != "scx") {
        throw ParseError(line_no, "expected header 'scx <d> <n>'");
      }
      if (!parse_number(fields[1], dim) || dim < 1) {
        throw ParseError(line_no, "bad dimension '" + std::string(fields[1]) + "'");
      }
      if (!parse_number(fields[2], n) || n < 1) {
        throw ParseError(line_no, "bad vertex count '" + std::string(fields[2]) + "'");
      }
      have_header = true;
      continue;
    }

    const auto arity = static_cast<std::size_t>(dim) + 1;
    if (fields.size() != arity + 1) {
      throw ParseError(line_no, "expected " + std::to_string(arity) +
                                    " vertex ids and a weight, got " +
                                    std::to_string(fields.size()) + " fields");
    }
    std::vector<Vertex> ids(arity);
    for (std::size_t i = 0; i < arity; ++i) {
      if (!parse_number(fields[i], ids[i])) {
        throw ParseError(line_no, "bad vertex id '" + std::string(fields[i]) + "'");
      }
      if (ids[i] < 1 || ids[i] > n) {
        throw ParseError(line_no, "vertex " + std::to_string(ids[i]) +
                                      " outside 1.." + std::to_string(n));
      }
    }
    double weight = 0.0;
    if (!parse_number(fields[arity], weight)) {
      throw ParseError(line_no, "bad weight '" + std::string(fields[arity]) + "'");
    }
    if (!std::isfinite(weight)) throw ParseError(line_no, "non-finite weight");

    Simplex s;
    try {
      s = Simplex(std::move(ids));
    } catch (const Error& e) {
      throw ParseError(line_no, e.what());
    }
    if (auto [it, inserted] = first_seen.emplace(s, line_no); !inserted) {
      throw ParseError(line_no, "duplicate simplex " + s.to_string() +
                                    " (first on line " + std::to_string(it->second) + ")");
    }
    tops.push_back({std::move(s), weight});
  }
  if (!have_header) throw ParseError(line_no, "missing 'scx <d> <n>' header");
  return WeightedComplex(dim, n, std::move(tops));
}

std::string format_weight(double w) {
  char buf[64];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, w);
  return std::string(buf, end);
}

std::string serialize_scx(const WeightedComplex& complex) {
  std::string out = "scx " + std::to_string(complex.dim()) + ' ' +
                    std::to_string(complex.vertex_count()) + '\n';
  for (const TopSimplex& t : complex.tops()) {
    for (Vertex v : t.simplex.vertices()) {
      out += std::to_string(v);
      out += ' ';
    }
    out += format_weight(t.weight);
    out += '\n';
  }
  return out;
}

WeightedComplex load_scx(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw Error(ErrorCode::IoError, "error reading " + path.string());
  return parse_scx(buf.str());
}

void save_scx(const WeightedComplex& complex, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::IoError, "cannot write " + path.string());
  out << serialize_scx(complex);
  if (!out) throw Error(ErrorCode::IoError, "error writing " + path.string());
}

}  // namespace scx
