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

#include "scx/simplex.hpp"

#include <algorithm>
#include <cassert>
#include <charconv>
#include <ostream>

#include "scx/error.hpp"

namespace scx {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidSimplex: return "invalid simplex";
    case ErrorCode::InvalidComplex: return "invalid complex";
    case ErrorCode::InvalidWeights: return "invalid weights";
    case ErrorCode::InstanceTooLarge: return "instance too large";
    case ErrorCode::ConfigInvalid: return "invalid generator config";
    case ErrorCode::ParseError: return "parse error";
    case ErrorCode::IoError: return "io error";
  }
  return "unknown error";
}

namespace {

std::vector<Vertex> canonicalize(std::vector<Vertex> v) {
  std::sort(v.begin(), v.end());
  if (!v.empty() && v.front() == 0) {
    throw Error(ErrorCode::InvalidSimplex, "vertex ids start at 1");
  }
  if (std::adjacent_find(v.begin(), v.end()) != v.end()) {
    throw Error(ErrorCode::InvalidSimplex, "repeated vertex in simplex");
  }
  return v;
}

}  // namespace

Simplex::Simplex(std::initializer_list<Vertex> vertices)
    : vertices_(canonicalize(std::vector<Vertex>(vertices))) {}

Simplex::Simplex(std::span<const Vertex> vertices)
    : vertices_(canonicalize(std::vector<Vertex>(vertices.begin(), vertices.end()))) {}

Simplex::Simplex(std::vector<Vertex> vertices)
    : vertices_(canonicalize(std::move(vertices))) {}

Simplex Simplex::from_sorted(std::vector<Vertex> vertices) {
  assert(std::adjacent_find(vertices.begin(), vertices.end(),
                            std::greater_equal<>()) == vertices.end());
  Simplex s;
  s.vertices_ = std::move(vertices);
  return s;
}

bool Simplex::contains(Vertex v) const noexcept {
  return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

bool Simplex::is_subset_of(const Simplex& other) const noexcept {
  return std::includes(other.vertices_.begin(), other.vertices_.end(),
                       vertices_.begin(), vertices_.end());
}

Simplex Simplex::without(std::size_t i) const {
  std::vector<Vertex> out;
  out.reserve(vertices_.size() - 1);
  for (std::size_t k = 0; k < vertices_.size(); ++k) {
    if (k != i) out.push_back(vertices_[k]);
  }
  return from_sorted(std::move(out));
}

Simplex Simplex::join(const Simplex& other) const {
  std::vector<Vertex> out;
  out.reserve(vertices_.size() + other.vertices_.size());
  std::set_union(vertices_.begin(), vertices_.end(), other.vertices_.begin(),
                 other.vertices_.end(), std::back_inserter(out));
  return from_sorted(std::move(out));
}

std::string Simplex::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(vertices_[i]);
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Simplex& s) {
  return os << '{' << s.to_string() << '}';
}

Simplex parse_simplex(std::string_view text) {
  std::vector<Vertex> ids;
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = text.find(',', pos);
    const std::string_view tok =
        text.substr(pos, comma == std::string_view::npos ? text.npos : comma - pos);
    Vertex v = 0;
    const auto [end, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc() || end != tok.data() + tok.size()) {
      throw Error(ErrorCode::InvalidSimplex,
                  "bad vertex id '" + std::string(tok) + "' in '" +
                      std::string(text) + "'");
    }
    ids.push_back(v);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return Simplex(std::move(ids));
}

std::vector<Simplex> facets(const Simplex& tau) {
  std::vector<Simplex> out;
  out.reserve(tau.size());
  for (std::size_t i = 0; i < tau.size(); ++i) out.push_back(tau.without(i));
  return out;
}

std::size_t SimplexHash::operator()(const Simplex& s) const noexcept {
  // FNV-1a over the vertex ids.
  std::uint64_t h = 1469598103934665603ull;
  for (Vertex v : s.vertices()) {
    h ^= v;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

}  // namespace scx
