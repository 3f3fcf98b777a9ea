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

#include "scx/scx.h"

#include <cmath>
#include <cstring>
#include <exception>
#include <new>
#include <string>
#include <vector>

#include "scx/complex.hpp"
#include "scx/error.hpp"
#include "scx/format.hpp"
#include "scx/generator.hpp"
#include "scx/shortest_path.hpp"

struct scx_complex {
  scx::WeightedComplex value;
};

struct scx_distance_map {
  scx::DistanceMap value;
};

struct scx_path {
  scx::DPath value;
};

struct scx_report {
  scx::ValidationReport value;
};

namespace {

thread_local std::string last_error;
thread_local std::size_t last_error_line = 0;

scx_status fail(scx_status status, std::string message) {
  last_error = std::move(message);
  last_error_line = 0;
  return status;
}

scx_status to_status(scx::ErrorCode code) {
  switch (code) {
    case scx::ErrorCode::InvalidSimplex: return SCX_ERR_INVALID_SIMPLEX;
    case scx::ErrorCode::InvalidComplex: return SCX_ERR_INVALID_COMPLEX;
    case scx::ErrorCode::InvalidWeights: return SCX_ERR_INVALID_WEIGHTS;
    case scx::ErrorCode::ConfigInvalid: return SCX_ERR_CONFIG;
    case scx::ErrorCode::ParseError: return SCX_ERR_PARSE;
    case scx::ErrorCode::IoError: return SCX_ERR_IO;
    case scx::ErrorCode::InstanceTooLarge: return SCX_ERR_INTERNAL;
  }
  return SCX_ERR_INTERNAL;
}

// Runs f, translating exceptions into status codes. Nothing may escape
// across the C boundary.
template <typename F>
scx_status guarded(F&& f) noexcept {
  try {
    const scx_status s = f();
    if (s == SCX_OK) {
      last_error.clear();
      last_error_line = 0;
    }
    return s;
  } catch (const scx::ParseError& e) {
    const scx_status s = fail(SCX_ERR_PARSE, e.reason());
    last_error_line = e.line();
    return s;
  } catch (const scx::Error& e) {
    return fail(to_status(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(SCX_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(SCX_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(SCX_ERR_INTERNAL, "unknown error");
  }
}

scx::Simplex simplex_from(const uint32_t* ids, std::size_t size) {
  if (ids == nullptr && size != 0) {
    throw scx::Error(scx::ErrorCode::InvalidSimplex, "null simplex");
  }
  return scx::Simplex(std::span<const scx::Vertex>(ids, size));
}

void copy_out(const scx::Simplex& s, uint32_t* out) {
  if (out != nullptr) std::memcpy(out, s.vertices().data(), s.size() * sizeof(uint32_t));
}

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

scx_violation_kind to_c(scx::ViolationKind kind) {
  return static_cast<scx_violation_kind>(static_cast<int>(kind));
}

}  // namespace

extern "C" {

const char* scx_version(void) { return "1.0.0"; }

const char* scx_status_string(scx_status status) {
  switch (status) {
    case SCX_OK: return "ok";
    case SCX_ERR_INVALID_ARGUMENT: return "invalid argument";
    case SCX_ERR_INVALID_SIMPLEX: return "invalid simplex";
    case SCX_ERR_INVALID_COMPLEX: return "invalid complex";
    case SCX_ERR_INVALID_WEIGHTS: return "invalid weights";
    case SCX_ERR_CONFIG: return "invalid generator config";
    case SCX_ERR_PARSE: return "parse error";
    case SCX_ERR_IO: return "io error";
    case SCX_ERR_BUFFER_TOO_SMALL: return "buffer too small";
    case SCX_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* scx_last_error(void) { return last_error.c_str(); }
size_t scx_last_error_line(void) { return last_error_line; }

scx_status scx_complex_create(uint32_t d, uint32_t n, const uint32_t* vertices,
                              const double* weights, size_t top_count, scx_complex** out) {
  return guarded([&] {
    if (out == nullptr || (top_count > 0 && (vertices == nullptr || weights == nullptr))) {
      return fail(SCX_ERR_INVALID_ARGUMENT, "null argument");
    }
    *out = nullptr;
    std::vector<scx::TopSimplex> tops;
    tops.reserve(top_count);
    const std::size_t arity = std::size_t{d} + 1;
    for (std::size_t i = 0; i < top_count; ++i) {
      try {
        tops.push_back({simplex_from(vertices + i * arity, arity), weights[i]});
      } catch (const scx::Error& e) {
        throw scx::Error(scx::ErrorCode::InvalidComplex, e.what());
      }
    }
    *out = new scx_complex{scx::WeightedComplex(static_cast<int>(d), n, std::move(tops))};
    return SCX_OK;
  });
}

scx_status scx_complex_parse(const char* text, size_t length, scx_complex** out) {
  return guarded([&] {
    if (out == nullptr || (text == nullptr && length != 0)) {
      return fail(SCX_ERR_INVALID_ARGUMENT, "null argument");
    }
    *out = nullptr;
    *out = new scx_complex{scx::parse_scx(std::string_view(text, length))};
    return SCX_OK;
  });
}

scx_status scx_complex_load(const char* path, scx_complex** out) {
  return guarded([&] {
    if (out == nullptr || path == nullptr) return fail(SCX_ERR_INVALID_ARGUMENT, "null argument");
    *out = nullptr;
    *out = new scx_complex{scx::load_scx(path)};
    return SCX_OK;
  });
}

scx_status scx_complex_generate(const scx_generator_config* config, scx_complex** out) {
  return guarded([&] {
    if (out == nullptr || config == nullptr) return fail(SCX_ERR_INVALID_ARGUMENT, "null argument");
    *out = nullptr;
    if (config->d > static_cast<uint32_t>(INT32_MAX)) {
      return fail(SCX_ERR_CONFIG, "d out of range");
    }
    scx::GeneratorConfig cfg;
    cfg.n = config->n;
    cfg.d = static_cast<int>(config->d);
    cfg.p = config->p;
    cfg.weight_low = config->weight_low;
    cfg.weight_high = config->weight_high;
    cfg.integer_weights = config->integer_weights != 0;
    cfg.seed = config->seed;
    *out = new scx_complex{scx::generate(cfg)};
    return SCX_OK;
  });
}

void scx_complex_free(scx_complex* complex) { delete complex; }

uint32_t scx_complex_dim(const scx_complex* complex) {
  return complex ? static_cast<uint32_t>(complex->value.dim()) : 0;
}

uint32_t scx_complex_vertex_count(const scx_complex* complex) {
  return complex ? complex->value.vertex_count() : 0;
}

size_t scx_complex_top_count(const scx_complex* complex) {
  return complex ? complex->value.top_count() : 0;
}

size_t scx_complex_facet_count(const scx_complex* complex) {
  return complex ? complex->value.facet_count() : 0;
}

scx_status scx_complex_top(const scx_complex* complex, size_t index, uint32_t* vertices,
                           double* weight) {
  return guarded([&] {
    if (complex == nullptr || index >= complex->value.top_count()) {
      return fail(SCX_ERR_INVALID_ARGUMENT, "top index out of range");
    }
    const auto& t = complex->value.tops()[index];
    copy_out(t.simplex, vertices);
    if (weight != nullptr) *weight = t.weight;
    return SCX_OK;
  });
}

scx_status scx_complex_serialize(const scx_complex* complex, char** text, size_t* length) {
  return guarded([&] {
    if (complex == nullptr || text == nullptr) return fail(SCX_ERR_INVALID_ARGUMENT, "null argument");
    const std::string s = scx::serialize_scx(complex->value);
    *text = dup_string(s);
    if (length != nullptr) *length = s.size();
    return SCX_OK;
  });
}

scx_status scx_complex_save(const scx_complex* complex, const char* path) {
  return guarded([&] {
    if (complex == nullptr || path == nullptr) return fail(SCX_ERR_INVALID_ARGUMENT, "null argument");
    scx::save_scx(complex->value, path);
    return SCX_OK;
  });
}

int scx_complex_equal(const scx_complex* a, const scx_complex* b) {
  if (a == nullptr || b == nullptr) return a == b;
  return a->value == b->value ? 1 : 0;
}

void scx_string_free(char* text) { delete[] text; }

scx_status scx_complex_degree(const scx_complex* complex, const uint32_t* sigma,
                              size_t sigma_size, size_t* degree) {
  return guarded([&] {
    if (complex == nullptr || degree == nullptr) return fail(SCX_ERR_INVALID_ARGUMENT, "null argument");
    *degree = complex->value.degree(simplex_from(sigma, sigma_size));
    return SCX_OK;
  });
}

scx_status scx_complex_neighbors(const scx_complex* complex, const uint32_t* sigma,
                                 size_t sigma_size, uint32_t* neighbors, uint32_t* via,
                                 double* weights, size_t capacity, size_t* count) {
  return guarded([&] {
    if (complex == nullptr || count == nullptr) return fail(SCX_ERR_INVALID_ARGUMENT, "null argument");
    const auto records = complex->value.neighbors(simplex_from(sigma, sigma_size));
    *count = records.size();
    if (capacity == 0 && neighbors == nullptr && via == nullptr && weights == nullptr) {
      return SCX_OK;
    }
    if (capacity < records.size()) {
      return fail(SCX_ERR_BUFFER_TOO_SMALL, "need room for " + std::to_string(records.size()) +
                                                " neighbor records");
    }
    const std::size_t d = static_cast<std::size_t>(complex->value.dim());
    for (std::size_t i = 0; i < records.size(); ++i) {
      if (neighbors != nullptr) copy_out(records[i].neighbor, neighbors + i * d);
      if (via != nullptr) copy_out(records[i].via, via + i * (d + 1));
      if (weights != nullptr) weights[i] = records[i].weight;
    }
    return SCX_OK;
  });
}

scx_status scx_complex_validate(const scx_complex* complex, int strict_positive,
                                scx_report** out) {
  return guarded([&] {
    if (complex == nullptr || out == nullptr) return fail(SCX_ERR_INVALID_ARGUMENT, "null argument");
    *out = new scx_report{scx::validate(complex->value, strict_positive != 0)};
    return SCX_OK;
  });
}

scx_status scx_validate_raw(int32_t d, uint32_t n, const uint32_t* vertices,
                            const size_t* sizes, const double* weights, size_t top_count,
                            int strict_positive, scx_report** out) {
  return guarded([&] {
    if (out == nullptr ||
        (top_count > 0 && (vertices == nullptr || sizes == nullptr || weights == nullptr))) {
      return fail(SCX_ERR_INVALID_ARGUMENT, "null argument");
    }
    std::vector<scx::RawTop> raw(top_count);
    std::size_t offset = 0;
    for (std::size_t i = 0; i < top_count; ++i) {
      raw[i].vertices.assign(vertices + offset, vertices + offset + sizes[i]);
      raw[i].weight = weights[i];
      offset += sizes[i];
    }
    *out = new scx_report{scx::validate(d, n, raw, strict_positive != 0)};
    return SCX_OK;
  });
}

size_t scx_report_count(const scx_report* report) {
  return report ? report->value.violations.size() : 0;
}

scx_violation_kind scx_report_kind(const scx_report* report, size_t index) {
  if (report == nullptr || index >= report->value.violations.size()) {
    return SCX_VIOLATION_INVALID_HEADER;
  }
  return to_c(report->value.violations[index].kind);
}

const char* scx_report_kind_name(const scx_report* report, size_t index) {
  if (report == nullptr || index >= report->value.violations.size()) return "";
  return scx::to_string(report->value.violations[index].kind);
}

const char* scx_report_message(const scx_report* report, size_t index) {
  if (report == nullptr || index >= report->value.violations.size()) return "";
  return report->value.violations[index].message.c_str();
}

void scx_report_free(scx_report* report) { delete report; }

scx_status scx_sssp(const scx_complex* complex, const uint32_t* source, size_t source_size,
                    scx_distance_map** out) {
  return guarded([&] {
    if (complex == nullptr || out == nullptr) return fail(SCX_ERR_INVALID_ARGUMENT, "null argument");
    *out = nullptr;
    *out = new scx_distance_map{scx::sssp(complex->value, simplex_from(source, source_size))};
    return SCX_OK;
  });
}

size_t scx_distance_map_size(const scx_distance_map* map) {
  return map ? map->value.size() : 0;
}

scx_status scx_distance_map_entry(const scx_distance_map* map, size_t index,
                                  uint32_t* simplex, double* distance, int* has_predecessor,
                                  uint32_t* predecessor, uint32_t* via) {
  return guarded([&] {
    if (map == nullptr || index >= map->value.size()) {
      return fail(SCX_ERR_INVALID_ARGUMENT, "entry index out of range");
    }
    const auto& e = map->value.entries()[index];
    copy_out(e.simplex, simplex);
    if (distance != nullptr) *distance = e.distance;
    if (has_predecessor != nullptr) *has_predecessor = e.predecessor ? 1 : 0;
    if (e.predecessor) {
      copy_out(e.predecessor->simplex, predecessor);
      copy_out(e.predecessor->via, via);
    }
    return SCX_OK;
  });
}

double scx_distance_map_lookup(const scx_distance_map* map, const uint32_t* sigma,
                               size_t sigma_size) {
  if (map == nullptr) return INFINITY;
  try {
    return map->value.distance(simplex_from(sigma, sigma_size));
  } catch (...) {
    return INFINITY;
  }
}

void scx_distance_map_free(scx_distance_map* map) { delete map; }

scx_status scx_shortest_path(const scx_complex* complex, const uint32_t* source,
                             const uint32_t* target, size_t simplex_size, scx_path** out) {
  return guarded([&] {
    if (complex == nullptr || out == nullptr) return fail(SCX_ERR_INVALID_ARGUMENT, "null argument");
    *out = nullptr;
    auto path = scx::shortest_path(complex->value, simplex_from(source, simplex_size),
                                   simplex_from(target, simplex_size));
    if (path) *out = new scx_path{std::move(*path)};
    return SCX_OK;
  });
}

size_t scx_path_length(const scx_path* path) { return path ? path->value.length() : 0; }

double scx_path_total(const scx_path* path) { return path ? path->value.total : INFINITY; }

scx_status scx_path_simplex(const scx_path* path, size_t index, uint32_t* simplex) {
  return guarded([&] {
    if (path == nullptr || index >= path->value.simplices.size()) {
      return fail(SCX_ERR_INVALID_ARGUMENT, "path index out of range");
    }
    copy_out(path->value.simplices[index], simplex);
    return SCX_OK;
  });
}

scx_status scx_path_via(const scx_path* path, size_t index, uint32_t* via) {
  return guarded([&] {
    if (path == nullptr || index >= path->value.via.size()) {
      return fail(SCX_ERR_INVALID_ARGUMENT, "path index out of range");
    }
    copy_out(path->value.via[index], via);
    return SCX_OK;
  });
}

void scx_path_free(scx_path* path) { delete path; }

scx_status scx_is_d_path(const scx_complex* complex, const uint32_t* simplices, size_t count,
                         int* valid, char** diagnostic) {
  return guarded([&] {
    if (complex == nullptr || valid == nullptr || (count > 0 && simplices == nullptr)) {
      return fail(SCX_ERR_INVALID_ARGUMENT, "null argument");
    }
    const std::size_t d = static_cast<std::size_t>(complex->value.dim());
    std::vector<scx::Simplex> seq;
    seq.reserve(count);
    scx::PathCheck check;
    try {
      for (std::size_t i = 0; i < count; ++i) seq.push_back(simplex_from(simplices + i * d, d));
      check = scx::is_d_path(complex->value, seq);
    } catch (const scx::Error& e) {
      check = {false, e.what()};
    }
    *valid = check.valid ? 1 : 0;
    if (diagnostic != nullptr) *diagnostic = check.valid ? nullptr : dup_string(check.diagnostic);
    return SCX_OK;
  });
}

}  // extern "C"
