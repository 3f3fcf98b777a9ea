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

// scx: command-line front end over libscx.
//
// Exit codes: 0 success, 1 domain failure (invalid input, unreachable
// target), 2 usage, IO or parse error.

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "scx/scx.h"

namespace {

using json = nlohmann::json;
using Ids = std::vector<uint32_t>;

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;

struct ComplexDeleter {
  void operator()(scx_complex* p) const { scx_complex_free(p); }
};
struct MapDeleter {
  void operator()(scx_distance_map* p) const { scx_distance_map_free(p); }
};
struct PathDeleter {
  void operator()(scx_path* p) const { scx_path_free(p); }
};
struct ReportDeleter {
  void operator()(scx_report* p) const { scx_report_free(p); }
};
struct StringDeleter {
  void operator()(char* p) const { scx_string_free(p); }
};

using ComplexPtr = std::unique_ptr<scx_complex, ComplexDeleter>;
using MapPtr = std::unique_ptr<scx_distance_map, MapDeleter>;
using PathPtr = std::unique_ptr<scx_path, PathDeleter>;
using ReportPtr = std::unique_ptr<scx_report, ReportDeleter>;
using StringPtr = std::unique_ptr<char, StringDeleter>;

// Thrown to unwind a command with a message and exit code.
struct Failure {
  int exit_code;
  std::string message;
};

int exit_code_for(scx_status s) {
  switch (s) {
    case SCX_ERR_INVALID_SIMPLEX:
    case SCX_ERR_INVALID_COMPLEX:
    case SCX_ERR_INVALID_WEIGHTS:
    case SCX_ERR_CONFIG:
      return kExitDomain;
    default:
      return kExitUsage;
  }
}

void check(scx_status s, const std::string& context = {}) {
  if (s == SCX_OK) return;
  std::string msg = context.empty() ? std::string() : context + ": ";
  msg += std::string(scx_status_string(s)) + ": " + scx_last_error();
  throw Failure{exit_code_for(s), msg};
}

ComplexPtr load(const std::string& path) {
  scx_complex* raw = nullptr;
  const scx_status s = scx_complex_load(path.c_str(), &raw);
  if (s == SCX_ERR_PARSE) {
    throw Failure{kExitUsage, path + ":" + std::to_string(scx_last_error_line()) +
                                  ": parse error: " + scx_last_error()};
  }
  check(s, path);
  return ComplexPtr(raw);
}

Ids parse_ids(const std::string& text, const char* flag) {
  Ids ids;
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = text.find(',', pos);
    const std::string tok =
        text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    uint32_t v = 0;
    const auto [end, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc() || end != tok.data() + tok.size()) {
      throw Failure{kExitUsage, std::string(flag) + ": expected comma-separated vertex ids, got '" +
                                    text + "'"};
    }
    ids.push_back(v);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  std::sort(ids.begin(), ids.end());
  return ids;
}

std::string join(const uint32_t* ids, std::size_t count) {
  std::string out;
  for (std::size_t i = 0; i < count; ++i) {
    if (i) out += ',';
    out += std::to_string(ids[i]);
  }
  return out;
}

std::string join(const Ids& ids) { return join(ids.data(), ids.size()); }

std::string format_number(double x) {
  if (std::isinf(x)) return "inf";
  char buf[64];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, end);
}

json number_json(double x) {
  return std::isinf(x) ? json("inf") : json(x);
}

// ---- validate ----

int run_validate(const std::string& file, bool strict, bool as_json) {
  const ComplexPtr complex = load(file);
  scx_report* raw = nullptr;
  check(scx_complex_validate(complex.get(), strict ? 1 : 0, &raw), file);
  const ReportPtr report(raw);
  const std::size_t count = scx_report_count(report.get());

  if (as_json) {
    json violations = json::array();
    for (std::size_t i = 0; i < count; ++i) {
      violations.push_back({{"kind", scx_report_kind_name(report.get(), i)},
                            {"message", scx_report_message(report.get(), i)}});
    }
    std::cout << json{{"file", file}, {"ok", count == 0}, {"violations", violations}}.dump(2)
              << '\n';
  } else if (count == 0) {
    std::cout << "ok\n";
  } else {
    for (std::size_t i = 0; i < count; ++i) {
      std::cout << file << ": " << scx_report_kind_name(report.get(), i) << ": "
                << scx_report_message(report.get(), i) << '\n';
    }
  }
  return count == 0 ? kExitOk : kExitDomain;
}

// ---- sssp ----

struct Row {
  Ids simplex;
  double distance;
  std::optional<Ids> predecessor;
  std::optional<Ids> via;
};

int run_sssp(const std::string& file, const std::string& source_text, bool all, bool as_json) {
  const ComplexPtr complex = load(file);
  const Ids source = parse_ids(source_text, "--source");
  scx_distance_map* raw = nullptr;
  check(scx_sssp(complex.get(), source.data(), source.size(), &raw), "--source");
  const MapPtr map(raw);

  const std::size_t d = scx_complex_dim(complex.get());
  std::vector<Row> rows;
  for (std::size_t i = 0; i < scx_distance_map_size(map.get()); ++i) {
    Row row{Ids(d), 0.0, std::nullopt, std::nullopt};
    Ids pred(d), via(d + 1);
    int has_pred = 0;
    check(scx_distance_map_entry(map.get(), i, row.simplex.data(), &row.distance, &has_pred,
                                 pred.data(), via.data()));
    if (has_pred) {
      row.predecessor = pred;
      row.via = via;
    }
    rows.push_back(std::move(row));
  }
  std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
    return a.distance != b.distance ? a.distance < b.distance : a.simplex < b.simplex;
  });

  if (all) {
    std::vector<Ids> unreachable;
    Ids top(d + 1);
    for (std::size_t t = 0; t < scx_complex_top_count(complex.get()); ++t) {
      check(scx_complex_top(complex.get(), t, top.data(), nullptr));
      for (std::size_t k = 0; k <= d; ++k) {
        Ids facet;
        for (std::size_t j = 0; j <= d; ++j) {
          if (j != k) facet.push_back(top[j]);
        }
        if (std::isinf(scx_distance_map_lookup(map.get(), facet.data(), facet.size()))) {
          unreachable.push_back(std::move(facet));
        }
      }
    }
    std::sort(unreachable.begin(), unreachable.end());
    unreachable.erase(std::unique(unreachable.begin(), unreachable.end()), unreachable.end());
    for (Ids& s : unreachable) {
      rows.push_back({std::move(s), INFINITY, std::nullopt, std::nullopt});
    }
  }

  if (as_json) {
    json out = json::array();
    for (const Row& r : rows) {
      out.push_back({{"simplex", r.simplex},
                     {"distance", number_json(r.distance)},
                     {"predecessor", r.predecessor ? json(*r.predecessor) : json(nullptr)},
                     {"via", r.via ? json(*r.via) : json(nullptr)}});
    }
    std::cout << json{{"source", source}, {"rows", out}}.dump(2) << '\n';
  } else {
    for (const Row& r : rows) {
      std::cout << join(r.simplex) << ' ' << format_number(r.distance) << ' '
                << (r.predecessor ? join(*r.predecessor) : "-") << ' '
                << (r.via ? join(*r.via) : "-") << '\n';
    }
  }
  return kExitOk;
}

// ---- path ----

int run_path(const std::string& file, const std::string& source_text,
             const std::string& target_text, bool as_json) {
  const ComplexPtr complex = load(file);
  const Ids source = parse_ids(source_text, "--source");
  const Ids target = parse_ids(target_text, "--target");
  if (source.size() != target.size()) {
    throw Failure{kExitDomain, "--source and --target must have the same number of vertices"};
  }
  scx_path* raw = nullptr;
  check(scx_shortest_path(complex.get(), source.data(), target.data(), source.size(), &raw));
  const PathPtr path(raw);

  if (!path) {
    if (as_json) {
      std::cout << json{{"source", source}, {"target", target}, {"reachable", false}}.dump(2)
                << '\n';
    } else {
      std::cout << "unreachable\n";
    }
    return kExitDomain;
  }

  const std::size_t d = scx_complex_dim(complex.get());
  const std::size_t hops = scx_path_length(path.get());
  std::vector<Ids> simplices(hops + 1, Ids(d));
  std::vector<Ids> via(hops, Ids(d + 1));
  for (std::size_t i = 0; i <= hops; ++i) check(scx_path_simplex(path.get(), i, simplices[i].data()));
  for (std::size_t i = 0; i < hops; ++i) check(scx_path_via(path.get(), i, via[i].data()));
  const double total = scx_path_total(path.get());

  if (as_json) {
    std::cout << json{{"source", source},     {"target", target}, {"reachable", true},
                      {"simplices", simplices}, {"via", via},       {"hops", hops},
                      {"total", total}}
                     .dump(2)
              << '\n';
    return kExitOk;
  }
  std::cout << "simplices:";
  for (const Ids& s : simplices) std::cout << ' ' << join(s);
  std::cout << "\nvia:";
  for (const Ids& s : via) std::cout << ' ' << join(s);
  std::cout << "\nhops: " << hops << "\ntotal: " << format_number(total) << '\n';
  return kExitOk;
}

// ---- generate ----

int run_generate(const scx_generator_config& cfg, const std::string& output) {
  scx_complex* raw = nullptr;
  check(scx_complex_generate(&cfg, &raw));
  const ComplexPtr complex(raw);
  if (output.empty() || output == "-") {
    char* text = nullptr;
    std::size_t length = 0;
    check(scx_complex_serialize(complex.get(), &text, &length));
    const StringPtr owned(text);
    std::cout.write(text, static_cast<std::streamsize>(length));
  } else {
    check(scx_complex_save(complex.get(), output.c_str()), output);
  }
  return kExitOk;
}

// ---- bench ----

struct BenchOptions {
  std::vector<std::size_t> sizes{10000};
  uint32_t d = 2;
  uint32_t vertices = 0;  // 0: pick per size
  uint64_t seed = 1;
  std::size_t repeat = 1;
  bool as_json = false;
};

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

double binomial(uint32_t n, uint32_t k) {
  double r = 1.0;
  for (uint32_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Smallest vertex count whose candidate pool is at least four times the
// requested number of top simplices, keeping the complex sparse.
uint32_t pick_vertices(std::size_t m, uint32_t d) {
  uint32_t n = d + 2;
  while (binomial(n, d + 1) < 4.0 * static_cast<double>(m)) ++n;
  return n;
}

int run_bench(const BenchOptions& opt) {
  using clock = std::chrono::steady_clock;
  auto ms_since = [](clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(clock::now() - t0).count();
  };

  json rows = json::array();
  if (!opt.as_json) std::cout << "n_simplices,d,m,build_ms,sssp_ms\n";
  for (std::size_t target_m : opt.sizes) {
    scx_generator_config cfg{};
    cfg.d = opt.d;
    cfg.n = opt.vertices ? opt.vertices : pick_vertices(target_m, opt.d);
    cfg.p = std::min(1.0, static_cast<double>(target_m) / binomial(cfg.n, opt.d + 1));
    cfg.weight_low = 1.0;
    cfg.weight_high = 10.0;
    cfg.integer_weights = 1;
    cfg.seed = opt.seed;

    std::vector<double> build_ms, sssp_ms;
    std::size_t facets = 0, m = 0;
    for (std::size_t r = 0; r < opt.repeat; ++r) {
      scx_complex* raw = nullptr;
      auto t0 = clock::now();
      check(scx_complex_generate(&cfg, &raw));
      build_ms.push_back(ms_since(t0));
      const ComplexPtr complex(raw);
      facets = scx_complex_facet_count(complex.get());
      m = scx_complex_top_count(complex.get());

      // Source: the first facet of the lexicographically first top simplex.
      Ids source(opt.d + 1, 0);
      if (m > 0) {
        check(scx_complex_top(complex.get(), 0, source.data(), nullptr));
        source.erase(source.begin());
      } else {
        for (uint32_t i = 0; i < opt.d; ++i) source[i] = i + 1;
        source.pop_back();
      }
      scx_distance_map* map = nullptr;
      t0 = clock::now();
      check(scx_sssp(complex.get(), source.data(), source.size(), &map));
      sssp_ms.push_back(ms_since(t0));
      scx_distance_map_free(map);
    }

    const double b = median(build_ms), s = median(sssp_ms);
    if (opt.as_json) {
      rows.push_back({{"n_simplices", facets}, {"d", opt.d}, {"m", m},
                      {"build_ms", b}, {"sssp_ms", s}});
    } else {
      std::cout << facets << ',' << opt.d << ',' << m << ',' << format_number(b) << ','
                << format_number(s) << '\n';
    }
  }
  if (opt.as_json) std::cout << rows.dump(2) << '\n';
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Shortest d-paths in weighted simplicial complexes"};
  app.require_subcommand(1);
  app.set_version_flag("--version", scx_version());
  bool as_json = false;
  app.add_flag("--json", as_json, "Machine-readable output");

  std::string file;
  std::string source, target;

  auto* validate = app.add_subcommand("validate", "Check a .scx file");
  bool strict = false;
  validate->add_option("file", file, "Input .scx file")->required();
  validate->add_flag("--strict-positive", strict, "Reject zero weights");
  validate->add_flag("--json", as_json, "Machine-readable output");

  auto* sssp = app.add_subcommand("sssp", "Distances from one (d-1)-simplex");
  bool all = false;
  sssp->add_option("file", file, "Input .scx file")->required();
  sssp->add_option("--source", source, "Source simplex, e.g. 1,3")->required();
  sssp->add_flag("--all", all, "Also list unreachable facets with distance inf");
  sssp->add_flag("--json", as_json, "Machine-readable output");

  auto* path = app.add_subcommand("path", "Shortest d-path between two (d-1)-simplices");
  path->add_option("file", file, "Input .scx file")->required();
  path->add_option("--source", source, "Source simplex, e.g. 1,3")->required();
  path->add_option("--target", target, "Target simplex, e.g. 4,7")->required();
  path->add_flag("--json", as_json, "Machine-readable output");

  auto* generate = app.add_subcommand("generate", "Write a seeded random complex");
  scx_generator_config cfg{};
  cfg.weight_low = 1.0;
  cfg.weight_high = 1.0;
  bool integer_weights = false;
  std::string output;
  generate->add_option("--n", cfg.n, "Vertex count")->required();
  generate->add_option("--d", cfg.d, "Dimension")->required();
  generate->add_option("--p", cfg.p, "Inclusion probability")->required();
  generate->add_option("--seed", cfg.seed, "64-bit seed")->default_val(0);
  generate->add_option("--wmin", cfg.weight_low, "Lowest weight")->default_val(1.0);
  generate->add_option("--wmax", cfg.weight_high, "Highest weight")->default_val(1.0);
  generate->add_flag("--int", integer_weights, "Integer weights");
  generate->add_option("-o,--output", output, "Output file (default: stdout)");

  auto* bench = app.add_subcommand("bench", "Time generation and sssp over a size sweep");
  BenchOptions bench_opt;
  bench->add_option("--sizes", bench_opt.sizes, "Target numbers of top simplices")
      ->delimiter(',');
  bench->add_option("--d", bench_opt.d, "Dimension")->default_val(2);
  bench->add_option("--n", bench_opt.vertices, "Vertex count (default: chosen per size)");
  bench->add_option("--seed", bench_opt.seed, "64-bit seed")->default_val(1);
  bench->add_option("--repeat", bench_opt.repeat, "Timings per size; the median is reported")
      ->default_val(1)
      ->check(CLI::PositiveNumber);
  bench->add_flag("--json", bench_opt.as_json, "Machine-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*validate) return run_validate(file, strict, as_json);
    if (*sssp) return run_sssp(file, source, all, as_json);
    if (*path) return run_path(file, source, target, as_json);
    if (*generate) {
      cfg.integer_weights = integer_weights ? 1 : 0;
      return run_generate(cfg, output);
    }
    if (*bench) {
      bench_opt.as_json = bench_opt.as_json || as_json;
      return run_bench(bench_opt);
    }
  } catch (const Failure& f) {
    std::cerr << "scx: " << f.message << '\n';
    return f.exit_code;
  }
  return kExitUsage;
}
