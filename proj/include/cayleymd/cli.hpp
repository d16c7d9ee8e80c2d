// Copyright 2026 The cayleymd Authors
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

#pragma once

// Command implementations behind the cayleymd tool. Each command writes its
// report to `out` (or to RunConfig::out_path), diagnostics to `err`, and
// returns the process exit status:
//   0  success (sweep: every row matches the gated prediction variant)
//   1  sweep found a mismatch; mobius found no unique convention
//   2  invalid input, I/O failure or other error

#include <cstddef>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <thread>
#include <utility>

#include "cayleymd/cayley.hpp"
#include "cayleymd/errors.hpp"
#include "cayleymd/families.hpp"
#include "cayleymd/graph.hpp"
#include "cayleymd/graph_io.hpp"
#include "cayleymd/group.hpp"
#include "cayleymd/metric.hpp"
#include "cayleymd/predict.hpp"
#include "cayleymd/report.hpp"
#include "cayleymd/sweep.hpp"

namespace cayleymd::cli {

enum class Format { text, json, csv };

inline Format parse_format(std::string_view s) {
  if (s == "text") return Format::text;
  if (s == "json") return Format::json;
  if (s == "csv") return Format::csv;
  throw ParseError("unknown format '" + std::string(s) + "' (text|json|csv)");
}

struct RunConfig {
  std::string command;
  std::optional<std::string> group;
  std::optional<std::string> set;
  std::optional<std::string> family;
  std::optional<std::string> graph_path;
  std::string orders = "5..24";
  std::size_t cap = kDefaultDimensionCap;
  std::size_t max_set_size = 3;
  std::size_t max_param = 24;
  GateVariant variant = GateVariant::proof_consistent;
  MobiusConvention convention = MobiusConvention::vertices;
  std::optional<Format> format;
  std::optional<std::string> out_path;
  std::size_t jobs = 1;
  bool table = false;
};

/// "a..b" (or a single "n").
inline std::pair<std::size_t, std::size_t> parse_order_range(std::string_view s) {
  const std::string t = detail::trim(s);
  const auto dots = t.find("..");
  if (dots == std::string::npos) {
    const auto n = detail::parse_int(t);
    if (n < 2) throw ParseError("order must be >= 2");
    return {static_cast<std::size_t>(n), static_cast<std::size_t>(n)};
  }
  const auto lo = detail::parse_int(t.substr(0, dots));
  const auto hi = detail::parse_int(t.substr(dots + 2));
  if (lo < 2 || hi < lo) throw ParseError("order range '" + t + "' must satisfy 2 <= a <= b");
  return {static_cast<std::size_t>(lo), static_cast<std::size_t>(hi)};
}

/// A resolved input: the graph, plus the group and set when it is a Cayley graph.
struct Input {
  Graph graph;
  std::optional<AbelianGroup> group;
  std::optional<ConnectionSet> set;
  std::optional<Prediction> family_prediction;
  std::string description;
};

inline Input build_family(std::string_view spec, MobiusConvention convention) {
  const std::string t = detail::trim(spec);
  const auto colon = t.find(':');
  if (colon == std::string::npos) throw ParseError("family must look like 'name:params', got '" + t + "'");
  const std::string name = detail::lower(t.substr(0, colon));
  std::vector<std::size_t> args;
  for (const auto& a : detail::split(t.substr(colon + 1), ',')) {
    const auto v = detail::parse_int(a);
    if (v < 0) throw ParseError("family parameters must be nonnegative");
    args.push_back(static_cast<std::size_t>(v));
  }
  auto want = [&](std::size_t k) {
    if (args.size() != k) {
      throw ParseError("family '" + name + "' takes " + std::to_string(k) + " parameter(s)");
    }
  };
  Input in;
  in.description = t;
  if (name == "prism") {
    want(2);
    in.graph = prism(args[0], args[1]);
    in.family_prediction = predict_prism(args[0], args[1]);
  } else if (name == "mobius") {
    want(1);
    in.graph = mobius_ladder(args[0], convention);
    in.family_prediction = predict_mobius(args[0]);
    in.description += " (" + std::string(to_string(convention)) + ")";
  } else if (name == "hypercube") {
    want(1);
    in.graph = hypercube(args[0]);
  } else if (name == "cycle") {
    want(1);
    in.graph = cycle_graph(args[0]);
  } else if (name == "complete") {
    want(1);
    in.graph = complete_graph(args[0]);
  } else if (name == "path") {
    want(1);
    in.graph = path_graph(args[0]);
  } else {
    throw ParseError("unknown family '" + name + "' (prism|mobius|hypercube|cycle|complete|path)");
  }
  return in;
}

inline Input resolve_input(const RunConfig& cfg) {
  const int sources = (cfg.group || cfg.set ? 1 : 0) + (cfg.family ? 1 : 0) + (cfg.graph_path ? 1 : 0);
  if (sources != 1) {
    throw ParseError("give exactly one input: --group with --set, --family, or --graph");
  }
  if (cfg.family) return build_family(*cfg.family, cfg.convention);
  if (cfg.graph_path) {
    Input in;
    in.graph = load_graph(*cfg.graph_path);
    in.description = *cfg.graph_path;
    return in;
  }
  if (!cfg.group || !cfg.set) throw ParseError("--group and --set must be given together");
  Input in;
  in.group = parse_group(*cfg.group);
  in.set = parse_connection_set(*in.group, *cfg.set);
  in.graph = build_cayley(*in.group, *in.set);
  in.description = "Cay(" + in.group->literal() + ", {" + format_connection_set(*in.group, *in.set) + "})";
  return in;
}

namespace internal {

/// Writes to the --out file when given, else to `out`.
inline void emit(const RunConfig& cfg, std::ostream& out, const std::string& text) {
  if (!cfg.out_path) {
    out << text;
    return;
  }
  std::ofstream f(*cfg.out_path, std::ios::binary);
  if (!f) throw IoError("cannot write '" + *cfg.out_path + "'");
  f << text;
  if (!f) throw IoError("failed writing '" + *cfg.out_path + "'");
}

template <typename Body>
int guarded(std::ostream& err, Body&& body) {
  try {
    return body();
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace internal

inline int cmd_dim(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return internal::guarded(err, [&] {
    const Format fmt = cfg.format.value_or(Format::text);
    if (fmt == Format::csv) throw ParseError("dim supports --format text or json");
    const Input in = resolve_input(cfg);
    const DistanceMatrix dist = all_pairs_distances(in.graph);
    if (!dist.all_finite()) throw DisconnectedGraphError(in.description + " is disconnected");
    const MetricDimensionResult res = metric_dimension(in.graph, dist, cfg.cap);

    std::optional<PredictionPair> preds;
    if (in.group && in.set) preds = predict_characterization(*in.group, *in.set);

    if (fmt == Format::json) {
      auto j = witness_to_json(res, in.graph, dist, cfg.table);
      if (preds) {
        j["pred_as_stated"] = preds->as_stated.describe();
        j["pred_proof_consistent"] = preds->proof_consistent.describe();
      }
      if (in.family_prediction) j["prediction"] = in.family_prediction->describe();
      internal::emit(cfg, out, j.dump(2) + "\n");
      return 0;
    }
    std::ostringstream s;
    s << "graph: " << in.description << " (" << in.graph.vertex_count() << " vertices, " << in.graph.edge_count()
      << " edges)\n";
    s << "dim: " << (res.dimension ? std::to_string(*res.dimension) : ">=" + std::to_string(cfg.cap + 1)) << "\n";
    s << "landmarks:";
    for (Vertex w : res.landmarks) s << ' ' << w;
    s << "\n";
    if (in.graph.has_labels()) {
      s << "landmark labels:";
      for (Vertex w : res.landmarks) s << ' ' << in.graph.label(w);
      s << "\n";
    }
    if (preds) {
      s << "as-stated: " << preds->as_stated.describe() << "\n";
      s << "proof-consistent: " << preds->proof_consistent.describe() << "\n";
    }
    if (in.family_prediction) s << "prediction: " << in.family_prediction->describe() << "\n";
    if (cfg.table && !res.landmarks.empty()) {
      for (Vertex u = 0; u < in.graph.vertex_count(); ++u) {
        s << in.graph.label(u) << ":";
        for (auto d : representation(dist, u, res.landmarks)) s << ' ' << d;
        s << "\n";
      }
    }
    internal::emit(cfg, out, s.str());
    return 0;
  });
}

inline std::string records_to_text(const std::vector<SweepRecord>& records) {
  std::ostringstream s;
  std::size_t mismatches = 0;
  std::size_t violations = 0;
  std::size_t two = 0;
  for (const auto& r : records) {
    s << r.group << " {" << r.set << "} n=" << r.n << " dim=" << r.dim_string()
      << " as-stated=" << r.predictions.as_stated.describe()
      << " proof-consistent=" << r.predictions.proof_consistent.describe() << (r.match ? "" : " MISMATCH");
    if (!r.flags.empty()) s << " [" << detail::join(r.flags, ";") << "]";
    s << "\n";
    mismatches += r.match ? 0 : 1;
    violations += r.property_violation() ? 1 : 0;
    two += (r.dim && *r.dim == 2) ? 1 : 0;
  }
  s << "instances: " << records.size() << ", dim 2: " << two << ", mismatches: " << mismatches
    << ", property violations: " << violations << "\n";
  return s.str();
}

inline int cmd_sweep(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return internal::guarded(err, [&] {
    const auto [lo, hi] = parse_order_range(cfg.orders);
    SweepOptions opt;
    opt.cap = cfg.cap;
    opt.variant = cfg.variant;
    opt.jobs = cfg.jobs;
    opt.max_set_size = cfg.max_set_size;
    const auto records = run_sweep(lo, hi, opt);
    switch (cfg.format.value_or(Format::csv)) {
      case Format::csv: internal::emit(cfg, out, records_to_csv(records)); break;
      case Format::json: internal::emit(cfg, out, records_to_json(records)); break;
      case Format::text: internal::emit(cfg, out, records_to_text(records)); break;
    }
    std::size_t mismatches = 0;
    std::size_t violations = 0;
    for (const auto& r : records) {
      mismatches += r.match ? 0 : 1;
      violations += r.property_violation() ? 1 : 0;
    }
    if (violations > 0) {
      err << "sweep: warning: " << violations << " of " << records.size()
          << " rows violate a structural property (see flags)\n";
    }
    if (sweep_failed(records)) {
      err << "sweep: " << mismatches << " of " << records.size() << " rows mismatch the predictions\n";
      return 1;
    }
    return 0;
  });
}

inline int cmd_export(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return internal::guarded(err, [&] {
    const Input in = resolve_input(cfg);
    internal::emit(cfg, out, to_dot(in.graph));
    return 0;
  });
}

inline int cmd_mobius(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return internal::guarded(err, [&] {
    if (cfg.max_param < 8) throw ParseError("--max-param must be >= 8");
    const auto report = run_mobius_crosscheck(cfg.max_param, cfg.cap, cfg.jobs);
    if (cfg.format.value_or(Format::text) == Format::json) {
      internal::emit(cfg, out, mobius_report_to_json(report).dump(2) + "\n");
    } else {
      internal::emit(cfg, out, mobius_report_to_text(report));
    }
    return report.verdict() ? 0 : 1;
  });
}

inline int run(const RunConfig& cfg, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  if (cfg.command == "dim") return cmd_dim(cfg, out, err);
  if (cfg.command == "sweep") return cmd_sweep(cfg, out, err);
  if (cfg.command == "export") return cmd_export(cfg, out, err);
  if (cfg.command == "mobius") return cmd_mobius(cfg, out, err);
  err << "error: unknown command '" << cfg.command << "'\n";
  return 2;
}

}  // namespace cayleymd::cli
