// Copyright 2026 The VDLV Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "vdlv/cli.hpp"
#include "vdlv/dataset.hpp"
#include "vdlv/metrics.hpp"
#include "vdlv/plot.hpp"
#include "vdlv/presets.hpp"
#include "vdlv/record_io.hpp"

namespace vdlv::cli {
namespace {

namespace fs = std::filesystem;

struct GridFlags {
  SamplingGrid grid;

  void attach(CLI::App& app) {
    app.add_option("--t0", grid.t0, "first sample time in seconds")->capture_default_str();
    app.add_option("--dt", grid.dt, "sample spacing in seconds")->capture_default_str();
    app.add_option("--n", grid.n, "number of samples")->capture_default_str();
  }
};

PresetTable load_table(const std::string& path) {
  return path.empty() ? PresetTable::builtin() : PresetTable::load(path);
}

VdType vd_arg(const std::string& name) {
  const auto t = parse_vd_type(name);
  if (!t) fail(ErrorCategory::kInvalidParameter, "unknown class '" + name + "'");
  return *t;
}

SignalKind kind_arg(const std::string& name) {
  const auto k = parse_signal_kind(name);
  if (!k) fail(ErrorCategory::kInvalidParameter, "unknown signal kind '" + name + "' (pressure or volume)");
  return *k;
}

std::vector<ClassKey> parse_classes(const std::string& text) {
  if (text == "default") return default_classes();
  std::vector<ClassKey> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto colon = item.find(':');
    if (colon == std::string::npos) {
      fail(ErrorCategory::kInvalidParameter, "class '" + item + "' must be written as vd:kind");
    }
    out.emplace_back(vd_arg(item.substr(0, colon)), kind_arg(item.substr(colon + 1)));
  }
  return out;
}

void write_or_print(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
  } else {
    write_text_file(path, text);
  }
}

std::vector<Waveform> waveforms_of(const fs::path& path) {
  std::vector<Waveform> out;
  for (const Record& r : load_records(path)) out.push_back(to_waveform(r));
  return out;
}

// synth ---------------------------------------------------------------------

struct SynthCmd {
  std::string vd, kind, out_path, presets;
  bool nominal = false;
  std::optional<std::uint64_t> seed;
  std::optional<double> cp, theta;
  GridFlags grid;

  void attach(CLI::App& app) {
    app.add_option("vd", vd, "breath class, e.g. double_trigger")->required();
    app.add_option("kind", kind, "pressure or volume")->required();
    auto* nom = app.add_flag("--nominal", nominal, "use the class's nominal parameter values");
    auto* sd = app.add_option("--seed", seed, "draw parameters from the class ranges with this seed");
    nom->excludes(sd);
    app.add_option("--cp", cp, "baseline pressure override (pressure only)");
    app.add_option("--theta", theta, "breath rate override in breaths per second");
    app.add_option("--out", out_path, "output .ndjson file (stdout when omitted)");
    app.add_option("--presets", presets, "preset table file");
    grid.attach(app);
  }

  int run(std::ostream& out) const {
    const PresetTable table = load_table(presets);
    const VdType type = vd_arg(vd);
    const SignalKind k = kind_arg(kind);
    table.at(type, k);
    if (!nominal && !seed) {
      throw CLI::ValidationError("synth needs --nominal or --seed");
    }
    grid.grid.validate();

    Record r;
    r.kind = k;
    r.label = type;
    r.grid = grid.grid;
    ModelParams params;
    if (nominal) {
      params = nominal_params(type, k, table);
      r.id = std::string(to_string(k)) + "-" + std::string(to_string(type)) + "-nominal";
    } else {
      std::mt19937_64 rng(*seed);
      params = sample_params(type, k, rng, table);
      r.seed = *seed;
      r.id = std::string(to_string(k)) + "-" + std::string(to_string(type)) + "-seed" +
             std::to_string(*seed);
    }
    if (cp) {
      auto* p = std::get_if<PressureParams>(&params);
      if (!p) fail(ErrorCategory::kInvalidParameter, "--cp applies to pressure waveforms only");
      p->cp = *cp;
    }
    if (theta) std::visit([&](auto& p) { p.theta = *theta; }, params);
    r.values = evaluate(params, r.grid).values;
    r.params = params;
    write_or_print(out_path, encode_record(r) + "\n", out);
    return kExitOk;
  }
};

// dataset -------------------------------------------------------------------

struct DatasetCmd {
  std::string out_dir, classes = "default", presets;
  std::size_t count = 1000;
  std::uint64_t seed = 0;
  std::size_t workers = 0;
  GridFlags grid;

  void attach(CLI::App& app) {
    app.add_option("--out", out_dir, "output directory")->required();
    app.add_option("--seed", seed, "master seed")->required();
    app.add_option("--count", count, "records per class")->capture_default_str();
    app.add_option("--classes", classes, "'default' or a list like normal:pressure,auto_trigger:volume")
        ->capture_default_str();
    app.add_option("--workers", workers, "generator threads (0: all cores)")->capture_default_str();
    app.add_option("--presets", presets, "preset table file");
    grid.attach(app);
  }

  int run(std::ostream& out) const {
    const PresetTable table = load_table(presets);
    DatasetSpec spec;
    spec.classes = parse_classes(classes);
    spec.count_per_class = count;
    spec.grid = grid.grid;
    spec.master_seed = seed;
    const Manifest m = generate_dataset(spec, out_dir, table, workers);
    out << "dataset " << out_dir << "\n";
    for (const ManifestFile& f : m.files) {
      char line[160];
      std::snprintf(line, sizeof line, "  %-32s %7zu  %s\n", f.path.c_str(), f.count,
                    f.sha256.c_str());
      out << line;
    }
    out << "records " << m.total_records() << "\n";
    out << "presets " << m.presets_sha256 << "\n";
    out << "digest " << m.digest << "\n";
    return kExitOk;
  }
};

// eval ----------------------------------------------------------------------

struct EvalCmd {
  std::string real, generated, pairing = "nearest", window = "none", report_path;
  bool raw = false, no_per_class = false;
  std::size_t workers = 0;

  void attach(CLI::App& app) {
    app.add_option("real", real, "real records: dataset directory or .ndjson file")->required();
    app.add_option("generated", generated, "generated records: dataset directory or .ndjson file")
        ->required();
    app.add_option("--pairing", pairing, "nearest or index")
        ->check(CLI::IsMember({"nearest", "index"}))
        ->capture_default_str();
    app.add_option("--window", window, "spectral-similarity PSD window: none or hann")
        ->check(CLI::IsMember({"none", "hann"}))
        ->capture_default_str();
    app.add_option("--report", report_path, "also write the report (.json for JSON, else text)");
    app.add_flag("--raw", raw, "score signals in their own units instead of z-scored");
    app.add_flag("--no-per-class", no_per_class, "one row per signal kind, ignoring labels");
    app.add_option("--workers", workers, "scoring threads (0: all cores)")->capture_default_str();
  }

  int run(std::ostream& out) const {
    EvalOptions opts;
    opts.pairing = *parse_pairing(pairing);
    opts.zscore = !raw;
    opts.per_class = !no_per_class;
    opts.window = *parse_psd_window(window);
    opts.workers = workers;
    const auto r = waveforms_of(real);
    const auto g = waveforms_of(generated);
    const MetricReport report = evaluate_sets(r, g, opts);
    const std::string table = format_report(report);
    out << table;
    if (!report_path.empty()) {
      if (fs::path(report_path).extension() == ".json") {
        write_text_file(report_path, report_to_json(report).dump(2) + "\n");
      } else {
        write_text_file(report_path, table);
      }
    }
    return kExitOk;
  }
};

// plot ----------------------------------------------------------------------

struct PlotCmd {
  std::string records, out_dir, format = "csv";

  void attach(CLI::App& app) {
    app.add_option("records", records, "dataset directory or .ndjson file")->required();
    app.add_option("--out", out_dir, "output directory")->required();
    app.add_option("--format", format, "csv, svg or both")
        ->check(CLI::IsMember({"csv", "svg", "both"}))
        ->capture_default_str();
  }

  int run(std::ostream& out) const {
    const auto recs = load_records(records);
    if (recs.empty()) fail(ErrorCategory::kValidation, records + " contains no records");
    std::error_code ec;
    fs::create_directories(out_dir, ec);
    if (ec) fail(ErrorCategory::kIo, "cannot create " + out_dir + ": " + ec.message());
    std::size_t files = 0;
    for (const Record& r : recs) {
      const Waveform w = to_waveform(r);
      const fs::path base = fs::path(out_dir) / r.id;
      if (format != "svg") {
        write_text_file(base.string() + ".csv", waveform_csv(w));
        ++files;
      }
      if (format != "csv") {
        const std::string label = r.label ? std::string(to_string(*r.label)) : "unlabeled";
        const std::string title = label + " " + std::string(to_string(r.kind)) + " (" + r.id + ")";
        write_text_file(base.string() + ".svg", waveform_svg(w, title));
        ++files;
      }
    }
    out << "wrote " << files << " files for " << recs.size() << " records to " << out_dir << "\n";
    return kExitOk;
  }
};

// validate ------------------------------------------------------------------

struct ValidateCmd {
  std::string path, presets;
  std::size_t sample = 25;
  bool all = false;
  double tolerance = 1e-9;

  void attach(CLI::App& app) {
    app.add_option("path", path, "dataset directory or .ndjson file")->required();
    auto* s = app.add_option("--sample", sample, "records re-evaluated per file")->capture_default_str();
    app.add_flag("--all", all, "re-evaluate every record")->excludes(s);
    app.add_option("--tolerance", tolerance, "allowed absolute deviation of regenerated values")
        ->capture_default_str();
    app.add_option("--presets", presets, "preset table file");
  }

  int run(std::ostream& out) const {
    const PresetTable table = load_table(presets);
    ValidateOptions opts;
    opts.sample_per_file = all ? 0 : sample;
    opts.tolerance = tolerance;
    const ValidationReport rep = validate_dataset(path, table, opts);
    out << "records " << rep.records << "\n";
    out << "manifest " << (rep.has_manifest ? "verified" : "none") << "\n";
    out << "reevaluated " << rep.reevaluated << " mismatches " << rep.value_mismatches << "\n";
    out << "resampled " << rep.resampled << " mismatches " << rep.param_mismatches << "\n";
    for (const std::string& p : rep.problems) out << "  " << p << "\n";
    if (!rep.ok()) {
      fail(ErrorCategory::kValidation, path + " does not reproduce under the current model and presets");
    }
    out << "ok\n";
    return kExitOk;
  }
};

// presets -------------------------------------------------------------------

struct PresetsCmd {
  std::string presets, out_path;

  void attach(CLI::App& app) {
    app.add_option("--presets", presets, "preset table file to normalize (builtin when omitted)");
    app.add_option("--out", out_path, "output file (stdout when omitted)");
  }

  int run(std::ostream& out) const {
    write_or_print(out_path, load_table(presets).to_json().dump(2) + "\n", out);
    return kExitOk;
  }
};

}  // namespace

int exit_code(ErrorCategory category) {
  switch (category) {
    case ErrorCategory::kInvalidParameter: return kExitInvalidParameter;
    case ErrorCategory::kUnsupportedClass: return kExitUnsupportedClass;
    case ErrorCategory::kIo: return kExitIo;
    case ErrorCategory::kDigestMismatch: return kExitDigestMismatch;
    case ErrorCategory::kSchemaMismatch: return kExitSchemaMismatch;
    case ErrorCategory::kMalformedRecord: return kExitMalformedRecord;
    case ErrorCategory::kValidation: return kExitValidation;
  }
  return kExitInternal;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Synthetic ventilator waveform toolkit", "vdlv"};
  app.require_subcommand(1);

  SynthCmd synth;
  DatasetCmd dataset;
  EvalCmd eval;
  PlotCmd plot;
  ValidateCmd validate;
  PresetsCmd presets;
  auto* synth_app = app.add_subcommand("synth", "synthesize one labeled waveform");
  auto* dataset_app = app.add_subcommand("dataset", "generate a labeled dataset directory");
  auto* eval_app = app.add_subcommand("eval", "score generated signals against real ones");
  auto* plot_app = app.add_subcommand("plot", "export records as CSV and/or SVG");
  auto* validate_app = app.add_subcommand("validate", "check records against schema, model and presets");
  auto* presets_app = app.add_subcommand("presets", "print the preset table as JSON");
  synth.attach(*synth_app);
  dataset.attach(*dataset_app);
  eval.attach(*eval_app);
  plot.attach(*plot_app);
  validate.attach(*validate_app);
  presets.attach(*presets_app);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    if (synth_app->parsed()) return synth.run(out);
    if (dataset_app->parsed()) return dataset.run(out);
    if (eval_app->parsed()) return eval.run(out);
    if (plot_app->parsed()) return plot.run(out);
    if (validate_app->parsed()) return validate.run(out);
    return presets.run(out);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == static_cast<int>(CLI::ExitCodes::Success)) {
      return app.exit(e, out, err);
    }
    err << "error: usage: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << to_string(e.category()) << ": " << e.what() << "\n";
    return exit_code(e.category());
  } catch (const std::exception& e) {
    err << "error: internal: " << e.what() << "\n";
    return kExitInternal;
  }
}

}  // namespace vdlv::cli
