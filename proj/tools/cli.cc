/*
 * Copyright 2026 The featstudy Authors.
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

#include "cli.h"

#include <chrono>
#include <ctime>
#include <fstream>
#include <ostream>
#include <sstream>
#include <thread>
#include <utility>

#include "CLI11.hpp"
#include "featstudy/corpus.h"
#include "featstudy/error.h"
#include "featstudy/featurize.h"
#include "featstudy/lexicon.h"
#include "featstudy/parallel.h"
#include "featstudy/report.h"
#include "featstudy/selection.h"
#include "featstudy/studies.h"
#include "json.hpp"

namespace featstudy::cli {
namespace {

using nlohmann::json;
namespace fs = std::filesystem;

Error ConfigError(const std::string& message) {
  return Error(ErrorCode::kConfig, message);
}

void RequireFile(const fs::path& path, const char* flag) {
  if (path.empty()) throw ConfigError(std::string(flag) + " is required");
  if (!fs::is_regular_file(path)) {
    throw ConfigError(std::string(flag) + ": no such file '" + path.string() +
                      "'");
  }
}

// Checks everything that can be checked before touching the data.
void ValidateConfig(const RunConfig& config, bool needs_lexicons) {
  RequireFile(config.corpus, "--corpus");
  RequireFile(config.schema, "--schema");
  if (needs_lexicons) {
    if (config.lexicons.empty()) throw ConfigError("--lexicons is required");
    if (!fs::is_directory(config.lexicons)) {
      throw ConfigError("--lexicons: no such directory '" +
                        config.lexicons.string() + "'");
    }
  }
  if (config.folds < 2) throw ConfigError("--folds must be at least 2");
  if (config.min_df < 1) throw ConfigError("--min-df must be at least 1");
  if (config.groups.empty()) throw ConfigError("--groups selects nothing");
  if (!config.grid.empty()) ValidateGrid(config.grid);
  TrainParams params;
  params.c = config.c;
  params.tolerance = config.tolerance;
  params.max_passes = config.max_passes;
  params.Validate();
  std::error_code ec;
  fs::create_directories(config.out, ec);
  if (ec || !fs::is_directory(config.out)) {
    throw ConfigError("--out: cannot create directory '" +
                      config.out.string() + "'");
  }
}

TrainParams MakeTrainParams(const RunConfig& config) {
  TrainParams params;
  params.c = config.c;
  params.tolerance = config.tolerance;
  params.max_passes = config.max_passes;
  params.seed = config.seed;
  return params;
}

StudyParams MakeStudyParams(const RunConfig& config) {
  StudyParams params;
  params.train = MakeTrainParams(config);
  params.folds = config.folds;
  params.seed = config.seed;
  params.jobs = config.jobs;
  return params;
}

std::string UtcTimestamp() {
  const std::time_t now =
      std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::vector<std::string> GroupNames(const std::vector<FeatureGroup>& groups) {
  std::vector<std::string> names;
  for (FeatureGroup g : groups) names.emplace_back(GroupName(g));
  return names;
}

// Provenance record written next to every run's outputs. It carries the
// wall-clock time and worker count, so it is the one output that is not
// reproducible byte for byte.
void WriteRunConfig(const RunConfig& config,
                    const std::vector<std::string>& resolved_classes,
                    const std::vector<std::string>& skipped_classes) {
  json j;
  j["command"] = config.command;
  j["corpus"] = config.corpus.string();
  j["schema"] = config.schema.string();
  j["lexicons"] = config.lexicons.string();
  j["out"] = config.out.string();
  j["classes"] = resolved_classes;
  j["skipped_classes"] = skipped_classes;
  j["groups"] = GroupNames(config.groups);
  j["seed"] = config.seed;
  j["folds"] = config.folds;
  j["svm"] = {{"c", config.c},
              {"tolerance", config.tolerance},
              {"max_passes", config.max_passes}};
  j["min_df"] = config.min_df;
  j["grid"] = config.grid.empty() ? DefaultGrid() : config.grid;
  j["jobs"] = ResolveJobs(config.jobs);
  j["strict_schema"] = config.strict_schema;
  j["per_fold_selection"] = config.per_fold_selection;
  j["contingency_chi2"] = config.contingency_chi2;
  j["timestamp"] = UtcTimestamp();
  WriteFileAtomic(config.out / "run_config.json", CanonicalizeJson(j.dump()));
}

struct Workspace {
  Corpus corpus;
  LexiconSet lexicons;
};

Workspace LoadWorkspace(const RunConfig& config) {
  const ClassSchema schema = ClassSchema::Load(config.schema);
  LoadOptions options;
  options.strict = config.strict_schema;
  Corpus corpus = LoadCorpus(config.corpus, schema, options);
  LexiconSet lexicons;
  if (!config.lexicons.empty()) lexicons = LoadLexicons(config.lexicons);
  return {std::move(corpus), std::move(lexicons)};
}

// Expands "all" and checks explicit ids. With "all", classes too small to
// stratify are skipped rather than failing the run.
std::vector<std::string> ResolveClasses(const RunConfig& config,
                                        const Corpus& corpus,
                                        std::vector<std::string>& skipped,
                                        std::ostream& err) {
  if (config.classes.empty()) throw ConfigError("--class is required");
  std::vector<std::string> out;
  for (const auto& id : config.classes) {
    if (id == "all") {
      for (const auto& def : corpus.schema().classes()) {
        const LabeledTask task = Binarize(corpus, def.id);
        const std::size_t folds = static_cast<std::size_t>(config.folds);
        if (task.positive_count < folds ||
            corpus.size() - task.positive_count < folds) {
          err << "warning: skipping class '" << def.id << "' ("
              << task.positive_count << " positives of " << corpus.size()
              << " rows, " << config.folds << " folds)\n";
          skipped.push_back(def.id);
          continue;
        }
        out.push_back(def.id);
      }
    } else {
      if (!corpus.schema().Contains(id)) {
        throw ConfigError("unknown class '" + id + "'");
      }
      out.push_back(id);
    }
  }
  return out;
}

ReportMetadata MakeMetadata(const RunConfig& config, const Corpus& corpus,
                            const FeatureMatrix& matrix) {
  ReportMetadata m;
  m.corpus_hash = corpus.Hash();
  m.registry_hash = RegistryHash(matrix.registry());
  m.seed = config.seed;
  m.folds = config.folds;
  m.params = MakeTrainParams(config);
  return m;
}

FeatureMatrix EncodeAll(const RunConfig& config, const Workspace& ws) {
  EncodeOptions options;
  options.jobs = config.jobs;
  return Encode(ws.corpus, ws.lexicons, config.groups, options);
}

std::string ReadText(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read '" + path.string() + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::vector<FeatureGroup> ParseGroups(const std::vector<std::string>& names) {
  std::vector<FeatureGroup> groups;
  for (const auto& name : names) {
    if (name == "all") {
      return {kAllGroups.begin(), kAllGroups.end()};
    }
    auto g = ParseGroup(name);
    if (!g) throw ConfigError("unknown feature group '" + name + "'");
    groups.push_back(*g);
  }
  return groups;
}

std::string Ordinal(int n) {
  const char* suffix = "th";
  if (n % 100 < 11 || n % 100 > 13) {
    if (n % 10 == 1) suffix = "st";
    if (n % 10 == 2) suffix = "nd";
    if (n % 10 == 3) suffix = "rd";
  }
  return std::to_string(n) + suffix;
}

}  // namespace

std::string FileStem(const std::string& class_id) {
  std::string stem = class_id;
  for (char& ch : stem) {
    const bool ok = (ch >= 'a' && ch <= 'z') || (ch >= 'A' && ch <= 'Z') ||
                    (ch >= '0' && ch <= '9') || ch == '-' || ch == '_';
    if (!ok) ch = '_';
  }
  return stem;
}

void CmdFeaturize(const RunConfig& config, std::ostream& out) {
  ValidateConfig(config, /*needs_lexicons=*/false);
  const Workspace ws = LoadWorkspace(config);
  const FeatureMatrix matrix = EncodeAll(config, ws);
  const auto sizes = GroupSizes(matrix.registry());
  const auto df = matrix.DocumentFrequency();

  json j;
  j["corpus_hash"] = ws.corpus.Hash();
  j["registry_hash"] = RegistryHash(matrix.registry());
  j["documents"] = ws.corpus.size();
  j["annotations"] = ws.corpus.annotation_count();
  j["total_features"] = matrix.cols();
  j["groups"] = GroupNames(config.groups);
  json group_sizes = json::object();
  json sans = json::object();
  std::string sizes_csv = "group,size,features_without_group\n";
  for (const auto& [g, n] : sizes) {
    const std::string name(GroupName(g));
    group_sizes[name] = n;
    sans[name] = matrix.cols() - n;
    sizes_csv += "\"" + name + "\"," + std::to_string(n) + "," +
                 std::to_string(matrix.cols() - n) + "\n";
  }
  j["group_sizes"] = group_sizes;
  j["sans_group_counts"] = sans;
  json registry = json::array();
  std::string registry_csv = "column,group,name,document_frequency\n";
  for (const auto& d : matrix.registry()) {
    const auto freq = df[static_cast<std::size_t>(d.column)];
    registry.push_back({{"column", d.column},
                        {"group", std::string(GroupName(d.group))},
                        {"name", d.name},
                        {"document_frequency", freq}});
    std::string quoted_name;
    for (char ch : d.name) {
      if (ch == '"') quoted_name += '"';
      quoted_name += ch;
    }
    registry_csv += std::to_string(d.column) + ",\"" +
                    std::string(GroupName(d.group)) + "\",\"" + quoted_name +
                    "\"," + std::to_string(freq) + "\n";
  }
  j["registry"] = std::move(registry);

  WriteFileAtomic(config.out / "features.json", CanonicalizeJson(j.dump()));
  WriteFileAtomic(config.out / "group_sizes.csv", sizes_csv);
  WriteFileAtomic(config.out / "registry.csv", registry_csv);
  WriteRunConfig(config, {}, {});
  out << "encoded " << ws.corpus.size() << " documents into " << matrix.cols()
      << " features\n";
  for (const auto& [g, n] : sizes) {
    out << "  " << GroupName(g) << ": " << n << " (sans " << GroupName(g)
        << ": " << matrix.cols() - n << ")\n";
  }
}

void CmdCv(const RunConfig& config, std::ostream& out, std::ostream& err) {
  ValidateConfig(config, /*needs_lexicons=*/false);
  const Workspace ws = LoadWorkspace(config);
  std::vector<std::string> skipped;
  const auto classes = ResolveClasses(config, ws.corpus, skipped, err);
  const FeatureMatrix matrix = EncodeAll(config, ws);
  const ReportMetadata meta = MakeMetadata(config, ws.corpus, matrix);
  for (const auto& id : classes) {
    const LabeledTask task = Binarize(ws.corpus, id);
    FoldPlan plan;
    try {
      plan = StratifiedFolds(task.labels, config.folds, config.seed);
    } catch (const Error& e) {
      throw e.WithContext("class '" + id + "'");
    }
    CvOptions options;
    options.jobs = config.jobs;
    const MetricSummary summary = CrossValidate(
        matrix, task.labels, MakeTrainParams(config), plan, options);

    json folds = json::array();
    for (const auto& f : summary.per_fold) {
      folds.push_back({{"tp", f.tp}, {"fp", f.fp}, {"fn", f.fn},
                       {"tn", f.tn}, {"precision", f.precision},
                       {"recall", f.recall}, {"f1", f.f1}});
    }
    json j;
    j["class_id"] = id;
    j["positives"] = task.positive_count;
    j["rows"] = task.labels.size();
    j["features"] = matrix.cols();
    j["groups"] = GroupNames(config.groups);
    j["fold_plan_hash"] = plan.Hash();
    j["corpus_hash"] = meta.corpus_hash;
    j["registry_hash"] = meta.registry_hash;
    j["seed"] = config.seed;
    j["summary"] = {{"avg_precision", summary.avg_precision},
                    {"avg_recall", summary.avg_recall},
                    {"avg_f1", summary.avg_f1},
                    {"per_fold", std::move(folds)}};
    WriteFileAtomic(config.out / ("cv_" + FileStem(id) + ".json"),
                    CanonicalizeJson(j.dump()));
    out << id << ": avg P " << FormatFixed6(summary.avg_precision)
        << " R " << FormatFixed6(summary.avg_recall) << " F1 "
        << FormatFixed6(summary.avg_f1) << "\n";
  }
  WriteRunConfig(config, classes, skipped);
}

void CmdAblate(const RunConfig& config, std::ostream& out, std::ostream& err) {
  ValidateConfig(config, /*needs_lexicons=*/true);
  RunConfig all_groups = config;
  all_groups.groups = {kAllGroups.begin(), kAllGroups.end()};
  const Workspace ws = LoadWorkspace(all_groups);
  std::vector<std::string> skipped;
  const auto classes = ResolveClasses(config, ws.corpus, skipped, err);
  const FeatureMatrix full = EncodeAll(all_groups, ws);
  const ReportMetadata meta = MakeMetadata(config, ws.corpus, full);
  for (const auto& id : classes) {
    const LabeledTask task = Binarize(ws.corpus, id);
    AblationResult result = RunAblation(full, task, MakeStudyParams(config));
    const std::string stem = "ablation_" + FileStem(id);
    WriteFileAtomic(config.out / (stem + ".csv"), AblationCsv(result));
    EmitAblationChart(result, config.out / (stem + ".svg"));
    out << id << ": baseline avg F1 " << FormatFixed6(result.baseline.avg_f1)
        << "\n";
    for (const auto& g : result.per_group) {
      out << "  sans " << GroupName(g.group) << " ("
          << g.features_without_group << " features): "
          << FormatFixed6(g.delta_f1_points) << " points\n";
    }
    EmitJson({meta, std::move(result)}, config.out / (stem + ".json"));
  }
  WriteRunConfig(all_groups, classes, skipped);
}

void CmdEliminate(const RunConfig& config, std::ostream& out,
                  std::ostream& err) {
  ValidateConfig(config, /*needs_lexicons=*/true);
  RunConfig all_groups = config;
  all_groups.groups = {kAllGroups.begin(), kAllGroups.end()};
  const Workspace ws = LoadWorkspace(all_groups);
  std::vector<std::string> skipped;
  const auto classes = ResolveClasses(config, ws.corpus, skipped, err);
  const FeatureMatrix full = EncodeAll(all_groups, ws);

  EliminationParams elimination;
  if (!config.grid.empty()) elimination.grid = config.grid;
  elimination.min_df = config.min_df;
  elimination.chi2 = config.contingency_chi2 ? Chi2Variant::kContingency
                                             : Chi2Variant::kObservedExpected;
  elimination.protocol = config.per_fold_selection
                             ? SelectionProtocol::kPerFold
                             : SelectionProtocol::kGlobal;
  ReportMetadata meta = MakeMetadata(config, ws.corpus, full);
  meta.min_df = elimination.min_df;
  meta.grid = elimination.grid;

  std::vector<EliminationCurve> curves;
  for (const auto& id : classes) {
    const LabeledTask task = Binarize(ws.corpus, id);
    EliminationCurve curve =
        RunElimination(full, task, MakeStudyParams(config), elimination);
    const std::string stem = "elimination_" + FileStem(id);
    WriteFileAtomic(config.out / (stem + ".csv"), EliminationCsv(curve));
    EmitCurveChart(curve, config.out / (stem + ".svg"));
    EmitJson({meta, curve}, config.out / (stem + ".json"));
    out << id << ": F1 " << FormatFixed6(curve.peak.avg_f1) << " ("
        << Ordinal(curve.peak.percentile) << " percentile, " << curve.peak.k
        << " features)\n";
    curves.push_back(std::move(curve));
  }
  WriteFileAtomic(config.out / "peaks.csv", PeaksCsv(curves));
  WriteRunConfig(all_groups, classes, skipped);
}

void CmdReport(const RunConfig& config, std::ostream& out) {
  if (config.input.empty()) throw ConfigError("--in is required");
  if (!fs::is_regular_file(config.input)) {
    throw ConfigError("--in: no such file '" + config.input.string() + "'");
  }
  const StudyReport report = ParseStudyReport(ReadText(config.input));
  std::error_code ec;
  fs::create_directories(config.out, ec);
  const std::string stem = config.input.stem().string();
  if (const auto* ablation = std::get_if<AblationResult>(&report.payload)) {
    WriteFileAtomic(config.out / (stem + ".csv"), AblationCsv(*ablation));
    EmitAblationChart(*ablation, config.out / (stem + ".svg"));
  } else {
    const auto& curve = std::get<EliminationCurve>(report.payload);
    WriteFileAtomic(config.out / (stem + ".csv"), EliminationCsv(curve));
    EmitCurveChart(curve, config.out / (stem + ".svg"));
  }
  out << "rendered " << (config.out / (stem + ".svg")).string() << "\n";
}

int Main(int argc, const char* const* argv, std::ostream& out,
         std::ostream& err) {
  CLI::App app{"Feature ablation and chi-square elimination studies for "
               "binary text classification"};
  app.require_subcommand(1);
  RunConfig config;
  std::vector<std::string> group_names;

  auto add_data = [&](CLI::App* cmd) {
    cmd->add_option("--corpus", config.corpus, "JSON-lines corpus file");
    cmd->add_option("--schema", config.schema, "class schema JSON");
    cmd->add_option("--lexicons", config.lexicons, "lexicon TSV directory");
    cmd->add_option("--out", config.out, "output directory")
        ->capture_default_str();
    cmd->add_flag("--strict-schema", config.strict_schema,
                  "reject labels whose ancestors are missing");
    cmd->add_option("--jobs", config.jobs,
                    "worker threads (0 = available parallelism)")
        ->capture_default_str();
  };
  auto add_study = [&](CLI::App* cmd) {
    cmd->add_option("--class", config.classes,
                    "class id(s), comma separated, or 'all'")
        ->delimiter(',');
    cmd->add_option("--seed", config.seed, "fold and solver seed")
        ->capture_default_str();
    cmd->add_option("--folds", config.folds, "cross-validation folds")
        ->capture_default_str();
    cmd->add_option("--c", config.c, "SVM cost")->capture_default_str();
    cmd->add_option("--tolerance", config.tolerance,
                    "dual stopping tolerance")
        ->capture_default_str();
    cmd->add_option("--max-passes", config.max_passes, "solver pass limit")
        ->capture_default_str();
  };
  auto add_groups = [&](CLI::App* cmd) {
    cmd->add_option("--groups", group_names,
                    "feature groups, comma separated, or 'all'")
        ->delimiter(',');
  };

  CLI::App* featurize =
      app.add_subcommand("featurize", "encode the corpus and report counts");
  add_data(featurize);
  add_groups(featurize);

  CLI::App* cv = app.add_subcommand("cv", "cross-validated baseline");
  add_data(cv);
  add_study(cv);
  add_groups(cv);

  CLI::App* ablate = app.add_subcommand("ablate", "feature-group ablation");
  add_data(ablate);
  add_study(ablate);

  CLI::App* eliminate =
      app.add_subcommand("eliminate", "chi-square percentile elimination");
  add_data(eliminate);
  add_study(eliminate);
  eliminate->add_option("--min-df", config.min_df, "minimum document frequency")
      ->capture_default_str();
  eliminate->add_option("--grid", config.grid, "percentiles, comma separated")
      ->delimiter(',');
  eliminate->add_flag("--per-fold-selection", config.per_fold_selection,
                      "score features inside each fold");
  eliminate->add_flag("--contingency-chi2", config.contingency_chi2,
                      "use the full 2x2 contingency statistic");

  CLI::App* report =
      app.add_subcommand("report", "re-render CSV and SVG from a study JSON");
  report->add_option("--in", config.input, "study JSON file")->required();
  report->add_option("--out", config.out, "output directory")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (!group_names.empty()) config.groups = ParseGroups(group_names);
    if (featurize->parsed()) {
      config.command = "featurize";
      CmdFeaturize(config, out);
    } else if (cv->parsed()) {
      config.command = "cv";
      CmdCv(config, out, err);
    } else if (ablate->parsed()) {
      config.command = "ablate";
      CmdAblate(config, out, err);
    } else if (eliminate->parsed()) {
      config.command = "eliminate";
      CmdEliminate(config, out, err);
    } else {
      config.command = "report";
      CmdReport(config, out);
    }
  } catch (const Error& e) {
    err << "featstudy: " << ErrorCodeName(e.code()) << ": " << e.what()
        << "\n";
    return e.IsValidationError() ? kExitConfig : kExitRuntime;
  } catch (const std::exception& e) {
    err << "featstudy: " << e.what() << "\n";
    return kExitRuntime;
  }
  return kExitOk;
}

}  // namespace featstudy::cli
