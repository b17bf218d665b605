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

#include "featstudy/report.h"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <system_error>

#include "featstudy/error.h"
#include "json.hpp"

namespace featstudy {
namespace {

using nlohmann::json;

void WriteCanonical(const json& j, int indent, std::string& out) {
  const std::string pad(static_cast<std::size_t>(indent) + 2, ' ');
  switch (j.type()) {
    case json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += ",\n";
        first = false;
        out += pad;
        out += json(it.key()).dump();
        out += ": ";
        WriteCanonical(it.value(), indent + 2, out);
      }
      out += "\n" + std::string(static_cast<std::size_t>(indent), ' ') + "}";
      return;
    }
    case json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      out += "[\n";
      bool first = true;
      for (const auto& v : j) {
        if (!first) out += ",\n";
        first = false;
        out += pad;
        WriteCanonical(v, indent + 2, out);
      }
      out += "\n" + std::string(static_cast<std::size_t>(indent), ' ') + "]";
      return;
    }
    case json::value_t::number_float:
      out += FormatFixed6(j.get<double>());
      return;
    default:
      out += j.dump();
      return;
  }
}

json SummaryToJson(const MetricSummary& s) {
  json folds = json::array();
  for (const auto& f : s.per_fold) {
    folds.push_back({{"tp", f.tp},
                     {"fp", f.fp},
                     {"fn", f.fn},
                     {"tn", f.tn},
                     {"precision", f.precision},
                     {"recall", f.recall},
                     {"f1", f.f1}});
  }
  return {{"avg_precision", s.avg_precision},
          {"avg_recall", s.avg_recall},
          {"avg_f1", s.avg_f1},
          {"per_fold", std::move(folds)}};
}

MetricSummary SummaryFromJson(const json& j) {
  MetricSummary s;
  s.avg_precision = j.at("avg_precision").get<double>();
  s.avg_recall = j.at("avg_recall").get<double>();
  s.avg_f1 = j.at("avg_f1").get<double>();
  for (const auto& f : j.at("per_fold")) {
    FoldMetrics m;
    m.tp = f.at("tp").get<std::size_t>();
    m.fp = f.at("fp").get<std::size_t>();
    m.fn = f.at("fn").get<std::size_t>();
    m.tn = f.at("tn").get<std::size_t>();
    m.precision = f.at("precision").get<double>();
    m.recall = f.at("recall").get<double>();
    m.f1 = f.at("f1").get<double>();
    s.per_fold.push_back(m);
  }
  return s;
}

FeatureGroup GroupFromJson(const json& j) {
  const auto name = j.get<std::string>();
  auto group = ParseGroup(name);
  if (!group) {
    throw Error(ErrorCode::kParse, "unknown feature group '" + name + "'");
  }
  return *group;
}

json AblationToJson(const AblationResult& r) {
  json sizes = json::object();
  for (const auto& [g, n] : r.group_sizes) sizes[std::string(GroupName(g))] = n;
  json groups = json::array();
  for (const auto& g : r.per_group) {
    groups.push_back({{"group", std::string(GroupName(g.group))},
                      {"features_without_group", g.features_without_group},
                      {"summary", SummaryToJson(g.summary)},
                      {"delta_f1_points", g.delta_f1_points}});
  }
  return {{"class_id", r.class_id},
          {"total_features", r.total_features},
          {"group_sizes", std::move(sizes)},
          {"fold_plan_hash", r.fold_plan_hash},
          {"baseline", SummaryToJson(r.baseline)},
          {"groups", std::move(groups)}};
}

AblationResult AblationFromJson(const json& j) {
  AblationResult r;
  r.class_id = j.at("class_id").get<std::string>();
  r.total_features = j.at("total_features").get<std::size_t>();
  for (auto it = j.at("group_sizes").begin(); it != j.at("group_sizes").end();
       ++it) {
    r.group_sizes[GroupFromJson(json(it.key()))] = it->get<std::size_t>();
  }
  r.fold_plan_hash = j.at("fold_plan_hash").get<std::string>();
  r.baseline = SummaryFromJson(j.at("baseline"));
  for (const auto& g : j.at("groups")) {
    GroupAblation entry;
    entry.group = GroupFromJson(g.at("group"));
    entry.features_without_group =
        g.at("features_without_group").get<std::size_t>();
    entry.summary = SummaryFromJson(g.at("summary"));
    entry.delta_f1_points = g.at("delta_f1_points").get<double>();
    r.per_group.push_back(std::move(entry));
  }
  return r;
}

json CurveToJson(const EliminationCurve& c) {
  json points = json::array();
  for (const auto& p : c.points) {
    points.push_back({{"percentile", p.percentile},
                      {"k", p.k},
                      {"summary", SummaryToJson(p.summary)}});
  }
  return {{"class_id", c.class_id},
          {"total_features", c.total_features},
          {"reduced_features", c.reduced_features},
          {"fold_plan_hash", c.fold_plan_hash},
          {"protocol", std::string(ProtocolName(c.protocol))},
          {"chi2_variant", std::string(Chi2VariantName(c.chi2))},
          {"grid", c.grid},
          {"skipped", c.skipped},
          {"points", std::move(points)},
          {"peak",
           {{"percentile", c.peak.percentile},
            {"k", c.peak.k},
            {"avg_f1", c.peak.avg_f1}}}};
}

EliminationCurve CurveFromJson(const json& j) {
  EliminationCurve c;
  c.class_id = j.at("class_id").get<std::string>();
  c.total_features = j.at("total_features").get<std::size_t>();
  c.reduced_features = j.at("reduced_features").get<std::size_t>();
  c.fold_plan_hash = j.at("fold_plan_hash").get<std::string>();
  const auto protocol = j.at("protocol").get<std::string>();
  if (protocol == "global") {
    c.protocol = SelectionProtocol::kGlobal;
  } else if (protocol == "per_fold") {
    c.protocol = SelectionProtocol::kPerFold;
  } else {
    throw Error(ErrorCode::kParse, "unknown protocol '" + protocol + "'");
  }
  const auto variant = j.at("chi2_variant").get<std::string>();
  if (variant == "observed_expected") {
    c.chi2 = Chi2Variant::kObservedExpected;
  } else if (variant == "contingency") {
    c.chi2 = Chi2Variant::kContingency;
  } else {
    throw Error(ErrorCode::kParse, "unknown chi2 variant '" + variant + "'");
  }
  c.grid = j.at("grid").get<std::vector<int>>();
  c.skipped = j.at("skipped").get<std::vector<int>>();
  for (const auto& p : j.at("points")) {
    CurvePoint point;
    point.percentile = p.at("percentile").get<int>();
    point.k = p.at("k").get<std::size_t>();
    point.summary = SummaryFromJson(p.at("summary"));
    c.points.push_back(std::move(point));
  }
  const auto& peak = j.at("peak");
  c.peak.percentile = peak.at("percentile").get<int>();
  c.peak.k = peak.at("k").get<std::size_t>();
  c.peak.avg_f1 = peak.at("avg_f1").get<double>();
  return c;
}

json MetadataToJson(const ReportMetadata& m) {
  return {{"corpus_hash", m.corpus_hash},
          {"registry_hash", m.registry_hash},
          {"seed", m.seed},
          {"folds", m.folds},
          {"min_df", m.min_df},
          {"grid", m.grid},
          {"svm",
           {{"c", m.params.c},
            {"tolerance", m.params.tolerance},
            {"max_passes", m.params.max_passes},
            {"seed", m.params.seed},
            {"fit_bias", m.params.fit_bias},
            {"positive_cost", m.params.positive_cost},
            {"negative_cost", m.params.negative_cost}}}};
}

ReportMetadata MetadataFromJson(const json& j) {
  ReportMetadata m;
  m.corpus_hash = j.at("corpus_hash").get<std::string>();
  m.registry_hash = j.at("registry_hash").get<std::string>();
  m.seed = j.at("seed").get<std::uint64_t>();
  m.folds = j.at("folds").get<int>();
  m.min_df = j.at("min_df").get<std::size_t>();
  m.grid = j.at("grid").get<std::vector<int>>();
  const auto& svm = j.at("svm");
  m.params.c = svm.at("c").get<double>();
  m.params.tolerance = svm.at("tolerance").get<double>();
  m.params.max_passes = svm.at("max_passes").get<int>();
  m.params.seed = svm.at("seed").get<std::uint64_t>();
  m.params.fit_bias = svm.at("fit_bias").get<bool>();
  m.params.positive_cost = svm.at("positive_cost").get<double>();
  m.params.negative_cost = svm.at("negative_cost").get<double>();
  return m;
}

std::string CsvQuote(std::string_view s) {
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  out += '"';
  return out;
}

}  // namespace

std::string FormatFixed6(double value) {
  if (!std::isfinite(value)) {
    throw Error(ErrorCode::kIo, "cannot serialize a non-finite number");
  }
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", value);
  std::string out(buf);
  if (out == "-0.000000") out = "0.000000";
  return out;
}

std::string ToCanonicalJson(const StudyReport& report) {
  json root;
  root["metadata"] = MetadataToJson(report.metadata);
  if (const auto* ablation = std::get_if<AblationResult>(&report.payload)) {
    root["kind"] = "ablation";
    root["ablation"] = AblationToJson(*ablation);
  } else {
    root["kind"] = "elimination";
    root["elimination"] =
        CurveToJson(std::get<EliminationCurve>(report.payload));
  }
  std::string out;
  WriteCanonical(root, 0, out);
  out += '\n';
  return out;
}

std::string CanonicalizeJson(std::string_view json_text) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kParse, e.what());
  }
  std::string out;
  WriteCanonical(root, 0, out);
  out += '\n';
  return out;
}

StudyReport ParseStudyReport(std::string_view json_text) {
  try {
    const json root = json::parse(json_text);
    StudyReport report;
    report.metadata = MetadataFromJson(root.at("metadata"));
    const auto kind = root.at("kind").get<std::string>();
    if (kind == "ablation") {
      report.payload = AblationFromJson(root.at("ablation"));
    } else if (kind == "elimination") {
      report.payload = CurveFromJson(root.at("elimination"));
    } else {
      throw Error(ErrorCode::kParse, "unknown report kind '" + kind + "'");
    }
    return report;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kParse, std::string("report: ") + e.what());
  }
}

std::string AblationCsv(const AblationResult& result) {
  std::string out =
      "class,group,features_without_group,avg_p,avg_r,avg_f1,delta_points\n";
  for (const auto& g : result.per_group) {
    out += CsvQuote(result.class_id) + "," + CsvQuote(GroupName(g.group)) +
           "," + std::to_string(g.features_without_group) + "," +
           FormatFixed6(g.summary.avg_precision) + "," +
           FormatFixed6(g.summary.avg_recall) + "," +
           FormatFixed6(g.summary.avg_f1) + "," +
           FormatFixed6(g.delta_f1_points) + "\n";
  }
  return out;
}

std::string EliminationCsv(const EliminationCurve& curve) {
  std::string out = "class,percentile,k,avg_p,avg_r,avg_f1,is_peak\n";
  for (const auto& p : curve.points) {
    const bool is_peak = p.percentile == curve.peak.percentile;
    out += CsvQuote(curve.class_id) + "," + std::to_string(p.percentile) +
           "," + std::to_string(p.k) + "," +
           FormatFixed6(p.summary.avg_precision) + "," +
           FormatFixed6(p.summary.avg_recall) + "," +
           FormatFixed6(p.summary.avg_f1) + "," + (is_peak ? "1" : "0") +
           "\n";
  }
  return out;
}

std::string PeaksCsv(std::span<const EliminationCurve> curves) {
  std::string out = "class,percentile,k,avg_f1\n";
  for (const auto& c : curves) {
    out += CsvQuote(c.class_id) + "," + std::to_string(c.peak.percentile) +
           "," + std::to_string(c.peak.k) + "," + FormatFixed6(c.peak.avg_f1) +
           "\n";
  }
  return out;
}

void WriteFileAtomic(const std::filesystem::path& path,
                     std::string_view content) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) {
      throw Error(ErrorCode::kIo, "cannot open '" + tmp.string() + "'");
    }
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) {
      throw Error(ErrorCode::kIo, "write failed for '" + tmp.string() + "'");
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw Error(ErrorCode::kIo, "cannot rename into '" + path.string() + "'");
  }
}

void EmitJson(const StudyReport& report, const std::filesystem::path& path) {
  WriteFileAtomic(path, ToCanonicalJson(report));
}

void EmitAblationChart(const AblationResult& result,
                       const std::filesystem::path& path) {
  WriteFileAtomic(path, AblationChartSvg(result));
}

void EmitCurveChart(const EliminationCurve& curve,
                    const std::filesystem::path& path) {
  WriteFileAtomic(path, CurveChartSvg(curve));
}

}  // namespace featstudy
