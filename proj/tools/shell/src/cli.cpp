// Copyright 2026 The PoseForge Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include "poseforge/shell/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "poseforge/adain.hpp"
#include "poseforge/annotations.hpp"
#include "poseforge/error.hpp"
#include "poseforge/evaluation.hpp"
#include "poseforge/index_io.hpp"
#include "poseforge/keyvalue.hpp"
#include "poseforge/labels.hpp"
#include "poseforge/losses.hpp"
#include "poseforge/manifest.hpp"
#include "poseforge/retrieval.hpp"
#include "poseforge/shell/config.hpp"
#include "poseforge/shell/responses.hpp"
#include "poseforge/shell/service.hpp"

namespace poseforge::shell {

namespace {

namespace fs = std::filesystem;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IngestArgs {
  std::string annotations;
  std::string labels;
  std::string vocab;
  std::string out;
};

struct ValidateArgs {
  std::string manifest;
};

struct EvalArgs {
  std::string gt;
  std::string pred;
  std::string kind = "oks";
  std::string format = "text";
  std::size_t maxDets = 0;
};

struct AdainArgs {
  std::string content;
  std::string style;
  std::string alpha = "1";
  std::uint64_t seed = 0;
  std::uint64_t draw = 0;
  std::string out;
};

struct LossArgs {
  std::string mode;
  double taskLoss = 0.0;
  double perceptual = 0.0;
  std::optional<double> l1;
  std::optional<double> l2;
  std::string task = "detection";
};

struct RetrieveArgs {
  std::string index;
  std::string query;
  std::size_t k = 5;
  std::string mode = "character";
  std::optional<double> area;
  std::string format = "text";
};

struct RetrievalEvalArgs {
  std::string index;
  std::string mode = "character";
  std::optional<std::size_t> cutoff;
  std::string format = "text";
};

struct ServeArgs {
  std::string config;
  std::string index;
  std::string addr;
  std::string staticDir;
  std::string logLevel;
};

int runIngest(const IngestArgs& a, std::ostream& out, std::ostream& err) {
  const AnnotationDocument doc = loadAnnotations(a.annotations);
  std::optional<Vocabulary> vocab;
  if (!a.vocab.empty()) vocab = Vocabulary::load(a.vocab);
  const LabelMap labels = parseRetrievalLabels(readFile(a.labels), vocab);

  const auto flags = outOfBoundsKeypoints(doc);
  for (const auto& f : flags) {
    err << fmt::format("warning: annotation {} joint {} lies outside its image\n", f.annotationId,
                       kJointNames[f.joint]);
  }
  EntryCollection coll = collectEntries(doc, labels);
  for (auto id : coll.unlabeled) {
    err << fmt::format("warning: annotation {} has a pose but no label record\n", id);
  }
  for (const auto& id : coll.orphanLabels) {
    err << fmt::format("warning: label record '{}' matches no posed annotation\n", id);
  }
  const std::size_t indexed = coll.entries.size();
  const RetrievalIndex index = RetrievalIndex::build(std::move(coll.entries));
  saveIndex(a.out, index);

  const SplitCounts counts = countSplit(doc);
  out << fmt::format(
      "images={} persons={} poses={} indexed={} characters={} scenes={} unlabeled_poses={} "
      "orphan_labels={} out_of_bounds={}\n",
      counts.images, counts.persons, counts.poses, indexed, index.characters().size(),
      index.scenes().size(), coll.unlabeled.size(), coll.orphanLabels.size(), flags.size());
  return kExitOk;
}

int runValidate(const ValidateArgs& a, std::ostream& out) {
  const auto manifests = parseManifestCsv(readFile(a.manifest));
  const ValidationReport report = validateManifest(manifests);
  out << formatValidationReport(report);
  return report.allPass() ? kExitOk : kExitDomainError;
}

int runEval(const EvalArgs& a, std::ostream& out) {
  const AnnotationDocument gt = loadAnnotations(a.gt);
  const auto preds = parsePredictions(readFile(a.pred));
  MatchConfig cfg =
      MatchConfig::forKind(a.kind == "iou" ? SimilarityKind::IoU : SimilarityKind::OKS);
  if (a.maxDets > 0) cfg.maxDetections = a.maxDets;
  const EvalReport report = evaluate(groupByImage(preds), groundTruthByImage(gt), cfg);
  out << (a.format == "json" ? formatReportJson(report) : formatReportText(report));
  return kExitOk;
}

int runAdain(const AdainArgs& a, std::ostream& out) {
  StyleConfig cfg;
  cfg.seed = a.seed;
  if (a.alpha == "uniform") {
    cfg.alphaMode = UniformAlpha{};
  } else {
    char* end = nullptr;
    const double v = std::strtod(a.alpha.c_str(), &end);
    if (a.alpha.empty() || end != a.alpha.c_str() + a.alpha.size()) {
      throw UsageError("--alpha must be a number in [0, 1] or 'uniform'");
    }
    cfg.alphaMode = FixedAlpha{v};
  }
  const double alpha = sampleAlpha(cfg, a.draw);
  const FeatureTensor content = loadTensor(a.content);
  const FeatureTensor style = loadTensor(a.style);
  const FeatureTensor result = stylize(content, style, alpha);
  saveTensor(a.out, result);
  out << fmt::format("alpha={} channels={} height={} width={}\n", alpha, result.channels(),
                     result.height(), result.width());
  return kExitOk;
}

int runLoss(const LossArgs& a, std::ostream& out) {
  double value = 0.0;
  if (a.mode == "comb1") {
    value = combinedLoss1(a.taskLoss, a.perceptual);
  } else {
    if (a.l1.has_value() != a.l2.has_value()) {
      throw UsageError("--l1 and --l2 must be given together");
    }
    const TaskKind task = a.task == "pose" ? TaskKind::Pose : TaskKind::Detection;
    LossWeights w = LossWeights::forTask(task);
    if (a.l1) w = LossWeights{*a.l1, *a.l2, task};
    value = combinedLoss2(a.taskLoss, a.perceptual, w);
  }
  out << fmt::format("{}\n", value);
  return kExitOk;
}

int runRetrieve(const RetrieveArgs& a, std::ostream& out) {
  const RetrievalIndex index = loadIndex(a.index);
  const LabelMode mode = parseLabelMode(a.mode);
  std::optional<std::string> queryId;
  std::vector<RankedResult> results;
  std::error_code ec;
  if (fs::is_regular_file(a.query, ec)) {
    const PoseAnnotation pose = parsePoseText(readFile(a.query));
    results = index.query(pose, a.area.value_or(poseExtentArea(pose)), std::nullopt, a.k);
  } else {
    queryId = a.query;
    results = index.queryById(a.query, a.k);
  }
  out << (a.format == "json" ? retrievalBody(index, queryId, mode, a.k, results)
                             : retrievalText(index, queryId, mode, a.k, results));
  return kExitOk;
}

int runRetrievalEval(const RetrievalEvalArgs& a, std::ostream& out) {
  const RetrievalIndex index = loadIndex(a.index);
  const RetrievalSummary s = retrievalMap(index, parseLabelMode(a.mode), a.cutoff);
  out << (a.format == "json" ? summaryBody(s) : summaryText(s));
  return kExitOk;
}

int runServe(const ServeArgs& a) {
  ServiceConfig cfg;
  if (!a.config.empty()) cfg = loadServiceConfig(a.config);
  applyEnvironment(cfg, [](const char* name) { return std::getenv(name); });
  if (!a.index.empty()) cfg.indexPath = a.index;
  if (!a.addr.empty()) std::tie(cfg.host, cfg.port) = parseListenAddress(a.addr);
  if (!a.staticDir.empty()) cfg.staticAssetPath = a.staticDir;
  if (!a.logLevel.empty()) cfg.logLevel = parseLogLevel(a.logLevel);
  if (cfg.indexPath.empty()) {
    throw UsageError("no index: pass --index, set POSEFORGE_INDEX, or use a config file");
  }
  return serveHttp(cfg);
}

}  // namespace

int runCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"poseforge: pose similarity retrieval and evaluation toolkit", "poseforge"};
  app.require_subcommand(1);

  IngestArgs ingest;
  auto* ingestCmd = app.add_subcommand("ingest", "Parse annotations + labels and build an index");
  ingestCmd->add_option("--annotations", ingest.annotations, "COCO keypoint annotation file")
      ->required();
  ingestCmd->add_option("--labels", ingest.labels, "person_id,character,scene table")->required();
  ingestCmd->add_option("--vocab", ingest.vocab, "Character/scene vocabulary file");
  ingestCmd->add_option("--out", ingest.out, "Index file to write")->required();

  ValidateArgs validate;
  auto* validateCmd = app.add_subcommand("validate", "Check Train + Val split counts");
  validateCmd->add_option("--manifest", validate.manifest, "dataset,split,images,persons,poses CSV")
      ->required();

  EvalArgs eval;
  auto* evalCmd = app.add_subcommand("eval", "COCO-style mAP/mAR of predictions");
  evalCmd->add_option("--gt", eval.gt, "Ground-truth annotation file")->required();
  evalCmd->add_option("--pred", eval.pred, "Predictions (results array or annotation file)")
      ->required();
  evalCmd->add_option("--kind", eval.kind, "Similarity: oks or iou")
      ->check(CLI::IsMember({"oks", "iou"}));
  evalCmd->add_option("--format", eval.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  evalCmd->add_option("--max-dets", eval.maxDets, "Detections kept per image");

  AdainArgs adainArgs;
  auto* adainCmd = app.add_subcommand("adain", "Style a content feature tensor");
  adainCmd->add_option("--content", adainArgs.content, "Content FTNS file")->required();
  adainCmd->add_option("--style", adainArgs.style, "Style FTNS file")->required();
  adainCmd->add_option("--alpha", adainArgs.alpha, "Alpha in [0,1] or 'uniform'");
  adainCmd->add_option("--seed", adainArgs.seed, "Seed for uniform alpha");
  adainCmd->add_option("--draw", adainArgs.draw, "Draw index for uniform alpha");
  adainCmd->add_option("--out", adainArgs.out, "Output FTNS file")->required();

  LossArgs loss;
  auto* lossCmd = app.add_subcommand("loss", "Evaluate a combined perceptual loss");
  lossCmd->add_option("--mode", loss.mode, "comb1 or comb2")
      ->required()
      ->check(CLI::IsMember({"comb1", "comb2"}));
  lossCmd->add_option("--task-loss", loss.taskLoss, "Task loss value")->required();
  lossCmd->add_option("--perceptual", loss.perceptual, "Perceptual loss value")->required();
  lossCmd->add_option("--l1", loss.l1, "lambda1 (comb2)");
  lossCmd->add_option("--l2", loss.l2, "lambda2 (comb2)");
  lossCmd->add_option("--task", loss.task, "Preset weights: detection or pose")
      ->check(CLI::IsMember({"detection", "pose"}));

  RetrieveArgs retrieve;
  auto* retrieveCmd = app.add_subcommand("retrieve", "Rank index entries against a query pose");
  retrieveCmd->add_option("--index", retrieve.index, "Index file")->required();
  retrieveCmd->add_option("--query", retrieve.query, "Person id or a file with 51 pose numbers")
      ->required();
  retrieveCmd->add_option("--k", retrieve.k, "Number of results")->check(CLI::PositiveNumber);
  retrieveCmd->add_option("--mode", retrieve.mode, "character or scene")
      ->check(CLI::IsMember({"character", "scene"}));
  retrieveCmd->add_option("--area", retrieve.area, "Scale for an ad-hoc pose query");
  retrieveCmd->add_option("--format", retrieve.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  RetrievalEvalArgs reval;
  auto* revalCmd = app.add_subcommand("retrieval-eval", "P@1, P@5 and mAP over the whole index");
  revalCmd->add_option("--index", reval.index, "Index file")->required();
  revalCmd->add_option("--mode", reval.mode, "character or scene")
      ->check(CLI::IsMember({"character", "scene"}));
  revalCmd->add_option("--cutoff", reval.cutoff, "Rank cutoff for AP")->check(CLI::PositiveNumber);
  revalCmd->add_option("--format", reval.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  ServeArgs serve;
  auto* serveCmd = app.add_subcommand("serve", "Serve the index over HTTP");
  serveCmd->add_option("--config", serve.config, "key=value config file");
  serveCmd->add_option("--index", serve.index, "Index file");
  serveCmd->add_option("--addr", serve.addr, "host:port");
  serveCmd->add_option("--static", serve.staticDir, "Static asset directory");
  serveCmd->add_option("--log-level", serve.logLevel, "trace|debug|info|warn|error|off");

  std::vector<std::string> storage;
  storage.reserve(args.size() + 1);
  storage.emplace_back("poseforge");
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : storage) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    const auto subs = app.get_subcommands();
    err << (subs.empty() ? app.help() : subs.front()->help());
    return kExitUsage;
  }

  try {
    if (ingestCmd->parsed()) return runIngest(ingest, out, err);
    if (validateCmd->parsed()) return runValidate(validate, out);
    if (evalCmd->parsed()) return runEval(eval, out);
    if (adainCmd->parsed()) return runAdain(adainArgs, out);
    if (lossCmd->parsed()) return runLoss(loss, out);
    if (retrieveCmd->parsed()) return runRetrieve(retrieve, out);
    if (revalCmd->parsed()) return runRetrievalEval(reval, out);
    if (serveCmd->parsed()) return runServe(serve);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomainError;
  }
  err << app.help();
  return kExitUsage;
}

}  // namespace poseforge::shell
