// Copyright 2026 The greval Authors
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

#include "greval/cli.h"

#include <cstdio>
#include <fstream>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "greval/agreement.h"
#include "greval/bracket.h"
#include "greval/corpus_io.h"
#include "greval/matcher.h"
#include "greval/relation.h"
#include "greval/report.h"
#include "greval/scorer.h"
#include "greval/stats.h"

namespace greval {
namespace {

constexpr double kAlpha = 0.05;  // significance level for the genre test

std::string ratio_6dp(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

std::string number_6g(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

std::optional<Corpus> load_gr(const std::string& path, std::ostream& err) {
  std::ifstream in(path, std::ios::binary);
  if (!in.good()) {
    err << path << ": cannot open file\n";
    return std::nullopt;
  }
  ParseResult result = parse_corpus(in);
  for (const Diagnostic& d : result.diagnostics) {
    err << format_diagnostic(d, path) << '\n';
  }
  if (!result.ok()) return std::nullopt;
  return std::move(result.corpus);
}

std::optional<std::vector<BracketSentence>> load_br(const std::string& path,
                                                    std::ostream& err) {
  std::ifstream in(path, std::ios::binary);
  if (!in.good()) {
    err << path << ": cannot open file\n";
    return std::nullopt;
  }
  BracketParseResult result = parse_brackets(in);
  for (const Diagnostic& d : result.diagnostics) {
    err << format_diagnostic(d, path) << '\n';
  }
  if (!result.ok()) return std::nullopt;
  return std::move(result.sentences);
}

struct EvaluateArgs {
  std::string gold_path;
  std::string pred_path;
  std::string policy = "standard";
  std::string format = "text";
  std::string per_sentence_path;
};

int run_evaluate(const EvaluateArgs& args, std::ostream& out,
                 std::ostream& err) {
  std::optional<Corpus> gold = load_gr(args.gold_path, err);
  std::optional<Corpus> pred = load_gr(args.pred_path, err);
  if (!gold || !pred) return 1;

  MatchPolicy policy = *policy_from_name(args.policy);
  ReportFormat format = *format_from_name(args.format);

  ScoreResult result = score_corpus(*pred, *gold, policy);
  for (const Diagnostic& d : result.warnings) {
    bool pred_side = d.message.ends_with("predicted corpus");
    err << format_diagnostic(d, pred_side ? args.pred_path : args.gold_path)
        << '\n';
  }

  if (!args.per_sentence_path.empty()) {
    std::ofstream ps(args.per_sentence_path, std::ios::binary);
    ps << render_per_sentence_csv(per_sentence_scores(*pred, *gold, policy));
    ps.flush();
    if (!ps.good()) {
      err << args.per_sentence_path << ": cannot write file\n";
      return 1;
    }
  }

  out << render_score_table(result.table, format, policy_name(policy));
  return 0;
}

struct StatsArgs {
  std::string corpus_path;
  bool by_genre = false;
  std::string format = "text";
};

int run_stats(const StatsArgs& args, std::ostream& out, std::ostream& err) {
  std::optional<Corpus> corpus = load_gr(args.corpus_path, err);
  if (!corpus) return 1;
  ReportFormat format = *format_from_name(args.format);

  FrequencyTable table = relation_frequencies(*corpus);
  bool empty = corpus->sentences.empty();
  if (empty) {
    err << format_diagnostic({Diagnostic::Severity::kWarning, 0,
                              "corpus has no sentences"},
                             args.corpus_path)
        << '\n';
  }

  std::optional<Contingency> pooled;
  std::optional<ChiSquareResult> chi;
  if (args.by_genre) {
    try {
      pooled = pool_low_expected(genre_contingency(*corpus));
      chi = chi_square_homogeneity(*pooled);
    } catch (const std::invalid_argument& e) {
      err << format_diagnostic(
                 {Diagnostic::Severity::kError, 0, e.what()},
                 args.corpus_path)
          << '\n';
      return 1;
    }
  }

  switch (format) {
    case ReportFormat::kText: {
      char buf[160];
      std::snprintf(buf, sizeof buf, "%-20s%10s%10s", "relation", "count",
                    "percent");
      out << buf << '\n';
      for (const FrequencyRow& row : table.rows) {
        std::string name(2 * hierarchy_depth(row.relation), ' ');
        name += relation_name(row.relation);
        std::snprintf(buf, sizeof buf, "%-20s%10s%10s", name.c_str(),
                      std::to_string(row.count).c_str(),
                      percent_1dp(row.percent).c_str());
        out << buf << '\n';
      }
      if (!empty) {
        std::snprintf(buf, sizeof buf, "%.2f",
                      mean_grs_per_sentence(*corpus));
        out << "\nmean grs per sentence: " << buf << '\n';
      }
      if (chi) {
        out << "\ngenre contingency (pooled)\n";
        std::snprintf(buf, sizeof buf, "%-20s", "relation");
        out << buf;
        for (char g : pooled->genres) {
          std::snprintf(buf, sizeof buf, "%10c", g);
          out << buf;
        }
        out << '\n';
        for (size_t i = 0; i < pooled->row_labels.size(); ++i) {
          std::snprintf(buf, sizeof buf, "%-20s",
                        pooled->row_labels[i].c_str());
          out << buf;
          for (int64_t cell : pooled->cells[i]) {
            std::snprintf(buf, sizeof buf, "%10s",
                          std::to_string(cell).c_str());
            out << buf;
          }
          out << '\n';
        }
        out << "\nchi-square statistic: " << number_6g(chi->statistic)
            << '\n'
            << "degrees of freedom: " << chi->degrees_of_freedom << '\n'
            << "p-value: " << number_6g(chi->p_value) << '\n'
            << (chi->p_value < kAlpha ? "significant at alpha 0.05\n"
                                      : "not significant at alpha 0.05\n");
      }
      return 0;
    }
    case ReportFormat::kCsv: {
      out << "relation,count,percent\n";
      for (const FrequencyRow& row : table.rows) {
        out << relation_name(row.relation) << ',' << row.count << ','
            << ratio_6dp(row.percent) << '\n';
      }
      if (!empty) {
        out << "\nsentences,total_grs,mean_grs_per_sentence\n"
            << corpus->sentences.size() << ',' << table.total << ','
            << ratio_6dp(mean_grs_per_sentence(*corpus)) << '\n';
      }
      if (chi) {
        out << "\nrelation";
        for (char g : pooled->genres) out << ',' << g;
        out << '\n';
        for (size_t i = 0; i < pooled->row_labels.size(); ++i) {
          out << csv_field(pooled->row_labels[i]);
          for (int64_t cell : pooled->cells[i]) out << ',' << cell;
          out << '\n';
        }
        out << "\nstatistic,degrees_of_freedom,p_value\n"
            << number_6g(chi->statistic) << ',' << chi->degrees_of_freedom
            << ',' << number_6g(chi->p_value) << '\n';
      }
      return 0;
    }
    case ReportFormat::kJson: {
      nlohmann::ordered_json doc;
      doc["schema"] = 1;
      doc["report"] = "stats";
      doc["sentences"] = corpus->sentences.size();
      doc["total_grs"] = table.total;
      if (!empty) {
        doc["mean_grs_per_sentence"] = mean_grs_per_sentence(*corpus);
      }
      nlohmann::ordered_json rows = nlohmann::ordered_json::array();
      for (const FrequencyRow& row : table.rows) {
        nlohmann::ordered_json r;
        r["relation"] = relation_name(row.relation);
        r["depth"] = hierarchy_depth(row.relation);
        r["count"] = row.count;
        r["percent"] = row.percent;
        rows.push_back(std::move(r));
      }
      doc["rows"] = std::move(rows);
      if (chi) {
        nlohmann::ordered_json genre;
        nlohmann::ordered_json genres = nlohmann::ordered_json::array();
        for (char g : pooled->genres) genres.push_back(std::string(1, g));
        genre["genres"] = std::move(genres);
        nlohmann::ordered_json crows = nlohmann::ordered_json::array();
        for (size_t i = 0; i < pooled->row_labels.size(); ++i) {
          nlohmann::ordered_json r;
          r["relation"] = pooled->row_labels[i];
          r["counts"] = pooled->cells[i];
          crows.push_back(std::move(r));
        }
        genre["rows"] = std::move(crows);
        genre["statistic"] = chi->statistic;
        genre["degrees_of_freedom"] = chi->degrees_of_freedom;
        genre["p_value"] = chi->p_value;
        genre["alpha"] = kAlpha;
        genre["significant"] = chi->p_value < kAlpha;
        doc["genre_test"] = std::move(genre);
      }
      out << doc.dump(2) << '\n';
      return 0;
    }
  }
  return 0;
}

struct AgreeArgs {
  std::string a_path;
  std::string b_path;
  std::string format = "text";
};

int run_agree(const AgreeArgs& args, std::ostream& out, std::ostream& err) {
  std::optional<Corpus> a = load_gr(args.a_path, err);
  std::optional<Corpus> b = load_gr(args.b_path, err);
  if (!a || !b) return 1;
  ReportFormat format = *format_from_name(args.format);

  AgreementReport report;
  try {
    report = inter_annotator_agreement(*a, *b);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }

  std::string_view strict = policy_name(MatchPolicy::kStrict);
  switch (format) {
    case ReportFormat::kText:
      out << "total a: " << report.total_a << '\n'
          << "total b: " << report.total_b << '\n'
          << "matched: " << report.matched << '\n'
          << "precision of a against b: "
          << percent_1dp(100.0 * report.precision_a_given_b) << '\n'
          << "precision of b against a: "
          << percent_1dp(100.0 * report.precision_b_given_a) << '\n'
          << "f-score: " << percent_1dp(100.0 * report.f_score) << '\n'
          << "\nper-relation breakdown (a scored against b, strict)\n"
          << render_score_table(report.breakdown, ReportFormat::kText,
                                strict);
      return 0;
    case ReportFormat::kCsv:
      out << "total_a,total_b,matched,precision_a_given_b,"
             "precision_b_given_a,f_score\n"
          << report.total_a << ',' << report.total_b << ','
          << report.matched << ','
          << ratio_6dp(report.precision_a_given_b) << ','
          << ratio_6dp(report.precision_b_given_a) << ','
          << ratio_6dp(report.f_score) << "\n\n"
          << render_score_table(report.breakdown, ReportFormat::kCsv,
                                strict);
      return 0;
    case ReportFormat::kJson: {
      nlohmann::ordered_json doc;
      doc["schema"] = 1;
      doc["report"] = "agree";
      doc["total_a"] = report.total_a;
      doc["total_b"] = report.total_b;
      doc["matched"] = report.matched;
      doc["precision_a_given_b"] = report.precision_a_given_b;
      doc["precision_b_given_a"] = report.precision_b_given_a;
      doc["f_score"] = report.f_score;
      nlohmann::ordered_json rendered = nlohmann::ordered_json::parse(
          render_score_table(report.breakdown, ReportFormat::kJson, strict));
      doc["breakdown"] = std::move(rendered["rows"]);
      out << doc.dump(2) << '\n';
      return 0;
    }
  }
  return 0;
}

struct ParsevalArgs {
  std::string gold_path;
  std::string pred_path;
  bool labelled = false;
  bool drop_unary = false;
  bool drop_root = false;
  std::string format = "text";
};

int run_parseval(const ParsevalArgs& args, std::ostream& out,
                 std::ostream& err) {
  std::optional<std::vector<BracketSentence>> gold =
      load_br(args.gold_path, err);
  std::optional<std::vector<BracketSentence>> pred =
      load_br(args.pred_path, err);
  if (!gold || !pred) return 1;
  ReportFormat format = *format_from_name(args.format);

  BracketOptions options;
  options.labelled = args.labelled;
  options.drop_unary = args.drop_unary;
  options.drop_root = args.drop_root;

  BracketScore score;
  try {
    score = score_bracket_corpus(*pred, *gold, options);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }

  switch (format) {
    case ReportFormat::kText: {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.2f", score.mean_crossings);
      out << "sentences: " << gold->size() << '\n'
          << "matched: " << score.matched << '\n'
          << "predicted: " << score.predicted << '\n'
          << "gold: " << score.gold << '\n'
          << "precision: " << percent_1dp(100.0 * score.precision) << '\n'
          << "recall: " << percent_1dp(100.0 * score.recall) << '\n'
          << "f-score: " << percent_1dp(100.0 * score.f_score) << '\n'
          << "crossing brackets: " << score.crossings << '\n'
          << "mean crossings per sentence: " << buf << '\n';
      return 0;
    }
    case ReportFormat::kCsv:
      out << "sentences,matched,predicted,gold,precision,recall,f_score,"
             "crossings,mean_crossings\n"
          << gold->size() << ',' << score.matched << ',' << score.predicted
          << ',' << score.gold << ',' << ratio_6dp(score.precision) << ','
          << ratio_6dp(score.recall) << ',' << ratio_6dp(score.f_score)
          << ',' << score.crossings << ','
          << ratio_6dp(score.mean_crossings) << '\n';
      return 0;
    case ReportFormat::kJson: {
      nlohmann::ordered_json doc;
      doc["schema"] = 1;
      doc["report"] = "parseval";
      nlohmann::ordered_json opts;
      opts["labelled"] = options.labelled;
      opts["drop_unary"] = options.drop_unary;
      opts["drop_root"] = options.drop_root;
      doc["options"] = std::move(opts);
      doc["sentences"] = gold->size();
      doc["matched"] = score.matched;
      doc["predicted"] = score.predicted;
      doc["gold"] = score.gold;
      doc["precision"] = score.precision;
      doc["recall"] = score.recall;
      doc["f_score"] = score.f_score;
      doc["crossings"] = score.crossings;
      doc["mean_crossings"] = score.mean_crossings;
      out << doc.dump(2) << '\n';
      return 0;
    }
  }
  return 0;
}

struct ValidateArgs {
  std::string path;
  std::string role = "gold";
};

int run_validate(const ValidateArgs& args, std::ostream& out,
                 std::ostream& err) {
  std::ifstream in(args.path, std::ios::binary);
  if (!in.good()) {
    err << args.path << ": cannot open file\n";
    return 1;
  }
  ParseResult result = parse_corpus(in);
  size_t warnings = 0;
  for (const Diagnostic& d : result.diagnostics) {
    err << format_diagnostic(d, args.path) << '\n';
    if (!is_error(d)) ++warnings;
  }
  if (!result.ok()) return 1;

  CorpusRole role =
      args.role == "pred" ? CorpusRole::kPredicted : CorpusRole::kGold;
  std::vector<Diagnostic> style = validate_corpus(*result.corpus, role);
  for (const Diagnostic& d : style) {
    err << format_diagnostic(d, args.path) << '\n';
  }
  warnings += style.size();

  out << result.corpus->sentences.size() << " sentences, "
      << result.corpus->total_grs() << " grs, " << warnings
      << (warnings == 1 ? " warning" : " warnings") << '\n';
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Grammatical relation evaluation toolkit", "greval"};
  app.require_subcommand(1);

  const std::vector<std::string> kPolicies = {"strict", "standard",
                                              "hierarchical"};
  const std::vector<std::string> kFormats = {"text", "csv", "json"};
  const std::vector<std::string> kRoles = {"gold", "pred"};

  EvaluateArgs eval_args;
  CLI::App* evaluate = app.add_subcommand(
      "evaluate", "Score a predicted GR corpus against a gold corpus");
  evaluate->add_option("gold", eval_args.gold_path, "Gold-standard .gr file")
      ->required();
  evaluate->add_option("pred", eval_args.pred_path, "Predicted .gr file")
      ->required();
  evaluate
      ->add_option("--policy", eval_args.policy,
                   "Match policy: strict, standard, or hierarchical")
      ->capture_default_str()
      ->check(CLI::IsMember(kPolicies));
  evaluate
      ->add_option("--format", eval_args.format,
                   "Output format: text, csv, or json")
      ->capture_default_str()
      ->check(CLI::IsMember(kFormats));
  evaluate->add_option("--per-sentence", eval_args.per_sentence_path,
                       "Write per-sentence match counts to this CSV file");

  StatsArgs stats_args;
  CLI::App* stats = app.add_subcommand(
      "stats", "Relation frequencies and corpus statistics");
  stats->add_option("corpus", stats_args.corpus_path, ".gr corpus file")
      ->required();
  stats->add_flag("--by-genre", stats_args.by_genre,
                  "Chi-square homogeneity test of the relation "
                  "distribution across genres");
  stats
      ->add_option("--format", stats_args.format,
                   "Output format: text, csv, or json")
      ->capture_default_str()
      ->check(CLI::IsMember(kFormats));

  AgreeArgs agree_args;
  CLI::App* agree = app.add_subcommand(
      "agree", "Inter-annotator agreement between two .gr corpora");
  agree->add_option("a", agree_args.a_path, "First annotator's .gr file")
      ->required();
  agree->add_option("b", agree_args.b_path, "Second annotator's .gr file")
      ->required();
  agree
      ->add_option("--format", agree_args.format,
                   "Output format: text, csv, or json")
      ->capture_default_str()
      ->check(CLI::IsMember(kFormats));

  ParsevalArgs parseval_args;
  CLI::App* parseval = app.add_subcommand(
      "parseval", "Bracket precision/recall over .br tree files");
  parseval
      ->add_option("gold", parseval_args.gold_path, "Gold-standard .br file")
      ->required();
  parseval->add_option("pred", parseval_args.pred_path, "Predicted .br file")
      ->required();
  parseval->add_flag("--labelled", parseval_args.labelled,
                     "Require bracket labels to match");
  parseval->add_flag("--drop-unary", parseval_args.drop_unary,
                     "Keep only the outermost bracket of unary chains");
  parseval->add_flag("--drop-root", parseval_args.drop_root,
                     "Ignore the root bracket of every tree");
  parseval
      ->add_option("--format", parseval_args.format,
                   "Output format: text, csv, or json")
      ->capture_default_str()
      ->check(CLI::IsMember(kFormats));

  ValidateArgs validate_args;
  CLI::App* validate = app.add_subcommand(
      "validate", "Parse and style-check a .gr corpus");
  validate->add_option("file", validate_args.path, ".gr corpus file")
      ->required();
  validate
      ->add_option("--role", validate_args.role,
                   "Corpus role the style checks assume: gold or pred")
      ->capture_default_str()
      ->check(CLI::IsMember(kRoles));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);  // --help and friends exit 0
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  if (evaluate->parsed()) return run_evaluate(eval_args, out, err);
  if (stats->parsed()) return run_stats(stats_args, out, err);
  if (agree->parsed()) return run_agree(agree_args, out, err);
  if (parseval->parsed()) return run_parseval(parseval_args, out, err);
  if (validate->parsed()) return run_validate(validate_args, out, err);
  return 2;
}

}  // namespace greval
