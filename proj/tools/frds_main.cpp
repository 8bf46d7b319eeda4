// Command-line front end: tokenize / segment / detect / postprocess /
// eval / convert / stats over token-label TSV and span JSONL files.

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "frds/clause_post.hpp"
#include "frds/core.hpp"
#include "frds/errors.hpp"
#include "frds/formats.hpp"
#include "frds/rational.hpp"
#include "frds/regex_detect.hpp"
#include "frds/textproc.hpp"
#include "frds/zonemap.hpp"

namespace fs = std::filesystem;

namespace {

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw frds::ValidationError("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

bool has_tsv_extension(const std::string& path) {
  return fs::path(path).extension() == ".tsv";
}

std::string stem_of(const std::string& path) {
  return fs::path(path).stem().string();
}

// Record ids land in file names; keep them path-safe.
std::string sanitize_id(const std::string& id) {
  std::string out;
  for (char c : id) out += (c == '/' || c == '\\') ? '_' : c;
  return out.empty() ? std::string("record") : out;
}

std::vector<std::string> list_tsv_files(const std::string& dir) {
  if (!fs::is_directory(dir))
    throw frds::ValidationError("not a directory: " + dir);
  std::vector<std::string> files;
  for (const auto& entry : fs::directory_iterator(dir))
    if (entry.is_regular_file() && entry.path().extension() == ".tsv")
      files.push_back(entry.path().string());
  std::sort(files.begin(), files.end());
  return files;
}

void ensure_out_dir(const std::string& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec || !fs::is_directory(dir))
    throw frds::ValidationError("cannot create output directory: " + dir);
}

// Raw text or token TSV, decided by extension; raw text gets all-O labels.
std::pair<frds::Document, frds::LabelSeq> load_input(const std::string& path) {
  if (has_tsv_extension(path)) return frds::read_token_tsv(path);
  frds::Document doc = frds::analyze(read_text_file(path), stem_of(path));
  frds::LabelSeq labels(doc.tokens.size(), frds::Label::O);
  return {std::move(doc), std::move(labels)};
}

void require_out_for_many(const std::vector<std::string>& inputs,
                          const std::string& out_dir) {
  if (inputs.size() > 1 && out_dir.empty())
    throw frds::ValidationError("--out DIR is required for multiple inputs");
}

void emit_tsv(const frds::Document& doc, const frds::LabelSeq& labels,
              const std::string& out_dir) {
  if (out_dir.empty()) {
    frds::write_token_tsv(doc, labels, std::cout);
  } else {
    const fs::path target =
        fs::path(out_dir) / (sanitize_id(doc.id) + ".tsv");
    frds::write_token_tsv(doc, labels, target.string());
  }
}

std::string fmt6(double v) {
  if (v == 0.0) v = 0.0;
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

// ---------------------------------------------------------------- commands

int cmd_tokenize(const std::vector<std::string>& inputs,
                 const std::string& out_dir) {
  require_out_for_many(inputs, out_dir);
  if (!out_dir.empty()) ensure_out_dir(out_dir);
  for (const std::string& path : inputs) {
    frds::Document doc = frds::analyze(read_text_file(path), stem_of(path));
    frds::LabelSeq labels(doc.tokens.size(), frds::Label::O);
    emit_tsv(doc, labels, out_dir);
  }
  return 0;
}

int cmd_segment(const std::vector<std::string>& inputs,
                const std::string& out_file, std::size_t max_len) {
  std::ostringstream rows;
  for (const std::string& path : inputs) {
    auto [doc, labels] = load_input(path);
    std::vector<std::string> warnings;
    const std::vector<frds::Segment> segments =
        frds::informed_segment(doc, max_len, &warnings);
    for (const std::string& w : warnings)
      std::cerr << "warning: " << doc.id << ": " << w << "\n";
    for (std::size_t k = 0; k < segments.size(); ++k)
      rows << doc.id << '\t' << k << '\t' << segments[k].sentence_begin
           << '\t' << segments[k].sentence_end << '\t'
           << segments[k].token_count << '\n';
  }
  if (out_file.empty()) {
    std::cout << rows.str();
  } else {
    std::ofstream out(out_file, std::ios::binary);
    if (!out) throw frds::ValidationError("cannot write file: " + out_file);
    out << rows.str();
  }
  return 0;
}

int cmd_detect(const std::vector<std::string>& inputs,
               const std::string& out_dir, const std::string& method,
               bool include_markers, const std::string& markers_file) {
  require_out_for_many(inputs, out_dir);
  if (!out_dir.empty()) ensure_out_dir(out_dir);
  const frds::MarkerInventory inventory =
      markers_file.empty() ? frds::MarkerInventory::defaults()
                           : frds::MarkerInventory::from_file(markers_file);
  for (const std::string& path : inputs) {
    auto [doc, unused] = load_input(path);
    const frds::LabelSeq pred =
        method == "dominant"
            ? frds::detect_dominant_marker(doc, inventory, include_markers)
            : frds::detect_multi_marker(doc, inventory, include_markers);
    emit_tsv(doc, pred, out_dir);
  }
  return 0;
}

int cmd_postprocess(const std::vector<std::string>& inputs,
                    const std::string& out_dir) {
  require_out_for_many(inputs, out_dir);
  if (!out_dir.empty()) ensure_out_dir(out_dir);
  for (const std::string& path : inputs) {
    if (!has_tsv_extension(path))
      throw frds::ValidationError("postprocess expects .tsv inputs, got: " +
                                  path);
    auto [doc, pred] = frds::read_token_tsv(path);
    const frds::LabelSeq fixed = frds::enforce_clause_consistency(doc, pred);
    emit_tsv(doc, fixed, out_dir);
  }
  return 0;
}

int cmd_eval(const std::string& gold_dir, const std::string& pred_dir,
             const std::string& alpha_ms, const std::string& empty_gold,
             const std::string& report_format, const std::string& out_file,
             std::size_t jobs) {
  const std::vector<std::string> gold_files = list_tsv_files(gold_dir);
  const std::vector<std::string> pred_files = list_tsv_files(pred_dir);

  std::map<std::string, std::string> gold_by_stem, pred_by_stem;
  for (const std::string& p : gold_files) gold_by_stem[stem_of(p)] = p;
  for (const std::string& p : pred_files) pred_by_stem[stem_of(p)] = p;

  std::vector<std::string> only_gold, only_pred;
  for (const auto& [stem, path] : gold_by_stem)
    if (!pred_by_stem.count(stem)) only_gold.push_back(stem);
  for (const auto& [stem, path] : pred_by_stem)
    if (!gold_by_stem.count(stem)) only_pred.push_back(stem);
  if (!only_gold.empty() || !only_pred.empty()) {
    std::string msg = "gold and prediction file sets differ;";
    auto join = [](const std::vector<std::string>& v) {
      std::string s;
      for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? ", " : " ") + v[i];
      return s;
    };
    if (!only_gold.empty()) msg += " only in gold:" + join(only_gold) + ";";
    if (!only_pred.empty()) msg += " only in pred:" + join(only_pred) + ";";
    throw frds::ValidationError(msg);
  }
  if (gold_by_stem.empty())
    throw frds::ValidationError("no .tsv files under " + gold_dir);

  frds::ZmeConfig cfg;
  cfg.alpha_ms = frds::rational_from_decimal(alpha_ms);
  cfg.empty_gold = empty_gold == "zero_if_clean"
                       ? frds::EmptyGoldPolicy::zero_if_clean
                       : frds::EmptyGoldPolicy::normalize_by_tokens;

  struct Job {
    std::string id, gold_path, pred_path;
  };
  std::vector<Job> queue;
  for (const auto& [stem, path] : gold_by_stem)
    queue.push_back({stem, path, pred_by_stem.at(stem)});

  std::vector<std::pair<std::string, frds::FileMetrics>> results(
      queue.size());
  std::size_t workers = jobs != 0
                            ? jobs
                            : std::max(1u, std::thread::hardware_concurrency());
  workers = std::min(workers, queue.size());

  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (std::size_t k = next.fetch_add(1); k < queue.size();
         k = next.fetch_add(1)) {
      const Job& job = queue[k];
      const auto gold = frds::read_token_tsv(job.gold_path);
      const auto pred = frds::read_token_tsv(job.pred_path);
      if (gold.second.size() != pred.second.size())
        throw frds::ValidationError(
            job.id + ": gold has " + std::to_string(gold.second.size()) +
            " tokens, prediction has " + std::to_string(pred.second.size()));
      results[k] = {job.id,
                    frds::compute_file_metrics(gold.second, pred.second, cfg)};
    }
  };
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::future<void>> futures;
    futures.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w)
      futures.push_back(std::async(std::launch::async, worker));
    for (auto& f : futures) f.get();
  }

  const frds::EvalReport report =
      frds::build_eval_report(std::move(results), cfg);
  const frds::ReportFormat fmt = report_format == "csv"
                                     ? frds::ReportFormat::csv
                                     : frds::ReportFormat::json;
  if (out_file.empty())
    std::cout << frds::render_report(report, fmt);
  else
    frds::write_report(report, out_file, fmt);
  return 0;
}

int cmd_convert(const std::vector<std::string>& inputs,
                const std::string& out_dir) {
  ensure_out_dir(out_dir);
  std::set<std::string> seen;
  for (const std::string& path : inputs) {
    std::vector<std::string> warnings;
    const auto records = frds::read_span_jsonl(path, &warnings);
    for (const std::string& w : warnings) std::cerr << "warning: " << w << "\n";
    for (const auto& [doc, labels] : records) {
      const std::string name = sanitize_id(doc.id);
      if (!seen.insert(name).second)
        throw frds::ValidationError("duplicate record id: " + name);
      frds::write_token_tsv(
          doc, labels, (fs::path(out_dir) / (name + ".tsv")).string());
    }
  }
  return 0;
}

int cmd_stats(const std::string& dir) {
  const std::vector<std::string> files = list_tsv_files(dir);
  if (files.empty())
    throw frds::ValidationError("no .tsv files under " + dir);
  std::vector<std::pair<frds::Document, frds::LabelSeq>> corpus;
  corpus.reserve(files.size());
  for (const std::string& path : files)
    corpus.push_back(frds::read_token_tsv(path));
  const frds::CorpusStats stats = frds::corpus_stats(corpus);
  std::cout << "{\"file_count\": " << stats.file_count
            << ", \"token_count\": " << stats.token_count
            << ", \"sentence_count\": " << stats.sentence_count
            << ", \"ds_percent_mean\": " << fmt6(stats.ds_percent_mean)
            << ", \"ds_percent_std\": " << fmt6(stats.ds_percent_std)
            << "}\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Direct-speech span detection and evaluation for French narrative "
      "text"};
  app.require_subcommand(1);
  app.set_config("--config", "", "Optional config file overriding defaults");

  std::vector<std::string> inputs;
  std::string out;
  std::size_t max_len = frds::kDefaultSegmentBudget;
  std::string method = "multi-marker";
  bool no_include_markers = false;
  std::string markers_file;
  std::string gold_dir, pred_dir;
  std::string zme_alpha_ms = "0.5";
  std::string zme_empty_gold = "normalize_by_tokens";
  std::string report_format = "json";
  std::size_t eval_jobs = 0;
  std::string convert_from = "doccano-jsonl";
  std::string convert_to = "tsv";
  std::string stats_dir;

  CLI::App* tok = app.add_subcommand(
      "tokenize", "Tokenize raw text files into token-label TSV (all O)");
  tok->add_option("inputs", inputs, "Input text files")
      ->required()
      ->check(CLI::ExistingFile);
  tok->add_option("--out", out, "Output directory for per-file TSVs");

  CLI::App* seg = app.add_subcommand(
      "segment", "Pack sentences into token-budgeted segments");
  seg->add_option("inputs", inputs, "Input text or .tsv files")
      ->required()
      ->check(CLI::ExistingFile);
  seg->add_option("--max-len", max_len, "Token budget per segment")
      ->capture_default_str();
  seg->add_option("--out", out, "Output file (default: stdout)");

  CLI::App* det = app.add_subcommand(
      "detect", "Detect direct speech with a marker-based rule");
  det->add_option("inputs", inputs, "Input text or .tsv files")
      ->required()
      ->check(CLI::ExistingFile);
  det->add_option("--method", method, "Detection rule")
      ->check(CLI::IsMember({"multi-marker", "dominant"}))
      ->capture_default_str();
  det->add_flag("--no-include-markers", no_include_markers,
                "Leave delimiter tokens labelled O");
  det->add_option("--markers", markers_file, "Marker inventory file")
      ->check(CLI::ExistingFile);
  det->add_option("--out", out, "Output directory for per-file TSVs");

  CLI::App* post = app.add_subcommand(
      "postprocess", "Enforce clause-level label consistency on TSVs");
  post->add_option("inputs", inputs, "Prediction .tsv files")
      ->required()
      ->check(CLI::ExistingFile);
  post->add_option("--out", out, "Output directory for per-file TSVs");

  CLI::App* eval = app.add_subcommand(
      "eval", "Score prediction TSVs against gold TSVs");
  eval->add_option("--gold", gold_dir, "Directory of gold .tsv files")
      ->required();
  eval->add_option("--pred", pred_dir, "Directory of prediction .tsv files")
      ->required();
  eval->add_option("--zme-alpha-ms", zme_alpha_ms,
                   "Split/Merge mitigation factor in [0,1]")
      ->capture_default_str();
  eval->add_option("--zme-empty-gold", zme_empty_gold,
                   "Score policy for files without gold spans")
      ->check(CLI::IsMember({"zero_if_clean", "normalize_by_tokens"}))
      ->capture_default_str();
  eval->add_option("--report", report_format, "Report format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  eval->add_option("--out", out, "Report file (default: stdout)");
  eval->add_option("--jobs", eval_jobs,
                   "Worker threads (0 = hardware concurrency)");

  CLI::App* conv = app.add_subcommand(
      "convert", "Convert span annotations to token-label TSV");
  conv->add_option("inputs", inputs, "Input annotation files")
      ->required()
      ->check(CLI::ExistingFile);
  conv->add_option("--from", convert_from, "Input format")
      ->check(CLI::IsMember({"doccano-jsonl"}))
      ->capture_default_str();
  conv->add_option("--to", convert_to, "Output format")
      ->check(CLI::IsMember({"tsv"}))
      ->capture_default_str();
  conv->add_option("--out", out, "Output directory")->required();

  CLI::App* stats = app.add_subcommand(
      "stats", "Corpus statistics over a directory of .tsv files");
  stats->add_option("dir", stats_dir, "Corpus directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*tok) return cmd_tokenize(inputs, out);
    if (*seg) return cmd_segment(inputs, out, max_len);
    if (*det)
      return cmd_detect(inputs, out, method, !no_include_markers,
                        markers_file);
    if (*post) return cmd_postprocess(inputs, out);
    if (*eval)
      return cmd_eval(gold_dir, pred_dir, zme_alpha_ms, zme_empty_gold,
                      report_format, out, eval_jobs);
    if (*conv) return cmd_convert(inputs, out);
    if (*stats) return cmd_stats(stats_dir);
  } catch (const frds::FormatError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const frds::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const fs::filesystem_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
