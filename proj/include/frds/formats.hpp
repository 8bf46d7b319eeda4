#ifndef FRDS_FORMATS_HPP
#define FRDS_FORMATS_HPP

#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "frds/core.hpp"
#include "frds/seq_metrics.hpp"
#include "frds/zonemap.hpp"

namespace frds {

// Token-label TSV: UTF-8, LF, one "token<TAB>label" line per token, blank
// line between sentences, "⏎" standing in for a newline token. The reader
// reconstructs a document whose text joins tokens with single spaces, so
// offsets do not round-trip; tokens, labels and sentence boundaries do.
std::pair<Document, LabelSeq> read_token_tsv(const std::string& path);
std::pair<Document, LabelSeq> read_token_tsv(std::istream& in,
                                             const std::string& name);
void write_token_tsv(const Document& doc, const LabelSeq& labels,
                     const std::string& path);
void write_token_tsv(const Document& doc, const LabelSeq& labels,
                     std::ostream& out);

// Span-annotation interchange: one JSON object per line with a "text"
// string and a "label" array of [char_start, char_end, tag] entries.
// Ranges tagged "DS" project onto tokens; other tags are skipped with a
// warning. Offsets count code points.
std::vector<std::pair<Document, LabelSeq>> read_span_jsonl(
    const std::string& path, std::vector<std::string>* warnings = nullptr);
std::vector<std::pair<Document, LabelSeq>> read_span_jsonl(
    std::istream& in, const std::string& name,
    std::vector<std::string>* warnings = nullptr);

struct CorpusStats {
  std::size_t file_count = 0;
  std::size_t token_count = 0;
  std::size_t sentence_count = 0;
  double ds_percent_mean = 0.0;  // percent of DS tokens, averaged per file
  double ds_percent_std = 0.0;   // population standard deviation
};

CorpusStats corpus_stats(
    const std::vector<std::pair<Document, LabelSeq>>& files);

// Metric bundle of one file (or of the pooled corpus).
struct FileMetrics {
  PRF token;
  PRF ssm;
  Rational zme_score;
  Rational zme_error_mass;  // the score's numerator
  long long zme_gt_tokens = 0;
  long long token_count = 0;
  std::map<GroupKind, Rational> zme_breakdown;
};

FileMetrics compute_file_metrics(const LabelSeq& gold, const LabelSeq& pred,
                                 const ZmeConfig& cfg = {});

struct AggStat {
  double mean = 0.0;
  double stddev = 0.0;  // population
};

struct EvalReport {
  std::vector<std::pair<std::string, FileMetrics>> per_file;  // sorted by id
  FileMetrics overall;                                        // pooled
  std::vector<std::pair<std::string, AggStat>> averaged;      // fixed order
};

// Pools per-file bundles (summed confusion counts, summed ZME masses) and
// derives per-file means with standard deviations. per_file is sorted here.
EvalReport build_eval_report(
    std::vector<std::pair<std::string, FileMetrics>> per_file,
    const ZmeConfig& cfg = {});

enum class ReportFormat { json, csv };

// Byte-deterministic renderings: stable key order, 6 decimal places. The
// CSV holds one row per file and metric for plotting.
std::string render_report(const EvalReport& report, ReportFormat format);
void write_report(const EvalReport& report, const std::string& path,
                  ReportFormat format);

}  // namespace frds

#endif
