#include "frds/formats.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "frds/textproc.hpp"
#include "frds/unicode.hpp"
#include "json.hpp"

namespace frds {

namespace {

constexpr const char* kNewlineSentinel = "⏎";  // ⏎

std::string path_stem(const std::string& path) {
  return std::filesystem::path(path).stem().string();
}

void close_sentence(Document& doc, std::size_t& sentence_start) {
  if (doc.tokens.size() > sentence_start) {
    doc.sentences.push_back({sentence_start, doc.tokens.size()});
    sentence_start = doc.tokens.size();
  }
}

}  // namespace

std::pair<Document, LabelSeq> read_token_tsv(std::istream& in,
                                             const std::string& name) {
  Document doc;
  doc.id = name;
  LabelSeq labels;
  std::string line;
  std::string text;
  std::size_t lineno = 0;
  std::size_t cursor = 0;  // code points into the reconstructed text
  std::size_t sentence_start = 0;
  bool join_with_space = false;

  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) {
      close_sentence(doc, sentence_start);
      continue;
    }
    const std::size_t tab = line.find('\t');
    if (tab == std::string::npos)
      throw FormatError(name, lineno, "expected token<TAB>label");
    const std::string token_text = line.substr(0, tab);
    const std::string label_text = line.substr(tab + 1);
    if (token_text.empty())
      throw FormatError(name, lineno, "empty token field");
    if (label_text.find('\t') != std::string::npos)
      throw FormatError(name, lineno, "more than two fields");
    Label label;
    if (label_text == "O")
      label = Label::O;
    else if (label_text == "DS")
      label = Label::DS;
    else
      throw FormatError(name, lineno,
                        "unknown label '" + label_text + "'");

    if (token_text == kNewlineSentinel) {
      doc.tokens.push_back({"\n", cursor, cursor + 1, false, true});
      text += '\n';
      cursor += 1;
      join_with_space = false;
    } else {
      if (join_with_space) {
        text += ' ';
        cursor += 1;
      }
      const std::size_t width = decode_utf8(token_text).size();
      doc.tokens.push_back({token_text, cursor, cursor + width,
                            is_punct_text(token_text), false});
      text += token_text;
      cursor += width;
      join_with_space = true;
    }
    labels.push_back(label);
  }
  close_sentence(doc, sentence_start);
  if (doc.tokens.empty())
    throw FormatError(name, lineno, "no token lines");
  doc.text = std::move(text);
  return {std::move(doc), std::move(labels)};
}

std::pair<Document, LabelSeq> read_token_tsv(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError(path, 0, "cannot open file");
  auto result = read_token_tsv(in, path);
  result.first.id = path_stem(path);
  return result;
}

void write_token_tsv(const Document& doc, const LabelSeq& labels,
                     std::ostream& out) {
  if (labels.size() != doc.tokens.size())
    throw ValidationError("label count " + std::to_string(labels.size()) +
                          " does not match token count " +
                          std::to_string(doc.tokens.size()));
  std::vector<Sentence> sentences = doc.sentences;
  if (sentences.empty() && !doc.tokens.empty())
    sentences.push_back({0, doc.tokens.size()});
  for (std::size_t s = 0; s < sentences.size(); ++s) {
    if (s > 0) out << '\n';
    for (std::size_t k = sentences[s].begin; k < sentences[s].end; ++k) {
      const Token& t = doc.tokens[k];
      out << (t.is_newline ? kNewlineSentinel : t.text.c_str()) << '\t'
          << (labels[k] == Label::DS ? "DS" : "O") << '\n';
    }
  }
}

void write_token_tsv(const Document& doc, const LabelSeq& labels,
                     const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ValidationError("cannot write file: " + path);
  write_token_tsv(doc, labels, out);
  out.flush();
  if (!out) throw ValidationError("write failed: " + path);
}

std::vector<std::pair<Document, LabelSeq>> read_span_jsonl(
    std::istream& in, const std::string& name,
    std::vector<std::string>* warnings) {
  using nlohmann::json;
  std::vector<std::pair<Document, LabelSeq>> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const json record = json::parse(line, nullptr, false);
    if (record.is_discarded() || !record.is_object())
      throw FormatError(name, lineno, "invalid JSON record");
    if (!record.contains("text") || !record["text"].is_string())
      throw FormatError(name, lineno, "missing string field 'text'");
    if (!record.contains("label") || !record["label"].is_array())
      throw FormatError(name, lineno, "missing array field 'label'");

    std::string id;
    if (record.contains("id")) {
      const json& jid = record["id"];
      if (jid.is_string())
        id = jid.get<std::string>();
      else if (jid.is_number_integer())
        id = std::to_string(jid.get<long long>());
      else
        throw FormatError(name, lineno, "field 'id' is not string or int");
    } else {
      id = path_stem(name) + "-" + std::to_string(lineno);
    }

    Document doc = analyze(record["text"].get<std::string>(), id);
    std::vector<CharRange> ranges;
    for (const json& entry : record["label"]) {
      if (!entry.is_array() || entry.size() != 3 ||
          !entry[0].is_number_integer() || !entry[1].is_number_integer() ||
          !entry[2].is_string())
        throw FormatError(name, lineno,
                          "span entry is not [start, end, tag]");
      const long long start = entry[0].get<long long>();
      const long long end = entry[1].get<long long>();
      if (start < 0 || end < 0)
        throw FormatError(name, lineno, "negative span offset");
      const std::string tag = entry[2].get<std::string>();
      if (tag == "DS") {
        ranges.emplace_back(static_cast<std::size_t>(start),
                            static_cast<std::size_t>(end));
      } else if (warnings) {
        warnings->push_back(name + ":" + std::to_string(lineno) +
                            ": ignored span with tag '" + tag + "'");
      }
    }
    try {
      LabelSeq labels = char_spans_to_labels(doc, ranges);
      out.emplace_back(std::move(doc), std::move(labels));
    } catch (const ValidationError& e) {
      throw FormatError(name, lineno, e.what());
    }
  }
  return out;
}

std::vector<std::pair<Document, LabelSeq>> read_span_jsonl(
    const std::string& path, std::vector<std::string>* warnings) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError(path, 0, "cannot open file");
  return read_span_jsonl(in, path, warnings);
}

CorpusStats corpus_stats(
    const std::vector<std::pair<Document, LabelSeq>>& files) {
  if (files.empty()) throw ValidationError("empty corpus");
  CorpusStats stats;
  stats.file_count = files.size();
  std::vector<double> percents;
  percents.reserve(files.size());
  for (const auto& [doc, labels] : files) {
    stats.token_count += doc.tokens.size();
    stats.sentence_count += doc.sentences.size();
    std::size_t ds = 0;
    for (Label l : labels)
      if (l == Label::DS) ++ds;
    percents.push_back(doc.tokens.empty()
                           ? 0.0
                           : 100.0 * static_cast<double>(ds) /
                                 static_cast<double>(doc.tokens.size()));
  }
  double mean = 0.0;
  for (double p : percents) mean += p;
  mean /= static_cast<double>(percents.size());
  double var = 0.0;
  for (double p : percents) var += (p - mean) * (p - mean);
  var /= static_cast<double>(percents.size());
  stats.ds_percent_mean = mean;
  stats.ds_percent_std = std::sqrt(var);
  return stats;
}

FileMetrics compute_file_metrics(const LabelSeq& gold, const LabelSeq& pred,
                                 const ZmeConfig& cfg) {
  FileMetrics m;
  m.token = token_prf(gold, pred);
  m.ssm = ssm_prf(gold, pred);
  const ZmeResult z = zme(gold, pred, cfg);
  m.zme_score = z.score;
  m.zme_error_mass = z.numerator;
  m.zme_breakdown = z.breakdown;
  m.token_count = static_cast<long long>(gold.size());
  m.zme_gt_tokens = 0;
  for (Label l : gold)
    if (l == Label::DS) ++m.zme_gt_tokens;
  return m;
}

namespace {

const std::vector<GroupKind>& all_kinds() {
  static const std::vector<GroupKind> kinds = {
      GroupKind::Match, GroupKind::Miss, GroupKind::FalseAlarm,
      GroupKind::Split, GroupKind::Merge};
  return kinds;
}

AggStat agg(const std::vector<double>& values) {
  AggStat a;
  if (values.empty()) return a;
  for (double v : values) a.mean += v;
  a.mean /= static_cast<double>(values.size());
  double var = 0.0;
  for (double v : values) var += (v - a.mean) * (v - a.mean);
  var /= static_cast<double>(values.size());
  a.stddev = std::sqrt(var);
  return a;
}

}  // namespace

EvalReport build_eval_report(
    std::vector<std::pair<std::string, FileMetrics>> per_file,
    const ZmeConfig& cfg) {
  if (per_file.empty())
    throw ValidationError("report needs at least one file");
  std::sort(per_file.begin(), per_file.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (std::size_t i = 1; i < per_file.size(); ++i)
    if (per_file[i - 1].first == per_file[i].first)
      throw ValidationError("duplicate file id: " + per_file[i].first);

  EvalReport report;

  // Pooled bundle: summed confusion counts and summed ZME masses.
  long long tok_tp = 0, tok_fp = 0, tok_fn = 0;
  long long ssm_tp = 0, ssm_fp = 0, ssm_fn = 0;
  Rational error_mass = 0;
  long long gt_tokens = 0, token_total = 0;
  std::map<GroupKind, Rational> breakdown;
  for (GroupKind k : all_kinds()) breakdown[k] = 0;
  for (const auto& [id, m] : per_file) {
    tok_tp += m.token.tp;
    tok_fp += m.token.fp;
    tok_fn += m.token.fn;
    ssm_tp += m.ssm.tp;
    ssm_fp += m.ssm.fp;
    ssm_fn += m.ssm.fn;
    error_mass += m.zme_error_mass;
    gt_tokens += m.zme_gt_tokens;
    token_total += m.token_count;
    for (const auto& [kind, value] : m.zme_breakdown)
      breakdown[kind] += value;
  }
  FileMetrics& overall = report.overall;
  overall.token = PRF::from_counts(tok_tp, tok_fp, tok_fn);
  overall.ssm = PRF::from_counts(ssm_tp, ssm_fp, ssm_fn);
  overall.zme_error_mass = error_mass;
  overall.zme_gt_tokens = gt_tokens;
  overall.token_count = token_total;
  overall.zme_breakdown = breakdown;
  if (gt_tokens > 0)
    overall.zme_score = error_mass / Rational(gt_tokens);
  else if (error_mass == 0)
    overall.zme_score = 0;
  else if (cfg.empty_gold == EmptyGoldPolicy::normalize_by_tokens)
    overall.zme_score = error_mass / Rational(token_total);
  else
    overall.zme_score = error_mass;

  // Per-file means and population standard deviations.
  auto collect = [&](auto getter) {
    std::vector<double> values;
    values.reserve(per_file.size());
    for (const auto& [id, m] : per_file) values.push_back(getter(m));
    return agg(values);
  };
  report.averaged = {
      {"token_precision",
       collect([](const FileMetrics& m) { return m.token.precision; })},
      {"token_recall",
       collect([](const FileMetrics& m) { return m.token.recall; })},
      {"token_f1", collect([](const FileMetrics& m) { return m.token.f1; })},
      {"ssm_precision",
       collect([](const FileMetrics& m) { return m.ssm.precision; })},
      {"ssm_recall",
       collect([](const FileMetrics& m) { return m.ssm.recall; })},
      {"ssm_f1", collect([](const FileMetrics& m) { return m.ssm.f1; })},
      {"zme",
       collect([](const FileMetrics& m) { return to_double(m.zme_score); })},
  };
  for (GroupKind k : all_kinds()) {
    report.averaged.emplace_back(
        std::string("zme_") + to_string(k), collect([k](const FileMetrics& m) {
          return to_double(m.zme_breakdown.at(k));
        }));
  }

  report.per_file = std::move(per_file);
  return report;
}

namespace {

std::string fmt6(double v) {
  if (v == 0.0) v = 0.0;  // collapse negative zero
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

std::string json_string(const std::string& s) {
  return nlohmann::json(s).dump();
}

void append_bundle_json(std::ostringstream& out, const FileMetrics& m,
                        const std::string& indent) {
  auto prf = [&](const char* name, const PRF& p, const char* tail) {
    out << indent << "  \"" << name << "\": {\"precision\": "
        << fmt6(p.precision) << ", \"recall\": " << fmt6(p.recall)
        << ", \"f1\": " << fmt6(p.f1) << ", \"tp\": " << p.tp
        << ", \"fp\": " << p.fp << ", \"fn\": " << p.fn << "}" << tail
        << "\n";
  };
  out << indent << "{\n";
  prf("token", m.token, ",");
  prf("ssm", m.ssm, ",");
  out << indent << "  \"zme\": {\"score\": " << format_fixed(m.zme_score)
      << ", \"error_mass\": " << format_fixed(m.zme_error_mass)
      << ", \"gt_tokens\": " << m.zme_gt_tokens << ", \"breakdown\": {";
  bool first = true;
  for (const auto& [kind, value] : m.zme_breakdown) {
    if (!first) out << ", ";
    first = false;
    out << "\"" << to_string(kind) << "\": " << format_fixed(value);
  }
  out << "}}\n" << indent << "}";
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

}  // namespace

std::string render_report(const EvalReport& report, ReportFormat format) {
  if (report.per_file.empty())
    throw ValidationError("report needs at least one file");

  std::ostringstream out;
  if (format == ReportFormat::csv) {
    out << "file,metric,value\n";
    for (const auto& [id, m] : report.per_file) {
      const std::string file = csv_field(id);
      auto row = [&](const std::string& metric, const std::string& value) {
        out << file << ',' << metric << ',' << value << '\n';
      };
      row("token_precision", fmt6(m.token.precision));
      row("token_recall", fmt6(m.token.recall));
      row("token_f1", fmt6(m.token.f1));
      row("ssm_precision", fmt6(m.ssm.precision));
      row("ssm_recall", fmt6(m.ssm.recall));
      row("ssm_f1", fmt6(m.ssm.f1));
      row("zme", format_fixed(m.zme_score));
      for (const auto& [kind, value] : m.zme_breakdown)
        row(std::string("zme_") + to_string(kind), format_fixed(value));
    }
    return out.str();
  }

  out << "{\n  \"overall\":\n";
  append_bundle_json(out, report.overall, "  ");
  out << ",\n  \"averaged\": {\n";
  for (std::size_t i = 0; i < report.averaged.size(); ++i) {
    const auto& [name, stat] = report.averaged[i];
    out << "    \"" << name << "\": {\"mean\": " << fmt6(stat.mean)
        << ", \"std\": " << fmt6(stat.stddev) << "}"
        << (i + 1 < report.averaged.size() ? "," : "") << "\n";
  }
  out << "  },\n  \"per_file\": {\n";
  for (std::size_t i = 0; i < report.per_file.size(); ++i) {
    const auto& [id, m] = report.per_file[i];
    out << "    " << json_string(id) << ":\n";
    append_bundle_json(out, m, "    ");
    out << (i + 1 < report.per_file.size() ? "," : "") << "\n";
  }
  out << "  }\n}\n";
  return out.str();
}

void write_report(const EvalReport& report, const std::string& path,
                  ReportFormat format) {
  const std::string body = render_report(report, format);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ValidationError("cannot write file: " + path);
  out << body;
  out.flush();
  if (!out) throw ValidationError("write failed: " + path);
}

}  // namespace frds
