#include "frds/regex_detect.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace frds {

MarkerInventory MarkerInventory::defaults() {
  MarkerInventory inv;
  inv.quote_pairs = {{"«", "»"},
                     {"“", "”"},
                     {"\"", "\""},
                     {"‹", "›"},
                     {"„", "“"}};
  inv.dash_markers = {"—", "–", "--"};
  return inv;
}

MarkerInventory MarkerInventory::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError(path, 0, "cannot open marker file");
  MarkerInventory inv;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const std::size_t hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);
    std::istringstream fields(line);
    std::string a, b, extra;
    if (!(fields >> a)) continue;  // blank line
    if (fields >> b) {
      if (fields >> extra)
        throw FormatError(path, lineno, "expected one or two fields");
      inv.quote_pairs.emplace_back(a, b);
    } else {
      inv.dash_markers.push_back(a);
    }
  }
  return inv;
}

std::vector<Paragraph> split_paragraphs(const Document& doc) {
  std::vector<Paragraph> paragraphs;
  const std::size_t n = doc.tokens.size();
  std::size_t i = 0;
  while (i < n) {
    if (doc.tokens[i].is_newline) {
      ++i;
      continue;
    }
    std::size_t j = i + 1;
    while (j < n && !doc.tokens[j].is_newline) ++j;
    paragraphs.push_back({i, j});
    i = j;
  }
  return paragraphs;
}

namespace {

bool contains(const std::vector<std::string>& v, const std::string& s) {
  return std::find(v.begin(), v.end(), s) != v.end();
}

// First paragraph token that is a word or a dash marker; leading
// punctuation of other kinds is skipped. Returns para.end if none.
std::size_t first_salient_token(const Document& doc, const Paragraph& para,
                                const std::vector<std::string>& dashes) {
  for (std::size_t k = para.begin; k < para.end; ++k) {
    const Token& t = doc.tokens[k];
    if (t.is_punct && !contains(dashes, t.text)) continue;
    return k;
  }
  return para.end;
}

// Nearest-match, non-nested scan of one quote pair over one paragraph.
// Each pair type scans independently of the others; markers inside an open
// region (including same-type openers) are ignored until the closer.
void apply_pair_rule(const Document& doc, const Paragraph& para,
                     const std::string& open, const std::string& close,
                     bool include_markers, LabelSeq& labels) {
  auto mark = [&](std::size_t open_idx, std::size_t end_excl, bool closed) {
    std::size_t label_begin = include_markers ? open_idx : open_idx + 1;
    std::size_t label_end = end_excl;
    if (!include_markers && closed) --label_end;
    for (std::size_t k = label_begin; k < label_end; ++k)
      labels[k] = Label::DS;
  };

  bool in_region = false;
  std::size_t open_at = 0;
  for (std::size_t k = para.begin; k < para.end; ++k) {
    const std::string& text = doc.tokens[k].text;
    if (!in_region) {
      if (text == open) {
        in_region = true;
        open_at = k;
      }
    } else if (text == close) {
      mark(open_at, k + 1, /*closed=*/true);
      in_region = false;
    }
  }
  // An unclosed opener runs to the paragraph end.
  if (in_region) mark(open_at, para.end, /*closed=*/false);
}

void apply_dash_rule(const Document& doc, const Paragraph& para,
                     const std::string& dash,
                     const std::vector<std::string>& all_dashes,
                     bool include_markers, LabelSeq& labels) {
  const std::size_t k = first_salient_token(doc, para, all_dashes);
  if (k == para.end || doc.tokens[k].text != dash) return;
  for (std::size_t t = include_markers ? k : k + 1; t < para.end; ++t)
    labels[t] = Label::DS;
}

}  // namespace

LabelSeq detect_multi_marker(const Document& doc, const MarkerInventory& inv,
                             bool include_markers) {
  LabelSeq labels(doc.tokens.size(), Label::O);
  for (const Paragraph& para : split_paragraphs(doc)) {
    for (const auto& [open, close] : inv.quote_pairs)
      apply_pair_rule(doc, para, open, close, include_markers, labels);
    for (const std::string& dash : inv.dash_markers)
      apply_dash_rule(doc, para, dash, inv.dash_markers, include_markers,
                      labels);
  }
  return labels;
}

LabelSeq detect_dominant_marker(const Document& doc,
                                const MarkerInventory& inv,
                                bool include_markers) {
  const std::vector<Paragraph> paragraphs = split_paragraphs(doc);

  // Occurrences of each type's opening marker; dashes count only when they
  // open a paragraph.
  std::vector<std::size_t> counts(inv.quote_pairs.size() +
                                      inv.dash_markers.size(),
                                  0);
  for (std::size_t p = 0; p < inv.quote_pairs.size(); ++p) {
    const std::string& open = inv.quote_pairs[p].first;
    for (const Token& t : doc.tokens)
      if (t.text == open) ++counts[p];
  }
  for (const Paragraph& para : paragraphs) {
    const std::size_t k = first_salient_token(doc, para, inv.dash_markers);
    if (k == para.end) continue;
    for (std::size_t d = 0; d < inv.dash_markers.size(); ++d)
      if (doc.tokens[k].text == inv.dash_markers[d])
        ++counts[inv.quote_pairs.size() + d];
  }

  LabelSeq labels(doc.tokens.size(), Label::O);
  const auto best = std::max_element(counts.begin(), counts.end());
  if (best == counts.end() || *best == 0) return labels;
  const std::size_t selected =
      static_cast<std::size_t>(best - counts.begin());

  for (const Paragraph& para : paragraphs) {
    if (selected < inv.quote_pairs.size()) {
      const auto& [open, close] = inv.quote_pairs[selected];
      apply_pair_rule(doc, para, open, close, include_markers, labels);
    } else {
      const std::string& dash =
          inv.dash_markers[selected - inv.quote_pairs.size()];
      apply_dash_rule(doc, para, dash, inv.dash_markers, include_markers,
                      labels);
    }
  }
  return labels;
}

}  // namespace frds
