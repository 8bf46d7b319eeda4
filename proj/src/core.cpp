#include "frds/core.hpp"

#include <algorithm>

namespace frds {

std::vector<Span> labels_to_spans(const LabelSeq& seq) {
  std::vector<Span> spans;
  std::size_t i = 0;
  while (i < seq.size()) {
    if (seq[i] == Label::DS) {
      std::size_t j = i + 1;
      while (j < seq.size() && seq[j] == Label::DS) ++j;
      spans.push_back({i, j});
      i = j;
    } else {
      ++i;
    }
  }
  return spans;
}

LabelSeq spans_to_labels(const std::vector<Span>& spans, std::size_t len) {
  LabelSeq labels(len, Label::O);
  for (const Span& s : spans) {
    if (s.start >= s.end)
      throw ValidationError("empty or inverted span [" +
                            std::to_string(s.start) + "," +
                            std::to_string(s.end) + ")");
    if (s.end > len)
      throw ValidationError("span [" + std::to_string(s.start) + "," +
                            std::to_string(s.end) + ") exceeds length " +
                            std::to_string(len));
    for (std::size_t i = s.start; i < s.end; ++i) {
      if (labels[i] == Label::DS)
        throw ValidationError("overlapping spans at token " +
                              std::to_string(i));
      labels[i] = Label::DS;
    }
  }
  return labels;
}

LabelSeq char_spans_to_labels(const Document& doc,
                              const std::vector<CharRange>& ranges) {
  for (const CharRange& r : ranges) {
    if (r.first > r.second)
      throw ValidationError("inverted character range (" +
                            std::to_string(r.first) + "," +
                            std::to_string(r.second) + ")");
  }
  LabelSeq labels(doc.tokens.size(), Label::O);
  for (std::size_t t = 0; t < doc.tokens.size(); ++t) {
    const Token& tok = doc.tokens[t];
    for (const CharRange& r : ranges) {
      // Any overlap of at least one character marks the token; an empty
      // range has none to offer.
      if (r.first < r.second && tok.char_start < r.second &&
          r.first < tok.char_end) {
        labels[t] = Label::DS;
        break;
      }
    }
  }
  return labels;
}

void validate_document(const Document& doc) {
  for (std::size_t i = 0; i < doc.tokens.size(); ++i) {
    const Token& t = doc.tokens[i];
    if (t.char_start >= t.char_end)
      throw ValidationError(doc.id + ": token " + std::to_string(i) +
                            " has empty character range");
    if (i > 0 && doc.tokens[i - 1].char_end > t.char_start)
      throw ValidationError(doc.id + ": tokens " + std::to_string(i - 1) +
                            " and " + std::to_string(i) + " overlap");
  }
  std::size_t next = 0;
  for (std::size_t s = 0; s < doc.sentences.size(); ++s) {
    const Sentence& sent = doc.sentences[s];
    if (sent.begin != next || sent.begin >= sent.end)
      throw ValidationError(doc.id + ": sentence " + std::to_string(s) +
                            " breaks the token partition");
    next = sent.end;
  }
  if (next != doc.tokens.size() && !doc.sentences.empty())
    throw ValidationError(doc.id + ": sentences do not cover all tokens");
  if (doc.sentences.empty() && !doc.tokens.empty())
    throw ValidationError(doc.id + ": tokens without sentences");
}

}  // namespace frds
