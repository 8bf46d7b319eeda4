#ifndef FRDS_CORE_HPP
#define FRDS_CORE_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "frds/errors.hpp"

namespace frds {

// Per-token binary annotation: narration (O) or direct speech (DS).
enum class Label : std::uint8_t { O = 0, DS = 1 };

using LabelSeq = std::vector<Label>;

struct Token {
  std::string text;
  std::size_t char_start = 0;  // code-point offset into the source text
  std::size_t char_end = 0;    // exclusive
  bool is_punct = false;
  bool is_newline = false;
};

// Half-open token-index interval.
struct Sentence {
  std::size_t begin = 0;
  std::size_t end = 0;
};

struct Document {
  std::string id;    // file name stem
  std::string text;  // original UTF-8 source
  std::vector<Token> tokens;
  std::vector<Sentence> sentences;
};

// Maximal run of DS tokens, as a half-open token-index interval.
struct Span {
  std::size_t start = 0;
  std::size_t end = 0;

  std::size_t length() const { return end - start; }
  bool operator==(const Span&) const = default;
};

// Extracts the maximal DS runs in ascending order.
std::vector<Span> labels_to_spans(const LabelSeq& seq);

// Inverse of labels_to_spans. Spans must be pairwise disjoint and inside
// [0, len); adjacent spans are legal and simply fuse in the output.
LabelSeq spans_to_labels(const std::vector<Span>& spans, std::size_t len);

// Character range over the document text, half-open, in code points.
using CharRange = std::pair<std::size_t, std::size_t>;

// Projects character-offset annotations onto tokens: a token is DS iff it
// overlaps any range by at least one character.
LabelSeq char_spans_to_labels(const Document& doc,
                              const std::vector<CharRange>& ranges);

// Throws ValidationError when the document breaks a structural invariant
// (unsorted or overlapping tokens, sentences not partitioning the tokens).
void validate_document(const Document& doc);

}  // namespace frds

#endif
