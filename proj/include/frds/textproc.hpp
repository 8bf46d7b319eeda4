#ifndef FRDS_TEXTPROC_HPP
#define FRDS_TEXTPROC_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "frds/core.hpp"

namespace frds {

// Deterministic tokenizer. Splits on whitespace; punctuation becomes
// single-character tokens except "..." and "--"; an apostrophe inside a
// word closes the token after it ("l'homme" -> "l'", "homme"); newline
// characters become synthetic tokens with is_newline set. Offsets count
// code points of the source. Sentences are left empty.
Document tokenize(std::string_view text, std::string id = "");

// Populates doc.sentences. A boundary falls after . ! ? … (optionally
// followed by closing quotes) and after every newline token; no sentence
// crosses a newline.
Document split_sentences(Document doc);

// tokenize + split_sentences in one call.
Document analyze(std::string_view text, std::string id = "");

// Run of whole sentences packed under a token budget.
struct Segment {
  std::size_t sentence_begin = 0;  // sentence indices, half-open
  std::size_t sentence_end = 0;
  std::size_t token_count = 0;
};

// Greedy packing in reading order: a sentence joins the open segment iff
// the budget max_tokens is not exceeded; a lone sentence longer than the
// budget becomes its own oversized segment and emits a warning.
std::vector<Segment> informed_segment(const Document& doc,
                                      std::size_t max_tokens,
                                      std::vector<std::string>* warnings =
                                          nullptr);

// Default token budget for the segmenter.
inline constexpr std::size_t kDefaultSegmentBudget = 192;

}  // namespace frds

#endif
