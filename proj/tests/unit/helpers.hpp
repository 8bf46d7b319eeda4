#ifndef FRDS_TESTS_HELPERS_HPP
#define FRDS_TESTS_HELPERS_HPP

#include <random>
#include <string>
#include <vector>

#include "frds/core.hpp"

namespace frds_test {

// 'D' -> DS, anything else -> O.
inline frds::LabelSeq labels(const std::string& compact) {
  frds::LabelSeq out;
  out.reserve(compact.size());
  for (char c : compact)
    out.push_back(c == 'D' ? frds::Label::DS : frds::Label::O);
  return out;
}

inline frds::LabelSeq random_labels(std::mt19937& rng, std::size_t len,
                                    double p_ds = 0.5) {
  std::bernoulli_distribution coin(p_ds);
  frds::LabelSeq out(len);
  for (auto& l : out) l = coin(rng) ? frds::Label::DS : frds::Label::O;
  return out;
}

// n single-letter word tokens in one sentence; enough structure for code
// that only looks at labels and token kinds.
inline frds::Document word_doc(std::size_t n) {
  frds::Document doc;
  doc.id = "doc";
  for (std::size_t i = 0; i < n; ++i) {
    doc.tokens.push_back({"w", 2 * i, 2 * i + 1, false, false});
    if (i) doc.text += ' ';
    doc.text += 'w';
  }
  if (n) doc.sentences.push_back({0, n});
  return doc;
}

// Synthetic document with the given sentence lengths (in tokens).
inline frds::Document doc_with_sentences(
    const std::vector<std::size_t>& lengths) {
  frds::Document doc;
  doc.id = "doc";
  std::size_t pos = 0;
  for (std::size_t len : lengths) {
    const std::size_t begin = doc.tokens.size();
    for (std::size_t i = 0; i < len; ++i, ++pos)
      doc.tokens.push_back({"w", 2 * pos, 2 * pos + 1, false, false});
    doc.sentences.push_back({begin, doc.tokens.size()});
  }
  return doc;
}

}  // namespace frds_test

#endif
