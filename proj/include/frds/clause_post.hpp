#ifndef FRDS_CLAUSE_POST_HPP
#define FRDS_CLAUSE_POST_HPP

#include <vector>

#include "frds/core.hpp"

namespace frds {

// Maximal run of word tokens between two punctuation or newline delimiters.
struct Clause {
  std::size_t begin = 0;
  std::size_t end = 0;
};

std::vector<Clause> split_clauses(const Document& doc);

// Majority vote per clause: when one label strictly outnumbers the other
// the whole clause takes it; exact ties stay as predicted. Delimiter tokens
// are never touched. Idempotent.
LabelSeq enforce_clause_consistency(const Document& doc,
                                    const LabelSeq& pred);

}  // namespace frds

#endif
