#include "frds/clause_post.hpp"

namespace frds {

std::vector<Clause> split_clauses(const Document& doc) {
  std::vector<Clause> clauses;
  const std::size_t n = doc.tokens.size();
  std::size_t i = 0;
  auto is_delimiter = [&](std::size_t k) {
    return doc.tokens[k].is_punct || doc.tokens[k].is_newline;
  };
  while (i < n) {
    if (is_delimiter(i)) {
      ++i;
      continue;
    }
    std::size_t j = i + 1;
    while (j < n && !is_delimiter(j)) ++j;
    clauses.push_back({i, j});
    i = j;
  }
  return clauses;
}

LabelSeq enforce_clause_consistency(const Document& doc,
                                    const LabelSeq& pred) {
  if (pred.size() != doc.tokens.size())
    throw ValidationError("label sequence length " +
                          std::to_string(pred.size()) +
                          " does not match token count " +
                          std::to_string(doc.tokens.size()));
  LabelSeq out = pred;
  for (const Clause& clause : split_clauses(doc)) {
    std::size_t ds = 0;
    for (std::size_t k = clause.begin; k < clause.end; ++k)
      if (pred[k] == Label::DS) ++ds;
    const std::size_t total = clause.end - clause.begin;
    const std::size_t o = total - ds;
    if (ds == o) continue;  // exact tie: leave the clause as predicted
    const Label winner = ds > o ? Label::DS : Label::O;
    for (std::size_t k = clause.begin; k < clause.end; ++k) out[k] = winner;
  }
  return out;
}

}  // namespace frds
