#include "frds/textproc.hpp"

#include "frds/unicode.hpp"

namespace frds {

Document tokenize(std::string_view text, std::string id) {
  Document doc;
  doc.id = std::move(id);
  doc.text.assign(text.begin(), text.end());
  const std::u32string chars = decode_utf8(text);
  const std::size_t n = chars.size();

  auto emit = [&](std::size_t start, std::size_t end, bool punct,
                  bool newline) {
    doc.tokens.push_back(
        {encode_utf8(std::u32string_view(chars).substr(start, end - start)),
         start, end, punct, newline});
  };

  std::size_t i = 0;
  while (i < n) {
    const char32_t c = chars[i];
    if (is_newline_char(c)) {
      emit(i, i + 1, false, true);
      ++i;
      continue;
    }
    if (is_space_char(c)) {
      ++i;
      continue;
    }
    if (is_punct_char(c)) {
      if (c == U'.' && i + 2 < n && chars[i + 1] == U'.' &&
          chars[i + 2] == U'.') {
        emit(i, i + 3, true, false);
        i += 3;
        continue;
      }
      if (c == U'-' && i + 1 < n && chars[i + 1] == U'-') {
        emit(i, i + 2, true, false);
        i += 2;
        continue;
      }
      emit(i, i + 1, true, false);
      ++i;
      continue;
    }
    // Word run. An apostrophe inside the run attaches to it and closes the
    // token, which keeps French elisions such as "l'" together.
    const std::size_t start = i;
    while (i < n) {
      const char32_t w = chars[i];
      if (is_newline_char(w) || is_space_char(w) || is_punct_char(w)) {
        if (is_apostrophe_char(w)) ++i;
        break;
      }
      ++i;
    }
    emit(start, i, false, false);
  }
  return doc;
}

namespace {

bool is_terminal_token(const Token& t) {
  return t.is_punct && (t.text == "." || t.text == "!" || t.text == "?" ||
                        t.text == "…" || t.text == "...");
}

bool is_closing_quote_token(const Token& t) {
  return t.is_punct &&
         (t.text == "»" || t.text == "”" || t.text == "\"" ||
          t.text == "'" || t.text == "’" || t.text == "›" ||
          t.text == "“");
}

}  // namespace

Document split_sentences(Document doc) {
  doc.sentences.clear();
  const std::vector<Token>& toks = doc.tokens;
  const std::size_t n = toks.size();
  std::size_t start = 0;
  std::size_t i = 0;
  while (i < n) {
    if (toks[i].is_newline) {
      doc.sentences.push_back({start, i + 1});
      start = i + 1;
      ++i;
      continue;
    }
    if (is_terminal_token(toks[i])) {
      std::size_t j = i + 1;
      while (j < n && is_closing_quote_token(toks[j])) ++j;
      doc.sentences.push_back({start, j});
      start = j;
      i = j;
      continue;
    }
    ++i;
  }
  if (start < n) doc.sentences.push_back({start, n});
  return doc;
}

Document analyze(std::string_view text, std::string id) {
  return split_sentences(tokenize(text, std::move(id)));
}

std::vector<Segment> informed_segment(const Document& doc,
                                      std::size_t max_tokens,
                                      std::vector<std::string>* warnings) {
  if (max_tokens == 0)
    throw ValidationError("segment token budget must be at least 1");
  std::vector<Segment> segments;
  Segment cur{};
  bool open = false;
  for (std::size_t s = 0; s < doc.sentences.size(); ++s) {
    const std::size_t sentence_tokens =
        doc.sentences[s].end - doc.sentences[s].begin;
    if (open && cur.token_count + sentence_tokens <= max_tokens) {
      cur.sentence_end = s + 1;
      cur.token_count += sentence_tokens;
      continue;
    }
    if (open) segments.push_back(cur);
    cur = {s, s + 1, sentence_tokens};
    open = true;
    if (sentence_tokens > max_tokens && warnings) {
      warnings->push_back(doc.id + ": sentence " + std::to_string(s) +
                          " has " + std::to_string(sentence_tokens) +
                          " tokens, above the budget of " +
                          std::to_string(max_tokens));
    }
  }
  if (open) segments.push_back(cur);
  return segments;
}

}  // namespace frds
