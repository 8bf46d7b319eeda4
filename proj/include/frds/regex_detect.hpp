#ifndef FRDS_REGEX_DETECT_HPP
#define FRDS_REGEX_DETECT_HPP

#include <string>
#include <utility>
#include <vector>

#include "frds/core.hpp"

namespace frds {

// Quotation-mark pairs and dialogue dashes recognized by the detectors.
// Entries are compared against whole token texts. Order matters: it is the
// scan order of detect_multi_marker and the tie-break of the dominant-type
// selection (pairs first, dashes after).
struct MarkerInventory {
  std::vector<std::pair<std::string, std::string>> quote_pairs;
  std::vector<std::string> dash_markers;

  static MarkerInventory defaults();

  // Plain-text config, one entry per line: two whitespace-separated fields
  // make a quote pair, one field makes a dash marker. '#' starts a comment.
  static MarkerInventory from_file(const std::string& path);
};

// Maximal run of non-newline tokens.
struct Paragraph {
  std::size_t begin = 0;
  std::size_t end = 0;
};

std::vector<Paragraph> split_paragraphs(const Document& doc);

// Labels DS per paragraph: regions enclosed by any inventory pair
// (nearest-match, non-nested per pair type; an unclosed opener runs to the
// paragraph end) and paragraphs opened by a dialogue dash. Every rule scans
// independently; the output is their union. include_markers controls
// whether the delimiter tokens themselves are labelled DS.
LabelSeq detect_multi_marker(const Document& doc, const MarkerInventory& inv,
                             bool include_markers = true);

// Counts each inventory type over the whole document, keeps only the most
// frequent one (ties resolve to the earlier inventory position) and labels
// with that single type's rule. All O when the document has no marker.
LabelSeq detect_dominant_marker(const Document& doc,
                                const MarkerInventory& inv,
                                bool include_markers = true);

}  // namespace frds

#endif
