#include <filesystem>
#include <fstream>
#include <random>
#include <string>
#include <vector>

#include "doctest.h"
#include "frds/errors.hpp"
#include "frds/regex_detect.hpp"
#include "frds/textproc.hpp"
#include "helpers.hpp"

using namespace frds;
using frds_test::labels;

TEST_SUITE("regex_detect") {

TEST_CASE("paragraphs are maximal runs between newlines") {
  const Document doc = analyze("a\nb c");
  const std::vector<Paragraph> paras = split_paragraphs(doc);
  REQUIRE(paras.size() == 2);
  CHECK(paras[0].begin == 0);
  CHECK(paras[0].end == 1);
  CHECK(paras[1].begin == 2);
  CHECK(paras[1].end == 4);

  CHECK(split_paragraphs(analyze("a b c")).size() == 1);
  // Consecutive newlines produce no empty paragraph.
  const std::vector<Paragraph> gap = split_paragraphs(analyze("a\n\nb"));
  REQUIRE(gap.size() == 2);
  CHECK(gap[0].end == 1);
  CHECK(gap[1].begin == 3);
}

TEST_CASE("quoted region is speech, markers included by default") {
  const Document doc = analyze("« Oui » dit-il");
  const MarkerInventory inv = MarkerInventory::defaults();
  CHECK(detect_multi_marker(doc, inv) == labels("DDDOOO"));
  CHECK(detect_multi_marker(doc, inv, false) == labels("ODOOOO"));
}

TEST_CASE("dash-opened paragraph is speech to its end") {
  const Document doc = analyze("— Va-t'en !");
  const MarkerInventory inv = MarkerInventory::defaults();
  // — Va - t' en !
  CHECK(detect_multi_marker(doc, inv) == labels("DDDDDD"));
  CHECK(detect_multi_marker(doc, inv, false) == labels("ODDDDD"));
}

TEST_CASE("markerless text stays narration") {
  const Document doc = analyze("Il pleut. Rien ne bouge.");
  const MarkerInventory inv = MarkerInventory::defaults();
  CHECK(detect_multi_marker(doc, inv) ==
        LabelSeq(doc.tokens.size(), Label::O));
  CHECK(detect_dominant_marker(doc, inv) ==
        LabelSeq(doc.tokens.size(), Label::O));
}

TEST_CASE("an unclosed opener runs to the paragraph end") {
  const Document doc = analyze("« Oui\npuis rien");
  const MarkerInventory inv = MarkerInventory::defaults();
  // « Oui \n puis rien — the region stops at the line break.
  CHECK(detect_multi_marker(doc, inv) == labels("DDOOO"));
}

TEST_CASE("pairs match nearest-first without nesting") {
  const Document doc = analyze("« a » b « c »");
  const MarkerInventory inv = MarkerInventory::defaults();
  CHECK(detect_multi_marker(doc, inv) == labels("DDDODDD"));
}

TEST_CASE("straight quotes toggle") {
  const Document doc = analyze("\" a \" b \" c");
  const MarkerInventory inv = MarkerInventory::defaults();
  // Third quote reopens and never closes.
  CHECK(detect_multi_marker(doc, inv) == labels("DDDODD"));
}

TEST_CASE("leading non-dash punctuation does not hide a dialogue dash") {
  const Document doc = analyze("... — oui");
  const MarkerInventory inv = MarkerInventory::defaults();
  CHECK(detect_multi_marker(doc, inv) == labels("ODD"));
}

TEST_CASE("a dash after a word is not a dialogue opening") {
  const Document doc = analyze("il dit — rien");
  const MarkerInventory inv = MarkerInventory::defaults();
  CHECK(detect_multi_marker(doc, inv) == labels("OOOO"));
}

TEST_CASE("labelling is paragraph-local") {
  const MarkerInventory inv = MarkerInventory::defaults();
  const Document ab = analyze("« a »\n— b c");
  const Document ba = analyze("— b c\n« a »");
  // Excluding markers keeps the two paragraphs distinguishable.
  CHECK(detect_multi_marker(ab, inv, false) == labels("ODOOODD"));
  CHECK(detect_multi_marker(ba, inv, false) == labels("ODDOODO"));
}

TEST_CASE("dominant marker keeps only the most frequent type") {
  const MarkerInventory inv = MarkerInventory::defaults();
  // Two « against a single ".
  const Document doc = analyze("« a » x « b » \" c");
  CHECK(detect_dominant_marker(doc, inv) == labels("DDDODDDOO"));
  // The multi-marker rule set also applies the unclosed straight quote.
  CHECK(detect_multi_marker(doc, inv) == labels("DDDODDDDD"));
}

TEST_CASE("dominant tie resolves to the earlier inventory entry") {
  const MarkerInventory inv = MarkerInventory::defaults();
  // Two « tokens and two " tokens; «» comes first in the inventory.
  const Document doc = analyze("« a » « b » \" c \"");
  CHECK(detect_dominant_marker(doc, inv) == labels("DDDDDDOOO"));
}

TEST_CASE("dashes count only at paragraph starts") {
  const MarkerInventory inv = MarkerInventory::defaults();
  const Document doc = analyze("— a\nb — c\n— d");
  // Paragraph 2's dash is mid-paragraph: neither counted nor applied.
  CHECK(detect_dominant_marker(doc, inv) == labels("DDOOOOODD"));
}

TEST_CASE("dominant labels are a subset of multi-marker labels") {
  const MarkerInventory inv = MarkerInventory::defaults();
  const std::vector<std::string> alphabet = {
      "«", "»", "\"", "—", "a", "b", "c", "\n", "“", "”", "--", "‹", "›"};
  std::mt19937 rng(5);
  std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
  for (int iter = 0; iter < 300; ++iter) {
    std::string text;
    const std::size_t n = 1 + iter % 40;
    for (std::size_t i = 0; i < n; ++i) {
      text += alphabet[pick(rng)];
      text += ' ';
    }
    const Document doc = analyze(text);
    for (const bool inc : {true, false}) {
      const LabelSeq multi = detect_multi_marker(doc, inv, inc);
      const LabelSeq dominant = detect_dominant_marker(doc, inv, inc);
      REQUIRE(multi.size() == dominant.size());
      for (std::size_t t = 0; t < multi.size(); ++t)
        if (dominant[t] == Label::DS) CHECK(multi[t] == Label::DS);
    }
  }
}

TEST_CASE("marker inventory loads from a plain-text file") {
  namespace fs = std::filesystem;
  const fs::path path = fs::temp_directory_path() / "frds_markers_test.txt";
  {
    std::ofstream out(path);
    out << "# comment line\n"
        << "« »   # guillemets\n"
        << "—\n"
        << "\n"
        << "\" \"\n"
        << "--\n";
  }
  const MarkerInventory inv = MarkerInventory::from_file(path.string());
  REQUIRE(inv.quote_pairs.size() == 2);
  CHECK(inv.quote_pairs[0] == std::pair<std::string, std::string>("«", "»"));
  CHECK(inv.quote_pairs[1] ==
        std::pair<std::string, std::string>("\"", "\""));
  REQUIRE(inv.dash_markers.size() == 2);
  CHECK(inv.dash_markers[0] == "—");
  CHECK(inv.dash_markers[1] == "--");
  fs::remove(path);

  CHECK_THROWS_AS(MarkerInventory::from_file("/nonexistent/markers.txt"),
                  FormatError);

  const fs::path bad = fs::temp_directory_path() / "frds_markers_bad.txt";
  {
    std::ofstream out(bad);
    out << "a b c\n";
  }
  CHECK_THROWS_AS(MarkerInventory::from_file(bad.string()), FormatError);
  fs::remove(bad);
}

}  // TEST_SUITE
