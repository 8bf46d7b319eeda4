#ifndef FRDS_ZONEMAP_HPP
#define FRDS_ZONEMAP_HPP

#include <map>
#include <utility>
#include <vector>

#include "frds/core.hpp"
#include "frds/rational.hpp"

namespace frds {

// What to report for a file whose ground truth has no DS at all (the score
// denominator vanishes there): either stay at zero only for a clean
// prediction, or fall back to normalizing the error mass by token count.
enum class EmptyGoldPolicy { zero_if_clean, normalize_by_tokens };

struct ZmeConfig {
  Rational alpha_ms = Rational(1, 2);  // Split/Merge mitigation, in [0,1]
  EmptyGoldPolicy empty_gold = EmptyGoldPolicy::normalize_by_tokens;
  // The classification term of the source metric is fixed to zero here:
  // with binary labels only the segmentation error remains.
};

enum class GroupKind { Match, Miss, FalseAlarm, Split, Merge };

const char* to_string(GroupKind k);

// Affinity between one ground-truth and one predicted span; zero links are
// never materialized.
struct GroupLink {
  std::size_t gt_index = 0;
  std::size_t pred_index = 0;
  Rational force;
};

// Cluster of spans with one of the five shapes: Match 1-1, Miss 1-0,
// FalseAlarm 0-1, Split 1-many, Merge many-1. Never many-many.
struct Group {
  std::vector<Span> gt_spans;
  std::vector<Span> pred_spans;
  GroupKind kind = GroupKind::Match;
};

// (overlap/|gt|)^2 + (overlap/|pred|)^2; 0 when disjoint.
Rational link_force(const Span& gt, const Span& pred);

// All positive-force links, sorted by force descending with ties broken by
// (gt index, pred index) ascending. Inputs must be sorted and disjoint.
std::vector<GroupLink> collect_links(const std::vector<Span>& gt,
                                     const std::vector<Span>& pred);

// Processes links in collect_links order, merging endpoint groups unless
// the result would hold two or more spans on both sides; leftover spans
// become Miss / FalseAlarm groups. Output is ordered by token position.
std::vector<Group> build_groups(const std::vector<Span>& gt,
                                const std::vector<Span>& pred);

// Error mass of one group, in tokens.
Rational group_error(const Group& g, const ZmeConfig& cfg);

struct ZmeResult {
  Rational score;
  Rational numerator;    // sum of all group contributions
  Rational denominator;  // gt DS token mass, or the empty-gold fallback
  std::vector<std::pair<Group, Rational>> per_group;
  std::map<GroupKind, Rational> breakdown;  // all five kinds always keyed
};

ZmeResult zme(const LabelSeq& gt_labels, const LabelSeq& pred_labels,
              const ZmeConfig& cfg = {});

}  // namespace frds

#endif
