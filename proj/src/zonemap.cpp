#include "frds/zonemap.hpp"

#include <algorithm>
#include <numeric>

namespace frds {

namespace {

long long overlap(const Span& a, const Span& b) {
  const std::size_t lo = std::max(a.start, b.start);
  const std::size_t hi = std::min(a.end, b.end);
  return hi > lo ? static_cast<long long>(hi - lo) : 0;
}

void validate_span_list(const std::vector<Span>& spans, const char* side) {
  for (std::size_t i = 0; i < spans.size(); ++i) {
    if (spans[i].start >= spans[i].end)
      throw ValidationError(std::string(side) + " span " +
                            std::to_string(i) + " is empty or inverted");
    if (i > 0 && spans[i - 1].end > spans[i].start)
      throw ValidationError(std::string(side) +
                            " spans are not sorted and disjoint");
  }
}

void validate_config(const ZmeConfig& cfg) {
  if (cfg.alpha_ms < 0 || cfg.alpha_ms > 1)
    throw ValidationError("alpha_ms must lie in [0,1]");
}

// Error of a Split group seen from the single span's side; Merge reuses it
// with the roles exchanged.
Rational fragmentation_error(const Span& whole,
                             const std::vector<Span>& parts,
                             const ZmeConfig& cfg) {
  long long inter_total = 0;
  long long max_inter = 0;
  long long parts_total = 0;
  for (const Span& p : parts) {
    const long long ov = overlap(whole, p);
    inter_total += ov;
    max_inter = std::max(max_inter, ov);
    parts_total += static_cast<long long>(p.length());
  }
  const long long union_size =
      static_cast<long long>(whole.length()) + parts_total - inter_total;
  const long long uncovered = union_size - inter_total;
  const long long mitigated = inter_total - max_inter;
  const long long n_parts = static_cast<long long>(parts.size());
  return Rational(uncovered) + cfg.alpha_ms * Rational(mitigated) *
                                   Rational(n_parts - 1, n_parts);
}

}  // namespace

const char* to_string(GroupKind k) {
  switch (k) {
    case GroupKind::Match:
      return "match";
    case GroupKind::Miss:
      return "miss";
    case GroupKind::FalseAlarm:
      return "false_alarm";
    case GroupKind::Split:
      return "split";
    case GroupKind::Merge:
      return "merge";
  }
  return "?";
}

Rational link_force(const Span& gt, const Span& pred) {
  const long long ov = overlap(gt, pred);
  if (ov == 0) return 0;
  const long long g = static_cast<long long>(gt.length());
  const long long p = static_cast<long long>(pred.length());
  return Rational(ov * ov, g * g) + Rational(ov * ov, p * p);
}

std::vector<GroupLink> collect_links(const std::vector<Span>& gt,
                                     const std::vector<Span>& pred) {
  validate_span_list(gt, "ground-truth");
  validate_span_list(pred, "predicted");
  std::vector<GroupLink> links;
  std::size_t j0 = 0;
  for (std::size_t i = 0; i < gt.size(); ++i) {
    while (j0 < pred.size() && pred[j0].end <= gt[i].start) ++j0;
    for (std::size_t j = j0; j < pred.size() && pred[j].start < gt[i].end;
         ++j) {
      Rational f = link_force(gt[i], pred[j]);
      if (f > 0) links.push_back({i, j, std::move(f)});
    }
  }
  std::sort(links.begin(), links.end(),
            [](const GroupLink& a, const GroupLink& b) {
              if (a.force != b.force) return a.force > b.force;
              if (a.gt_index != b.gt_index) return a.gt_index < b.gt_index;
              return a.pred_index < b.pred_index;
            });
  return links;
}

std::vector<Group> build_groups(const std::vector<Span>& gt,
                                const std::vector<Span>& pred) {
  const std::vector<GroupLink> links = collect_links(gt, pred);
  const std::size_t nt = gt.size();
  const std::size_t total = nt + pred.size();

  // Union-find over gt nodes [0,nt) and pred nodes [nt,total).
  std::vector<std::size_t> parent(total);
  std::iota(parent.begin(), parent.end(), 0);
  std::vector<std::size_t> gt_count(total, 0), pred_count(total, 0);
  for (std::size_t i = 0; i < nt; ++i) gt_count[i] = 1;
  for (std::size_t j = nt; j < total; ++j) pred_count[j] = 1;

  auto find = [&](std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };

  for (const GroupLink& link : links) {
    const std::size_t a = find(link.gt_index);
    const std::size_t b = find(nt + link.pred_index);
    if (a == b) continue;
    // A group may hold several spans on at most one side.
    if (gt_count[a] + gt_count[b] >= 2 && pred_count[a] + pred_count[b] >= 2)
      continue;
    parent[b] = a;
    gt_count[a] += gt_count[b];
    pred_count[a] += pred_count[b];
  }

  // Gather members per root; spans stay in ascending order per side.
  std::vector<std::vector<std::size_t>> members(total);
  for (std::size_t x = 0; x < total; ++x) members[find(x)].push_back(x);

  std::vector<Group> groups;
  for (std::size_t root = 0; root < total; ++root) {
    if (members[root].empty()) continue;
    Group g;
    for (std::size_t x : members[root]) {
      if (x < nt)
        g.gt_spans.push_back(gt[x]);
      else
        g.pred_spans.push_back(pred[x - nt]);
    }
    const std::size_t ng = g.gt_spans.size();
    const std::size_t np = g.pred_spans.size();
    if (ng == 1 && np == 1)
      g.kind = GroupKind::Match;
    else if (ng == 1 && np == 0)
      g.kind = GroupKind::Miss;
    else if (ng == 0 && np == 1)
      g.kind = GroupKind::FalseAlarm;
    else if (ng == 1 && np >= 2)
      g.kind = GroupKind::Split;
    else if (ng >= 2 && np == 1)
      g.kind = GroupKind::Merge;
    else
      throw ValidationError("zonemap grouping produced an invalid shape");
    groups.push_back(std::move(g));
  }

  std::sort(groups.begin(), groups.end(), [](const Group& a, const Group& b) {
    auto key = [](const Group& g) {
      const std::size_t start = !g.gt_spans.empty()
                                    ? g.gt_spans.front().start
                                    : g.pred_spans.front().start;
      return std::pair<std::size_t, int>(start, g.gt_spans.empty() ? 1 : 0);
    };
    return key(a) < key(b);
  });
  return groups;
}

Rational group_error(const Group& g, const ZmeConfig& cfg) {
  validate_config(cfg);
  switch (g.kind) {
    case GroupKind::Miss:
      return static_cast<long long>(g.gt_spans.front().length());
    case GroupKind::FalseAlarm:
      return static_cast<long long>(g.pred_spans.front().length());
    case GroupKind::Match: {
      const long long inter =
          overlap(g.gt_spans.front(), g.pred_spans.front());
      const long long uni =
          static_cast<long long>(g.gt_spans.front().length()) +
          static_cast<long long>(g.pred_spans.front().length()) - inter;
      return uni - inter;
    }
    case GroupKind::Split:
      return fragmentation_error(g.gt_spans.front(), g.pred_spans, cfg);
    case GroupKind::Merge:
      return fragmentation_error(g.pred_spans.front(), g.gt_spans, cfg);
  }
  throw ValidationError("unknown group kind");
}

ZmeResult zme(const LabelSeq& gt_labels, const LabelSeq& pred_labels,
              const ZmeConfig& cfg) {
  if (gt_labels.size() != pred_labels.size())
    throw ValidationError("label sequences differ in length: " +
                          std::to_string(gt_labels.size()) + " vs " +
                          std::to_string(pred_labels.size()));
  validate_config(cfg);

  const std::vector<Span> gt_spans = labels_to_spans(gt_labels);
  const std::vector<Span> pred_spans = labels_to_spans(pred_labels);

  ZmeResult res;
  for (GroupKind k : {GroupKind::Match, GroupKind::Miss,
                      GroupKind::FalseAlarm, GroupKind::Split,
                      GroupKind::Merge})
    res.breakdown[k] = 0;

  Rational numerator = 0;
  for (Group& g : build_groups(gt_spans, pred_spans)) {
    Rational e = group_error(g, cfg);
    res.breakdown[g.kind] += e;
    numerator += e;
    res.per_group.emplace_back(std::move(g), std::move(e));
  }
  res.numerator = numerator;

  long long gt_mass = 0;
  for (const Span& s : gt_spans)
    gt_mass += static_cast<long long>(s.length());

  if (gt_mass > 0) {
    res.denominator = gt_mass;
    res.score = numerator / res.denominator;
  } else if (numerator == 0) {
    res.denominator = 0;
    res.score = 0;
  } else if (cfg.empty_gold == EmptyGoldPolicy::normalize_by_tokens) {
    res.denominator = static_cast<long long>(gt_labels.size());
    res.score = numerator / res.denominator;
  } else {
    // zero_if_clean with a dirty prediction: report the raw error mass.
    res.denominator = 1;
    res.score = numerator;
  }
  return res;
}

}  // namespace frds
