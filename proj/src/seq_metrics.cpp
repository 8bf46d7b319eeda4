#include "frds/seq_metrics.hpp"

#include <algorithm>

namespace frds {

namespace {

void require_same_length(const LabelSeq& a, const LabelSeq& b) {
  if (a.size() != b.size())
    throw ValidationError("label sequences differ in length: " +
                          std::to_string(a.size()) + " vs " +
                          std::to_string(b.size()));
}

}  // namespace

PRF PRF::from_counts(long long tp, long long fp, long long fn) {
  PRF r;
  r.tp = tp;
  r.fp = fp;
  r.fn = fn;
  r.precision = (tp + fp) > 0 ? static_cast<double>(tp) / (tp + fp) : 0.0;
  r.recall = (tp + fn) > 0 ? static_cast<double>(tp) / (tp + fn) : 0.0;
  r.f1 = (r.precision + r.recall) > 0
             ? 2.0 * r.precision * r.recall / (r.precision + r.recall)
             : 0.0;
  return r;
}

PRF token_prf(const LabelSeq& gold, const LabelSeq& pred) {
  require_same_length(gold, pred);
  long long tp = 0, fp = 0, fn = 0;
  for (std::size_t i = 0; i < gold.size(); ++i) {
    const bool g = gold[i] == Label::DS;
    const bool p = pred[i] == Label::DS;
    if (g && p)
      ++tp;
    else if (!g && p)
      ++fp;
    else if (g && !p)
      ++fn;
  }
  return PRF::from_counts(tp, fp, fn);
}

PRF ssm_prf(const LabelSeq& gold, const LabelSeq& pred) {
  require_same_length(gold, pred);
  const std::vector<Span> gold_spans = labels_to_spans(gold);
  const std::vector<Span> pred_spans = labels_to_spans(pred);
  // Both lists are sorted; count exact boundary matches by merging.
  long long tp = 0;
  std::size_t i = 0, j = 0;
  while (i < gold_spans.size() && j < pred_spans.size()) {
    if (gold_spans[i] == pred_spans[j]) {
      ++tp;
      ++i;
      ++j;
    } else if (gold_spans[i].start < pred_spans[j].start ||
               (gold_spans[i].start == pred_spans[j].start &&
                gold_spans[i].end < pred_spans[j].end)) {
      ++i;
    } else {
      ++j;
    }
  }
  return PRF::from_counts(
      tp, static_cast<long long>(pred_spans.size()) - tp,
      static_cast<long long>(gold_spans.size()) - tp);
}

Rational cohen_kappa(const LabelSeq& a, const LabelSeq& b) {
  require_same_length(a, b);
  if (a.empty()) throw ValidationError("kappa needs at least one token");
  const long long n = static_cast<long long>(a.size());
  long long agree = 0, a_ds = 0, b_ds = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == b[i]) ++agree;
    if (a[i] == Label::DS) ++a_ds;
    if (b[i] == Label::DS) ++b_ds;
  }
  const Rational po(agree, n);
  const Rational pe =
      Rational(a_ds, n) * Rational(b_ds, n) +
      Rational(n - a_ds, n) * Rational(n - b_ds, n);
  if (pe == 1) return 1;  // degenerate marginals imply full agreement
  return (po - pe) / (1 - pe);
}

}  // namespace frds
