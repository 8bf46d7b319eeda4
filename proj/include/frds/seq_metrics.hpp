#ifndef FRDS_SEQ_METRICS_HPP
#define FRDS_SEQ_METRICS_HPP

#include "frds/core.hpp"
#include "frds/rational.hpp"

namespace frds {

// Precision / recall / F1 with their supporting counts. Degenerate 0/0
// ratios resolve to 0 so that files without any DS stay scoreable.
struct PRF {
  long long tp = 0;
  long long fp = 0;
  long long fn = 0;
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;

  static PRF from_counts(long long tp, long long fp, long long fn);
};

// Per-token binary classification quality; DS is the positive class.
PRF token_prf(const LabelSeq& gold, const LabelSeq& pred);

// Strict sequence match: a predicted span counts only when both of its
// boundaries equal a gold span's.
PRF ssm_prf(const LabelSeq& gold, const LabelSeq& pred);

// Cohen's kappa between two annotations of the same tokens, exact.
// Returns 1 when chance agreement is 1 (both marginals degenerate, which
// forces full agreement).
Rational cohen_kappa(const LabelSeq& a, const LabelSeq& b);

}  // namespace frds

#endif
