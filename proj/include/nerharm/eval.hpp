#pragma once

// Entity-level scoring of prediction corpora against gold, plus sentence-level
// coverage metrics.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nerharm/conll.hpp"

namespace nerh {

struct PrfMetrics {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  std::size_t gold = 0;  // support
  std::size_t pred = 0;
  std::size_t matched = 0;
};

struct EvalCounts {
  std::size_t gold_spans = 0;
  std::size_t pred_spans = 0;
  std::size_t matched_spans = 0;
};

struct EvalReport {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  std::map<std::string, PrfMetrics> per_type;
  std::map<std::string, PrfMetrics> per_source;
  double avg_entities_per_sentence = 0.0;  // predicted spans over ALL sentences
  double sent_recall_micro = 0.0;
  double sent_recall_macro = 0.0;  // mean over sentences with >= 1 gold span
  EvalCounts counts;

  std::size_t total_sentences = 0;
  std::size_t gold_empty_sentences = 0;  // skipped by the macro average
  std::vector<std::string> notes;        // definition flags for the report metadata
};

/// Scores pred against gold under exact span matching: a predicted span counts
/// iff (type, start, end) all equal a gold span. Micro P = matched/pred,
/// R = matched/gold, F1 = 2PR/(P+R); zero denominators yield 0. Both corpora
/// must be valid BIO and aligned (same sentence count, token counts and
/// surfaces); throws AlignmentError naming the first differing position.
EvalReport score(const TaggedCorpus& gold, const TaggedCorpus& pred);

/// Relative F1 change (b - a) / a; nullopt when a.f1 == 0.
std::optional<double> relative_f1_change(const EvalReport& a, const EvalReport& b);

/// Tabulated deltas between two reports, including the relative F1 change
/// (marked "undefined" when a.f1 == 0).
std::string compare_reports(const EvalReport& a, const EvalReport& b);

/// Plain-text report table (overall metrics, coverage block, per-type rows).
std::string report_text(const EvalReport& report);

}  // namespace nerh
