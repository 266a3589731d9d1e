#pragma once

// Merging transformed per-source corpora, corpus statistics, deterministic
// train/dev/test splits.

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "nerharm/conll.hpp"

namespace nerh {

struct SourceContribution {
  std::size_t tokens = 0;
  double token_pct = 0.0;  // rounded half-up to 2 decimals
  std::size_t entity_tokens = 0;
  double entity_pct = 0.0;
};

struct CorpusStats {
  std::size_t total_tokens = 0;
  std::size_t total_sentences = 0;
  std::size_t entity_tokens = 0;  // tokens with a non-O tag
  std::size_t entity_spans = 0;
  double annotation_density = 0.0;  // exact ratio entity_tokens / total_tokens
  std::size_t vocabulary_size = 0;  // distinct case-sensitive surfaces
  std::map<std::string, std::size_t> per_type_spans;
  std::map<std::string, std::size_t> per_type_tokens;
  std::map<std::string, SourceContribution> per_source;
};

/// Concatenates corpora in input order with provenance intact. All inputs must
/// be BIO and their source sets pairwise disjoint; throws otherwise.
TaggedCorpus merge(const std::vector<TaggedCorpus>& corpora);

CorpusStats compute_stats(const TaggedCorpus& corpus);

/// Rounds half-up to 2 decimals, e.g. 16.9280... -> 16.93.
double round_half_up_2(double value);

/// "16.93" for ratio 0.169280...; always two decimals.
std::string format_pct(double ratio);

/// Plain-text statistics table (overall block + per-source contributions).
std::string stats_text(const CorpusStats& stats);

struct SplitRatios {
  double train = 0.8;
  double dev = 0.1;
  double test = 0.1;
};

struct SplitResult {
  TaggedCorpus train;
  TaggedCorpus dev;
  TaggedCorpus test;
};

/// Sentence-level split, stratified per source: each source's sentences are
/// shuffled with a deterministic seeded generator and apportioned by
/// largest-remainder rounding (ties go to the earlier part). The outputs
/// partition the corpus and identical (corpus, ratios, seed) inputs yield
/// identical outputs. Throws if ratios are invalid or a source has fewer
/// sentences than non-zero parts.
SplitResult split(const TaggedCorpus& corpus, SplitRatios ratios, std::uint64_t seed);

}  // namespace nerh
