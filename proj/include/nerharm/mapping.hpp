#pragma once

// Declarative rulesets that project each source dataset's raw entity types
// onto the target taxonomy or to O.

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nerharm/conll.hpp"
#include "nerharm/taxonomy.hpp"

namespace nerh {

/// A single (source_dataset, source_type) -> target rule. The source type is
/// the type portion of the raw tag, prefix-stripped. An empty target
/// (std::nullopt) is the distinguished OUTSIDE value: spans of that type are
/// removed and their tokens become O.
struct MappingRule {
  std::string source_dataset;
  std::string source_type;
  std::optional<std::string> target;  // nullopt = OUTSIDE

  bool is_outside() const { return !target.has_value(); }
};

enum class OnUnmapped { Error, ToOutside };

class MappingRuleSet {
 public:
  /// Throws Error on a duplicate (source_dataset, source_type) key.
  void add(MappingRule rule);

  const MappingRule* find(std::string_view source, std::string_view type) const;
  const std::vector<MappingRule>& rules() const { return rules_; }
  bool has_rules_for(std::string_view source) const;
  std::size_t size() const { return rules_.size(); }

  OnUnmapped on_unmapped = OnUnmapped::Error;

 private:
  std::vector<MappingRule> rules_;
  std::map<std::pair<std::string, std::string>, std::size_t> index_;
  std::set<std::string, std::less<>> sources_;
};

/// Ruleset file format: UTF-8 text, one rule per line, three tab-separated
/// fields "source_dataset<TAB>source_type<TAB>target"; "#" starts a comment
/// line; target "O" denotes OUTSIDE. Every other target must be a taxonomy
/// member. Throws ParseError with the offending line number.
MappingRuleSet parse_ruleset(std::string_view input, const Taxonomy& taxonomy);

/// The shipped default ruleset: every source-tag mapping published for the
/// four reference datasets (CyNER, DNRTI, APTNER, Attacker). Deliberately
/// partial; see data/default_ruleset.tsv for the user-completable copy.
std::string_view default_ruleset_text();

struct MappingReport {
  // (source_dataset, source_type) -> annotated tokens the rule was applied to,
  // exclusion rules included.
  std::map<std::pair<std::string, std::string>, std::size_t> applied;
  std::size_t excluded_tokens = 0;  // tokens demoted to O (OUTSIDE rules + coerced unmapped)
  std::set<std::pair<std::string, std::string>> unmapped;  // pairs met with no rule
  std::size_t spans_before = 0;
  std::size_t spans_after = 0;
};

/// Applies a ruleset to a valid BIO corpus. Spans are extracted, retyped or
/// removed per rule, and re-rendered to BIO preserving the original
/// boundaries; adjacent same-target spans are NOT merged (each keeps its own
/// B-). Token count and surfaces are unchanged. Throws on an unmapped
/// (source, type) pair under OnUnmapped::Error and on a source with no rules.
std::pair<TaggedCorpus, MappingReport> apply_ruleset(const TaggedCorpus& corpus,
                                                     const MappingRuleSet& ruleset,
                                                     const Taxonomy& taxonomy);

/// Naive-concatenation mode: one identity rule per (source, type) pair that
/// occurs in the corpus. Applying it (against observed_taxonomy) leaves all
/// tags unchanged.
MappingRuleSet identity_ruleset(const TaggedCorpus& corpus);

/// Ad-hoc taxonomy of every entity type occurring in the corpus.
Taxonomy observed_taxonomy(const TaggedCorpus& corpus);

}  // namespace nerh
