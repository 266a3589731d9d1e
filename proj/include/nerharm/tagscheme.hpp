#pragma once

// Tagging schemes for token-level sequence labeling: validation, repair and
// span-based conversion between BIO and BIOES.

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace nerh {

enum class TagScheme { Bio, Bioes };

std::string_view to_string(TagScheme scheme);
std::optional<TagScheme> tag_scheme_from_string(std::string_view name);

/// A typed, contiguous token range: [start, end) within one sentence.
/// Spans extracted from a sentence are non-overlapping and sorted by start.
struct EntitySpan {
  std::string type;
  std::size_t start = 0;
  std::size_t end = 0;

  auto operator<=>(const EntitySpan&) const = default;
};

struct SchemeViolation {
  enum class Kind {
    OrphanInside,   // I-X with no open span of type X before it
    OrphanEnd,      // E-X with no open span (or any E-X under BIO)
    TypeMismatch,   // I-X / E-X continuing a span of a different type
    UnknownPrefix,  // unrecognized prefix, or a tag with no recoverable type
    DanglingBegin,  // BIOES span opened by B-X but never closed by E-X
  };

  std::size_t position = 0;
  Kind kind = Kind::UnknownPrefix;
  std::string detail;
};

std::string_view to_string(SchemeViolation::Kind kind);

enum class RepairPolicy { Conservative };

std::optional<RepairPolicy> repair_policy_from_string(std::string_view name);

/// Reports every scheme violation in positional order. An empty result means
/// the sequence is well-formed; violations are data, not errors.
std::vector<SchemeViolation> validate_sequence(const std::vector<std::string>& tags,
                                               TagScheme scheme);

/// Rewrites an arbitrary tag sequence into a well-formed one. The Conservative
/// policy promotes orphans to span starts and closes dangling BIOES spans; it
/// never changes a position tagged O and never changes an entity type, except
/// that tags carrying no recoverable type ("B", "I-") become O. Idempotent.
std::vector<std::string> repair_sequence(const std::vector<std::string>& tags,
                                         TagScheme scheme,
                                         RepairPolicy policy = RepairPolicy::Conservative);

/// Extracts entity spans from a well-formed sequence. Throws ValidationError
/// naming the first violation if the sequence was not validated/repaired.
std::vector<EntitySpan> to_spans(const std::vector<std::string>& tags, TagScheme scheme);

/// Span extraction that never throws: invalid sequences are read the way
/// Conservative repair would rewrite them. Equals to_spans on valid input.
std::vector<EntitySpan> extract_spans_lenient(const std::vector<std::string>& tags,
                                              TagScheme scheme);

/// Inverse of to_spans: renders spans over a sentence of the given length.
/// Untouched positions become "O". Throws on overlapping or out-of-range spans.
std::vector<std::string> from_spans(const std::vector<EntitySpan>& spans,
                                    std::size_t length, TagScheme scheme);

/// Scheme conversion via the span round trip; the span set is preserved exactly.
std::vector<std::string> convert_scheme(const std::vector<std::string>& tags,
                                        TagScheme from, TagScheme to);

/// Splits a raw tag at the first hyphen: "B-Threat-Actor" -> ("B",
/// "Threat-Actor"). The type portion is empty for "O" and for bare prefixes.
std::pair<std::string_view, std::string_view> split_tag(std::string_view tag);

}  // namespace nerh
