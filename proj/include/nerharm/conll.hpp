#pragma once

// Reading, writing and rule-based cleaning of CoNLL-like token/tag files.

#include <cstddef>
#include <istream>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nerharm/tagscheme.hpp"

namespace nerh {

struct Token {
  std::string surface;  // non-empty, no whitespace
  std::string tag;      // raw tag string as read, e.g. "B-HackOrg" or "O"

  bool operator==(const Token&) const = default;
};

struct Sentence {
  std::vector<Token> tokens;
  std::string source;           // dataset identifier, e.g. "APTNER"
  std::size_t origin_line = 1;  // 1-based line of the first token in the source file
};

struct TaggedCorpus {
  std::vector<Sentence> sentences;
  TagScheme scheme = TagScheme::Bio;
  std::set<std::string> sources;

  std::size_t token_count() const;
};

struct ParseIssue {
  enum class Kind { WrongColumnCount, EmptyToken, EmptyTag, NonUtf8, OrphanBlank };
  enum class Action { Skipped, Coerced, Kept };

  std::size_t line = 1;  // 1-based
  Kind kind = Kind::WrongColumnCount;
  Action action = Action::Skipped;
  std::string detail;
};

std::string_view to_string(ParseIssue::Kind kind);
std::string_view to_string(ParseIssue::Action action);

struct FormatConfig {
  enum class Separator { AnyWhitespace, Tab, Space };
  enum class OnMalformed { Error, Skip };

  std::size_t token_column = 0;
  std::optional<std::size_t> tag_column;  // nullopt = last column
  Separator separator = Separator::AnyWhitespace;
  std::optional<std::string> docstart_marker = std::string("-DOCSTART-");
  OnMalformed on_malformed = OnMalformed::Skip;
};

/// Per-line accounting: token + blank + docstart + skipped == total.
struct LineCounts {
  std::size_t total = 0;
  std::size_t token = 0;
  std::size_t blank = 0;
  std::size_t docstart = 0;
  std::size_t skipped = 0;
};

struct ParseResult {
  TaggedCorpus corpus;
  std::vector<ParseIssue> issues;
  LineCounts lines;
};

/// Parses CoNLL-like text. Blank lines delimit sentences (consecutive blanks
/// produce no empty sentences), docstart lines are dropped, and each kept line
/// yields exactly one token. Tag validity is not checked here; the result's
/// scheme is scheme_hint and validation is deferred to the tagscheme module.
/// Throws ParseError on the first malformed line when on_malformed = Error,
/// and always on invalid UTF-8.
ParseResult parse_corpus(std::string_view input, const FormatConfig& config,
                         std::string_view source_id, TagScheme scheme_hint);
ParseResult parse_corpus(std::istream& input, const FormatConfig& config,
                         std::string_view source_id, TagScheme scheme_hint);

/// One token per line as "surface<SEP>tag", one blank line between sentences,
/// trailing newline. SEP is a tab for Separator::Tab, a single space otherwise.
/// parse_corpus(serialize_corpus(c)) reproduces c's tokens, tags and sentence
/// boundaries; provenance travels in the sidecar, not the text.
std::string serialize_corpus(const TaggedCorpus& corpus, const FormatConfig& config = {});

struct CleaningReport {
  std::size_t demoted = 0;
  std::map<std::string, std::size_t> per_source;  // source -> demotions
  std::map<std::string, std::size_t> per_tag;     // original tag -> demotions
};

/// Demotes to O every single-token entity span whose surface, lowercased, is
/// in the stoplist. Multi-token spans are never altered and the token count is
/// unchanged. Idempotent. Stoplist entries must be lowercase (see load_stoplist).
std::pair<TaggedCorpus, CleaningReport> clean_corpus(const TaggedCorpus& corpus,
                                                     const std::set<std::string>& stoplist);

/// One word per line, "#" comment lines and blanks ignored; entries are
/// lowercased (ASCII) on load.
std::set<std::string> load_stoplist(std::string_view text);

}  // namespace nerh
