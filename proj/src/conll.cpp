#include "nerharm/conll.hpp"

#include <sstream>

#include "nerharm/error.hpp"
#include "text_util.hpp"

namespace nerh {

namespace detail_ns = ::nerh::detail;

std::size_t TaggedCorpus::token_count() const {
  std::size_t n = 0;
  for (const Sentence& s : sentences) n += s.tokens.size();
  return n;
}

std::string_view to_string(ParseIssue::Kind kind) {
  switch (kind) {
    case ParseIssue::Kind::WrongColumnCount: return "WrongColumnCount";
    case ParseIssue::Kind::EmptyToken: return "EmptyToken";
    case ParseIssue::Kind::EmptyTag: return "EmptyTag";
    case ParseIssue::Kind::NonUtf8: return "NonUtf8";
    case ParseIssue::Kind::OrphanBlank: return "OrphanBlank";
  }
  return "WrongColumnCount";
}

std::string_view to_string(ParseIssue::Action action) {
  switch (action) {
    case ParseIssue::Action::Skipped: return "Skipped";
    case ParseIssue::Action::Coerced: return "Coerced";
    case ParseIssue::Action::Kept: return "Kept";
  }
  return "Skipped";
}

namespace {

std::vector<std::string_view> split_fields(std::string_view line,
                                           FormatConfig::Separator sep) {
  switch (sep) {
    case FormatConfig::Separator::Tab: return detail_ns::split_char(line, '\t');
    case FormatConfig::Separator::Space: return detail_ns::split_char(line, ' ');
    case FormatConfig::Separator::AnyWhitespace: break;
  }
  return detail_ns::split_whitespace(line);
}

}  // namespace

ParseResult parse_corpus(std::string_view input, const FormatConfig& config,
                         std::string_view source_id, TagScheme scheme_hint) {
  if (source_id.empty()) throw ConfigError("source id must be non-empty");
  if (config.tag_column && *config.tag_column == config.token_column)
    throw ConfigError("token column and tag column must differ");

  ParseResult result;
  result.corpus.scheme = scheme_hint;
  result.corpus.sources.insert(std::string(source_id));

  std::vector<Token> pending;
  std::size_t pending_start = 0;
  auto flush = [&] {
    if (pending.empty()) return;
    result.corpus.sentences.push_back(
        {std::move(pending), std::string(source_id), pending_start});
    pending.clear();
  };

  auto malformed = [&](std::size_t line, ParseIssue::Kind kind, std::string detail) {
    if (config.on_malformed == FormatConfig::OnMalformed::Error)
      throw ParseError(line, std::string(to_string(kind)) + ": " + detail);
    result.issues.push_back({line, kind, ParseIssue::Action::Skipped, std::move(detail)});
    ++result.lines.skipped;
  };

  std::size_t line_no = 0;
  for (std::string_view raw : detail_ns::split_lines(input)) {
    ++line_no;
    ++result.lines.total;
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);

    if (!detail_ns::valid_utf8(raw))
      throw ParseError(line_no, "NonUtf8: line is not valid UTF-8");

    if (detail_ns::trim(raw).empty()) {
      ++result.lines.blank;
      if (pending.empty())
        result.issues.push_back({line_no, ParseIssue::Kind::OrphanBlank,
                                 ParseIssue::Action::Kept,
                                 "blank line outside any sentence"});
      flush();
      continue;
    }

    std::vector<std::string_view> fields = split_fields(raw, config.separator);

    if (config.docstart_marker && fields.size() > config.token_column &&
        fields[config.token_column] == *config.docstart_marker) {
      ++result.lines.docstart;
      continue;
    }

    std::size_t tag_idx;
    if (config.tag_column) {
      tag_idx = *config.tag_column;
      if (fields.size() <= std::max(tag_idx, config.token_column)) {
        malformed(line_no, ParseIssue::Kind::WrongColumnCount,
                  "line has " + std::to_string(fields.size()) + " column(s), need " +
                      std::to_string(std::max(tag_idx, config.token_column) + 1));
        continue;
      }
    } else {
      if (fields.size() < config.token_column + 2) {
        malformed(line_no, ParseIssue::Kind::WrongColumnCount,
                  "line has " + std::to_string(fields.size()) +
                      " column(s), token and tag need at least " +
                      std::to_string(config.token_column + 2));
        continue;
      }
      tag_idx = fields.size() - 1;
    }

    std::string_view surface = fields[config.token_column];
    std::string_view tag = fields[tag_idx];
    if (surface.empty()) {
      malformed(line_no, ParseIssue::Kind::EmptyToken, "token column is empty");
      continue;
    }
    if (tag.empty()) {
      malformed(line_no, ParseIssue::Kind::EmptyTag, "tag column is empty");
      continue;
    }
    if (detail_ns::contains_whitespace(surface) || detail_ns::contains_whitespace(tag)) {
      malformed(line_no, ParseIssue::Kind::WrongColumnCount,
                "column contains embedded whitespace");
      continue;
    }

    if (pending.empty()) pending_start = line_no;
    pending.push_back({std::string(surface), std::string(tag)});
    ++result.lines.token;
  }
  flush();
  return result;
}

ParseResult parse_corpus(std::istream& input, const FormatConfig& config,
                         std::string_view source_id, TagScheme scheme_hint) {
  std::ostringstream buffer;
  buffer << input.rdbuf();
  if (input.bad()) throw Error("failed to read input stream");
  return parse_corpus(buffer.str(), config, source_id, scheme_hint);
}

std::string serialize_corpus(const TaggedCorpus& corpus, const FormatConfig& config) {
  const char sep = config.separator == FormatConfig::Separator::Tab ? '\t' : ' ';
  std::string out;
  bool first = true;
  for (const Sentence& sentence : corpus.sentences) {
    if (!first) out += '\n';
    first = false;
    for (const Token& token : sentence.tokens) {
      out += token.surface;
      out += sep;
      out += token.tag;
      out += '\n';
    }
  }
  return out;
}

std::pair<TaggedCorpus, CleaningReport> clean_corpus(const TaggedCorpus& corpus,
                                                     const std::set<std::string>& stoplist) {
  TaggedCorpus cleaned = corpus;
  CleaningReport report;
  if (stoplist.empty()) return {cleaned, report};

  for (Sentence& sentence : cleaned.sentences) {
    std::vector<std::string> tags;
    tags.reserve(sentence.tokens.size());
    for (const Token& t : sentence.tokens) tags.push_back(t.tag);

    for (const EntitySpan& span : extract_spans_lenient(tags, cleaned.scheme)) {
      if (span.end - span.start != 1) continue;  // multi-token spans are never altered
      Token& token = sentence.tokens[span.start];
      if (!stoplist.count(detail_ns::lower_ascii(token.surface))) continue;
      ++report.demoted;
      ++report.per_source[sentence.source];
      ++report.per_tag[token.tag];
      token.tag = "O";
    }
  }
  return {cleaned, report};
}

std::set<std::string> load_stoplist(std::string_view text) {
  std::set<std::string> stoplist;
  for (std::string_view line : detail_ns::split_lines(text)) {
    std::string_view entry = detail_ns::trim(line);
    if (entry.empty() || entry.front() == '#') continue;
    stoplist.insert(detail_ns::lower_ascii(entry));
  }
  return stoplist;
}

}  // namespace nerh
