#include "nerharm/tagscheme.hpp"

#include <algorithm>

#include "nerharm/error.hpp"

namespace nerh {

namespace {

// Per-tag reading: O, a scheme prefix with a type, or junk.
struct TagView {
  enum class Class { Outside, Begin, Inside, End, Single, Unknown };
  Class cls = Class::Unknown;
  std::string_view type;
};

TagView read_tag(std::string_view tag, TagScheme scheme) {
  if (tag == "O") return {TagView::Class::Outside, {}};
  auto [prefix, type] = split_tag(tag);
  if (type.empty()) return {TagView::Class::Unknown, {}};
  if (prefix == "B") return {TagView::Class::Begin, type};
  if (prefix == "I") return {TagView::Class::Inside, type};
  if (prefix == "E" && scheme == TagScheme::Bioes) return {TagView::Class::End, type};
  if (prefix == "S" && scheme == TagScheme::Bioes) return {TagView::Class::Single, type};
  // E-/S- under BIO fall through to Unknown handling, carrying their type.
  if (prefix == "E") return {TagView::Class::End, type};
  return {TagView::Class::Unknown, type};
}

std::string format_violation(const SchemeViolation& v) {
  return "position " + std::to_string(v.position) + ": " + std::string(to_string(v.kind)) +
         ": " + v.detail;
}

}  // namespace

std::string_view to_string(TagScheme scheme) {
  return scheme == TagScheme::Bio ? "BIO" : "BIOES";
}

std::optional<TagScheme> tag_scheme_from_string(std::string_view name) {
  if (name == "BIO" || name == "bio") return TagScheme::Bio;
  if (name == "BIOES" || name == "bioes") return TagScheme::Bioes;
  return std::nullopt;
}

std::string_view to_string(SchemeViolation::Kind kind) {
  switch (kind) {
    case SchemeViolation::Kind::OrphanInside: return "OrphanInside";
    case SchemeViolation::Kind::OrphanEnd: return "OrphanEnd";
    case SchemeViolation::Kind::TypeMismatch: return "TypeMismatch";
    case SchemeViolation::Kind::UnknownPrefix: return "UnknownPrefix";
    case SchemeViolation::Kind::DanglingBegin: return "DanglingBegin";
  }
  return "UnknownPrefix";
}

std::optional<RepairPolicy> repair_policy_from_string(std::string_view name) {
  if (name == "conservative") return RepairPolicy::Conservative;
  return std::nullopt;
}

std::pair<std::string_view, std::string_view> split_tag(std::string_view tag) {
  std::size_t hyphen = tag.find('-');
  if (hyphen == std::string_view::npos) return {tag, {}};
  return {tag.substr(0, hyphen), tag.substr(hyphen + 1)};
}

std::vector<SchemeViolation> validate_sequence(const std::vector<std::string>& tags,
                                               TagScheme scheme) {
  using Kind = SchemeViolation::Kind;
  std::vector<SchemeViolation> violations;
  auto report = [&](std::size_t pos, Kind kind, std::string detail) {
    violations.push_back({pos, kind, std::move(detail)});
  };

  if (scheme == TagScheme::Bio) {
    std::string_view open;  // type of the span the previous position belongs to
    for (std::size_t i = 0; i < tags.size(); ++i) {
      const std::string& tag = tags[i];
      TagView v = read_tag(tag, scheme);
      switch (v.cls) {
        case TagView::Class::Outside:
          open = {};
          break;
        case TagView::Class::Begin:
          open = v.type;
          break;
        case TagView::Class::Inside:
          if (open.empty())
            report(i, Kind::OrphanInside, "'" + tag + "' follows no open span");
          else if (open != v.type)
            report(i, Kind::TypeMismatch,
                   "'" + tag + "' continues a span of type '" + std::string(open) + "'");
          open = v.type;
          break;
        case TagView::Class::End:
          report(i, Kind::OrphanEnd, "'" + tag + "': E- prefix is not part of BIO");
          open = v.type;
          break;
        case TagView::Class::Single:
        case TagView::Class::Unknown:
          report(i, Kind::UnknownPrefix,
                 v.type.empty() ? "'" + tag + "' carries no recoverable type"
                                : "'" + tag + "': prefix is not part of BIO");
          open = v.type;
          break;
      }
    }
    return violations;
  }

  // BIOES: a B-X run must be closed by E-X before anything else happens.
  std::string_view open;
  std::size_t run_start = 0;
  auto dangling = [&](std::string_view at_type, std::size_t start) {
    report(start, Kind::DanglingBegin,
           "span of type '" + std::string(at_type) + "' opened here is never closed by E-");
  };
  for (std::size_t i = 0; i < tags.size(); ++i) {
    const std::string& tag = tags[i];
    TagView v = read_tag(tag, scheme);
    switch (v.cls) {
      case TagView::Class::Outside:
        if (!open.empty()) dangling(open, run_start);
        open = {};
        break;
      case TagView::Class::Begin:
        if (!open.empty()) dangling(open, run_start);
        open = v.type;
        run_start = i;
        break;
      case TagView::Class::Inside:
        if (open.empty()) {
          report(i, Kind::OrphanInside, "'" + tag + "' follows no open span");
          open = v.type;
          run_start = i;
        } else if (open != v.type) {
          report(i, Kind::TypeMismatch,
                 "'" + tag + "' continues a span of type '" + std::string(open) + "'");
          open = v.type;
          run_start = i;
        }
        break;
      case TagView::Class::End:
        if (open.empty()) {
          report(i, Kind::OrphanEnd, "'" + tag + "' closes no open span");
        } else if (open != v.type) {
          report(i, Kind::TypeMismatch,
                 "'" + tag + "' closes a span of type '" + std::string(open) + "'");
        }
        open = {};
        break;
      case TagView::Class::Single:
        if (!open.empty()) dangling(open, run_start);
        open = {};
        break;
      case TagView::Class::Unknown:
        report(i, Kind::UnknownPrefix,
               v.type.empty() ? "'" + tag + "' carries no recoverable type"
                              : "'" + tag + "': unrecognized prefix");
        if (!open.empty()) dangling(open, run_start);
        open = {};
        break;
    }
  }
  if (!open.empty()) dangling(open, run_start);
  return violations;
}

std::vector<EntitySpan> extract_spans_lenient(const std::vector<std::string>& tags,
                                              TagScheme scheme) {
  std::vector<EntitySpan> spans;
  std::optional<std::pair<std::string, std::size_t>> open;  // (type, start)
  auto close = [&](std::size_t end) {
    if (open) {
      spans.push_back({open->first, open->second, end});
      open.reset();
    }
  };
  auto singleton = [&](std::string_view type, std::size_t i) {
    spans.push_back({std::string(type), i, i + 1});
  };

  for (std::size_t i = 0; i < tags.size(); ++i) {
    TagView v = read_tag(tags[i], scheme);
    switch (v.cls) {
      case TagView::Class::Outside:
        close(i);
        break;
      case TagView::Class::Begin:
        close(i);
        open = {std::string(v.type), i};
        break;
      case TagView::Class::Inside:
        if (open && open->first == v.type) break;  // continues the run
        close(i);
        open = {std::string(v.type), i};  // orphan/mismatched I acts as a span start
        break;
      case TagView::Class::End:
        if (scheme == TagScheme::Bioes) {
          if (open && open->first == v.type) {
            spans.push_back({open->first, open->second, i + 1});
            open.reset();
          } else {
            close(i);
            singleton(v.type, i);  // orphan E becomes a singleton
          }
        } else {
          close(i);
          open = {std::string(v.type), i};  // orphan E under BIO becomes B
        }
        break;
      case TagView::Class::Single:
        close(i);
        if (scheme == TagScheme::Bioes) {
          singleton(v.type, i);
        } else {
          open = {std::string(v.type), i};
        }
        break;
      case TagView::Class::Unknown:
        close(i);
        if (!v.type.empty()) {
          // Unknown prefix with a recoverable type: keep the annotation as a
          // fresh span start rather than deleting it.
          if (scheme == TagScheme::Bioes)
            singleton(v.type, i);
          else
            open = {std::string(v.type), i};
        }
        break;
    }
  }
  close(tags.size());
  return spans;
}

std::vector<EntitySpan> to_spans(const std::vector<std::string>& tags, TagScheme scheme) {
  std::vector<SchemeViolation> violations = validate_sequence(tags, scheme);
  if (!violations.empty())
    throw ValidationError("invalid " + std::string(to_string(scheme)) +
                          " sequence: " + format_violation(violations.front()));
  return extract_spans_lenient(tags, scheme);
}

std::vector<std::string> from_spans(const std::vector<EntitySpan>& spans,
                                    std::size_t length, TagScheme scheme) {
  std::vector<EntitySpan> sorted = spans;
  std::sort(sorted.begin(), sorted.end(),
            [](const EntitySpan& a, const EntitySpan& b) { return a.start < b.start; });

  std::vector<std::string> tags(length, "O");
  std::size_t prev_end = 0;
  for (const EntitySpan& span : sorted) {
    if (span.type.empty()) throw ValidationError("span with empty entity type");
    if (span.start >= span.end || span.end > length)
      throw ValidationError("span [" + std::to_string(span.start) + ", " +
                            std::to_string(span.end) + ") is out of range for length " +
                            std::to_string(length));
    if (span.start < prev_end)
      throw ValidationError("overlapping spans at position " + std::to_string(span.start));
    prev_end = span.end;

    if (scheme == TagScheme::Bioes && span.end - span.start == 1) {
      tags[span.start] = "S-" + span.type;
      continue;
    }
    tags[span.start] = "B-" + span.type;
    for (std::size_t i = span.start + 1; i < span.end; ++i) tags[i] = "I-" + span.type;
    if (scheme == TagScheme::Bioes) tags[span.end - 1] = "E-" + span.type;
  }
  return tags;
}

std::vector<std::string> repair_sequence(const std::vector<std::string>& tags,
                                         TagScheme scheme, RepairPolicy /*policy*/) {
  // Only the Conservative policy exists; the parameter keeps the call sites
  // explicit about which one they rely on.
  return from_spans(extract_spans_lenient(tags, scheme), tags.size(), scheme);
}

std::vector<std::string> convert_scheme(const std::vector<std::string>& tags,
                                        TagScheme from, TagScheme to) {
  return from_spans(to_spans(tags, from), tags.size(), to);
}

}  // namespace nerh
