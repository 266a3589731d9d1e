#pragma once

// Orchestration of the full harmonization pipeline:
// parse -> repair -> convert-to-BIO -> map -> clean -> merge -> stats -> split.

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "nerharm/conll.hpp"
#include "nerharm/corpus.hpp"
#include "nerharm/mapping.hpp"
#include "nerharm/taxonomy.hpp"

namespace nerh {

struct SourceSpec {
  std::string path;
  std::string source_id;
  std::string scheme = "auto";  // "BIO" | "BIOES" | "auto"
  FormatConfig format;
};

struct SplitSpec {
  SplitRatios ratios;
  std::uint64_t seed = 0;
};

struct PipelineConfig {
  std::vector<SourceSpec> sources;
  std::string taxonomy = "builtin";  // "builtin" or a file path
  std::string ruleset = "builtin";   // "builtin", "identity" or a file path
  std::optional<std::string> stoplist;
  std::optional<SplitSpec> split;
  std::string out_dir = "out";
};

/// Parses the JSON config document. Throws ConfigError on unknown or invalid
/// fields, duplicate source ids, or an empty source list.
PipelineConfig parse_pipeline_config(const nlohmann::json& doc);
PipelineConfig load_pipeline_config(const std::filesystem::path& path);

/// Canonical JSON rendering of a config (defaults filled in); hashed into the
/// run manifest so identical configs are recognizable across runs.
nlohmann::json config_json(const PipelineConfig& config);
std::string config_hash(const PipelineConfig& config);

struct SourceRunInfo {
  std::string source_id;
  TagScheme scheme_used = TagScheme::Bio;
  bool scheme_detected = false;  // true when scheme came from auto-detection
  LineCounts lines;
  std::vector<ParseIssue> parse_issues;
  std::size_t repaired_violations = 0;
  std::size_t tokens = 0;
  std::size_t sentences = 0;
};

struct HarmonizeResult {
  TaggedCorpus unified;
  CorpusStats stats;
  MappingReport mapping_report;
  CleaningReport cleaning_report;
  std::vector<SourceRunInfo> sources;
  std::optional<SplitResult> splits;
  std::size_t duplicate_sentences = 0;  // exact duplicates across sources (reported, never removed)
  std::vector<std::string> decisions;   // resolved choices recorded in the manifest
};

/// Runs every stage in memory; writes nothing. Throws on any stage error.
HarmonizeResult run_harmonize(const PipelineConfig& config);

/// Writes the output tree: unified corpus + provenance sidecar, reports,
/// stats (JSON and text), manifest and optional split files. The manifest is
/// timestamp-free; the wall-clock stamp goes to a separate run_stamp.txt so
/// that repeated runs stay byte-identical. Partial outputs are removed when a
/// write fails.
std::vector<std::string> write_harmonize_outputs(const HarmonizeResult& result,
                                                 const PipelineConfig& config,
                                                 const std::filesystem::path& out_dir);

/// Schema report for one raw input file: a machine reproduction of the
/// source-analysis table (token/sentence counts, tag-type inventory with
/// frequencies, detected scheme, violation counts).
struct SourceAnalysis {
  std::string source_id;
  std::size_t tokens = 0;
  std::size_t sentences = 0;
  std::size_t entity_spans = 0;  // counted after a lenient (repair-style) read
  std::map<std::string, std::size_t> type_tokens;  // type -> annotated-token count
  TagScheme detected = TagScheme::Bio;             // BIOES iff any E-/S- prefix occurs
  std::map<std::string, std::size_t> violations;   // violation kind -> count
  LineCounts lines;
  std::size_t parse_issue_count = 0;
};

SourceAnalysis analyze_corpus(const ParseResult& parsed);

/// Detection rule: BIOES iff any E- or S- prefix occurs.
TagScheme detect_scheme(const TaggedCorpus& corpus);

nlohmann::json to_json(const SourceAnalysis& analysis);
std::string analysis_text(const std::vector<SourceAnalysis>& analyses);

}  // namespace nerh
