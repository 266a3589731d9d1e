#pragma once

// JSON views of reports and the provenance sidecar format.

#include <json.hpp>

#include "nerharm/conll.hpp"
#include "nerharm/corpus.hpp"
#include "nerharm/eval.hpp"
#include "nerharm/mapping.hpp"
#include "nerharm/tagscheme.hpp"

namespace nerh {

nlohmann::json to_json(const ParseIssue& issue);
nlohmann::json to_json(const std::vector<ParseIssue>& issues);
nlohmann::json to_json(const LineCounts& counts);
nlohmann::json to_json(const SchemeViolation& violation);
nlohmann::json to_json(const std::vector<SchemeViolation>& violations);
nlohmann::json to_json(const CleaningReport& report);
nlohmann::json to_json(const MappingReport& report);
nlohmann::json to_json(const CorpusStats& stats);
nlohmann::json to_json(const EvalReport& report);

/// Sidecar mapping sentence index -> {source, origin_line}; written next to a
/// serialized corpus as "<corpus file>.prov.json".
nlohmann::json provenance_json(const TaggedCorpus& corpus);

/// Restores per-sentence provenance from a sidecar document. Throws Error when
/// the entry count does not match the corpus.
void apply_provenance(TaggedCorpus& corpus, const nlohmann::json& sidecar);

}  // namespace nerh
