#pragma once

// Registry of permitted target entity type names.

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace nerh {

/// Ordered set of entity type names. Names are unique, non-empty and contain
/// no whitespace; "O" is never a member (it is the absence of an entity).
/// Matching is case-sensitive. Immutable after load; freely shareable.
class Taxonomy {
 public:
  Taxonomy() = default;

  /// Throws Error on duplicate names, whitespace in a name, or the reserved
  /// name "O".
  void add(std::string name, std::string description = "");

  bool contains(std::string_view name) const;
  const std::vector<std::string>& types() const { return types_; }
  const std::string* description(std::string_view name) const;
  std::size_t size() const { return types_.size(); }
  bool empty() const { return types_.empty(); }

  /// One name per line with a trailing newline; inverse of load_taxonomy on
  /// the type list (descriptions are not part of the file format).
  std::string serialize() const;

 private:
  std::vector<std::string> types_;
  std::set<std::string, std::less<>> index_;
  std::map<std::string, std::string, std::less<>> descriptions_;
};

/// The built-in STIX 2.1-derived registry of target entity types.
Taxonomy default_taxonomy();

/// Taxonomy file format: UTF-8 text, one type name per line, "#" starts a
/// comment line, blank lines ignored. Throws Error on invalid names.
Taxonomy load_taxonomy(std::string_view input);

}  // namespace nerh
