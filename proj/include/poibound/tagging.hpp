#pragma once

#include <cctype>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "poibound/errors.hpp"
#include "poibound/model.hpp"

namespace poibound {

/// ASCII case-folding plus whitespace collapsing (runs of blanks become one
/// space, edges trimmed). Bytes outside ASCII pass through, which is safe
/// for UTF-8: multi-byte sequences never contain ASCII bytes. Full Unicode
/// normalization is out of scope; the curated query lists are ASCII.
inline std::string normalize_text(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  bool pending_space = false;
  for (unsigned char ch : text) {
    if (std::isspace(ch)) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) {
      out.push_back(' ');
      pending_space = false;
    }
    out.push_back(static_cast<char>(std::tolower(ch)));
  }
  return out;
}

/// True if the normalized text contains any normalized query as a
/// substring. Queries that normalize to the empty string are skipped.
inline bool matches_any(std::string_view text, std::span<const std::string> queries) {
  const std::string haystack = normalize_text(text);
  for (const std::string& query : queries) {
    const std::string needle = normalize_text(query);
    if (needle.empty()) continue;
    if (haystack.find(needle) != std::string::npos) return true;
  }
  return false;
}

/// Re-flags every record: relevant iff its text matches any query.
inline Dataset tag_relevance(Dataset dataset, std::span<const std::string> queries) {
  bool any_usable = false;
  for (const std::string& q : queries) {
    if (!normalize_text(q).empty()) any_usable = true;
  }
  if (!any_usable) throw InvalidParamsError("query list is empty");

  for (Record& rec : dataset.records) {
    rec.relevant = matches_any(rec.text, queries);
  }
  return dataset;
}

}  // namespace poibound
