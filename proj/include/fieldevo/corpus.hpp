#pragma once

#include <cstddef>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace fieldevo {

/// One bibliographic record: author keywords plus the metadata used to bucket
/// it. Keywords are normalized and unique within the record.
struct BibRecord {
  std::string id;
  int year = 0;
  std::string field;
  std::vector<std::string> keywords;
  std::optional<std::string> language;

  friend bool operator==(const BibRecord&, const BibRecord&) = default;
};

enum class InputFormat { kTsv, kJsonl };

struct ParseIssue {
  std::size_t line = 0;
  std::string message;
};

struct ParseResult {
  std::vector<BibRecord> records;
  std::vector<ParseIssue> issues;
};

/// Lowercases (Latin, Greek, Cyrillic, Armenian and fullwidth Latin letters),
/// trims, and collapses internal whitespace runs to a single space. Returns
/// nullopt when nothing is left.
std::optional<std::string> normalize_keyword(std::string_view raw);

/// Parses a TSV or JSONL record stream. Malformed rows are collected in
/// `issues` with their 1-based line number; with `strict` the first one is
/// thrown as RecordError instead. Header problems throw FormatError.
ParseResult parse_records(std::istream& in, InputFormat format, bool strict = false);

/// Writes records in the given format. TSV output always carries the
/// `language` column. Throws std::invalid_argument for keywords that the
/// format cannot represent (a `;` inside a TSV keyword).
void write_records(std::ostream& out, const std::vector<BibRecord>& records,
                   InputFormat format);

struct YearRange {
  int first = 0;
  int last = 0;

  bool contains(int year) const { return year >= first && year <= last; }
  bool empty() const { return last < first; }
  int size() const { return empty() ? 0 : last - first + 1; }
};

struct YearBucket {
  std::string field;
  int year = 0;
  std::vector<BibRecord> records;
};

using BucketKey = std::pair<std::string, int>;

struct Partition {
  std::map<BucketKey, YearBucket> buckets;
  std::size_t filtered = 0;

  const YearBucket& at(const std::string& field, int year) const;
};

/// Buckets records by (field, year). Every (field, year) of the cross product
/// gets a bucket, possibly empty; records outside the filter (or with another
/// language when `language` is set) are counted in `filtered`.
Partition partition(const std::vector<BibRecord>& records,
                    const std::vector<std::string>& fields, YearRange years,
                    const std::optional<std::string>& language = std::nullopt);

}  // namespace fieldevo
