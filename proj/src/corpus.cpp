#include "fieldevo/corpus.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "fieldevo/errors.hpp"
#include "json.hpp"

namespace fieldevo {
namespace {

std::vector<std::string_view> split(std::string_view s, char delim) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(delim, start);
    if (pos == std::string_view::npos) {
      parts.push_back(s.substr(start));
      return parts;
    }
    parts.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

void strip_cr(std::string& line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
}

std::optional<int> parse_year(std::string_view text) {
  if (text.size() != 4) return std::nullopt;
  int year = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), year);
  if (ec != std::errc() || ptr != text.data() + text.size() || year < 1000) {
    return std::nullopt;
  }
  return year;
}

template <typename Range>
std::vector<std::string> normalized_keywords(const Range& raw) {
  std::vector<std::string> out;
  for (const auto& token : raw) {
    auto kw = normalize_keyword(token);
    if (!kw) continue;
    if (std::find(out.begin(), out.end(), *kw) == out.end()) {
      out.push_back(std::move(*kw));
    }
  }
  return out;
}

class IssueSink {
 public:
  IssueSink(ParseResult& result, bool strict) : result_(result), strict_(strict) {}

  void report(std::size_t line, std::string message) {
    if (strict_) throw RecordError(line, message);
    result_.issues.push_back({line, std::move(message)});
  }

 private:
  ParseResult& result_;
  bool strict_;
};

void parse_tsv(std::istream& in, ParseResult& result, bool strict) {
  IssueSink sink(result, strict);
  std::string line;
  if (!std::getline(in, line)) throw FormatError("missing header line");
  strip_cr(line);

  std::unordered_map<std::string, std::size_t> columns;
  const auto header = split(line, '\t');
  for (std::size_t i = 0; i < header.size(); ++i) {
    const std::string name(header[i]);
    if (!columns.emplace(name, i).second) {
      throw FormatError("duplicate header column '" + name + "'");
    }
  }
  const auto column = [&](const std::string& name) -> std::size_t {
    const auto it = columns.find(name);
    if (it == columns.end()) throw FormatError("missing required column '" + name + "'");
    return it->second;
  };
  const std::size_t id_col = column("id");
  const std::size_t year_col = column("year");
  const std::size_t field_col = column("field");
  const std::size_t kw_col = column("keywords");
  const std::size_t required = std::max({id_col, year_col, field_col, kw_col}) + 1;
  const auto lang_it = columns.find("language");

  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    strip_cr(line);
    if (line.empty()) continue;
    const auto cells = split(line, '\t');
    if (cells.size() < required) {
      sink.report(line_no, "expected at least " + std::to_string(required) + " columns");
      continue;
    }
    const auto year = parse_year(cells[year_col]);
    if (!year) {
      sink.report(line_no, "invalid year '" + std::string(cells[year_col]) + "'");
      continue;
    }
    if (cells[id_col].empty()) {
      sink.report(line_no, "empty id");
      continue;
    }
    if (cells[field_col].empty()) {
      sink.report(line_no, "empty field");
      continue;
    }
    BibRecord rec;
    rec.id = std::string(cells[id_col]);
    rec.year = *year;
    rec.field = std::string(cells[field_col]);
    rec.keywords = normalized_keywords(split(cells[kw_col], ';'));
    if (lang_it != columns.end() && lang_it->second < cells.size() &&
        !cells[lang_it->second].empty()) {
      rec.language = std::string(cells[lang_it->second]);
    }
    result.records.push_back(std::move(rec));
  }
}

void parse_jsonl(std::istream& in, ParseResult& result, bool strict) {
  using nlohmann::json;
  IssueSink sink(result, strict);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    strip_cr(line);
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    const json obj = json::parse(line, nullptr, false);
    if (obj.is_discarded() || !obj.is_object()) {
      sink.report(line_no, "invalid JSON object");
      continue;
    }
    const auto id = obj.find("id");
    const auto year = obj.find("year");
    const auto field = obj.find("field");
    const auto keywords = obj.find("keywords");
    if (id == obj.end() || !id->is_string() || id->get_ref<const std::string&>().empty()) {
      sink.report(line_no, "missing or invalid 'id'");
      continue;
    }
    if (year == obj.end() || !year->is_number_integer() ||
        !parse_year(std::to_string(year->get<long long>()))) {
      sink.report(line_no, "invalid year");
      continue;
    }
    if (field == obj.end() || !field->is_string() ||
        field->get_ref<const std::string&>().empty()) {
      sink.report(line_no, "missing or invalid 'field'");
      continue;
    }
    std::vector<std::string> raw;
    if (keywords != obj.end() && !keywords->is_null()) {
      if (!keywords->is_array()) {
        sink.report(line_no, "'keywords' must be an array of strings");
        continue;
      }
      bool ok = true;
      for (const auto& kw : *keywords) {
        if (!kw.is_string()) {
          ok = false;
          break;
        }
        raw.push_back(kw.get<std::string>());
      }
      if (!ok) {
        sink.report(line_no, "'keywords' must be an array of strings");
        continue;
      }
    } else if (keywords == obj.end()) {
      sink.report(line_no, "missing 'keywords'");
      continue;
    }
    BibRecord rec;
    rec.id = id->get<std::string>();
    rec.year = static_cast<int>(year->get<long long>());
    rec.field = field->get<std::string>();
    rec.keywords = normalized_keywords(raw);
    if (const auto lang = obj.find("language");
        lang != obj.end() && lang->is_string() && !lang->get_ref<const std::string&>().empty()) {
      rec.language = lang->get<std::string>();
    }
    result.records.push_back(std::move(rec));
  }
}

void check_tsv_cell(const std::string& value, const char* what) {
  if (value.find_first_of("\t\n\r") != std::string::npos) {
    throw std::invalid_argument(std::string("TSV cannot represent ") + what + " '" + value + "'");
  }
}

}  // namespace

ParseResult parse_records(std::istream& in, InputFormat format, bool strict) {
  ParseResult result;
  if (format == InputFormat::kTsv) {
    parse_tsv(in, result, strict);
  } else {
    parse_jsonl(in, result, strict);
  }
  return result;
}

void write_records(std::ostream& out, const std::vector<BibRecord>& records,
                   InputFormat format) {
  if (format == InputFormat::kJsonl) {
    for (const auto& rec : records) {
      nlohmann::ordered_json obj;
      obj["id"] = rec.id;
      obj["year"] = rec.year;
      obj["field"] = rec.field;
      obj["keywords"] = rec.keywords;
      if (rec.language) obj["language"] = *rec.language;
      out << obj.dump() << '\n';
    }
    return;
  }
  out << "id\tyear\tfield\tkeywords\tlanguage\n";
  for (const auto& rec : records) {
    check_tsv_cell(rec.id, "id");
    check_tsv_cell(rec.field, "field");
    out << rec.id << '\t' << rec.year << '\t' << rec.field << '\t';
    for (std::size_t i = 0; i < rec.keywords.size(); ++i) {
      const auto& kw = rec.keywords[i];
      if (kw.find(';') != std::string::npos) {
        throw std::invalid_argument("TSV cannot represent keyword '" + kw + "'");
      }
      check_tsv_cell(kw, "keyword");
      if (i) out << ';';
      out << kw;
    }
    out << '\t';
    if (rec.language) {
      check_tsv_cell(*rec.language, "language");
      out << *rec.language;
    }
    out << '\n';
  }
}

const YearBucket& Partition::at(const std::string& field, int year) const {
  const auto it = buckets.find({field, year});
  if (it == buckets.end()) {
    throw std::out_of_range("no bucket for " + field + "/" + std::to_string(year));
  }
  return it->second;
}

Partition partition(const std::vector<BibRecord>& records,
                    const std::vector<std::string>& fields, YearRange years,
                    const std::optional<std::string>& language) {
  Partition out;
  for (const auto& field : fields) {
    for (int y = years.first; y <= years.last; ++y) {
      out.buckets.emplace(BucketKey{field, y}, YearBucket{field, y, {}});
    }
  }
  const std::unordered_set<std::string> wanted(fields.begin(), fields.end());
  for (const auto& rec : records) {
    const bool keep = wanted.contains(rec.field) && years.contains(rec.year) &&
                      (!language || rec.language == language);
    if (!keep) {
      ++out.filtered;
      continue;
    }
    out.buckets.at({rec.field, rec.year}).records.push_back(rec);
  }
  return out;
}

}  // namespace fieldevo
