// Canonical record format (one JSON object per line), roster and alias
// files, and record-level filtering.

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "pubgraph/error.hpp"
#include "pubgraph/record.hpp"
#include "text_util.hpp"

namespace pubgraph {

using nlohmann::json;

std::string to_string(VenueKind kind) {
  return kind == VenueKind::journal ? "journal" : "proceedings";
}

std::optional<VenueKind> venue_kind_from_string(std::string_view text) {
  if (text == "journal") return VenueKind::journal;
  if (text == "proceedings") return VenueKind::proceedings;
  return std::nullopt;
}

namespace {

std::string read_stream(std::istream& in) {
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void require_valid_utf8(const std::string& text) {
  if (auto bad = detail::find_invalid_utf8(text)) {
    throw ParseError("invalid UTF-8 sequence", bad->line, bad->column);
  }
}

/// Builds a record from parsed canonical fields. Returns an error message
/// instead of a record when a field is missing or malformed.
std::optional<std::string> record_from_json(const json& object,
                                            PublicationRecord& out) {
  if (!object.is_object()) return "record is not an object";

  auto title = object.find("title");
  if (title == object.end() || !title->is_string()) {
    return "missing or non-string field 'title'";
  }
  auto authors = object.find("authors");
  if (authors == object.end() || !authors->is_array() || authors->empty()) {
    return "missing or empty field 'authors'";
  }
  auto venue = object.find("venue");
  if (venue == object.end() || !venue->is_string()) {
    return "missing or non-string field 'venue'";
  }
  auto kind = object.find("venue_kind");
  if (kind == object.end() || !kind->is_string()) {
    return "missing or non-string field 'venue_kind'";
  }
  auto year = object.find("year");
  if (year == object.end() || !year->is_number_integer()) {
    return "missing or non-integer field 'year'";
  }

  PublicationRecord record;
  record.title = title->get<std::string>();
  for (const auto& author : *authors) {
    if (!author.is_string()) return "non-string author entry";
    std::string normalized;
    try {
      normalized = normalize_name(author.get<std::string>());
    } catch (const InvalidNameError&) {
      return "author name is empty after normalization";
    }
    // Names that normalize to the same key are one author.
    bool duplicate = false;
    for (const auto& existing : record.authors) {
      if (existing == normalized) {
        duplicate = true;
        break;
      }
    }
    if (!duplicate) record.authors.push_back(std::move(normalized));
  }
  if (record.authors.empty()) return "record has no authors";

  try {
    record.venue = normalize_name(venue->get<std::string>());
  } catch (const InvalidNameError&) {
    return "venue is empty after normalization";
  }

  auto parsed_kind = venue_kind_from_string(kind->get<std::string>());
  if (!parsed_kind) {
    return "unknown venue_kind '" + kind->get<std::string>() + "'";
  }
  record.venue_kind = *parsed_kind;

  record.year = year->get<int>();
  if (record.year <= 0) return "year must be positive";

  out = std::move(record);
  return std::nullopt;
}

ParseResult parse_canonical(const std::string& text) {
  ParseResult result;
  std::istringstream lines(text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(lines, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;

    json object = json::parse(line, nullptr, /*allow_exceptions=*/false);
    if (object.is_discarded()) {
      result.warnings.push_back({line_no, "malformed record: invalid JSON"});
      continue;
    }
    PublicationRecord record;
    if (auto problem = record_from_json(object, record)) {
      result.warnings.push_back({line_no, "malformed record: " + *problem});
      continue;
    }
    result.records.push_back(std::move(record));
  }
  return result;
}

}  // namespace

namespace detail {
ParseResult parse_dblp_xml(const std::string& text);  // dblp_xml.cpp
}

ParseResult parse_records(std::istream& in, RecordFormat format) {
  std::string text = read_stream(in);
  require_valid_utf8(text);
  switch (format) {
    case RecordFormat::canonical:
      return parse_canonical(text);
    case RecordFormat::dblp_xml:
      return detail::parse_dblp_xml(text);
  }
  throw UsageError("unknown record format");
}

ParseResult parse_records_file(const std::string& path, RecordFormat format) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open records file: " + path);
  return parse_records(in, format);
}

void write_canonical(std::ostream& out,
                     const std::vector<PublicationRecord>& records) {
  for (const auto& record : records) {
    json object;
    object["title"] = record.title;
    object["authors"] = record.authors;
    object["venue"] = record.venue;
    object["venue_kind"] = to_string(record.venue_kind);
    object["year"] = record.year;
    out << object.dump() << '\n';
  }
}

std::vector<PublicationRecord> filter_records(
    const std::vector<PublicationRecord>& records, const Roster& roster,
    const TimeWindow& window) {
  std::vector<PublicationRecord> kept;
  for (const auto& record : records) {
    if (!window.contains(record.year)) continue;
    bool has_roster_author = false;
    for (const auto& author : record.authors) {
      if (roster.members.contains(author)) {
        has_roster_author = true;
        break;
      }
    }
    if (has_roster_author) kept.push_back(record);
  }
  return kept;
}

namespace {

bool is_blank_or_comment(const std::string& line) {
  auto first = line.find_first_not_of(" \t\r");
  return first == std::string::npos || line[first] == '#';
}

std::string strip_cr(std::string line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return line;
}

}  // namespace

Roster parse_roster(std::istream& in, std::string group_name) {
  std::string text = read_stream(in);
  require_valid_utf8(text);
  Roster roster;
  roster.group_name = std::move(group_name);
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    line = strip_cr(line);
    if (is_blank_or_comment(line)) continue;
    roster.members.insert(normalize_name(line));
  }
  if (roster.members.empty()) {
    throw UsageError("roster '" + roster.group_name + "' has no members");
  }
  return roster;
}

Roster load_roster(const std::string& path, std::string group_name) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open roster file: " + path);
  return parse_roster(in, std::move(group_name));
}

AliasMap parse_alias_map(std::istream& in) {
  std::string text = read_stream(in);
  require_valid_utf8(text);
  AliasMap aliases;
  std::istringstream lines(text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(lines, line)) {
    ++line_no;
    line = strip_cr(line);
    if (is_blank_or_comment(line)) continue;
    auto tab = line.find('\t');
    if (tab == std::string::npos) {
      throw ParseError("alias line has no tab separator", line_no);
    }
    std::string raw = normalize_name(line.substr(0, tab));
    std::string canonical = normalize_name(line.substr(tab + 1));
    aliases[raw] = canonical;
  }
  return aliases;
}

AliasMap load_alias_map(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open alias file: " + path);
  return parse_alias_map(in);
}

std::vector<PublicationRecord> apply_aliases(
    std::vector<PublicationRecord> records, const AliasMap& aliases) {
  if (aliases.empty()) return records;
  for (auto& record : records) {
    auto it = aliases.find(record.venue);
    if (it != aliases.end()) record.venue = it->second;
  }
  return records;
}

}  // namespace pubgraph
