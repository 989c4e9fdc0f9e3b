#ifndef PUBGRAPH_RECORD_HPP
#define PUBGRAPH_RECORD_HPP

#include <cstddef>
#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace pubgraph {

enum class VenueKind { journal, proceedings };

std::string to_string(VenueKind kind);
std::optional<VenueKind> venue_kind_from_string(std::string_view text);

/// One publication. Author names and the venue key are stored in
/// normalized form (see normalize_name).
struct PublicationRecord {
  std::string title;
  std::vector<std::string> authors;  // non-empty, no duplicates, order kept
  std::string venue;                 // non-empty normalized key
  VenueKind venue_kind = VenueKind::journal;
  int year = 0;                      // > 0

  friend bool operator==(const PublicationRecord&,
                         const PublicationRecord&) = default;
};

/// A named set of researchers.
struct Roster {
  std::string group_name;
  std::set<std::string> members;  // normalized names, non-empty
};

/// Inclusive calendar-year range.
struct TimeWindow {
  int start_year = 0;
  int end_year = 0;

  bool contains(int year) const {
    return year >= start_year && year <= end_year;
  }
  friend bool operator==(const TimeWindow&, const TimeWindow&) = default;
};

struct ParseWarning {
  std::size_t line = 0;  // 1-based line of the offending record
  std::string message;

  friend bool operator==(const ParseWarning&, const ParseWarning&) = default;
};

struct ParseResult {
  std::vector<PublicationRecord> records;
  std::vector<ParseWarning> warnings;
};

enum class RecordFormat { canonical, dblp_xml };

/// Normalizes a person or venue name into its comparison key: Unicode NFC,
/// case folded, interior whitespace collapsed to single spaces, trimmed.
/// Throws InvalidNameError when nothing remains.
std::string normalize_name(std::string_view raw);

/// Parses publication records from a UTF-8 stream. Malformed individual
/// records are skipped and reported as warnings; stream-level malformation
/// (bad encoding, unterminated XML) throws ParseError.
ParseResult parse_records(std::istream& in, RecordFormat format);
ParseResult parse_records_file(const std::string& path, RecordFormat format);

/// Writes records in the canonical line-delimited format.
void write_canonical(std::ostream& out,
                     const std::vector<PublicationRecord>& records);

/// Keeps records whose year lies in the window and that have at least one
/// roster author. Order-preserving; non-roster co-authors stay in the
/// kept records.
std::vector<PublicationRecord> filter_records(
    const std::vector<PublicationRecord>& records, const Roster& roster,
    const TimeWindow& window);

/// Roster files: one name per line, blank lines and '#' comments ignored.
Roster parse_roster(std::istream& in, std::string group_name);
Roster load_roster(const std::string& path, std::string group_name);

/// Venue alias map: normalized raw key -> normalized canonical key.
using AliasMap = std::map<std::string, std::string>;

/// Alias files: one `raw<TAB>canonical` pair per line, '#' comments ignored.
AliasMap parse_alias_map(std::istream& in);
AliasMap load_alias_map(const std::string& path);

/// Rewrites record venues through the alias map (single substitution step).
std::vector<PublicationRecord> apply_aliases(
    std::vector<PublicationRecord> records, const AliasMap& aliases);

}  // namespace pubgraph

#endif  // PUBGRAPH_RECORD_HPP
