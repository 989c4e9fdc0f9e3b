// Streaming parser for the DBLP-style XML subset: top-level `article` and
// `inproceedings` elements under a single root are turned into records,
// everything else is skipped. Well-formedness problems are stream-level
// ParseErrors; per-record field problems become warnings.

#include <cctype>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pubgraph/error.hpp"
#include "pubgraph/record.hpp"

namespace pubgraph::detail {

namespace {

struct Cursor {
  const std::string& text;
  std::size_t pos = 0;
  std::size_t line = 1;
  std::size_t column = 1;

  bool eof() const { return pos >= text.size(); }
  char peek() const { return text[pos]; }

  bool starts_with(std::string_view prefix) const {
    return text.compare(pos, prefix.size(), prefix) == 0;
  }

  void advance(std::size_t count = 1) {
    for (std::size_t i = 0; i < count && pos < text.size(); ++i, ++pos) {
      if (text[pos] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
  }

  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(message, line, column);
  }
};

bool is_name_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == ':' ||
         static_cast<unsigned char>(c) >= 0x80;
}

bool is_name_char(char c) {
  return is_name_start(c) || std::isdigit(static_cast<unsigned char>(c)) ||
         c == '-' || c == '.';
}

void skip_spaces(Cursor& c) {
  while (!c.eof() && std::isspace(static_cast<unsigned char>(c.peek()))) {
    c.advance();
  }
}

void skip_until(Cursor& c, std::string_view terminator,
                const std::string& what) {
  std::size_t found = c.text.find(terminator, c.pos);
  if (found == std::string::npos) c.fail("unterminated " + what);
  c.advance(found + terminator.size() - c.pos);
}

void skip_comment(Cursor& c) {
  c.advance(4);  // <!--
  skip_until(c, "-->", "comment");
}

void skip_processing_instruction(Cursor& c) {
  c.advance(2);  // <?
  skip_until(c, "?>", "processing instruction");
}

void skip_doctype(Cursor& c) {
  c.advance(2);  // <!
  int bracket_depth = 0;
  while (!c.eof()) {
    char ch = c.peek();
    if (ch == '[') ++bracket_depth;
    if (ch == ']') --bracket_depth;
    if (ch == '>' && bracket_depth <= 0) {
      c.advance();
      return;
    }
    c.advance();
  }
  c.fail("unterminated DOCTYPE declaration");
}

/// Skips comments, PIs and DOCTYPE between document-level constructs.
void skip_misc(Cursor& c) {
  for (;;) {
    skip_spaces(c);
    if (c.starts_with("<!--")) {
      skip_comment(c);
    } else if (c.starts_with("<?")) {
      skip_processing_instruction(c);
    } else if (c.starts_with("<!DOCTYPE")) {
      skip_doctype(c);
    } else {
      return;
    }
  }
}

std::string parse_name(Cursor& c) {
  if (c.eof() || !is_name_start(c.peek())) c.fail("expected an XML name");
  std::size_t start = c.pos;
  while (!c.eof() && is_name_char(c.peek())) c.advance();
  return c.text.substr(start, c.pos - start);
}

/// Parses attributes up to '>' or '/>'. Values are consumed and discarded;
/// DBLP carries `key` and `mdate` which the record model does not use.
/// Returns true when the tag is self-closing.
bool parse_attributes_and_close(Cursor& c) {
  for (;;) {
    skip_spaces(c);
    if (c.eof()) c.fail("unterminated start tag");
    if (c.peek() == '>') {
      c.advance();
      return false;
    }
    if (c.starts_with("/>")) {
      c.advance(2);
      return true;
    }
    parse_name(c);
    skip_spaces(c);
    if (c.eof() || c.peek() != '=') c.fail("expected '=' in attribute");
    c.advance();
    skip_spaces(c);
    if (c.eof() || (c.peek() != '"' && c.peek() != '\'')) {
      c.fail("expected quoted attribute value");
    }
    char quote = c.peek();
    c.advance();
    std::size_t end = c.text.find(quote, c.pos);
    if (end == std::string::npos) c.fail("unterminated attribute value");
    c.advance(end + 1 - c.pos);
  }
}

void append_codepoint(std::string& out, std::uint32_t cp) {
  if (cp < 0x80) {
    out += static_cast<char>(cp);
  } else if (cp < 0x800) {
    out += static_cast<char>(0xC0 | (cp >> 6));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else if (cp < 0x10000) {
    out += static_cast<char>(0xE0 | (cp >> 12));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else {
    out += static_cast<char>(0xF0 | (cp >> 18));
    out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  }
}

/// Decodes the predefined XML entities and numeric character references.
/// Unknown named entities (DBLP defines many in its DTD, which is not
/// shipped) are kept verbatim.
void append_entity(Cursor& c, std::string& out) {
  std::size_t semicolon = c.text.find(';', c.pos);
  if (semicolon == std::string::npos || semicolon - c.pos > 32) {
    out += '&';
    c.advance();
    return;
  }
  std::string body = c.text.substr(c.pos + 1, semicolon - c.pos - 1);
  std::string decoded;
  if (body == "amp") {
    decoded = "&";
  } else if (body == "lt") {
    decoded = "<";
  } else if (body == "gt") {
    decoded = ">";
  } else if (body == "quot") {
    decoded = "\"";
  } else if (body == "apos") {
    decoded = "'";
  } else if (!body.empty() && body[0] == '#') {
    bool hex = body.size() > 1 && (body[1] == 'x' || body[1] == 'X');
    std::uint32_t cp = 0;
    bool ok = body.size() > (hex ? 2u : 1u);
    for (std::size_t i = hex ? 2 : 1; ok && i < body.size(); ++i) {
      char d = body[i];
      std::uint32_t digit;
      if (d >= '0' && d <= '9') {
        digit = d - '0';
      } else if (hex && d >= 'a' && d <= 'f') {
        digit = d - 'a' + 10;
      } else if (hex && d >= 'A' && d <= 'F') {
        digit = d - 'A' + 10;
      } else {
        ok = false;
        break;
      }
      cp = cp * (hex ? 16 : 10) + digit;
      if (cp > 0x10FFFF) ok = false;
    }
    if (ok && cp > 0 && (cp < 0xD800 || cp > 0xDFFF)) {
      append_codepoint(decoded, cp);
    } else {
      c.fail("invalid character reference '&" + body + ";'");
    }
  } else {
    // Unknown named entity: keep the raw text.
    out += '&' + body + ';';
    c.advance(body.size() + 2);
    return;
  }
  out += decoded;
  c.advance(body.size() + 2);
}

/// Collects the concatenated text content of an already-opened element,
/// descending into nested markup (e.g. <i> inside titles).
std::string collect_text(Cursor& c, const std::string& element_name) {
  std::string out;
  std::vector<std::string> open{element_name};
  while (!open.empty()) {
    if (c.eof()) c.fail("unclosed element '" + open.back() + "'");
    if (c.starts_with("<!--")) {
      skip_comment(c);
    } else if (c.starts_with("<?")) {
      skip_processing_instruction(c);
    } else if (c.starts_with("<![CDATA[")) {
      c.advance(9);
      std::size_t end = c.text.find("]]>", c.pos);
      if (end == std::string::npos) c.fail("unterminated CDATA section");
      out.append(c.text, c.pos, end - c.pos);
      c.advance(end + 3 - c.pos);
    } else if (c.starts_with("</")) {
      c.advance(2);
      std::string name = parse_name(c);
      skip_spaces(c);
      if (c.eof() || c.peek() != '>') c.fail("malformed end tag");
      c.advance();
      if (name != open.back()) {
        c.fail("mismatched end tag '</" + name + ">', expected '</" +
               open.back() + ">'");
      }
      open.pop_back();
    } else if (c.peek() == '<') {
      c.advance();
      std::string name = parse_name(c);
      if (!parse_attributes_and_close(c)) open.push_back(name);
    } else if (c.peek() == '&') {
      append_entity(c, out);
    } else {
      out += c.peek();
      c.advance();
    }
  }
  return out;
}

/// Skips a whole already-opened element, enforcing well-formedness.
void skip_element(Cursor& c, const std::string& element_name) {
  collect_text(c, element_name);
}

struct RawPublication {
  std::size_t line = 0;
  bool is_article = false;
  std::vector<std::string> authors;
  std::optional<std::string> title;
  std::optional<std::string> venue;  // journal or booktitle text
  std::optional<std::string> year;
};

/// Reads the children of an article/inproceedings element.
RawPublication parse_publication(Cursor& c, const std::string& element_name,
                                 std::size_t start_line) {
  RawPublication pub;
  pub.line = start_line;
  pub.is_article = element_name == "article";
  const std::string venue_child = pub.is_article ? "journal" : "booktitle";
  for (;;) {
    if (c.eof()) c.fail("unclosed element '" + element_name + "'");
    if (c.starts_with("<!--")) {
      skip_comment(c);
      continue;
    }
    if (c.starts_with("<?")) {
      skip_processing_instruction(c);
      continue;
    }
    if (c.starts_with("</")) {
      c.advance(2);
      std::string name = parse_name(c);
      skip_spaces(c);
      if (c.eof() || c.peek() != '>') c.fail("malformed end tag");
      c.advance();
      if (name != element_name) {
        c.fail("mismatched end tag '</" + name + ">', expected '</" +
               element_name + ">'");
      }
      return pub;
    }
    if (c.peek() == '<') {
      c.advance();
      std::string name = parse_name(c);
      bool self_closing = parse_attributes_and_close(c);
      std::string content = self_closing ? std::string() : collect_text(c, name);
      if (name == "author") {
        pub.authors.push_back(content);
      } else if (name == "title" && !pub.title) {
        pub.title = content;
      } else if (name == venue_child && !pub.venue) {
        pub.venue = content;
      } else if (name == "year" && !pub.year) {
        pub.year = content;
      }
      continue;
    }
    // Mixed text directly inside the publication element is ignored.
    c.advance();
  }
}

std::optional<std::string> build_record(const RawPublication& pub,
                                        PublicationRecord& out) {
  PublicationRecord record;
  record.venue_kind =
      pub.is_article ? VenueKind::journal : VenueKind::proceedings;
  for (const auto& raw : pub.authors) {
    std::string normalized;
    try {
      normalized = normalize_name(raw);
    } catch (const InvalidNameError&) {
      return "author name is empty after normalization";
    }
    bool duplicate = false;
    for (const auto& existing : record.authors) {
      if (existing == normalized) {
        duplicate = true;
        break;
      }
    }
    if (!duplicate) record.authors.push_back(std::move(normalized));
  }
  if (record.authors.empty()) return "element has no authors";

  if (!pub.venue) {
    return pub.is_article ? "article has no 'journal' child"
                          : "inproceedings has no 'booktitle' child";
  }
  try {
    record.venue = normalize_name(*pub.venue);
  } catch (const InvalidNameError&) {
    return "venue is empty after normalization";
  }

  if (!pub.year) return "element has no 'year' child";
  int year = 0;
  const std::string& year_text = *pub.year;
  bool numeric = !year_text.empty();
  for (char d : year_text) {
    if (d < '0' || d > '9') {
      numeric = false;
      break;
    }
    int digit = d - '0';
    if (year > 100000) {
      numeric = false;
      break;
    }
    year = year * 10 + digit;
  }
  if (!numeric || year <= 0) return "year '" + year_text + "' is not a positive integer";
  record.year = year;

  record.title = pub.title.value_or("");
  out = std::move(record);
  return std::nullopt;
}

}  // namespace

ParseResult parse_dblp_xml(const std::string& text) {
  Cursor c{text};
  if (c.starts_with("\xEF\xBB\xBF")) c.advance(3);
  skip_misc(c);
  if (c.eof()) throw ParseError("document has no root element", c.line, c.column);
  if (c.peek() != '<') c.fail("expected the root element");
  c.advance();
  std::string root = parse_name(c);
  bool root_closed = parse_attributes_and_close(c);

  ParseResult result;
  while (!root_closed) {
    if (c.eof()) c.fail("unclosed root element '" + root + "'");
    if (c.starts_with("<!--")) {
      skip_comment(c);
      continue;
    }
    if (c.starts_with("<?")) {
      skip_processing_instruction(c);
      continue;
    }
    if (c.starts_with("</")) {
      c.advance(2);
      std::string name = parse_name(c);
      skip_spaces(c);
      if (c.eof() || c.peek() != '>') c.fail("malformed end tag");
      c.advance();
      if (name != root) {
        c.fail("mismatched end tag '</" + name + ">', expected '</" + root +
               ">'");
      }
      break;
    }
    if (c.peek() == '<') {
      std::size_t element_line = c.line;
      c.advance();
      std::string name = parse_name(c);
      bool self_closing = parse_attributes_and_close(c);
      if (name == "article" || name == "inproceedings") {
        RawPublication pub;
        if (self_closing) {
          pub.line = element_line;
          pub.is_article = name == "article";
        } else {
          pub = parse_publication(c, name, element_line);
        }
        PublicationRecord record;
        if (auto problem = build_record(pub, record)) {
          result.warnings.push_back(
              {element_line, "skipped " + name + ": " + *problem});
        } else {
          result.records.push_back(std::move(record));
        }
      } else if (!self_closing) {
        skip_element(c, name);
      }
      continue;
    }
    // Bare text between publications is ignored.
    c.advance();
  }

  skip_misc(c);
  if (!c.eof()) c.fail("content after the document element");
  return result;
}

}  // namespace pubgraph::detail
