#include "sciwealth/csv.hpp"

#include <istream>
#include <ostream>

namespace sciwealth::csv {

namespace {

bool is_blank(const std::string& line) {
  for (char c : line) {
    if (c != ' ' && c != '\t' && c != '\r') return false;
  }
  return true;
}

bool is_comment(const std::string& line) {
  for (char c : line) {
    if (c == ' ' || c == '\t') continue;
    return c == '#';
  }
  return false;
}

// Reads one physical line, dropping a trailing '\r'. Returns false at EOF.
bool get_line(std::istream& in, std::string& line) {
  if (!std::getline(in, line)) return false;
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return true;
}

std::vector<std::string> split_tsv(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    std::size_t tab = line.find('\t', start);
    if (tab == std::string::npos) {
      fields.push_back(line.substr(start));
      break;
    }
    fields.push_back(line.substr(start, tab - start));
    start = tab + 1;
  }
  return fields;
}

// RFC-4180 style: quoted fields may contain commas, doubled quotes and
// line breaks, so a logical row can span physical lines.
std::vector<std::string> split_csv(std::istream& in, std::string line) {
  std::vector<std::string> fields;
  std::string field;
  bool in_quotes = false;
  std::size_t i = 0;
  while (true) {
    if (i >= line.size()) {
      if (in_quotes) {
        std::string next;
        if (!get_line(in, next)) break;  // unterminated quote: take what we have
        field += '\n';
        line = std::move(next);
        i = 0;
        continue;
      }
      break;
    }
    char c = line[i];
    if (in_quotes) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          field += '"';
          ++i;
        } else {
          in_quotes = false;
        }
      } else {
        field += c;
      }
    } else if (c == '"' && field.empty()) {
      in_quotes = true;
    } else if (c == ',') {
      fields.push_back(std::move(field));
      field.clear();
    } else {
      field += c;
    }
    ++i;
  }
  fields.push_back(std::move(field));
  return fields;
}

}  // namespace

std::optional<std::vector<std::string>> read_row(std::istream& in, Dialect dialect) {
  std::string line;
  while (get_line(in, line)) {
    if (is_blank(line) || is_comment(line)) continue;
    if (dialect == Dialect::tsv) return split_tsv(line);
    return split_csv(in, std::move(line));
  }
  return std::nullopt;
}

std::string escape_field(std::string_view field, Dialect dialect) {
  if (dialect == Dialect::tsv) return std::string(field);
  bool needs_quotes = field.find_first_of(",\"\n\r") != std::string_view::npos;
  if (!needs_quotes) return std::string(field);
  std::string out;
  out.reserve(field.size() + 2);
  out += '"';
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

void write_row(std::ostream& out, const std::vector<std::string>& fields, Dialect dialect) {
  const char sep = dialect == Dialect::tsv ? '\t' : ',';
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i > 0) out << sep;
    out << escape_field(fields[i], dialect);
  }
  out << '\n';
}

}  // namespace sciwealth::csv
