// RFC-4180 CSV serialization helpers.
#include "cavitylz/csv.hpp"

#include <charconv>
#include <fstream>
#include <system_error>
#include <utility>

#include "cavitylz/errors.hpp"

namespace cavitylz::io {

std::string format_double(double value) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), value);
  if (res.ec != std::errc{}) throw DomainError("number formatting failed");
  return std::string(buf, res.ptr);
}

std::string csv_escape(const std::string& field) {
  const bool needs_quotes =
      field.find_first_of(",\"\r\n") != std::string::npos;
  if (!needs_quotes) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

CsvTable::CsvTable(std::vector<std::string> header)
    : header_(std::move(header)) {
  if (header_.empty()) throw DomainError("CSV table needs a non-empty header");
}

void CsvTable::add_row(std::vector<std::string> cells) {
  if (cells.size() != header_.size())
    throw DomainError("CSV row width does not match the header");
  rows_.push_back(std::move(cells));
}

std::string CsvTable::serialize() const {
  std::string out;
  auto append_line = [&out](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i > 0) out += ',';
      out += csv_escape(cells[i]);
    }
    out += "\r\n";
  };
  append_line(header_);
  for (const auto& row : rows_) append_line(row);
  return out;
}

void write_text_file(const std::filesystem::path& path,
                     const std::string& payload) {
  std::ofstream stream(path, std::ios::binary | std::ios::trunc);
  if (!stream) throw DomainError("cannot open for writing: " + path.string());
  stream.write(payload.data(), static_cast<std::streamsize>(payload.size()));
  if (!stream) throw DomainError("short write to " + path.string());
}

}  // namespace cavitylz::io
