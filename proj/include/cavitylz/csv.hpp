// Deterministic RFC-4180 CSV emission: '.' decimal point, no locale, CRLF
// line endings, shortest round-trip floating-point formatting.
#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <vector>

namespace cavitylz::io {

// Shortest decimal string that parses back to exactly `value`.
[[nodiscard]] std::string format_double(double value);

// Quote a field per RFC 4180 when it contains a comma, quote, CR, or LF.
[[nodiscard]] std::string csv_escape(const std::string& field);

class CsvTable {
 public:
  explicit CsvTable(std::vector<std::string> header);

  void add_row(std::vector<std::string> cells);  // width-checked

  [[nodiscard]] std::size_t row_count() const { return rows_.size(); }
  [[nodiscard]] std::string serialize() const;  // header + rows, CRLF

 private:
  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
};

// Byte-exact write (binary stream, no newline translation).
void write_text_file(const std::filesystem::path& path,
                     const std::string& payload);

}  // namespace cavitylz::io
