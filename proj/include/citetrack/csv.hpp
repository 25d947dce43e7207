#pragma once

#include <filesystem>
#include <fstream>
#include <string>
#include <string_view>

#include "citetrack/errors.hpp"
#include "citetrack/format.hpp"
#include "citetrack/table.hpp"

namespace citetrack {

// Comma-separated, header row, LF line endings. Numbers use the shortest
// round-trip decimal form.
inline std::string to_csv(const experiment_table& table) {
  std::string out;
  const std::vector<std::string>& cols = table.columns();
  for (std::size_t i = 0; i < cols.size(); ++i) {
    if (i > 0) out += ',';
    out += cols[i];
  }
  out += '\n';
  for (const std::vector<double>& row : table.rows()) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i > 0) out += ',';
      out += format_double(row[i]);
    }
    out += '\n';
  }
  return out;
}

inline void write_text_file(const std::filesystem::path& path,
                            std::string_view content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw io_error("cannot open " + path.string() + " for writing");
  f.write(content.data(), static_cast<std::streamsize>(content.size()));
  f.flush();
  if (!f) throw io_error("failed writing " + path.string());
}

inline std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw io_error("cannot open " + path.string() + " for reading");
  return std::string(std::istreambuf_iterator<char>(f),
                     std::istreambuf_iterator<char>());
}

}  // namespace citetrack
