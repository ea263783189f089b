#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace paramp {

/// One CSV table: fixed column order, full round-trip numeric precision.
struct CsvTable {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;  // row-major, row size == columns size
};

std::string render_csv(const CsvTable& table);
CsvTable parse_csv(const std::string& text);

/// Write-temp-then-rename so readers never observe partial files.
void atomic_write(const std::filesystem::path& path, const std::string& content);

} // namespace paramp
