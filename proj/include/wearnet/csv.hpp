#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace wearnet {

/// Shortest round-trip decimal form, '.' separator regardless of locale.
std::string format_double(double v);

double parse_double(std::string_view s);

/// Parses "start:stop:step" into an inclusive ascending grid.
std::vector<double> parse_grid(std::string_view spec);

/// Accumulates an RFC-4180-style table with a leading `#` provenance comment.
class CsvTable {
 public:
  CsvTable(std::vector<std::string> columns, std::uint64_t config_hash, std::uint64_t seed);

  void add_row(const std::vector<double>& values);
  void add_row(const std::vector<std::string>& cells);

  std::string str() const;
  void write(const std::filesystem::path& path) const;

  std::size_t rows() const { return rows_.size(); }

 private:
  std::vector<std::string> columns_;
  std::vector<std::string> rows_;
  std::uint64_t hash_;
  std::uint64_t seed_;
};

void write_text_file(const std::filesystem::path& path, std::string_view text);

std::uint64_t fnv1a(std::string_view bytes);

}  // namespace wearnet
