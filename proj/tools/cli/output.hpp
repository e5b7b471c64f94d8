#pragma once

#include <string>
#include <vector>

namespace hefp::cli {

enum class Format { csv, json, pretty };

/// A rectangular result: one header row and string cells.
struct OutputTable {
  std::string kind;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> notes;  // printed to stderr, or under "notes" in JSON
};

std::string render(const OutputTable& table, Format format);

}  // namespace hefp::cli
