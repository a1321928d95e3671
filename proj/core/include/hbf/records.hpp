#pragma once

#include <filesystem>
#include <iosfwd>
#include <vector>

#include "hbf/index.hpp"

namespace hbf {

/// key<TAB>value per line. Blank lines are skipped and a trailing CR is
/// stripped. Throws FormatError (with line number) for a missing tab, empty
/// key/value or a repeated key.
std::vector<Record> parse_records(std::istream& in);
std::vector<Record> read_records(const std::filesystem::path& path);
void write_records(std::ostream& out, const std::vector<Record>& records);

/// One label per line; used for the label sidecar of an index file.
std::vector<std::string> read_labels(const std::filesystem::path& path);
void write_labels(const std::filesystem::path& path,
                  const std::vector<std::string>& labels);

}  // namespace hbf
