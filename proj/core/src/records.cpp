#include "hbf/records.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <string>

#include "hbf/errors.hpp"

namespace hbf {
namespace {

std::string line_context(std::size_t line_no) {
  return "line " + std::to_string(line_no);
}

void strip_cr(std::string& line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
}

}  // namespace

std::vector<Record> parse_records(std::istream& in) {
  std::vector<Record> records;
  std::set<std::string, std::less<>> seen;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    strip_cr(line);
    if (line.empty()) continue;
    const auto tab = line.find('\t');
    if (tab == std::string::npos) {
      throw FormatError("records: " + line_context(line_no) + ": missing TAB separator");
    }
    Record r{line.substr(0, tab), line.substr(tab + 1)};
    if (r.key.empty() || r.value.empty()) {
      throw FormatError("records: " + line_context(line_no) + ": empty key or value");
    }
    if (!seen.insert(r.key).second) {
      throw FormatError("records: " + line_context(line_no) + ": duplicate key '" +
                        r.key + "'");
    }
    records.push_back(std::move(r));
  }
  return records;
}

std::vector<Record> read_records(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open records file '" + path.string() + "'");
  try {
    return parse_records(in);
  } catch (const FormatError& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
}

void write_records(std::ostream& out, const std::vector<Record>& records) {
  for (const auto& r : records) out << r.key << '\t' << r.value << '\n';
}

std::vector<std::string> read_labels(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open label file '" + path.string() + "'");
  std::vector<std::string> labels;
  std::string line;
  while (std::getline(in, line)) {
    strip_cr(line);
    if (!line.empty()) labels.push_back(line);
  }
  return labels;
}

void write_labels(const std::filesystem::path& path,
                  const std::vector<std::string>& labels) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write label file '" + path.string() + "'");
  for (const auto& label : labels) out << label << '\n';
  if (!out) throw IoError("failed writing label file '" + path.string() + "'");
}

}  // namespace hbf
