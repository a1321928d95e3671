#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "hbf/index.hpp"

namespace hbf {

// Index file layout, little-endian:
//   "HBF1" | version u32 = 1 | d u64 | gain f64 | n u64 | key seed u64 |
//   value seed u64 | d x f64 coordinates
inline constexpr std::uint32_t kIndexFormatVersion = 1;

std::vector<std::uint8_t> serialize_memory(const HbfMemory& mem);
/// Throws BadMagicError, VersionMismatchError, TruncatedFileError, or
/// FormatError for other inconsistencies (trailing bytes, bad values).
HbfMemory deserialize_memory(std::span<const std::uint8_t> bytes);

/// Throws IoError if the file cannot be written.
void save_memory(const HbfMemory& mem, const std::filesystem::path& path);
/// Throws IoError if the file cannot be read, plus the format errors above.
HbfMemory load_memory(const std::filesystem::path& path);

}  // namespace hbf
