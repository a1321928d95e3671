#include "hbf/persistence.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <fstream>
#include <iterator>
#include <limits>
#include <string>

#include "hbf/errors.hpp"

namespace hbf {
namespace {

constexpr std::array<std::uint8_t, 4> kMagic = {'H', 'B', 'F', '1'};
constexpr std::size_t kHeaderSize = 4 + 4 + 8 + 8 + 8 + 8 + 8;

void put_u32(std::vector<std::uint8_t>& out, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

void put_u64(std::vector<std::uint8_t>& out, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

void put_f64(std::vector<std::uint8_t>& out, double v) {
  put_u64(out, std::bit_cast<std::uint64_t>(v));
}

class Reader {
 public:
  explicit Reader(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

  std::uint64_t u64(const char* field) { return read(8, field); }
  std::uint32_t u32(const char* field) {
    return static_cast<std::uint32_t>(read(4, field));
  }
  double f64(const char* field) { return std::bit_cast<double>(read(8, field)); }
  std::size_t remaining() const noexcept { return bytes_.size() - pos_; }

 private:
  std::uint64_t read(std::size_t width, const char* field) {
    if (remaining() < width) {
      throw TruncatedFileError(std::string("index file truncated while reading ") +
                               field);
    }
    std::uint64_t v = 0;
    for (std::size_t i = 0; i < width; ++i) {
      v |= std::uint64_t{bytes_[pos_ + i]} << (8 * i);
    }
    pos_ += width;
    return v;
  }

  std::span<const std::uint8_t> bytes_;
  std::size_t pos_ = 0;
};

}  // namespace

std::vector<std::uint8_t> serialize_memory(const HbfMemory& mem) {
  std::vector<std::uint8_t> out(kMagic.begin(), kMagic.end());
  out.reserve(kHeaderSize + 8 * mem.dim());
  put_u32(out, kIndexFormatVersion);
  put_u64(out, mem.dim());
  put_f64(out, mem.gain());
  put_u64(out, mem.item_count());
  put_u64(out, mem.key_seed());
  put_u64(out, mem.value_seed());
  for (double x : mem.vector().values()) put_f64(out, x);
  return out;
}

HbfMemory deserialize_memory(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < kMagic.size()) {
    throw TruncatedFileError("index file truncated inside the magic bytes");
  }
  if (!std::equal(kMagic.begin(), kMagic.end(), bytes.begin())) {
    throw BadMagicError("not an HBF index (bad magic)");
  }
  Reader in(bytes.subspan(kMagic.size()));
  const std::uint32_t version = in.u32("version");
  if (version != kIndexFormatVersion) {
    throw VersionMismatchError("unsupported index format version " +
                               std::to_string(version));
  }
  const std::uint64_t dim = in.u64("dimension");
  const double gain = in.f64("gain");
  const std::uint64_t items = in.u64("item count");
  const std::uint64_t key_seed = in.u64("key seed");
  const std::uint64_t value_seed = in.u64("value seed");
  if (dim == 0) throw FormatError("index file declares dimension 0");
  if (dim > in.remaining() / 8) {
    throw TruncatedFileError("index file truncated: expected " + std::to_string(dim) +
                             " coordinates");
  }
  std::vector<double> coords(dim);
  for (auto& x : coords) x = in.f64("coordinates");
  if (in.remaining() != 0) {
    throw FormatError("index file has " + std::to_string(in.remaining()) +
                      " trailing bytes");
  }
  try {
    return HbfMemory(HyperVector(std::move(coords)), gain, items, key_seed,
                     value_seed);
  } catch (const InvalidArgument& e) {
    throw FormatError(std::string("index file holds invalid values: ") + e.what());
  }
}

void save_memory(const HbfMemory& mem, const std::filesystem::path& path) {
  const auto bytes = serialize_memory(mem);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  if (!out) throw IoError("failed writing '" + path.string() + "'");
}

HbfMemory load_memory(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open index file '" + path.string() + "'");
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                  std::istreambuf_iterator<char>());
  if (in.bad()) throw IoError("failed reading '" + path.string() + "'");
  try {
    return deserialize_memory(bytes);
  } catch (const BadMagicError& e) {
    throw BadMagicError(path.string() + ": " + e.what());
  } catch (const VersionMismatchError& e) {
    throw VersionMismatchError(path.string() + ": " + e.what());
  } catch (const TruncatedFileError& e) {
    throw TruncatedFileError(path.string() + ": " + e.what());
  } catch (const FormatError& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
}

}  // namespace hbf
