#pragma once

#include <cstdint>
#include <fstream>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace daml::io {

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Little-endian binary writer. Every artifact file starts with an 8-byte
// magic tag followed by a uint32 format version.
class BinaryWriter {
 public:
  BinaryWriter(const std::string& path, std::string_view magic, std::uint32_t version);

  void u32(std::uint32_t v);
  void u64(std::uint64_t v);
  void f64(double v);
  void f64s(std::span<const double> v);
  void str(std::string_view s);
  void close();

 private:
  std::ofstream out_;
  std::string path_;
};

class BinaryReader {
 public:
  BinaryReader(const std::string& path, std::string_view magic);

  std::uint32_t version() const { return version_; }
  std::uint32_t u32();
  std::uint64_t u64();
  double f64();
  void f64s(std::span<double> v);
  std::string str();
  void expect_end();

 private:
  void read_raw(void* dst, std::size_t n);

  std::ifstream in_;
  std::string path_;
  std::uint32_t version_ = 0;
};

void ensure_directory(const std::string& dir);
bool file_exists(const std::string& path);

}  // namespace daml::io
