#pragma once

#include <cstdint>
#include <cstring>
#include <fstream>
#include <string>
#include <vector>

#include "nmlab/core/error.hpp"

namespace nm {

// Little-endian binary file helpers. All container formats (NMPTS01,
// NMTRAJ1, NMMAT01, NMLORA1) are written through these.

class BinaryWriter {
 public:
  explicit BinaryWriter(const std::string& path) : out_(path, std::ios::binary) {
    if (!out_) throw IoError("cannot open for writing: " + path);
  }

  void magic(const char* tag) { out_.write(tag, std::streamsize(std::strlen(tag))); }

  template <typename T>
  void scalar(T v) {
    out_.write(reinterpret_cast<const char*>(&v), sizeof(T));
  }

  template <typename T>
  void span(const T* data, size_t count) {
    out_.write(reinterpret_cast<const char*>(data), std::streamsize(count * sizeof(T)));
  }

  bool good() const { return bool(out_); }

 private:
  std::ofstream out_;
};

class BinaryReader {
 public:
  explicit BinaryReader(const std::string& path) : in_(path, std::ios::binary), path_(path) {
    if (!in_) throw IoError("cannot open for reading: " + path);
  }

  void expect_magic(const char* tag) {
    size_t n = std::strlen(tag);
    std::string buf(n, '\0');
    in_.read(buf.data(), std::streamsize(n));
    if (!in_ || buf != tag)
      throw IoError(path_ + ": bad magic, expected " + std::string(tag));
  }

  template <typename T>
  T scalar() {
    T v{};
    in_.read(reinterpret_cast<char*>(&v), sizeof(T));
    if (!in_) throw IoError(path_ + ": truncated file");
    return v;
  }

  template <typename T>
  void span(T* data, size_t count) {
    in_.read(reinterpret_cast<char*>(data), std::streamsize(count * sizeof(T)));
    if (!in_) throw IoError(path_ + ": truncated file");
  }

 private:
  std::ifstream in_;
  std::string path_;
};

}  // namespace nm
