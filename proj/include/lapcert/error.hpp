#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lapcert {

enum class ErrorCode {
  parse,        // malformed input text
  param,        // infeasible parameter (family specs, config values)
  domain,       // operation called outside its domain
  numeric,      // numerical failure (non-convergence)
  unsupported,  // size or feature outside supported range
  cap,          // deterministic work budget exhausted
  io            // file could not be read or written
};

const char* error_code_name(ErrorCode c);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string msg)
      : std::runtime_error(std::move(msg)), code_(code) {}
  Error(ErrorCode code, std::string msg, std::size_t offset)
      : std::runtime_error(std::move(msg)), code_(code), offset_(offset), has_offset_(true) {}

  ErrorCode code() const { return code_; }
  bool has_offset() const { return has_offset_; }
  std::size_t offset() const { return offset_; }

 private:
  ErrorCode code_;
  std::size_t offset_ = 0;
  bool has_offset_ = false;
};

}  // namespace lapcert
