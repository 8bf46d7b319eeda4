#ifndef FRDS_ERRORS_HPP
#define FRDS_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace frds {

// Bad arguments or inconsistent in-memory data. The CLI maps this to exit 2.
struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed input file. Carries the source location for error messages.
struct FormatError : std::runtime_error {
  FormatError(std::string file_, std::size_t line_, const std::string& msg)
      : std::runtime_error(file_ + ":" + std::to_string(line_) + ": " + msg),
        file(std::move(file_)),
        line(line_) {}

  std::string file;
  std::size_t line;
};

}  // namespace frds

#endif
