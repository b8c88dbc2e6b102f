#ifndef HOLKIT_ERRORS_HPP_
#define HOLKIT_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace holkit {

struct error : std::runtime_error {
  explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

// Operands belong to groups over different alphabets (or tower levels).
struct mismatch_error : error {
  explicit mismatch_error(const std::string& msg) : error(msg) {}
};

// Malformed textual input; `pos` is a 0-based character offset.
struct parse_error : error {
  size_t pos;
  parse_error(const std::string& msg, size_t position)
      : error(msg + " (at position " + std::to_string(position) + ")"), pos(position) {}
};

// A claimed inverse fails verification; carries the first failing generator.
struct not_inverse_error : error {
  explicit not_inverse_error(const std::string& msg) : error(msg) {}
};

// An enumeration exceeded its configured element cap.
struct resource_limit_error : error {
  explicit resource_limit_error(const std::string& msg) : error(msg) {}
};

// A structural fact the algorithms rely on failed; indicates a bug.
struct internal_error : error {
  explicit internal_error(const std::string& msg) : error(msg) {}
};

}  // namespace holkit

#endif  // HOLKIT_ERRORS_HPP_
