#ifndef WSMATCH_ERRORS_HPP
#define WSMATCH_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace wsmatch {

// An input document or query argument violated a format or referential
// contract (malformed JSON, unknown concept, bad datatype name, ...).
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// Registry id conflicts: registering a duplicate id or removing an
// absent one. Kept separate from InputError so callers can map the two
// to different exit codes.
class ConflictError : public std::runtime_error {
 public:
  explicit ConflictError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace wsmatch

#endif  // WSMATCH_ERRORS_HPP
