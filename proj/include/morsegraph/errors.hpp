#pragma once

#include <stdexcept>
#include <string>

namespace morsegraph {

/// Base class for all rejections of caller-supplied data (bad graphs,
/// invalid functions, malformed files, exceeded size guards).  Anything
/// else escaping the library is an internal error.
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown when an operation would exceed its documented size guard.
class SizeGuardError : public InputError {
 public:
  explicit SizeGuardError(const std::string& what) : InputError(what) {}
};

}  // namespace morsegraph
