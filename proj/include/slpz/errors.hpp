#pragma once

#include <stdexcept>
#include <string>

namespace slpz {

/// Base for errors raised while loading a serialized container.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class TruncatedError : public FormatError {
 public:
  using FormatError::FormatError;
};

class BadMagicError : public FormatError {
 public:
  using FormatError::FormatError;
};

class VersionError : public FormatError {
 public:
  using FormatError::FormatError;
};

/// Declared lengths disagree with the bytes actually present.
class LengthMismatchError : public FormatError {
 public:
  using FormatError::FormatError;
};

/// Well-framed payload whose contents violate a structural invariant.
class CorruptError : public FormatError {
 public:
  using FormatError::FormatError;
};

/// select() asked for an occurrence that does not exist.
class NoSuchOccurrence : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

}  // namespace slpz
