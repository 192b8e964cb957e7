#pragma once

#include <stdexcept>
#include <string>

namespace hypermatroid {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A value is not a member of the hyperfield's carrier.
class CarrierError : public Error {
 public:
  using Error::Error;
};

/// Mismatched hyperfields, ground sets, ranks or tuple lengths.
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// A brute-force routine would exceed its configured size cap.
class CapError : public Error {
 public:
  using Error::Error;
};

/// Malformed input document; the message carries the JSON path.
class FormatError : public Error {
 public:
  using Error::Error;
};

}  // namespace hypermatroid
