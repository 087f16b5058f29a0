#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace mtlspca {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Dimension mismatches, out-of-range indices, inconsistent inputs.
class StructuralError : public Error {
 public:
  using Error::Error;
};

/// Non-finite or otherwise unusable numeric data.
class DataError : public Error {
 public:
  using Error::Error;
};

/// Fewer samples than an estimator needs.
class InsufficientDataError : public Error {
 public:
  using Error::Error;
};

/// The fitted model is meaningless (e.g. zero projection vector).
class DegenerateModelError : public Error {
 public:
  using Error::Error;
};

/// CSV / manifest ingestion failure with file and line diagnostics.
class ParseError : public Error {
 public:
  ParseError(const std::string& file, long line, const std::string& what)
      : Error(file + ":" + std::to_string(line) + ": " + what),
        file_(file),
        line_(line) {}

  const std::string& file() const { return file_; }
  long line() const { return line_; }

 private:
  std::string file_;
  long line_;
};

/// Socket-level failure. Retriable: no state has been committed.
class TransportError : public Error {
 public:
  using Error::Error;
};

/// Malformed wire data. `code` is the wire error code (see wire.hpp).
class ProtocolError : public Error {
 public:
  ProtocolError(std::uint16_t code, const std::string& what)
      : Error(what), code_(code) {}

  std::uint16_t code() const { return code_; }

 private:
  std::uint16_t code_;
};

/// An ERROR frame received from the peer, surfaced verbatim.
class RemoteError : public Error {
 public:
  RemoteError(std::uint16_t code, const std::string& message)
      : Error("remote error " + std::to_string(code) + ": " + message),
        code_(code),
        remote_message_(message) {}

  std::uint16_t code() const { return code_; }
  const std::string& remote_message() const { return remote_message_; }

 private:
  std::uint16_t code_;
  std::string remote_message_;
};

}  // namespace mtlspca
