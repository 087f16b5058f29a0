#pragma once

#include <Eigen/Dense>
#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "mtlspca/errors.hpp"

namespace mtlspca::wire {

// Connection preamble, sent once per direction when a connection opens:
//   magic "MTLS" (4 bytes), version (1 byte, currently 1).
// After the preamble each direction carries a sequence of frames:
//   payload_length (u32, little endian), msg_type (1 byte), payload.
// All multi-byte integers are little endian; vectors are packed 64-bit
// IEEE-754 doubles, bit exact.
inline constexpr std::array<std::uint8_t, 4> kMagic = {'M', 'T', 'L', 'S'};
inline constexpr std::uint8_t kVersion = 1;
inline constexpr std::size_t kPreambleSize = 5;
inline constexpr std::uint32_t kMaxPayload = 64u * 1024u * 1024u;

enum class MsgType : std::uint8_t {
  kRegister = 0x01,
  kUploadStats = 0x02,
  kRequestProjection = 0x03,
  kProjection = 0x04,
  kError = 0x7F,
};

// Application error codes (1..99) travel in ERROR frames; framing error
// codes (100..) describe why a byte sequence could not be decoded.
enum class ErrorCode : std::uint16_t {
  kUnknownTarget = 1,
  kMissingUploads = 2,
  kDegenerateModel = 3,
  kInvalidStats = 4,

  kBadMagic = 100,
  kUnknownVersion = 101,
  kUnknownType = 102,
  kTruncatedPayload = 103,
  kLengthOverflow = 104,
  kMalformedPayload = 105,
};

// payload: task_id u32, num_classes u16 (always 2), p u32, n1 u32, n2 u32
struct Register {
  std::uint32_t task_id = 0;
  std::uint16_t num_classes = 2;
  std::uint32_t p = 0;
  std::uint32_t n1 = 0;
  std::uint32_t n2 = 0;

  bool operator==(const Register&) const = default;
};

// per class: n_a u32, n_b u32, h_a (p doubles), h_b (p doubles)
struct ClassBlock {
  std::uint32_t n_a = 0;
  std::uint32_t n_b = 0;
  Eigen::VectorXd half_a;
  Eigen::VectorXd half_b;
};

// payload: task_id u32, class block for class 1, class block for class 2
struct UploadStats {
  std::uint32_t task_id = 0;
  std::array<ClassBlock, 2> cls;
};

// payload: target_task u32
struct RequestProjection {
  std::uint32_t target_task = 0;

  bool operator==(const RequestProjection&) const = default;
};

// payload: p u32, v (p doubles), zeta double, label_len u32, labels
struct Projection {
  Eigen::VectorXd v;
  double zeta = 0.0;
  Eigen::VectorXd labels;
};

// payload: code u16, msg_len u32, utf-8 message
struct ErrorReply {
  std::uint16_t code = 0;
  std::string message;

  bool operator==(const ErrorReply&) const = default;
};

using Message = std::variant<Register, UploadStats, RequestProjection,
                             Projection, ErrorReply>;

bool operator==(const ClassBlock& a, const ClassBlock& b);
bool operator==(const UploadStats& a, const UploadStats& b);
bool operator==(const Projection& a, const Projection& b);

MsgType type_of(const Message& msg);

/// Serializes a message into one complete frame (header plus payload).
std::vector<std::uint8_t> encode(const Message& msg);

/// Parses one complete frame. Throws ProtocolError carrying the matching
/// ErrorCode on any malformation; never reads outside `frame`.
Message decode(std::span<const std::uint8_t> frame);

/// Validates the 5-byte connection preamble.
void check_preamble(std::span<const std::uint8_t> bytes);

}  // namespace mtlspca::wire
