#pragma once

#include <stdexcept>
#include <string>

namespace advtext {

// Status buckets shared with the C API and the CLI exit-code mapping.
enum class Status {
  Ok = 0,
  InvalidArgument = 1,
  Io = 2,
  Format = 3,
  Training = 4,
  Transport = 5,
  Internal = 6,
};

class Error : public std::runtime_error {
 public:
  Error(Status code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Status code() const { return code_; }

 private:
  Status code_;
};

struct DimensionError : Error {
  explicit DimensionError(const std::string& w) : Error(Status::InvalidArgument, w) {}
};

struct ContractError : Error {
  explicit ContractError(const std::string& w) : Error(Status::InvalidArgument, w) {}
};

struct IndexError : Error {
  explicit IndexError(const std::string& w) : Error(Status::InvalidArgument, w) {}
};

struct IoError : Error {
  explicit IoError(const std::string& w) : Error(Status::Io, w) {}
};

struct FormatError : Error {
  explicit FormatError(const std::string& w) : Error(Status::Format, w) {}
};

struct TrainingError : Error {
  explicit TrainingError(const std::string& w) : Error(Status::Training, w) {}
};

struct TransportError : Error {
  explicit TransportError(const std::string& w) : Error(Status::Transport, w) {}
};

struct ProtocolError : Error {
  explicit ProtocolError(const std::string& w) : Error(Status::Transport, w) {}
};

// NaN/Inf escaping a numeric primitive.
struct NumericError : Error {
  explicit NumericError(const std::string& w) : Error(Status::Internal, w) {}
};

}  // namespace advtext
