#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace nsg {

enum class ErrorCode {
  EmptyGenerators,
  NotCofinite,
  InputTooLarge,
  NotAMember,
  ParentMismatch,
  NotContained,
  FullMonoid,
  InternalInconsistency,
  ResourceLimit,
  OracleTooLarge,
  NotMinClosed,
  CompletionFails,
  NoConductor,
  NotAdditivelyClosed,
  NotGoodIdeal,
  ChainAmbiguity,
  MultiplicityVectorMissing,
  TruncationTooSmall,
  ZeroGenerator,
  ParseError,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above so
/// callers (the CLI in particular) can map them to exit statuses.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace nsg
