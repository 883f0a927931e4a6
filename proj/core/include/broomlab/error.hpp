#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace broomlab {

enum class ErrorCode {
  InvalidParameter,
  PreconditionViolation,
  SizeGuard,
  // Coloring file loader.
  MalformedHeader,
  MalformedEdgeLine,
  UnsortedEdges,
  DuplicateEdge,
  ColorOutOfRange,
  NonCanonicalColors,
  ImproperColoring,
  // Certificate files.
  MalformedCertificate,
  Io,
};

std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace broomlab
