#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace wtb {

enum class Errc {
  CyclicGraph,
  SourceHasIncomingEdges,
  DanglingEndpoint,
  UnknownEdge,
  EmptyTargetSet,
  UnreachableTarget,
  MalformedFlow,
  NotMaximumFlow,
  TargetMismatch,
  InstanceTooLarge,
  NoPrimaryFound,
  ParseError,
  UnknownEdgeLabel,
  ParameterOutOfRange,
  CollectionTooLarge,
};

constexpr std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::CyclicGraph: return "CyclicGraph";
    case Errc::SourceHasIncomingEdges: return "SourceHasIncomingEdges";
    case Errc::DanglingEndpoint: return "DanglingEndpoint";
    case Errc::UnknownEdge: return "UnknownEdge";
    case Errc::EmptyTargetSet: return "EmptyTargetSet";
    case Errc::UnreachableTarget: return "UnreachableTarget";
    case Errc::MalformedFlow: return "MalformedFlow";
    case Errc::NotMaximumFlow: return "NotMaximumFlow";
    case Errc::TargetMismatch: return "TargetMismatch";
    case Errc::InstanceTooLarge: return "InstanceTooLarge";
    case Errc::NoPrimaryFound: return "NoPrimaryFound";
    case Errc::ParseError: return "ParseError";
    case Errc::UnknownEdgeLabel: return "UnknownEdgeLabel";
    case Errc::ParameterOutOfRange: return "ParameterOutOfRange";
    case Errc::CollectionTooLarge: return "CollectionTooLarge";
  }
  return "Unknown";
}

/// Every failure in the library is reported as an `Error` carrying a code.
/// Parse failures additionally carry the 1-based line number (0 otherwise).
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what, std::size_t line = 0)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code), line_(line) {}

  Errc code() const noexcept { return code_; }
  std::size_t line() const noexcept { return line_; }

 private:
  Errc code_;
  std::size_t line_;
};

}  // namespace wtb
