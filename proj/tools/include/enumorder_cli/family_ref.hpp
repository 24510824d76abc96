#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "enumorder/set_spec.hpp"

namespace enumorder::cli {

/// Names the part of a family reference that could not be resolved.
class ResolutionError : public std::runtime_error {
 public:
  ResolutionError(std::string segment, const std::string& why)
      : std::runtime_error("cannot resolve '" + segment + "': " + why), segment_(std::move(segment)) {}

  const std::string& segment() const { return segment_; }

 private:
  std::string segment_;
};

/// Resolves a textual family reference:
///
///   harmonic | thirds | dyadic:<file> | T:<i> | A:<i> | interval:<a>,<b>
///   | finite:<v1>,<v2>,... | seq:<file>[:i=<k>]
///
/// followed by any number of modifiers "+shift=<m>", "+drop=<v1;...>",
/// "+add=<v1;...>", applied left to right. The result is named by `ref`.
SetSpec resolve_family(std::string_view ref);

}  // namespace enumorder::cli
