#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>

#include "enumorder/experiments.hpp"
#include "enumorder/rational.hpp"

namespace enumorder::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
  kPositive = 0,      // agreement / candidate found / match built / experiment passed
  kUsage = 1,         // bad arguments or unresolvable family
  kNegative = 2,      // disagreement / everything witnessed / gap refuted
  kInconclusive = 3,  // fuel ran out
};

enum class Format { Text, Json, Svg };

int cmd_list(std::string_view ref, std::size_t count, Format format, std::ostream& out, std::ostream& err);
int cmd_check(std::string_view ref_a, std::string_view ref_b, std::size_t prefix, std::ostream& out,
              std::ostream& err);
int cmd_type2(std::string_view ref_a, std::string_view ref_b, const SearchBounds& bounds, Format format,
              std::ostream& out, std::ostream& err);
int cmd_match(std::string_view ref_a, std::string_view ref_b, std::size_t fuel, std::size_t prefix,
              std::ostream& out, std::ostream& err);

struct ReproOptions {
  std::size_t i_max = 0;  // 0: the experiment's default
  SearchBounds bounds;
};

/// name: theorem9 | theorem5 | examples | lemma5. Writes the JSON report.
int cmd_repro(std::string_view name, const ReproOptions& options, std::ostream& out, std::ostream& err);

/// Scatter plot of (index, value) as standalone SVG markup.
std::string render_svg(std::span<const Rational> values, std::string_view title);

/// Full command line, including --out redirection.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace enumorder::cli
