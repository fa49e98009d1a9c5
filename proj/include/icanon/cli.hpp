#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "icanon/canonical.hpp"
#include "icanon/whittaker.hpp"

namespace icanon::cli {

/// Process exit codes by error class.
enum ExitCode : int { kOk = 0, kFailed = 1, kParse = 2, kWindow = 3, kConvention = 4 };

enum class Format { Text, Json, Csv };

/// Version tag of every JSON document the tool writes.
inline constexpr const char* kSchema = "icanon/1";

/// Validated job description shared by all subcommands.
struct JobConfig {
  int m = 1, n = 1;
  Mode mode = Mode::Iota;
  std::string zeta = "0";
  /// Window radius; nullopt means automatic (value range of the query plus slack).
  std::optional<HalfInt> radius;
  int slack = 2;
  /// Automatic windows are doubled on WindowOverflow up to this radius.
  HalfInt max_radius = HalfInt::integer(24);
  Format format = Format::Text;
  unsigned seed = 1;
  // Command parameters.
  std::string kind;
  std::string f_text, lambda_text;
  std::string suite = "all";
  bool perturb = false;
  int samples = 50;
  std::string out_path;
};

/// Entry point of the command-line tool; writes results to `out` and
/// diagnostics (warnings, errors) to `err`, and returns an ExitCode.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Renders a multiplicity table with metadata and lambda / f labels.
std::string render_table(const MultiplicityTable& t, Format format);
/// Renders a canonical-type expansion; uncertified terms are omitted and
/// counted. `label` overrides the kind name (used for "bar").
std::string render_expansion(const CanonicalExpansion& e, const JobConfig& cfg, const Window& w, Format format,
                             const std::string& label = "");

}  // namespace icanon::cli
