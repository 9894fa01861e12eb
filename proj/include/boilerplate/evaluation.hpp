#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "boilerplate/synthetic.hpp"

namespace boilerplate {

enum class Side { preamble, epilogue };

enum class Mismatch {
  none,      // both present (numeric error) or both absent (error 0)
  missing,   // gold has a boundary, detection does not
  spurious,  // detection has a boundary, gold does not
};

struct SideError {
  std::optional<long long> error;  // set iff mismatch == none
  Mismatch mismatch = Mismatch::none;
};

/// Signed errors in raw lines; negative means too many lines were removed.
/// Preamble: gold - detected. Epilogue: detected - gold.
struct FileEvaluation {
  std::string file;
  SideError preamble;
  SideError epilogue;

  /// "ok", or e.g. "preamble_missing;epilogue_spurious".
  std::string category() const;
};

struct Evaluation {
  std::vector<FileEvaluation> files;  // in gold order

  const SideError& side(const FileEvaluation& f, Side s) const {
    return s == Side::preamble ? f.preamble : f.epilogue;
  }
  /// Fraction of files with a numeric error of magnitude <= tolerance.
  double fraction_within(Side s, long long tolerance) const;
  std::size_t mismatches(Side s) const;
  /// Numeric errors sorted ascending, for error-curve plots.
  std::vector<long long> sorted_errors(Side s) const;
  /// |error| sorted ascending with mismatches last (as +infinity).
  std::vector<long long> sorted_magnitudes(Side s) const;
};

/// Pairs reports with gold annotations by file id. Throws ConfigError when the
/// two sets do not cover the same files.
Evaluation evaluate(std::span<const BoundaryReport> reports, std::span<const GoldAnnotation> gold);

/// `file,preamble_error,epilogue_error,category`; mismatched errors are empty.
void write_evaluation_csv(std::ostream& out, const Evaluation& evaluation);

/// `side,files,mismatches,within_<t>...` with one column per tolerance.
void write_summary_csv(std::ostream& out, const Evaluation& evaluation,
                       std::span<const long long> tolerances);

/// `rank,preamble_error,epilogue_error`: each side's numeric errors sorted.
void write_curves_csv(std::ostream& out, const Evaluation& evaluation);

}  // namespace boilerplate
