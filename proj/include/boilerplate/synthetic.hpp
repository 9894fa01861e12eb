#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "boilerplate/detector.hpp"

namespace boilerplate {

/// True boundaries of one file, in the same shape as a detector report.
using GoldAnnotation = BoundaryReport;

/// Boilerplate block. Lines may contain the placeholders {TITLE}, {TITLE_UC},
/// {AUTHOR}, {ID} and {DATE}; empty strings are blank lines.
struct BoilerplateTemplate {
  std::vector<std::string> lines;
};

std::vector<BoilerplateTemplate> default_preamble_templates();
std::vector<BoilerplateTemplate> default_epilogue_templates();

struct SyntheticSpec {
  std::size_t files = 100;
  std::vector<BoilerplateTemplate> preambles = default_preamble_templates();
  std::vector<BoilerplateTemplate> epilogues = default_epilogue_templates();
  double mutation_rate = 0.0;  // chance a non-trivial template line becomes a unique variant
  double epilogue_probability = 1.0;
  std::size_t body_min_lines = 400;
  std::size_t body_max_lines = 1200;
  std::uint64_t seed = 1;

  void validate() const;
};

struct SyntheticFile {
  std::string name;
  std::vector<std::string> lines;
  std::size_t preamble_variant = 0;
  std::size_t mutated_lines = 0;
  std::size_t template_lines = 0;  // non-trivial template lines eligible for mutation
};

struct SyntheticCorpus {
  std::vector<SyntheticFile> files;
  std::vector<GoldAnnotation> gold;
};

/// Files are built as preamble + body + optional epilogue. Templates are
/// assigned round-robin over a seeded permutation so every variant gets
/// files / variants copies (±1). Body lines carry a per-file salt and are
/// never frequent. Gold boundaries point at the last non-blank preamble line
/// and the first non-blank epilogue line.
SyntheticCorpus generate_synthetic(const SyntheticSpec& spec);

/// Writes `<dir>/<name>` for every file and `<dir>/gold.tsv`.
void write_synthetic(const SyntheticCorpus& corpus, const std::filesystem::path& dir);

std::string join_lines(const std::vector<std::string>& lines);

}  // namespace boilerplate
