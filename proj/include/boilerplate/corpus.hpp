#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "boilerplate/preprocess.hpp"

namespace boilerplate {

struct CorpusEntry {
  std::string path;  // relative to the corpus root, '/'-separated
  std::uintmax_t size = 0;
  std::size_t lines = 0;
};

struct CorpusManifest {
  std::filesystem::path root;
  std::vector<CorpusEntry> entries;  // sorted by path
  std::size_t skipped = 0;           // unreadable files

  std::filesystem::path absolute(const CorpusEntry& entry) const { return root / entry.path; }
};

/// `.txt` files (any case) whose name does not start with "readme".
bool is_corpus_text(const std::filesystem::path& path);

/// Recursively lists corpus text files under `root`, sorted by relative path.
CorpusManifest ingest(const std::filesystem::path& root);

std::string read_file(const std::filesystem::path& path);
std::vector<RawLine> read_lines(const std::filesystem::path& path);

/// Writes every window line of every file, one per LF-terminated record, in
/// manifest order.
void write_spool(const CorpusManifest& manifest, std::size_t p_max, std::size_t e_max,
                 std::size_t min_len, std::ostream& out);

}  // namespace boilerplate
