#include "boilerplate/corpus.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iterator>
#include <ostream>
#include <sstream>

#include "boilerplate/errors.hpp"

namespace fs = std::filesystem;

namespace boilerplate {

namespace {

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

}  // namespace

bool is_corpus_text(const fs::path& path) {
  const auto name = lower(path.filename().string());
  return lower(path.extension().string()) == ".txt" && !name.starts_with("readme");
}

CorpusManifest ingest(const fs::path& root) {
  std::error_code ec;
  if (!fs::is_directory(root, ec)) throw IoError("corpus root is not a readable directory: " + root.string());

  CorpusManifest manifest;
  manifest.root = root;
  fs::recursive_directory_iterator it(root, fs::directory_options::skip_permission_denied, ec);
  if (ec) throw IoError("cannot read corpus root " + root.string() + ": " + ec.message());
  for (const fs::recursive_directory_iterator end; it != end; it.increment(ec)) {
    if (ec) {
      ++manifest.skipped;
      ec.clear();
      continue;
    }
    const auto& entry = *it;
    if (!entry.is_regular_file(ec) || !is_corpus_text(entry.path())) continue;
    std::ifstream in(entry.path(), std::ios::binary);
    if (!in) {
      ++manifest.skipped;
      continue;
    }
    CorpusEntry e;
    e.path = fs::relative(entry.path(), root).generic_string();
    e.size = entry.file_size(ec);
    char last = '\n';
    std::size_t lines = 0;
    for (std::istreambuf_iterator<char> c(in), eof; c != eof; ++c) {
      last = *c;
      if (last == '\n') ++lines;
    }
    e.lines = lines + (last != '\n' ? 1 : 0);
    manifest.entries.push_back(std::move(e));
  }
  std::sort(manifest.entries.begin(), manifest.entries.end(),
            [](const CorpusEntry& a, const CorpusEntry& b) { return a.path < b.path; });
  return manifest;
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return std::move(buffer).str();
}

std::vector<RawLine> read_lines(const fs::path& path) { return split_lines(read_file(path)); }

void write_spool(const CorpusManifest& manifest, std::size_t p_max, std::size_t e_max,
                 std::size_t min_len, std::ostream& out) {
  for (const auto& entry : manifest.entries) {
    const auto lines = read_lines(manifest.absolute(entry));
    for (const auto& line : window_lines(extract_window(lines, p_max, e_max, min_len))) {
      out << line.text << '\n';
    }
  }
  if (!out) throw IoError("failed writing spool");
}

}  // namespace boilerplate
