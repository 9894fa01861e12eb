#include "boilerplate/external_sort.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <fstream>
#include <queue>
#include <random>
#include <string>

#include "boilerplate/errors.hpp"

namespace fs = std::filesystem;

namespace boilerplate {

namespace {

// Scratch directory removed on scope exit.
class ScratchDir {
 public:
  explicit ScratchDir(const fs::path& parent) {
    std::error_code ec;
    const fs::path base = parent.empty() ? fs::temp_directory_path(ec) : parent;
    if (ec) throw IoError("no temporary directory: " + ec.message());
    std::random_device rd;
    for (int attempt = 0; attempt < 16; ++attempt) {
      path_ = base / ("boilerplate-sort-" + std::to_string(rd()));
      if (fs::create_directory(path_, ec)) return;
    }
    throw IoError("cannot create scratch directory under " + base.string());
  }
  ~ScratchDir() {
    std::error_code ec;
    fs::remove_all(path_, ec);
  }
  ScratchDir(const ScratchDir&) = delete;
  ScratchDir& operator=(const ScratchDir&) = delete;

  const fs::path& path() const { return path_; }

 private:
  fs::path path_;
};

struct Record {
  std::uint64_t count = 0;
  std::string text;
};

bool read_record(std::istream& in, Record& rec) {
  std::string line;
  if (!std::getline(in, line)) return false;
  const auto tab = line.find('\t');
  if (tab == std::string::npos) throw IoError("corrupt sort run");
  std::from_chars(line.data(), line.data() + tab, rec.count);
  rec.text.assign(line, tab + 1);
  return true;
}

class RunWriter {
 public:
  explicit RunWriter(const fs::path& path) : out_(path, std::ios::binary) {
    if (!out_) throw IoError("cannot create sort run " + path.string());
  }
  void write(std::uint64_t count, const std::string& text) {
    out_ << count << '\t' << text << '\n';
  }
  void close() {
    out_.close();
    if (!out_) throw IoError("failed writing sort run (disk full?)");
  }

 private:
  std::ofstream out_;
};

// K-way merge of aggregated runs; `emit` sees each distinct text once.
template <typename Emit>
void merge_runs(const std::vector<fs::path>& runs, Emit&& emit) {
  std::vector<std::ifstream> inputs;
  inputs.reserve(runs.size());
  std::vector<Record> heads(runs.size());
  auto greater = [&heads](std::size_t a, std::size_t b) {
    return heads[a].text != heads[b].text ? heads[a].text > heads[b].text : a > b;
  };
  std::priority_queue<std::size_t, std::vector<std::size_t>, decltype(greater)> queue(greater);
  for (std::size_t i = 0; i < runs.size(); ++i) {
    inputs.emplace_back(runs[i], std::ios::binary);
    if (!inputs.back()) throw IoError("cannot reopen sort run " + runs[i].string());
    if (read_record(inputs[i], heads[i])) queue.push(i);
  }
  std::string current;
  std::uint64_t total = 0;
  bool have = false;
  while (!queue.empty()) {
    const std::size_t i = queue.top();
    queue.pop();
    if (have && heads[i].text != current) {
      emit(total, current);
      total = 0;
    }
    if (!have || heads[i].text != current) current = heads[i].text;
    have = true;
    total += heads[i].count;
    if (read_record(inputs[i], heads[i])) queue.push(i);
  }
  if (have) emit(total, current);
}

}  // namespace

std::vector<FrequentLine> external_sort_count(const fs::path& spool,
                                              const ExternalSortOptions& options) {
  if (options.memory_budget < kMinSortBudget) {
    throw ConfigError("sort memory budget below " + std::to_string(kMinSortBudget) + " bytes");
  }
  if (options.max_fan_in < 2) throw ConfigError("merge fan-in must be at least 2");
  std::ifstream in(spool, std::ios::binary);
  if (!in) throw IoError("cannot open spool " + spool.string());

  ScratchDir scratch(options.temp_dir);
  std::size_t next_run = 0;
  auto new_run_path = [&] { return scratch.path() / ("run-" + std::to_string(next_run++)); };

  // Phase 1: sorted, aggregated runs.
  std::deque<fs::path> runs;
  std::vector<std::string> buffer;
  std::size_t used = 0;
  auto flush = [&] {
    if (buffer.empty()) return;
    std::sort(buffer.begin(), buffer.end());
    const auto path = new_run_path();
    RunWriter writer(path);
    for (std::size_t i = 0; i < buffer.size();) {
      std::size_t j = i;
      while (j < buffer.size() && buffer[j] == buffer[i]) ++j;
      writer.write(j - i, buffer[i]);
      i = j;
    }
    writer.close();
    runs.push_back(path);
    buffer.clear();
    used = 0;
  };
  for (std::string line; std::getline(in, line);) {
    used += line.size() + sizeof(std::string);
    buffer.push_back(std::move(line));
    if (used >= options.memory_budget) flush();
  }
  if (in.bad()) throw IoError("failed reading spool " + spool.string());
  flush();

  // Phase 2: reduce the run count to the fan-in.
  while (runs.size() > options.max_fan_in) {
    std::vector<fs::path> group(runs.begin(), runs.begin() + static_cast<std::ptrdiff_t>(options.max_fan_in));
    runs.erase(runs.begin(), runs.begin() + static_cast<std::ptrdiff_t>(options.max_fan_in));
    const auto path = new_run_path();
    RunWriter writer(path);
    merge_runs(group, [&](std::uint64_t n, const std::string& text) { writer.write(n, text); });
    writer.close();
    for (const auto& p : group) fs::remove(p);
    runs.push_back(path);
  }

  std::vector<FrequentLine> result;
  merge_runs({runs.begin(), runs.end()}, [&](std::uint64_t n, const std::string& text) {
    if (n >= options.threshold) result.push_back({n, text});
  });
  return result;
}

}  // namespace boilerplate
