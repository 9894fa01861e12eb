#include "boilerplate/pipeline.hpp"

#include <atomic>
#include <exception>
#include <fstream>
#include <mutex>
#include <thread>

#include "boilerplate/errors.hpp"

namespace boilerplate {

void parallel_for(std::size_t count, std::size_t workers,
                  const std::function<void(std::size_t)>& task) {
  workers = std::max<std::size_t>(1, std::min(workers, count));
  if (workers == 1) {
    for (std::size_t i = 0; i < count; ++i) task(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  {
    std::vector<std::jthread> threads;
    threads.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      threads.emplace_back([&] {
        for (std::size_t i; (i = next.fetch_add(1)) < count;) {
          try {
            task(i);
          } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
            next = count;
          }
        }
      });
    }
  }
  if (failure) std::rethrow_exception(failure);
}

std::unique_ptr<FrequencyStore> build_index(const CorpusManifest& manifest, const StoreConfig& store,
                                            const DetectorConfig& detector, std::size_t workers) {
  detector.validate();
  const std::size_t files = manifest.entries.size();
  const std::size_t shards = std::max<std::size_t>(1, std::min(workers, files));

  std::vector<std::unique_ptr<FrequencyStore>> stores(shards);
  parallel_for(shards, shards, [&](std::size_t shard) {
    StoreConfig config = store;
    config.kbit.seed += shard;
    auto local = make_store(config);
    const std::size_t begin = files * shard / shards;
    const std::size_t end = files * (shard + 1) / shards;
    for (std::size_t i = begin; i < end; ++i) {
      const auto lines = read_lines(manifest.absolute(manifest.entries[i]));
      const auto window =
          extract_window(lines, detector.p_max, detector.e_max, detector.min_line_length);
      for (const auto& line : window_lines(window)) local->record(line.text);
    }
    stores[shard] = std::move(local);
  });
  for (std::size_t s = 1; s < shards; ++s) stores[0]->merge(*stores[s]);
  stores[0]->seal();
  return std::move(stores[0]);
}

std::unique_ptr<FrequencyStore> build_index_from_spool(const std::filesystem::path& spool,
                                                       const StoreConfig& config) {
  std::ifstream in(spool, std::ios::binary);
  if (!in) throw IoError("cannot open spool " + spool.string());
  auto store = make_store(config);
  for (std::string line; std::getline(in, line);) store->record(line);
  if (in.bad()) throw IoError("failed reading spool " + spool.string());
  store->seal();
  return store;
}

std::vector<BoundaryReport> detect_corpus(const CorpusManifest& manifest,
                                          const FrequencyStore& store,
                                          const DetectorConfig& detector, std::size_t workers) {
  std::vector<BoundaryReport> reports(manifest.entries.size());
  const auto query = query_of(store);
  parallel_for(reports.size(), workers, [&](std::size_t i) {
    const auto& entry = manifest.entries[i];
    reports[i] = detect(read_lines(manifest.absolute(entry)), query, detector, entry.path);
  });
  return reports;
}

}  // namespace boilerplate
