#pragma once

#include <cstddef>
#include <filesystem>
#include <functional>
#include <memory>
#include <vector>

#include "boilerplate/corpus.hpp"
#include "boilerplate/detector.hpp"
#include "boilerplate/frequency_store.hpp"

namespace boilerplate {

/// Pass 1 over a corpus. With several workers each shard of consecutive files
/// fills a private store and the shards are merged in order; Morris seeds are
/// offset by the shard number. The result is sealed.
std::unique_ptr<FrequencyStore> build_index(const CorpusManifest& manifest, const StoreConfig& store,
                                            const DetectorConfig& detector, std::size_t workers = 1);

/// Pass 1 from a spool file: every record is recorded once. The result is sealed.
std::unique_ptr<FrequencyStore> build_index_from_spool(const std::filesystem::path& spool,
                                                       const StoreConfig& store);

/// Pass 2 over a corpus; reports come back in manifest order.
std::vector<BoundaryReport> detect_corpus(const CorpusManifest& manifest,
                                          const FrequencyStore& store,
                                          const DetectorConfig& detector, std::size_t workers = 1);

/// Runs `task(i)` for i in [0, count) on up to `workers` threads, rethrowing
/// the first exception.
void parallel_for(std::size_t count, std::size_t workers, const std::function<void(std::size_t)>& task);

}  // namespace boilerplate
