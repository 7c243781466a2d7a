#pragma once

#include <optional>
#include <string>

#include "weylrec/macdonald.hpp"

namespace weylrec {

// On-disk cache for exact q-Whittaker tables under WEYLREC_CACHE_DIR.
// Files are versioned and content-addressed: the filename carries an FNV-1a
// hash of the payload, which the loader re-checks before trusting a file.

std::string cache_dir_from_env();

uint64_t fnv1a64(const std::string& data);

// Best cached table with matching rank/q_zero and max_size >= min_size.
std::optional<QWhittakerTable> load_cached_table(const std::string& dir, int rank, int min_size,
                                                 bool q_zero);

void save_cached_table(const std::string& dir, const QWhittakerTable& table);

}  // namespace weylrec
