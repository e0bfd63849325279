#pragma once

#include <filesystem>
#include <functional>
#include <vector>

#include "surfenum/enumerate.hpp"

namespace surfenum {

/// Closed surface classes with a triangulation on at most N vertices.
std::vector<SurfaceClass> classes_up_to(int max_vertices);

struct StoreOutcome {
  Enumeration result;                    // everything now on disk
  std::vector<SurfaceClass> computed;    // classes enumerated by this run
  std::vector<SurfaceClass> reused;      // classes whose files were already complete
  double wall_seconds = 0;
};

/// Enumerates into `dir`: per class and vertex count, sorted native lines in
/// `vNN_<class>_roots.txt` / `vNN_<class>_nonroots.txt`, plus manifest.json
/// with the configuration, per-file CRC-32 checksums and the wall time.
/// Classes already recorded as complete with matching checksums are read
/// back instead of recomputed.  Throws Io.
StoreOutcome enumerate_to_directory(const SearchConfig& cfg, const std::filesystem::path& dir);

/// Reads a result directory back, verifying every checksum.  Throws Io.
Enumeration load_directory(const std::filesystem::path& dir);

}  // namespace surfenum
