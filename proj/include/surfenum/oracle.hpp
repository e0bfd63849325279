#pragma once

#include <string>
#include <vector>

#include "surfenum/enumerate.hpp"

namespace surfenum {

/// Closed triangulations with at most N vertices grown triangle by triangle
/// from the star of a maximal-valence vertex, keyed by (V, class).
ClassSets brute_force_enumerate(int max_vertices, unsigned workers = 1, ShardSpec shard = {});

/// Roots and non-roots of an oracle result.
CountsTable oracle_counts(const ClassSets& sets);

struct CrossReport {
  bool equal = false;
  long long oracle_total = 0;
  long long pipeline_total = 0;
  std::vector<Triangulation> only_oracle;
  std::vector<Triangulation> only_pipeline;

  std::string summary() const;
};

/// Compares the canonical sets of brute_force_enumerate and enumerate_all.
CrossReport cross_validate(int max_vertices, bool specialized = false, unsigned workers = 1);

}  // namespace surfenum
