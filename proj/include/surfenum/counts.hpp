#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>

#include "surfenum/surface.hpp"

namespace surfenum {

struct ClassKey {
  int vertices = 0;
  SurfaceClass surface;

  friend bool operator==(const ClassKey&, const ClassKey&) = default;
  friend std::strong_ordering operator<=>(const ClassKey& a, const ClassKey& b) {
    if (auto c = a.vertices <=> b.vertices; c != 0) return c;
    return a.surface <=> b.surface;
  }
};

struct CountRow {
  long long triangulations = 0;
  long long roots = 0;
  long long nonroots = 0;

  friend bool operator==(const CountRow&, const CountRow&) = default;
};

/// (V, surface) -> (triangulations, roots, non-roots).
class CountsTable {
 public:
  void add_root(const ClassKey& key, long long n = 1);
  void add_nonroot(const ClassKey& key, long long n = 1);
  void set(const ClassKey& key, CountRow row) { rows_[key] = row; }

  const std::map<ClassKey, CountRow>& rows() const { return rows_; }
  std::optional<CountRow> find(const ClassKey& key) const;
  long long total() const;
  /// Rows with vertices <= max_vertices only.
  CountsTable up_to(int max_vertices) const;
  bool empty() const { return rows_.empty(); }

  friend bool operator==(const CountsTable&, const CountsTable&) = default;

 private:
  std::map<ClassKey, CountRow> rows_;
};

/// Header line plus rows `V<TAB>surface<TAB>T<TAB>R<TAB>N`.
std::string format_counts_table(const CountsTable& table);

/// Published counts of triangulated closed surfaces with 4..11 vertices.
const CountsTable& reference_counts();

/// Published genus-surface counts (per vertex count and capped surface) of
/// the specialized search for surfaces with at most 11 vertices.
const std::map<ClassKey, long long>& reference_genus_surface_counts();

}  // namespace surfenum
