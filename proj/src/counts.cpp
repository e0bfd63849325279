#include "surfenum/counts.hpp"

#include <sstream>

namespace surfenum {

void CountsTable::add_root(const ClassKey& key, long long n) {
  auto& row = rows_[key];
  row.roots += n;
  row.triangulations += n;
}

void CountsTable::add_nonroot(const ClassKey& key, long long n) {
  auto& row = rows_[key];
  row.nonroots += n;
  row.triangulations += n;
}

std::optional<CountRow> CountsTable::find(const ClassKey& key) const {
  auto it = rows_.find(key);
  if (it == rows_.end()) return std::nullopt;
  return it->second;
}

long long CountsTable::total() const {
  long long sum = 0;
  for (const auto& [key, row] : rows_) sum += row.triangulations;
  return sum;
}

CountsTable CountsTable::up_to(int max_vertices) const {
  CountsTable out;
  for (const auto& [key, row] : rows_) {
    if (key.vertices <= max_vertices) out.rows_.emplace(key, row);
  }
  return out;
}

std::string format_counts_table(const CountsTable& table) {
  std::ostringstream out;
  out << "V\tS\tT\tR\tN\n";
  for (const auto& [key, row] : table.rows()) {
    out << key.vertices << '\t' << key.surface.name() << '\t' << row.triangulations << '\t'
        << row.roots << '\t' << row.nonroots << '\n';
  }
  return out.str();
}

namespace {

CountsTable build_reference() {
  struct Entry {
    int v;
    const char* surface;
    long long t, r, n;
  };
  static constexpr Entry kEntries[] = {
      {4, "S2", 1, 1, 0},
      {5, "S2", 1, 0, 1},
      {6, "S2", 2, 1, 1},
      {6, "RP2", 1, 1, 0},
      {7, "S2", 5, 1, 4},
      {7, "T2", 1, 1, 0},
      {7, "RP2", 3, 2, 1},
      {8, "S2", 14, 2, 12},
      {8, "T2", 7, 6, 1},
      {8, "RP2", 16, 8, 8},
      {8, "K2", 6, 6, 0},
      {9, "S2", 50, 5, 45},
      {9, "T2", 112, 75, 37},
      {9, "RP2", 134, 36, 98},
      {9, "K2", 187, 133, 54},
      {9, "S-3", 133, 133, 0},
      {9, "S-4", 37, 37, 0},
      {9, "S-5", 2, 2, 0},
      {10, "S2", 233, 12, 221},
      {10, "T2", 2109, 887, 1222},
      {10, "S+2", 865, 865, 0},
      {10, "S+3", 20, 20, 0},
      {10, "RP2", 1210, 185, 1025},
      {10, "K2", 4462, 1971, 2491},
      {10, "S-3", 11784, 9385, 2399},
      {10, "S-4", 13657, 13067, 590},
      {10, "S-5", 7050, 7044, 6},
      {10, "S-6", 1022, 1022, 0},
      {10, "S-7", 14, 14, 0},
      {11, "S2", 1249, 34, 1215},
      {11, "T2", 37867, 9732, 28135},
      {11, "S+2", 113506, 93684, 19822},
      {11, "S+3", 65878, 65546, 332},
      {11, "S+4", 821, 821, 0},
      {11, "RP2", 11719, 1050, 10669},
      {11, "K2", 86968, 23541, 63427},
      {11, "S-3", 530278, 298323, 231955},
      {11, "S-4", 1628504, 1314000, 314504},
      {11, "S-5", 3355250, 3175312, 179938},
      {11, "S-6", 3623421, 3596214, 27207},
      {11, "S-7", 1834160, 1833946, 214},
      {11, "S-8", 295291, 295291, 0},
      {11, "S-9", 5982, 5982, 0},
  };
  CountsTable table;
  for (const auto& e : kEntries) {
    table.set({e.v, SurfaceClass::parse(e.surface)}, {e.t, e.r, e.n});
  }
  return table;
}

std::map<ClassKey, long long> build_genus_reference() {
  struct Entry {
    int v;
    const char* surface;
    long long count;
  };
  static constexpr Entry kEntries[] = {
      {3, "S2", 1},       {5, "RP2", 1},      {6, "T2", 1},        {6, "RP2", 2},
      {7, "T2", 5},       {7, "RP2", 6},      {7, "K2", 10},       {8, "T2", 46},
      {8, "RP2", 11},     {8, "K2", 108},     {8, "S-3", 284},     {8, "S-4", 134},
      {8, "S-5", 3},      {9, "T2", 230},     {9, "S+2", 1261},    {9, "S+3", 59},
      {9, "RP2", 28},     {9, "K2", 597},     {9, "S-3", 6919},    {9, "S-4", 18166},
      {9, "S-5", 18199},  {9, "S-6", 4994},   {9, "S-7", 78},      {10, "T2", 1513},
      {10, "S+2", 50878}, {10, "S+3", 99177}, {10, "S+4", 3892},   {10, "RP2", 356},
      {10, "K2", 3864},   {10, "S-3", 82588}, {10, "S-4", 713714}, {10, "S-5", 3006044},
      {10, "S-6", 5672821}, {10, "S-7", 4999850}, {10, "S-8", 1453490}, {10, "S-9", 53484},
  };
  std::map<ClassKey, long long> out;
  for (const auto& e : kEntries) out[{e.v, SurfaceClass::parse(e.surface)}] = e.count;
  return out;
}

}  // namespace

const CountsTable& reference_counts() {
  static const CountsTable table = build_reference();
  return table;
}

const std::map<ClassKey, long long>& reference_genus_surface_counts() {
  static const auto table = build_genus_reference();
  return table;
}

}  // namespace surfenum
