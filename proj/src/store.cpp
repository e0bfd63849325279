#include "surfenum/store.hpp"

#include <zlib.h>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "surfenum/text.hpp"

namespace surfenum {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr const char* kManifest = "manifest.json";

std::string file_name(const ClassKey& key, bool roots) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "v%02d_%s_%s.txt", key.vertices, key.surface.name().c_str(),
                roots ? "roots" : "nonroots");
  return buf;
}

std::string render(const std::set<Triangulation>& set) {
  std::vector<std::string> lines;
  lines.reserve(set.size());
  for (const auto& t : set) lines.push_back(format_triangulation(t));
  std::ranges::sort(lines);
  std::string out;
  for (const auto& l : lines) {
    out += l;
    out += '\n';
  }
  return out;
}

std::uint32_t crc_of(const std::string& data) {
  return static_cast<std::uint32_t>(
      crc32(0L, reinterpret_cast<const Bytef*>(data.data()), static_cast<uInt>(data.size())));
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "cannot read " + p.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void spit(const fs::path& p, const std::string& data) {
  const fs::path tmp = p.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::Io, "cannot write " + tmp.string());
    out << data;
    if (!out) throw Error(ErrorCode::Io, "short write on " + tmp.string());
  }
  fs::rename(tmp, p);
}

json read_manifest(const fs::path& dir) {
  const fs::path p = dir / kManifest;
  if (!fs::exists(p)) return json::object();
  try {
    return json::parse(slurp(p));
  } catch (const json::exception& e) {
    throw Error(ErrorCode::Io, "corrupt manifest: " + std::string(e.what()));
  }
}

bool same_config(const json& m, const SearchConfig& cfg) {
  return m.value("max_vertices", -1) == cfg.max_vertices &&
         m.value("specialized", !cfg.specialized) == cfg.specialized;
}

// Reads the files of one class entry; nullopt if any is missing or corrupt.
std::optional<Enumeration> load_class(const fs::path& dir, const json& entry) {
  Enumeration out;
  for (const auto& f : entry.at("files")) {
    const fs::path p = dir / f.at("path").get<std::string>();
    if (!fs::exists(p)) return std::nullopt;
    const std::string data = slurp(p);
    if (crc_of(data) != f.at("crc32").get<std::uint32_t>()) return std::nullopt;
    const ClassKey key{f.at("vertices").get<int>(), SurfaceClass::parse(entry.at("surface").get<std::string>())};
    auto& dst = f.at("kind").get<std::string>() == "roots" ? out.roots[key] : out.nonroots[key];
    std::istringstream lines(data);
    std::string line;
    long long count = 0;
    while (std::getline(lines, line)) {
      if (line.empty()) continue;
      dst.insert(parse_triangulation_text(line, TextFormat::Native));
      ++count;
    }
    if (count != f.at("lines").get<long long>()) return std::nullopt;
  }
  return out;
}

json write_class(const fs::path& dir, const SurfaceClass& s, const Enumeration& e) {
  json files = json::array();
  auto emit = [&](const ClassSets& sets, bool roots) {
    for (const auto& [key, set] : sets) {
      if (key.surface != s || set.empty()) continue;
      const std::string data = render(set);
      const std::string name = file_name(key, roots);
      spit(dir / name, data);
      files.push_back({{"path", name},
                       {"vertices", key.vertices},
                       {"kind", roots ? "roots" : "nonroots"},
                       {"lines", set.size()},
                       {"crc32", crc_of(data)}});
    }
  };
  emit(e.roots, true);
  emit(e.nonroots, false);
  return {{"surface", s.name()}, {"complete", true}, {"files", files}};
}

}  // namespace

std::vector<SurfaceClass> classes_up_to(int max_vertices) {
  std::vector<SurfaceClass> out;
  for (bool orientable : {true, false}) {
    for (int g = orientable ? 0 : 1;; ++g) {
      const SurfaceClass s{orientable, g};
      if (heawood_min_vertices(s) > max_vertices) break;
      out.push_back(s);
    }
  }
  return out;
}

StoreOutcome enumerate_to_directory(const SearchConfig& cfg, const fs::path& dir) {
  cfg.check();
  const auto start = std::chrono::steady_clock::now();
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw Error(ErrorCode::Io, "cannot create " + dir.string() + ": " + ec.message());

  json manifest = read_manifest(dir);
  if (!same_config(manifest, cfg)) manifest = json::object();
  json classes = manifest.value("classes", json::object());

  StoreOutcome outcome;
  std::vector<SurfaceClass> wanted;
  for (const auto& s : classes_up_to(cfg.max_vertices)) {
    if (!cfg.target || *cfg.target == s) wanted.push_back(s);
  }
  std::vector<SurfaceClass> missing;
  for (const auto& s : wanted) {
    std::optional<Enumeration> loaded;
    if (classes.contains(s.name()) && classes[s.name()].value("complete", false)) {
      loaded = load_class(dir, classes[s.name()]);
    }
    if (loaded) {
      outcome.result.merge(std::move(*loaded));
      outcome.reused.push_back(s);
    } else {
      missing.push_back(s);
    }
  }

  if (!missing.empty()) {
    Enumeration fresh;
    if (missing.size() == wanted.size()) {
      fresh = enumerate_all(cfg);
    } else {
      for (const auto& s : missing) {
        SearchConfig one = cfg;
        one.target = s;
        fresh.merge(enumerate_all(one));
      }
    }
    for (const auto& s : missing) {
      classes[s.name()] = write_class(dir, s, fresh);
      outcome.computed.push_back(s);
    }
    outcome.result.merge(std::move(fresh));
  }

  outcome.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  manifest["max_vertices"] = cfg.max_vertices;
  manifest["specialized"] = cfg.specialized;
  manifest["workers"] = cfg.workers;
  manifest["classes"] = classes;
  manifest["wall_seconds"] = outcome.wall_seconds;
  spit(dir / kManifest, manifest.dump(2) + "\n");
  return outcome;
}

Enumeration load_directory(const fs::path& dir) {
  const json manifest = read_manifest(dir);
  if (!manifest.contains("classes")) throw Error(ErrorCode::Io, "no manifest in " + dir.string());
  Enumeration out;
  for (const auto& [name, entry] : manifest.at("classes").items()) {
    auto loaded = load_class(dir, entry);
    if (!loaded) throw Error(ErrorCode::Io, "files of class " + name + " are missing or corrupt");
    out.merge(std::move(*loaded));
  }
  return out;
}

}  // namespace surfenum
