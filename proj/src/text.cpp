#include "surfenum/text.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <set>
#include <sstream>
#include <vector>

namespace surfenum {

namespace {

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

[[noreturn]] void bad_token(std::string_view token, const char* why) {
  throw Error(ErrorCode::Syntax, "bad triangle '" + std::string(token) + "': " + why);
}

Triangle parse_native(std::string_view token) {
  if (std::ranges::count(token, ',') != 2) bad_token(token, "expected three comma-separated labels");
  Triangle t{};
  std::size_t pos = 0;
  for (int k = 0; k < 3; ++k) {
    const std::size_t end = k < 2 ? token.find(',', pos) : token.size();
    const auto field = token.substr(pos, end - pos);
    int v = 0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
    if (field.empty() || ec != std::errc() || ptr != field.data() + field.size() || v < 1) {
      bad_token(token, "labels are positive integers");
    }
    t[k] = v;
    pos = end + 1;
  }
  return t;
}

Triangle parse_digits(std::string_view token) {
  if (token.size() != 3) bad_token(token, "digit triangles are three digits 1-9");
  Triangle t{};
  for (int k = 0; k < 3; ++k) {
    const char c = token[k];
    if (c < '1' || c > '9') bad_token(token, "digit triangles are three digits 1-9");
    t[k] = c - '0';
  }
  return t;
}

}  // namespace

Triangulation parse_triangulation_text(std::string_view text, TextFormat format) {
  if (format == TextFormat::Auto) {
    format = text.find(',') != std::string_view::npos ? TextFormat::Native : TextFormat::Digits;
  }
  std::vector<Triangle> tris;
  for (auto token : split_ws(text)) {
    const Triangle raw = format == TextFormat::Native ? parse_native(token) : parse_digits(token);
    tris.push_back(make_triangle(raw[0], raw[1], raw[2]));
  }
  if (tris.empty()) throw Error(ErrorCode::Syntax, "no triangles");
  std::set<Vertex> labels;
  for (const auto& t : tris) labels.insert(t.begin(), t.end());
  if (*labels.rbegin() != static_cast<Vertex>(labels.size())) {
    throw Error(ErrorCode::NonContiguousLabels, "labels must be exactly 1.." + std::to_string(labels.size()));
  }
  return Triangulation(std::move(tris));
}

std::string format_triangulation(const Triangulation& t) {
  std::ostringstream out;
  bool first = true;
  for (const auto& [a, b, c] : t.triangles()) {
    if (!first) out << ' ';
    first = false;
    out << a << ',' << b << ',' << c;
  }
  return out.str();
}

std::string format_triangulation_digits(const Triangulation& t) {
  if (t.num_vertices() > 9) throw Error(ErrorCode::Syntax, "digit form needs labels <= 9");
  std::string out;
  for (const auto& [a, b, c] : t.triangles()) {
    if (!out.empty()) out += ' ';
    out += static_cast<char>('0' + a);
    out += static_cast<char>('0' + b);
    out += static_cast<char>('0' + c);
  }
  return out;
}

}  // namespace surfenum
