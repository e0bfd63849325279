#include "surfenum/canon.hpp"

#include <algorithm>
#include <array>
#include <cassert>

namespace surfenum {

namespace {

int valence_of_first(std::span<const Triangle> list) {
  return static_cast<int>(
      std::count_if(list.begin(), list.end(), [](const Triangle& t) { return t[0] == 1; }));
}

// Dense link tables for the search.  opp(v, a) lists the third vertices of
// the (at most two) triangles on edge {v, a}.
class LinkTable {
 public:
  explicit LinkTable(const Triangulation& t)
      : n_(t.num_vertices()),
        stride_(n_ + 1),
        opp_(static_cast<std::size_t>(stride_) * stride_),
        count_(static_cast<std::size_t>(stride_) * stride_, 0),
        valence_(static_cast<std::size_t>(stride_), 0),
        neighbors_(static_cast<std::size_t>(stride_)) {
    auto add = [this](Vertex v, Vertex a, Vertex c) {
      const std::size_t k = index(v, a);
      if (count_[k] == 2) {
        throw Error(ErrorCode::NotASurface, "edge in more than two triangles");
      }
      if (count_[k] == 0) neighbors_[v].push_back(a);
      opp_[k][count_[k]++] = c;
    };
    for (const auto& [a, b, c] : t.triangles()) {
      ++valence_[a];
      ++valence_[b];
      ++valence_[c];
      add(a, b, c);
      add(a, c, b);
      add(b, a, c);
      add(b, c, a);
      add(c, a, b);
      add(c, b, a);
    }
    for (auto& nb : neighbors_) std::sort(nb.begin(), nb.end());
  }

  int num_vertices() const { return n_; }
  int valence(Vertex v) const { return valence_[v]; }
  const std::vector<Vertex>& neighbors(Vertex v) const { return neighbors_[v]; }
  std::span<const Vertex> opp(Vertex v, Vertex a) const {
    const std::size_t k = index(v, a);
    return {opp_[k].data(), count_[k]};
  }

 private:
  std::size_t index(Vertex v, Vertex a) const {
    return static_cast<std::size_t>(v) * stride_ + static_cast<std::size_t>(a);
  }

  int n_;
  int stride_;
  std::vector<std::array<Vertex, 2>> opp_;
  std::vector<std::uint8_t> count_;
  std::vector<int> valence_;
  std::vector<std::vector<Vertex>> neighbors_;
};

struct Labeling {
  std::vector<Vertex> label;    // old -> new, 0 if unassigned
  std::vector<Vertex> vertex;   // new -> old
  Vertex next = 1;
  std::vector<Triangle> list;   // emitted prefix of the relabeled list

  void assign(Vertex old) {
    label[old] = next;
    vertex[next] = old;
    ++next;
  }
};

class CanonicalSearch {
 public:
  explicit CanonicalSearch(const Triangulation& t) : links_(t), total_(t.num_triangles()) {}

  CanonicalForm run() {
    const int n = links_.num_vertices();
    int max_valence = 0;
    for (Vertex v = 1; v <= n; ++v) max_valence = std::max(max_valence, links_.valence(v));
    for (Vertex v = 1; v <= n; ++v) {
      if (links_.valence(v) != max_valence) continue;
      for (Vertex w : links_.neighbors(v)) {
        Labeling start;
        start.label.assign(static_cast<std::size_t>(n) + 1, 0);
        start.vertex.assign(static_cast<std::size_t>(n) + 2, 0);
        start.list.reserve(total_);
        start.assign(v);
        start.assign(w);
        block(std::move(start), 1);
      }
    }
    CanonicalForm out;
    out.triangles = Triangulation(best_);
    out.relabel = best_label_;
    return out;
  }

 private:
  // Emits the triangles whose smallest new label is u, after labeling every
  // vertex in the link of vertex(u).
  void block(Labeling s, Vertex u) {
    if (s.list.size() == total_) {
      finish(s);
      return;
    }
    const Vertex x = s.vertex[u];
    if (x == 0) throw Error(ErrorCode::NotASurface, "complex is not connected");
    spread(std::move(s), u, x, u);
  }

  // Breadth-first labeling around link(x): labeled link vertices are visited
  // in increasing label order and hand the next free labels to their
  // unlabeled link neighbours.  Two unlabeled neighbours at once is a tie.
  void spread(Labeling s, Vertex u, Vertex x, Vertex last) {
    while (true) {
      Vertex y = 0;
      Vertex y_label = 0;
      for (Vertex a : links_.neighbors(x)) {
        const Vertex la = s.label[a];
        if (la > last && (y == 0 || la < y_label)) {
          y = a;
          y_label = la;
        }
      }
      if (y == 0) break;
      last = y_label;
      Vertex fresh[2];
      int k = 0;
      for (Vertex z : links_.opp(x, y)) {
        if (s.label[z] == 0) fresh[k++] = z;
      }
      if (k == 1) {
        s.assign(fresh[0]);
      } else if (k == 2) {
        Labeling other = s;
        other.assign(fresh[1]);
        other.assign(fresh[0]);
        spread(std::move(other), u, x, last);
        s.assign(fresh[0]);
        s.assign(fresh[1]);
      }
    }
    emit(std::move(s), u, x);
  }

  void emit(Labeling s, Vertex u, Vertex x) {
    const std::size_t begin = s.list.size();
    for (Vertex a : links_.neighbors(x)) {
      const Vertex la = s.label[a];
      assert(la != 0);
      if (la <= u) continue;
      for (Vertex c : links_.opp(x, a)) {
        const Vertex lc = s.label[c];
        if (lc > la) s.list.push_back({u, la, lc});
      }
    }
    std::sort(s.list.begin() + static_cast<std::ptrdiff_t>(begin), s.list.end());
    if (!best_.empty()) {
      const auto cmp = std::lexicographical_compare_three_way(
          s.list.begin(), s.list.end(), best_.begin(),
          best_.begin() + static_cast<std::ptrdiff_t>(s.list.size()));
      if (cmp > 0) return;
    }
    block(std::move(s), u + 1);
  }

  void finish(const Labeling& s) {
    if (best_.empty() || s.list < best_) {
      best_ = s.list;
      best_label_ = s.label;
    }
  }

  LinkTable links_;
  std::size_t total_;
  std::vector<Triangle> best_;
  std::vector<Vertex> best_label_;
};

}  // namespace

std::strong_ordering mixed_lex_compare(std::span<const Triangle> a, std::span<const Triangle> b) {
  const int va = valence_of_first(a);
  const int vb = valence_of_first(b);
  if (va != vb) return vb <=> va;
  return std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(), b.end());
}

CanonicalForm canonical_labeling(const Triangulation& t) {
  if (t.empty()) return {};
  return CanonicalSearch(t).run();
}

bool is_isomorphic(const Triangulation& a, const Triangulation& b) {
  if (a.num_vertices() != b.num_vertices() || a.num_triangles() != b.num_triangles()) return false;
  return canonical_form(a) == canonical_form(b);
}

}  // namespace surfenum
