#include "grower.hpp"

#include <algorithm>
#include <cassert>

namespace surfenum::detail {

Grower::Grower(const GrowOptions& options, GrowHooks& hooks) : opt_(options), hooks_(hooks) {
  if (opt_.max_vertices > kMaxGrowVertices) {
    throw Error(ErrorCode::InvalidConfig, "growth limited to " + std::to_string(kMaxGrowVertices) + " vertices");
  }
  if (opt_.boundary_valence_cap == 0) opt_.boundary_valence_cap = opt_.max_valence;
}

void Grower::run() {
  const int m = opt_.max_valence;
  n_ = 0;
  tris_.clear();
  if (opt_.boundary_start) {
    if (m < 1 || m + 2 > opt_.max_vertices || !opt_.allow_boundary) return;
    n_ = m + 2;
    for (Vertex i = 2; i <= m + 1; ++i) add_triangle(1, i, i + 1);
    const Vertex last = m + 2;
    for (Vertex a : {Vertex{2}, last}) {
      frozen_[1][a] = frozen_[a][1] = true;
      ++frozen_at_[1];
      ++frozen_at_[a];
      ++must_boundary_[a];
      ++boundary_edges_;
      if (opt_.boundary_apex_on_boundary) ++must_boundary_[opp_[1][a][0]];
    }
    ++must_boundary_[1];
    state_[1] = VertexState::Boundary;
    if (!hooks_.boundary_ok(*this, 1)) return;
  } else {
    if (m < 3 || m + 1 > opt_.max_vertices) return;
    n_ = m + 1;
    for (Vertex i = 2; i <= m; ++i) add_triangle(1, i, i + 1);
    add_triangle(1, m + 1, 2);
    state_[1] = VertexState::Interior;
    if (!hooks_.interior_ok(*this, 1)) return;
  }
  dfs(0);
}

bool Grower::shard_allows(int depth) {
  if (opt_.shard.count <= 1 || depth != opt_.split_depth) return true;
  return static_cast<unsigned>(split_counter_++ % opt_.shard.count) == opt_.shard.index;
}

Vertex Grower::path_end(Vertex y, Vertex p, int& length) const {
  Vertex prev = 0;
  Vertex cur = p;
  length = 1;
  while (true) {
    Vertex next = 0;
    for (int i = 0; i < mult_[y][cur]; ++i) {
      const Vertex z = opp_[y][cur][i];
      if (z != prev) {
        next = z;
        break;
      }
    }
    if (next == 0) return cur;
    prev = cur;
    cur = next;
    ++length;
  }
}

void Grower::dfs(int depth) {
  if (!shard_allows(depth)) return;
  Vertex u = 0;
  for (Vertex v = 2; v <= n_; ++v) {
    if (state_[v] == VertexState::Open) {
      u = v;
      break;
    }
  }
  if (u == 0) {
    if (depth < opt_.split_depth && opt_.shard.count > 1 && opt_.shard.index != 0) return;
    hooks_.complete(*this);
    return;
  }

  Vertex ends[4];
  int num_ends = 0;
  Vertex a = 0;
  for (Vertex v = 1; v <= n_; ++v) {
    if (mult_[u][v] != 1) continue;
    if (num_ends < 4) ends[num_ends] = v;
    ++num_ends;
    if (a == 0 && !frozen_[u][v]) a = v;
  }
  assert(num_ends > 0);

  if (a == 0) {
    // Both link ends are boundary edges: u is finished if its link is one path.
    int length = 0;
    if (num_ends != 2 || path_end(u, ends[0], length) != ends[1] || length != deg_[u]) return;
    state_[u] = VertexState::Boundary;
    if (hooks_.boundary_ok(*this, u)) dfs(depth + 1);
    state_[u] = VertexState::Open;
    return;
  }

  if (opt_.allow_boundary) try_freeze(u, a, depth);
  const int cap_u = must_boundary_[u] > 0 ? opt_.boundary_valence_cap : opt_.max_valence;
  const int cap_a = must_boundary_[a] > 0 ? opt_.boundary_valence_cap : opt_.max_valence;
  if (val_[u] + 1 > cap_u || val_[a] + 1 > cap_a) return;
  for (Vertex x = u + 1; x <= n_; ++x) {
    if (x != a && state_[x] == VertexState::Open) try_extend(u, a, x, depth);
  }
  if (n_ < opt_.max_vertices) try_extend(u, a, n_ + 1, depth);
}

void Grower::try_freeze(Vertex u, Vertex a, int depth) {
  if (frozen_at_[u] >= 2 || frozen_at_[a] >= 2) return;
  if (val_[u] > opt_.boundary_valence_cap || val_[a] > opt_.boundary_valence_cap) return;
  assert(state_[a] == VertexState::Open);
  const Vertex c = opp_[u][a][0];
  if (opt_.boundary_apex_on_boundary && state_[c] == VertexState::Interior) return;
  if (opt_.boundary_apex_on_boundary && val_[c] > opt_.boundary_valence_cap) return;

  frozen_[u][a] = frozen_[a][u] = true;
  ++frozen_at_[u];
  ++frozen_at_[a];
  ++must_boundary_[u];
  ++must_boundary_[a];
  if (opt_.boundary_apex_on_boundary) ++must_boundary_[c];
  ++boundary_edges_;

  dfs(depth + 1);

  --boundary_edges_;
  if (opt_.boundary_apex_on_boundary) --must_boundary_[c];
  --must_boundary_[a];
  --must_boundary_[u];
  --frozen_at_[a];
  --frozen_at_[u];
  frozen_[u][a] = frozen_[a][u] = false;
}

void Grower::try_extend(Vertex u, Vertex a, Vertex x, int depth) {
  const bool fresh = x == n_ + 1;
  bool close_u = false;
  bool close_a = false;
  bool close_x = false;
  if (!fresh) {
    const int cap_x = must_boundary_[x] > 0 ? opt_.boundary_valence_cap : opt_.max_valence;
    if (val_[x] + 1 > cap_x) return;
    if (frozen_[u][x] || frozen_[a][x]) return;
    if (mult_[u][x] == 2 || mult_[a][x] == 2) return;
    if (opp_[u][a][0] == x) return;
    int length = 0;
    if (mult_[u][x] == 1 && path_end(u, a, length) == x) {
      if (length != deg_[u]) return;
      close_u = true;
    }
    if (mult_[a][x] == 1 && path_end(a, u, length) == x) {
      if (length != deg_[a]) return;
      close_a = true;
    }
    if (mult_[x][u] == 1 && mult_[x][a] == 1 && path_end(x, u, length) == a) {
      if (length != deg_[x]) return;
      close_x = true;
    }
  }
  const int interior_cap = opt_.boundary_start ? opt_.max_valence - 1 : opt_.max_valence;
  for (auto [closing, y] : {std::pair{close_u, u}, std::pair{close_a, a}, std::pair{close_x, x}}) {
    if (closing && (must_boundary_[y] > 0 || val_[y] + 1 > interior_cap)) return;
  }

  if (fresh) {
    ++n_;
    state_[x] = VertexState::Open;
  }
  if (dir_[u][a] == 1) {
    add_triangle(a, u, x);
  } else {
    add_triangle(u, a, x);
  }
  bool ok = !(opt_.orientable_only && conflicts_ > 0);
  int closed = 0;
  Vertex closed_list[3];
  for (auto [closing, y] : {std::pair{close_u, u}, std::pair{close_a, a}, std::pair{close_x, x}}) {
    if (!ok || !closing) continue;
    closed_list[closed++] = y;
    ok = finalize_interior(y);
  }
  if (ok) dfs(depth + 1);
  for (int i = 0; i < closed; ++i) state_[closed_list[i]] = VertexState::Open;
  remove_last_triangle();
  if (fresh) --n_;
}

bool Grower::finalize_interior(Vertex v) {
  state_[v] = VertexState::Interior;
  return hooks_.interior_ok(*this, v);
}

void Grower::add_triangle(Vertex p, Vertex q, Vertex r) {
  tris_.push_back({p, q, r});
  auto link = [this](Vertex x, Vertex y, Vertex z) {
    auto& m = mult_[x][y];
    if (m == 0) ++deg_[x];
    opp_[x][y][m] = static_cast<std::int8_t>(z);
    ++m;
  };
  link(p, q, r);
  link(q, p, r);
  link(p, r, q);
  link(r, p, q);
  link(q, r, p);
  link(r, q, p);
  ++val_[p];
  ++val_[q];
  ++val_[r];
  if (++dir_[p][q] == 2) ++conflicts_;
  if (++dir_[q][r] == 2) ++conflicts_;
  if (++dir_[r][p] == 2) ++conflicts_;
}

void Grower::remove_last_triangle() {
  const auto [p, q, r] = tris_.back();
  tris_.pop_back();
  if (dir_[p][q]-- == 2) --conflicts_;
  if (dir_[q][r]-- == 2) --conflicts_;
  if (dir_[r][p]-- == 2) --conflicts_;
  auto unlink = [this](Vertex x, Vertex y) {
    auto& m = mult_[x][y];
    --m;
    if (m == 0) --deg_[x];
  };
  unlink(p, q);
  unlink(q, p);
  unlink(p, r);
  unlink(r, p);
  unlink(q, r);
  unlink(r, q);
  --val_[p];
  --val_[q];
  --val_[r];
}

Triangulation Grower::snapshot() const {
  std::vector<Triangle> out;
  out.reserve(tris_.size());
  for (const auto& [p, q, r] : tris_) out.push_back(make_triangle(p, q, r));
  return Triangulation(std::move(out));
}

std::vector<std::vector<Vertex>> Grower::boundary_cycles() const {
  std::vector<std::vector<Vertex>> cycles;
  std::array<bool, kMaxGrowVertices + 2> seen{};
  for (Vertex s = 1; s <= n_; ++s) {
    if (seen[s] || frozen_at_[s] == 0) continue;
    std::vector<Vertex> cycle{s};
    seen[s] = true;
    Vertex prev = 0;
    Vertex cur = s;
    while (true) {
      Vertex next = 0;
      for (Vertex v = 1; v <= n_; ++v) {
        if (frozen_[cur][v] && v != prev && !seen[v]) {
          next = v;
          break;
        }
      }
      if (next == 0) break;
      seen[next] = true;
      cycle.push_back(next);
      prev = cur;
      cur = next;
    }
    cycles.push_back(std::move(cycle));
  }
  return cycles;
}

}  // namespace surfenum::detail
