#include "interdict/enumerate.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <map>
#include <mutex>
#include <numeric>
#include <unordered_set>

#include "interdict/algorithms.hpp"

namespace interdict {

namespace {

using Rows = std::array<std::uint16_t, 16>;
// An ordered partition: `order` lists vertices cell by cell and `start`
// holds each cell's first index plus a final sentinel.
struct Partition {
  std::array<int, 16> order{};
  std::array<int, 17> start{};
  int cells = 0;
};

// Individualization-refinement search for the maximum adjacency code.
// Branches on a vertex of the first non-trivial cell; twins inside that cell
// give equivalent subtrees, so only one per twin class is tried.
class Canonizer {
 public:
  Canonizer(int n, const Rows& adj) : n_(n), adj_(adj) {}

  std::uint64_t run() {
    Partition p;
    for (int v = 0; v < n_; ++v) p.order[static_cast<std::size_t>(v)] = v;
    p.cells = n_ > 0 ? 1 : 0;
    p.start[0] = 0;
    p.start[1] = n_;
    search(p);
    return best_;
  }

 private:
  std::uint16_t row(int v) const { return adj_[static_cast<std::size_t>(v)]; }

  bool twins(int u, int v) const {
    const auto bu = static_cast<std::uint16_t>(1U << u);
    const auto bv = static_cast<std::uint16_t>(1U << v);
    return (row(u) & ~bv) == (row(v) & ~bu);
  }

  // Splits cells by neighbor counts into every cell (4 bits per count, first
  // cell most significant) until nothing changes.
  void refine(Partition& p) const {
    for (;;) {
      std::array<std::uint16_t, 16> masks{};
      for (int c = 0; c < p.cells; ++c)
        for (int i = p.start[static_cast<std::size_t>(c)]; i < p.start[static_cast<std::size_t>(c) + 1]; ++i)
          masks[static_cast<std::size_t>(c)] =
              static_cast<std::uint16_t>(masks[static_cast<std::size_t>(c)] | (1U << p.order[static_cast<std::size_t>(i)]));
      Partition next;
      for (int c = 0; c < p.cells; ++c) {
        const int lo = p.start[static_cast<std::size_t>(c)];
        const int hi = p.start[static_cast<std::size_t>(c) + 1];
        if (hi - lo == 1) {
          next.start[static_cast<std::size_t>(next.cells++)] = lo;
          next.order[static_cast<std::size_t>(lo)] = p.order[static_cast<std::size_t>(lo)];
          continue;
        }
        std::array<std::pair<std::uint64_t, int>, 16> keyed{};
        for (int i = lo; i < hi; ++i) {
          const int v = p.order[static_cast<std::size_t>(i)];
          std::uint64_t signature = 0;
          for (int d = 0; d < p.cells; ++d)
            signature = (signature << 4) |
                        static_cast<std::uint64_t>(std::popcount(static_cast<unsigned>(row(v) & masks[static_cast<std::size_t>(d)])));
          keyed[static_cast<std::size_t>(i - lo)] = {signature, v};
        }
        std::sort(keyed.begin(), keyed.begin() + (hi - lo), [](const auto& a, const auto& b) {
          return a.first != b.first ? a.first > b.first : a.second < b.second;
        });
        for (int i = 0; i < hi - lo; ++i) {
          if (i == 0 || keyed[static_cast<std::size_t>(i)].first != keyed[static_cast<std::size_t>(i) - 1].first)
            next.start[static_cast<std::size_t>(next.cells++)] = lo + i;
          next.order[static_cast<std::size_t>(lo + i)] = keyed[static_cast<std::size_t>(i)].second;
        }
      }
      next.start[static_cast<std::size_t>(next.cells)] = n_;
      const bool stable = next.cells == p.cells;
      p = next;
      if (stable) return;
    }
  }

  std::uint64_t code(const Partition& p) const {
    std::uint64_t out = 0;
    for (int i = 0; i < n_; ++i)
      for (int j = i + 1; j < n_; ++j)
        out = (out << 1) | ((row(p.order[static_cast<std::size_t>(i)]) >> p.order[static_cast<std::size_t>(j)]) & 1U);
    return out;
  }

  void search(Partition p) {
    refine(p);
    int target = -1;
    for (int c = 0; c < p.cells; ++c)
      if (p.start[static_cast<std::size_t>(c) + 1] - p.start[static_cast<std::size_t>(c)] > 1) {
        target = c;
        break;
      }
    if (target < 0) {
      best_ = std::max(best_, code(p));
      return;
    }
    const int lo = p.start[static_cast<std::size_t>(target)];
    const int hi = p.start[static_cast<std::size_t>(target) + 1];
    std::array<int, 16> tried{};
    int tried_count = 0;
    for (int i = lo; i < hi; ++i) {
      const int v = p.order[static_cast<std::size_t>(i)];
      bool skip = false;
      for (int t = 0; t < tried_count && !skip; ++t) skip = twins(tried[static_cast<std::size_t>(t)], v);
      if (skip) continue;
      tried[static_cast<std::size_t>(tried_count++)] = v;
      Partition next = p;
      // Move v to the front of its cell and split it off.
      std::swap(next.order[static_cast<std::size_t>(lo)], next.order[static_cast<std::size_t>(i)]);
      std::sort(next.order.begin() + lo + 1, next.order.begin() + hi);
      for (int c = next.cells; c > target; --c)
        next.start[static_cast<std::size_t>(c) + 1] = next.start[static_cast<std::size_t>(c)];
      next.start[static_cast<std::size_t>(target) + 1] = lo + 1;
      ++next.cells;
      search(next);
    }
  }

  int n_;
  Rows adj_;
  std::uint64_t best_ = 0;
};

Rows rows_of(const WeightedGraph& g) {
  Rows adj{};
  for (const Edge& e : g.edges()) {
    adj[static_cast<std::size_t>(e.u)] = static_cast<std::uint16_t>(adj[static_cast<std::size_t>(e.u)] | (1U << e.v));
    adj[static_cast<std::size_t>(e.v)] = static_cast<std::uint16_t>(adj[static_cast<std::size_t>(e.v)] | (1U << e.u));
  }
  return adj;
}

Rows rows_from_code(int n, std::uint64_t code) {
  Rows adj{};
  int bit = n * (n - 1) / 2 - 1;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j, --bit)
      if ((code >> bit) & 1U) {
        adj[static_cast<std::size_t>(i)] = static_cast<std::uint16_t>(adj[static_cast<std::size_t>(i)] | (1U << j));
        adj[static_cast<std::size_t>(j)] = static_cast<std::uint16_t>(adj[static_cast<std::size_t>(j)] | (1U << i));
      }
  return adj;
}

std::mutex cache_mutex;
std::map<int, std::vector<std::uint64_t>> code_cache;

}  // namespace

std::uint64_t canonical_code(const WeightedGraph& g) {
  if (g.num_vertices() > 11) throw ValidationError("canonical codes support at most 11 vertices");
  return Canonizer(g.num_vertices(), rows_of(g)).run();
}

WeightedGraph graph_from_code(int n, std::uint64_t code) {
  const Rows adj = rows_from_code(n, code);
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if ((adj[static_cast<std::size_t>(i)] >> j) & 1U) edges.push_back({i, j, 1, 1});
  return WeightedGraph(n, std::move(edges));
}

const std::vector<std::uint64_t>& canonical_codes(int n) {
  if (n < 1 || n > 10) throw ValidationError("graph enumeration supports 1..10 vertices");
  {
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = code_cache.find(n);
    if (it != code_cache.end()) return it->second;
  }
  std::vector<std::uint64_t> codes;
  if (n == 1) {
    codes.push_back(0);
  } else {
    // Vertex augmentation of every smaller class, deduplicated by code.
    const auto& smaller = canonical_codes(n - 1);
    std::unordered_set<std::uint64_t> seen;
    for (std::uint64_t base : smaller) {
      Rows adj = rows_from_code(n - 1, base);
      for (std::uint32_t mask = 0; mask < (1U << (n - 1)); ++mask) {
        Rows next = adj;
        next[static_cast<std::size_t>(n - 1)] = static_cast<std::uint16_t>(mask);
        for (int v = 0; v < n - 1; ++v)
          if ((mask >> v) & 1U)
            next[static_cast<std::size_t>(v)] = static_cast<std::uint16_t>(next[static_cast<std::size_t>(v)] | (1U << (n - 1)));
        seen.insert(Canonizer(n, next).run());
      }
    }
    codes.assign(seen.begin(), seen.end());
    std::sort(codes.begin(), codes.end());
  }
  std::lock_guard<std::mutex> lock(cache_mutex);
  return code_cache.emplace(n, std::move(codes)).first->second;
}

std::vector<WeightedGraph> graphs_up_to_isomorphism(int n) {
  std::vector<WeightedGraph> out;
  for (std::uint64_t code : canonical_codes(n)) out.push_back(graph_from_code(n, code));
  return out;
}

std::vector<WeightedGraph> connected_graphs(int n) {
  std::vector<WeightedGraph> out;
  for (std::uint64_t code : canonical_codes(n)) {
    WeightedGraph g = graph_from_code(n, code);
    if (components(g).count == 1) out.push_back(std::move(g));
  }
  return out;
}

std::vector<WeightedGraph> bipartite_graphs(int nx, int ny) {
  if (nx < 0 || ny < 0 || nx * ny > 20) throw ValidationError("bipartite enumeration too large");
  std::vector<int> px(static_cast<std::size_t>(nx));
  std::vector<int> py(static_cast<std::size_t>(ny));
  std::vector<std::vector<int>> perms_x;
  std::vector<std::vector<int>> perms_y;
  std::iota(px.begin(), px.end(), 0);
  do perms_x.push_back(px); while (std::next_permutation(px.begin(), px.end()));
  std::iota(py.begin(), py.end(), 0);
  do perms_y.push_back(py); while (std::next_permutation(py.begin(), py.end()));

  const int cells = nx * ny;
  std::vector<std::uint32_t> reps;
  for (std::uint32_t mask = 0; mask < (1U << cells); ++mask) {
    std::uint32_t least = mask;
    for (const auto& ax : perms_x)
      for (const auto& ay : perms_y) {
        std::uint32_t image = 0;
        for (int i = 0; i < nx; ++i)
          for (int j = 0; j < ny; ++j)
            if ((mask >> (i * ny + j)) & 1U)
              image |= 1U << (ax[static_cast<std::size_t>(i)] * ny + ay[static_cast<std::size_t>(j)]);
        least = std::min(least, image);
      }
    if (least == mask) reps.push_back(mask);
  }
  std::vector<Side> sides(static_cast<std::size_t>(nx), Side::X);
  sides.resize(static_cast<std::size_t>(nx + ny), Side::Y);
  std::vector<WeightedGraph> out;
  for (std::uint32_t mask : reps) {
    std::vector<Edge> edges;
    for (int i = 0; i < nx; ++i)
      for (int j = 0; j < ny; ++j)
        if ((mask >> (i * ny + j)) & 1U) edges.push_back({i, nx + j, 1, 1});
    out.emplace_back(nx + ny, std::move(edges), sides);
  }
  return out;
}

std::vector<WeightedGraph> general_sweep(int max_n) {
  std::vector<WeightedGraph> out;
  for (int n = 1; n <= max_n; ++n) {
    auto level = graphs_up_to_isomorphism(n);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

std::vector<WeightedGraph> bipartite_sweep(int max_side) {
  std::vector<WeightedGraph> out;
  for (int nx = 1; nx <= max_side; ++nx)
    for (int ny = 1; ny <= max_side; ++ny) {
      auto level = bipartite_graphs(nx, ny);
      out.insert(out.end(), level.begin(), level.end());
    }
  return out;
}

}  // namespace interdict
