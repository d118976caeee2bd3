#include "udgpath/decomposition.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <ostream>
#include <queue>
#include <tuple>

#include "udgpath/errors.hpp"

namespace udgpath {

int TreeDecomposition::width() const {
  int best = -1;
  for (const auto& bag : bags) best = std::max(best, static_cast<int>(bag.size()) - 1);
  return best;
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[static_cast<std::size_t>(a)] = b;
    return true;
  }
};

// Mutable graph for the elimination game.
class EliminationGraph {
 public:
  explicit EliminationGraph(const Graph& g) : adj_(g.adjacency()), gone_(adj_.size(), 0) {}

  const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[static_cast<std::size_t>(v)]; }
  int degree(Vertex v) const { return static_cast<int>(adj_[static_cast<std::size_t>(v)].size()); }
  bool eliminated(Vertex v) const { return gone_[static_cast<std::size_t>(v)] != 0; }
  bool adjacent(Vertex a, Vertex b) const {
    const auto& list = adj_[static_cast<std::size_t>(a)];
    return std::binary_search(list.begin(), list.end(), b);
  }

  int fill_in(Vertex v) const {
    const auto& nb = neighbors(v);
    int missing = 0;
    for (std::size_t a = 0; a < nb.size(); ++a) {
      for (std::size_t b = a + 1; b < nb.size(); ++b) {
        if (!adjacent(nb[a], nb[b])) ++missing;
      }
    }
    return missing;
  }

  /// Turns N(v) into a clique and removes v. Returns the former N(v).
  std::vector<Vertex> eliminate(Vertex v) {
    std::vector<Vertex> nb = std::move(adj_[static_cast<std::size_t>(v)]);
    adj_[static_cast<std::size_t>(v)].clear();
    gone_[static_cast<std::size_t>(v)] = 1;
    std::vector<Vertex> merged;
    for (Vertex u : nb) {
      auto& list = adj_[static_cast<std::size_t>(u)];
      merged.clear();
      std::set_union(list.begin(), list.end(), nb.begin(), nb.end(), std::back_inserter(merged));
      merged.erase(std::remove_if(merged.begin(), merged.end(), [&](Vertex w) { return w == u || w == v; }),
                   merged.end());
      list.swap(merged);
    }
    return nb;
  }

 private:
  std::vector<std::vector<Vertex>> adj_;
  std::vector<char> gone_;
};

using Keyed = std::pair<std::int64_t, Vertex>;
using MinHeap = std::priority_queue<Keyed, std::vector<Keyed>, std::greater<>>;

}  // namespace

std::optional<std::string> validate_decomposition(const Graph& g, const TreeDecomposition& td) {
  const int n = g.num_vertices();
  const int b = td.num_bags();
  if (n > 0 && b == 0) return std::string("no bags for a nonempty graph");
  if (b > 0 && static_cast<int>(td.tree_edges.size()) != b - 1) {
    return std::string("tree has ") + std::to_string(td.tree_edges.size()) + " edges for " + std::to_string(b) +
           " bags";
  }
  UnionFind uf(std::max(b, 1));
  for (auto [x, y] : td.tree_edges) {
    if (x < 0 || y < 0 || x >= b || y >= b) return std::string("tree edge endpoint out of range");
    if (!uf.unite(x, y)) return std::string("tree edges contain a cycle");
  }

  std::vector<std::vector<int>> holders(static_cast<std::size_t>(n));
  for (int x = 0; x < b; ++x) {
    const auto& bag = td.bags[static_cast<std::size_t>(x)];
    for (std::size_t i = 0; i < bag.size(); ++i) {
      if (bag[i] < 0 || bag[i] >= n) return "bag " + std::to_string(x) + " holds an unknown vertex";
      if (i > 0 && bag[i - 1] >= bag[i]) return "bag " + std::to_string(x) + " is not sorted and duplicate free";
      holders[static_cast<std::size_t>(bag[i])].push_back(x);
    }
  }

  for (auto [u, v] : g.edges()) {
    const auto& hu = holders[static_cast<std::size_t>(u)];
    const bool covered = std::any_of(hu.begin(), hu.end(), [&](int x) {
      const auto& bag = td.bags[static_cast<std::size_t>(x)];
      return std::binary_search(bag.begin(), bag.end(), v);
    });
    if (!covered) return "edge {" + std::to_string(u) + "," + std::to_string(v) + "} is not covered by any bag";
  }

  // An induced subgraph of a tree is connected iff it has one edge fewer
  // than vertices.
  std::vector<int> inner_edges(static_cast<std::size_t>(n), 0);
  for (auto [x, y] : td.tree_edges) {
    const auto& bx = td.bags[static_cast<std::size_t>(x)];
    const auto& by = td.bags[static_cast<std::size_t>(y)];
    std::vector<Vertex> common;
    std::set_intersection(bx.begin(), bx.end(), by.begin(), by.end(), std::back_inserter(common));
    for (Vertex v : common) ++inner_edges[static_cast<std::size_t>(v)];
  }
  for (Vertex v = 0; v < n; ++v) {
    const auto count = static_cast<int>(holders[static_cast<std::size_t>(v)].size());
    if (count == 0) return "vertex " + std::to_string(v) + " appears in no bag";
    if (inner_edges[static_cast<std::size_t>(v)] != count - 1) {
      return "bags containing vertex " + std::to_string(v) + " are not connected";
    }
  }
  return std::nullopt;
}

std::vector<Vertex> min_degree_ordering(const Graph& g) {
  EliminationGraph eg(g);
  MinHeap heap;
  for (Vertex v = 0; v < g.num_vertices(); ++v) heap.emplace(eg.degree(v), v);
  std::vector<Vertex> order;
  order.reserve(static_cast<std::size_t>(g.num_vertices()));
  while (!heap.empty()) {
    auto [deg, v] = heap.top();
    heap.pop();
    if (eg.eliminated(v) || deg != eg.degree(v)) continue;
    order.push_back(v);
    for (Vertex u : eg.eliminate(v)) heap.emplace(eg.degree(u), u);
  }
  return order;
}

std::vector<Vertex> min_fill_ordering(const Graph& g) {
  EliminationGraph eg(g);
  const int n = g.num_vertices();
  std::vector<std::int64_t> fill(static_cast<std::size_t>(n));
  MinHeap heap;
  for (Vertex v = 0; v < n; ++v) {
    fill[static_cast<std::size_t>(v)] = eg.fill_in(v);
    heap.emplace(fill[static_cast<std::size_t>(v)], v);
  }
  std::vector<Vertex> order;
  order.reserve(static_cast<std::size_t>(n));
  std::vector<int> touched_stamp(static_cast<std::size_t>(n), -1);
  while (!heap.empty()) {
    auto [f, v] = heap.top();
    heap.pop();
    if (eg.eliminated(v) || f != fill[static_cast<std::size_t>(v)]) continue;
    const int step = static_cast<int>(order.size());
    order.push_back(v);
    const std::vector<Vertex> nb = eg.eliminate(v);
    // Fill counts can only change within distance two of v.
    std::vector<Vertex> affected;
    for (Vertex u : nb) {
      if (touched_stamp[static_cast<std::size_t>(u)] != step) {
        touched_stamp[static_cast<std::size_t>(u)] = step;
        affected.push_back(u);
      }
      for (Vertex w : eg.neighbors(u)) {
        if (touched_stamp[static_cast<std::size_t>(w)] != step) {
          touched_stamp[static_cast<std::size_t>(w)] = step;
          affected.push_back(w);
        }
      }
    }
    for (Vertex u : affected) {
      const std::int64_t updated = eg.fill_in(u);
      if (updated != fill[static_cast<std::size_t>(u)]) {
        fill[static_cast<std::size_t>(u)] = updated;
        heap.emplace(updated, u);
      }
    }
  }
  return order;
}

TreeDecomposition decomposition_from_ordering(const Graph& g, std::span<const Vertex> order) {
  const int n = g.num_vertices();
  if (static_cast<int>(order.size()) != n) throw ContractViolation("ordering does not cover the graph");
  std::vector<int> pos(static_cast<std::size_t>(n), -1);
  for (int i = 0; i < n; ++i) {
    const Vertex v = order[static_cast<std::size_t>(i)];
    if (v < 0 || v >= n || pos[static_cast<std::size_t>(v)] != -1) {
      throw ContractViolation("ordering is not a permutation");
    }
    pos[static_cast<std::size_t>(v)] = i;
  }

  TreeDecomposition td;
  td.bags.resize(static_cast<std::size_t>(n));
  EliminationGraph eg(g);
  std::vector<int> roots;
  for (int i = 0; i < n; ++i) {
    const Vertex v = order[static_cast<std::size_t>(i)];
    std::vector<Vertex> later = eg.eliminate(v);
    int parent = -1;
    for (Vertex u : later) {
      if (parent == -1 || pos[static_cast<std::size_t>(u)] < parent) parent = pos[static_cast<std::size_t>(u)];
    }
    later.push_back(v);
    std::sort(later.begin(), later.end());
    td.bags[static_cast<std::size_t>(i)] = std::move(later);
    if (parent == -1) {
      roots.push_back(i);
    } else {
      td.tree_edges.emplace_back(i, parent);
    }
  }
  for (std::size_t r = 1; r < roots.size(); ++r) td.tree_edges.emplace_back(roots[r - 1], roots[r]);
  return td;
}

TreeDecomposition heuristic_decomposition(const Graph& g) {
  if (g.num_vertices() == 0) throw ContractViolation("heuristic_decomposition: empty graph");
  TreeDecomposition best = decomposition_from_ordering(g, min_degree_ordering(g));
  TreeDecomposition fill = decomposition_from_ordering(g, min_fill_ordering(g));
  if (fill.width() < best.width()) best = std::move(fill);
  if (auto problem = validate_decomposition(g, best)) {
    throw ContractViolation("heuristic_decomposition produced an invalid decomposition: " + *problem);
  }
  return best;
}

int degeneracy(const Graph& g) {
  const int n = g.num_vertices();
  if (n == 0) return 0;
  std::vector<int> deg(static_cast<std::size_t>(n));
  int max_deg = 0;
  for (Vertex v = 0; v < n; ++v) {
    deg[static_cast<std::size_t>(v)] = g.degree(v);
    max_deg = std::max(max_deg, g.degree(v));
  }
  std::vector<std::vector<Vertex>> buckets(static_cast<std::size_t>(max_deg) + 1);
  for (Vertex v = 0; v < n; ++v) buckets[static_cast<std::size_t>(deg[static_cast<std::size_t>(v)])].push_back(v);
  std::vector<char> removed(static_cast<std::size_t>(n), 0);
  int result = 0;
  int low = 0;
  for (int done = 0; done < n;) {
    while (buckets[static_cast<std::size_t>(low)].empty()) ++low;
    const Vertex v = buckets[static_cast<std::size_t>(low)].back();
    buckets[static_cast<std::size_t>(low)].pop_back();
    if (removed[static_cast<std::size_t>(v)] || deg[static_cast<std::size_t>(v)] != low) continue;
    removed[static_cast<std::size_t>(v)] = 1;
    ++done;
    result = std::max(result, low);
    for (Vertex u : g.neighbors(v)) {
      if (removed[static_cast<std::size_t>(u)]) continue;
      const int d = --deg[static_cast<std::size_t>(u)];
      buckets[static_cast<std::size_t>(d)].push_back(u);
      low = std::min(low, d);
    }
  }
  return result;
}

int minor_min_width(const Graph& g) {
  const int n = g.num_vertices();
  std::vector<std::vector<Vertex>> adj = g.adjacency();
  std::vector<char> gone(static_cast<std::size_t>(n), 0);
  MinHeap heap;
  for (Vertex v = 0; v < n; ++v) heap.emplace(g.degree(v), v);
  auto degree = [&](Vertex v) { return static_cast<std::int64_t>(adj[static_cast<std::size_t>(v)].size()); };
  int remaining = n;
  int lb = 0;
  while (remaining >= 2 && !heap.empty()) {
    auto [d, v] = heap.top();
    heap.pop();
    if (gone[static_cast<std::size_t>(v)] || d != degree(v)) continue;
    lb = std::max(lb, static_cast<int>(d));
    gone[static_cast<std::size_t>(v)] = 1;
    --remaining;
    auto& nv = adj[static_cast<std::size_t>(v)];
    if (nv.empty()) continue;
    // Contract v into its minimum-degree neighbor.
    Vertex target = nv.front();
    for (Vertex u : nv) {
      if (degree(u) < degree(target)) target = u;
    }
    for (Vertex u : nv) {
      auto& list = adj[static_cast<std::size_t>(u)];
      list.erase(std::lower_bound(list.begin(), list.end(), v));
      if (u != target && !std::binary_search(list.begin(), list.end(), target)) {
        list.insert(std::lower_bound(list.begin(), list.end(), target), target);
        auto& tl = adj[static_cast<std::size_t>(target)];
        tl.insert(std::lower_bound(tl.begin(), tl.end(), u), u);
      }
    }
    for (Vertex u : nv) heap.emplace(degree(u), u);
    heap.emplace(degree(target), target);
    nv.clear();
  }
  return lb;
}

std::int64_t width_threshold(int k, int delta) {
  if (k < 1) throw ContractViolation("width_threshold: k must be at least 1");
  if (delta < 0) throw ContractViolation("width_threshold: delta must be non-negative");
  constexpr auto kMax = std::numeric_limits<std::int64_t>::max();
  const long double scale = 100.0L * delta * delta * delta;
  const long double approx = scale * std::sqrt(2.0L * k);
  if (approx > 9.0e18L) return kMax;
  // Exact ceiling: smallest T with T^2 >= scale^2 * 2k.
  using u128 = unsigned __int128;
  const u128 a = static_cast<u128>(100) * static_cast<u128>(delta) * static_cast<u128>(delta) * static_cast<u128>(delta);
  const u128 target = a * a * static_cast<u128>(2) * static_cast<u128>(k);
  auto t = static_cast<std::int64_t>(std::ceil(approx));
  while (t > 0 && static_cast<u128>(t - 1) * static_cast<u128>(t - 1) >= target) --t;
  while (static_cast<u128>(t) * static_cast<u128>(t) < target) ++t;
  return t;
}

NiceTreeDecomposition make_nice(const Graph& g, const TreeDecomposition& td) {
  if (auto problem = validate_decomposition(g, td)) {
    throw ContractViolation("make_nice: invalid decomposition: " + *problem);
  }
  NiceTreeDecomposition out;
  auto add = [&](NiceKind kind, Vertex v, std::vector<int> children, std::vector<Vertex> bag) {
    out.nodes.push_back(NiceNode{kind, v, std::move(children), std::move(bag)});
    return out.num_nodes() - 1;
  };
  auto forget = [&](int node, Vertex v) {
    std::vector<Vertex> bag = out.nodes[static_cast<std::size_t>(node)].bag;
    bag.erase(std::lower_bound(bag.begin(), bag.end(), v));
    return add(NiceKind::forget, v, {node}, std::move(bag));
  };
  auto introduce = [&](int node, Vertex v) {
    std::vector<Vertex> bag = out.nodes[static_cast<std::size_t>(node)].bag;
    bag.insert(std::lower_bound(bag.begin(), bag.end(), v), v);
    return add(NiceKind::introduce, v, {node}, std::move(bag));
  };

  const int b = td.num_bags();
  if (b == 0) {
    out.root = add(NiceKind::leaf, -1, {}, {});
    out.width = -1;
    return out;
  }

  std::vector<std::vector<int>> tree(static_cast<std::size_t>(b));
  for (auto [x, y] : td.tree_edges) {
    tree[static_cast<std::size_t>(x)].push_back(y);
    tree[static_cast<std::size_t>(y)].push_back(x);
  }
  for (auto& list : tree) std::sort(list.begin(), list.end());

  // Iterative post-order from bag 0.
  std::vector<int> parent(static_cast<std::size_t>(b), -1);
  std::vector<int> post;
  post.reserve(static_cast<std::size_t>(b));
  std::vector<std::pair<int, std::size_t>> stack{{0, 0}};
  parent[0] = 0;
  while (!stack.empty()) {
    auto& [x, next] = stack.back();
    const auto& nb = tree[static_cast<std::size_t>(x)];
    if (next < nb.size()) {
      const int y = nb[next++];
      if (parent[static_cast<std::size_t>(y)] == -1) {
        parent[static_cast<std::size_t>(y)] = x;
        stack.emplace_back(y, 0);
      }
    } else {
      post.push_back(x);
      stack.pop_back();
    }
  }

  std::vector<int> top(static_cast<std::size_t>(b), -1);
  for (int x : post) {
    const auto& bag = td.bags[static_cast<std::size_t>(x)];
    std::vector<int> branches;
    for (int y : tree[static_cast<std::size_t>(x)]) {
      if (y == parent[static_cast<std::size_t>(x)] || parent[static_cast<std::size_t>(y)] != x) continue;
      int cur = top[static_cast<std::size_t>(y)];
      const auto& child_bag = td.bags[static_cast<std::size_t>(y)];
      for (Vertex v : child_bag) {
        if (!std::binary_search(bag.begin(), bag.end(), v)) cur = forget(cur, v);
      }
      for (Vertex v : bag) {
        if (!std::binary_search(child_bag.begin(), child_bag.end(), v)) cur = introduce(cur, v);
      }
      branches.push_back(cur);
    }
    if (branches.empty()) {
      int cur = add(NiceKind::leaf, -1, {}, {});
      for (Vertex v : bag) cur = introduce(cur, v);
      branches.push_back(cur);
    }
    int acc = branches.front();
    for (std::size_t i = 1; i < branches.size(); ++i) acc = add(NiceKind::join, -1, {acc, branches[i]}, bag);
    top[static_cast<std::size_t>(x)] = acc;
  }

  int cur = top[0];
  for (Vertex v : td.bags[0]) cur = forget(cur, v);
  out.root = cur;
  out.width = td.width();
  return out;
}

std::optional<std::string> validate_nice(const Graph& g, const NiceTreeDecomposition& ntd) {
  const int count = ntd.num_nodes();
  if (count == 0 || ntd.root != count - 1) return std::string("root must be the last node");
  if (!ntd.nodes[static_cast<std::size_t>(ntd.root)].bag.empty()) return std::string("root bag is not empty");
  std::vector<int> parents(static_cast<std::size_t>(count), 0);
  TreeDecomposition plain;
  int width = -1;
  for (int x = 0; x < count; ++x) {
    const NiceNode& node = ntd.nodes[static_cast<std::size_t>(x)];
    const std::string where = "node " + std::to_string(x) + ": ";
    for (int c : node.children) {
      if (c < 0 || c >= x) return where + "children must precede their parent";
      ++parents[static_cast<std::size_t>(c)];
      plain.tree_edges.emplace_back(c, x);
    }
    plain.bags.push_back(node.bag);
    width = std::max(width, static_cast<int>(node.bag.size()) - 1);
    auto child_bag = [&](std::size_t i) -> const std::vector<Vertex>& {
      return ntd.nodes[static_cast<std::size_t>(node.children[i])].bag;
    };
    switch (node.kind) {
      case NiceKind::leaf:
        if (!node.children.empty() || !node.bag.empty()) return where + "leaf must have no children and an empty bag";
        break;
      case NiceKind::introduce: {
        if (node.children.size() != 1) return where + "introduce needs one child";
        std::vector<Vertex> expect = child_bag(0);
        if (std::binary_search(expect.begin(), expect.end(), node.vertex)) return where + "introduced vertex already present";
        expect.insert(std::lower_bound(expect.begin(), expect.end(), node.vertex), node.vertex);
        if (expect != node.bag) return where + "introduce must add exactly one vertex";
        break;
      }
      case NiceKind::forget: {
        if (node.children.size() != 1) return where + "forget needs one child";
        std::vector<Vertex> expect = child_bag(0);
        auto it = std::lower_bound(expect.begin(), expect.end(), node.vertex);
        if (it == expect.end() || *it != node.vertex) return where + "forgotten vertex not in child bag";
        expect.erase(it);
        if (expect != node.bag) return where + "forget must remove exactly one vertex";
        break;
      }
      case NiceKind::join:
        if (node.children.size() != 2) return where + "join needs two children";
        if (child_bag(0) != node.bag || child_bag(1) != node.bag) return where + "join children must share its bag";
        break;
    }
  }
  for (int x = 0; x < count; ++x) {
    if (x != ntd.root && parents[static_cast<std::size_t>(x)] != 1) {
      return "node " + std::to_string(x) + " must have exactly one parent";
    }
  }
  if (width != ntd.width) return std::string("recorded width does not match the bags");
  if (auto problem = validate_decomposition(g, plain)) return "as a tree decomposition: " + *problem;
  return std::nullopt;
}

void write_pace_td(std::ostream& out, const TreeDecomposition& td, int num_vertices) {
  out << "s td " << td.num_bags() << ' ' << (td.width() + 1) << ' ' << num_vertices << '\n';
  for (int x = 0; x < td.num_bags(); ++x) {
    out << "b " << (x + 1);
    for (Vertex v : td.bags[static_cast<std::size_t>(x)]) out << ' ' << (v + 1);
    out << '\n';
  }
  for (auto [x, y] : td.tree_edges) out << (x + 1) << ' ' << (y + 1) << '\n';
}

}  // namespace udgpath
