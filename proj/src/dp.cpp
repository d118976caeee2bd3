#include "udgpath/dp.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <map>
#include <numeric>
#include <string>
#include <unordered_map>

#include "udgpath/errors.hpp"

namespace udgpath {

std::string_view to_string(DpEngine e) { return e == DpEngine::matching ? "matching" : "rankbased"; }

DpEngine parse_engine(std::string_view s) {
  if (s == "matching") return DpEngine::matching;
  if (s == "rankbased" || s == "rank_based" || s == "rank-based") return DpEngine::rank_based;
  throw InputError("unknown engine '" + std::string(s) + "' (expected matching or rankbased)");
}

namespace {

// Per bag vertex: no solution edge yet (the vertex may still join or stay
// out), an end of a partial path, or an inner vertex of one. A vertex is only
// charged once it stops being fresh, so nothing is decided at introduction.
constexpr std::uint8_t kFresh = 0;
constexpr std::uint8_t kEnd = 1;
constexpr std::uint8_t kInner = 2;
// Partner markers: the other end was forgotten as a global path endpoint,
// or no partner at all.
constexpr std::uint8_t kOut = 0xFE;
constexpr std::uint8_t kNone = 0xFF;
constexpr int kMaxBag = 63;

// One byte per bag position (code in the two high bits, the partner position
// of an end in the low six, 63 standing for kOut) followed by a flags byte
// holding the forgotten global endpoint count and the closed bit. The bytes
// double as the hash key.
class State {
 public:
  State() : bytes_(1, '\0') {}
  explicit State(std::string bytes) : bytes_(std::move(bytes)) {}

  const std::string& key() const { return bytes_; }
  int size() const { return static_cast<int>(bytes_.size()) - 1; }

  std::uint8_t code(int p) const { return byte(p) >> 6; }
  std::uint8_t partner(int p) const {
    if (code(p) != kEnd) return kNone;
    const std::uint8_t q = byte(p) & 63U;
    return q == 63 ? kOut : q;
  }
  void set(int p, std::uint8_t c, std::uint8_t partner = kNone) {
    const std::uint8_t low = c == kEnd ? (partner == kOut ? 63 : partner & 63U) : 0;
    bytes_[static_cast<std::size_t>(p)] = static_cast<char>((c << 6) | low);
  }

  int ends() const { return flags() & 3; }
  bool done() const { return (flags() & 4) != 0; }
  void set_ends(int e) { bytes_.back() = static_cast<char>((flags() & ~3) | e); }
  void set_done() { bytes_.back() = static_cast<char>(flags() | 4); }

  bool has_end(int skip = -1) const {
    for (int p = 0; p < size(); ++p) {
      if (p != skip && code(p) == kEnd) return true;
    }
    return false;
  }
  bool untouched() const {
    if (ends() != 0) return false;
    for (int p = 0; p < size(); ++p) {
      if (code(p) != kFresh) return false;
    }
    return true;
  }

  void insert_fresh(int p) {
    shift(p, +1);
    bytes_.insert(static_cast<std::size_t>(p), 1, '\0');
  }
  void erase(int p) {
    bytes_.erase(static_cast<std::size_t>(p), 1);
    shift(p + 1, -1);
  }

  // Codes and flags without partners: the degree profile.
  std::string shape() const {
    std::string s = bytes_;
    for (std::size_t p = 0; p + 1 < s.size(); ++p) s[p] = static_cast<char>(static_cast<std::uint8_t>(s[p]) & 0xC0U);
    return s;
  }

 private:
  std::uint8_t byte(int p) const { return static_cast<std::uint8_t>(bytes_[static_cast<std::size_t>(p)]); }
  std::uint8_t flags() const { return static_cast<std::uint8_t>(bytes_.back()); }
  void shift(int from, int delta) {
    for (int p = 0; p < size(); ++p) {
      const std::uint8_t q = partner(p);
      if (q < kOut && q >= from) set(p, kEnd, static_cast<std::uint8_t>(q + delta));
    }
  }

  std::string bytes_;
};

struct Entry {
  std::int64_t weight = 0;
  std::int32_t left = -1;
  std::int32_t right = -1;
  // Forget nodes: edges chosen from the forgotten vertex into the bag.
  std::array<Vertex, 2> edge{-1, -1};
  bool used = false;
};

struct Table {
  std::vector<std::string> keys;
  std::vector<Entry> entries;
  std::unordered_map<std::string, std::int32_t> index;
  // Shared count of entries held by all tables of one run; limit 0 disables.
  std::int64_t* live = nullptr;
  std::int64_t limit = 0;

  void offer(const std::string& key, const Entry& e) {
    auto [it, fresh] = index.try_emplace(key, static_cast<std::int32_t>(entries.size()));
    if (fresh) {
      if (live && ++*live > limit && limit > 0) {
        throw RefusalError("dp: state budget of " + std::to_string(limit) + " table entries exceeded");
      }
      keys.push_back(key);
      entries.push_back(e);
    } else if (e.weight > entries[static_cast<std::size_t>(it->second)].weight) {
      entries[static_cast<std::size_t>(it->second)] = e;
    }
  }

  State state(std::size_t i) const { return State(keys[i]); }

  void drop_lookup() {
    std::vector<std::string>().swap(keys);
    std::unordered_map<std::string, std::int32_t>().swap(index);
  }
};

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    return x;
  }
  void unite(int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); }
};

class PathCycleDp {
 public:
  PathCycleDp(const Graph& g, std::span<const std::int64_t> weights, const NiceTreeDecomposition& ntd,
              Variant variant, const DpOptions& opt)
      : g_(g), w_(weights), ntd_(ntd), variant_(variant), engine_(opt.engine), budget_(opt.state_budget),
        target_(opt.target) {
    if (budget_ < 0) throw InputError("dp: state budget must be non-negative");
    if (g.num_vertices() == 0) throw ContractViolation("dp: empty graph");
    if (static_cast<int>(weights.size()) != g.num_vertices()) throw ContractViolation("dp: weight count mismatch");
    for (std::int64_t x : weights) {
      if (x < 1) throw ContractViolation("dp: weights must be positive");
    }
    if (ntd.root != ntd.num_nodes() - 1 || ntd.nodes.empty()) throw ContractViolation("dp: malformed nice decomposition");
    if (ntd.width + 1 > kMaxBag) {
      throw RefusalError("dp: bags of " + std::to_string(ntd.width + 1) + " vertices exceed the supported " +
                         std::to_string(kMaxBag));
    }
  }

  DpResult run() {
    tables_.assign(static_cast<std::size_t>(ntd_.num_nodes()), Table{});
    for (Table& t : tables_) {
      t.live = &live_;
      t.limit = budget_;
    }
    if (target_) outside_ = outside_weights();
    DpResult result;
    for (int x = 0; x < ntd_.num_nodes(); ++x) {
      const NiceNode& node = ntd_.nodes[static_cast<std::size_t>(x)];
      switch (node.kind) {
        case NiceKind::leaf: leaf(x); break;
        case NiceKind::introduce: introduce(x); break;
        case NiceKind::forget: forget(x); break;
        case NiceKind::join: join(x); break;
      }
      if (target_) {
        const Table& t = table(x);
        for (std::size_t i = 0; i < t.entries.size(); ++i) {
          std::optional<Edge> closing;
          if (!certifies(x, t.state(i), t.entries[i].weight, closing)) continue;
          result.states += static_cast<std::int64_t>(t.entries.size());
          result.weight = t.entries[i].weight;
          result.witness = trace(x, static_cast<int>(i), *result.weight, closing);
          return result;
        }
      }
      if (engine_ == DpEngine::rank_based) reduce(tables_[static_cast<std::size_t>(x)]);
      for (int c : node.children) tables_[static_cast<std::size_t>(c)].drop_lookup();
      result.states += static_cast<std::int64_t>(tables_[static_cast<std::size_t>(x)].entries.size());
    }

    const Table& root = tables_[static_cast<std::size_t>(ntd_.root)];
    int best = -1;
    for (std::size_t i = 0; i < root.entries.size(); ++i) {
      if (!root.state(i).done()) continue;
      if (best < 0 || root.entries[i].weight > root.entries[static_cast<std::size_t>(best)].weight) best = static_cast<int>(i);
    }
    if (best < 0) return result;
    result.weight = root.entries[static_cast<std::size_t>(best)].weight;
    result.witness = trace(ntd_.root, best, *result.weight);
    return result;
  }

 private:
  std::int64_t weight(Vertex v) const { return w_[static_cast<std::size_t>(v)]; }
  const NiceNode& node(int x) const { return ntd_.nodes[static_cast<std::size_t>(x)]; }
  Table& table(int x) { return tables_[static_cast<std::size_t>(x)]; }

  // Total weight of the vertices that do not occur in the subtree of each node.
  std::vector<std::int64_t> outside_weights() const {
    std::int64_t total = 0;
    for (std::int64_t x : w_) total += x;
    std::vector<std::int64_t> inside(static_cast<std::size_t>(ntd_.num_nodes()), 0);
    for (int x = 0; x < ntd_.num_nodes(); ++x) {
      const NiceNode& nd = node(x);
      auto at = [&](int c) { return inside[static_cast<std::size_t>(c)]; };
      std::int64_t& in = inside[static_cast<std::size_t>(x)];
      switch (nd.kind) {
        case NiceKind::leaf: in = 0; break;
        case NiceKind::introduce: in = at(nd.children[0]) + weight(nd.vertex); break;
        case NiceKind::forget: in = at(nd.children[0]); break;
        case NiceKind::join: {
          in = at(nd.children[0]) + at(nd.children[1]);
          for (Vertex v : nd.bag) in -= weight(v);
          break;
        }
      }
    }
    for (auto& in : inside) in = total - in;
    return inside;
  }

  // Target mode: the entry already contains a solution meeting the target.
  // Closed entries qualify directly (emit() drops the light ones). An open
  // entry qualifies when all its vertices form one partial path, which is a
  // path by itself, or a cycle once its two bag ends are joined by an edge.
  bool certifies(int x, const State& s, std::int64_t w, std::optional<Edge>& closing) const {
    if (s.done()) return true;
    if (w < *target_) return false;
    int pieces = 0;
    int a = -1;
    int b = -1;
    for (int p = 0; p < s.size(); ++p) {
      if (s.code(p) != kEnd) continue;
      const std::uint8_t q = s.partner(p);
      if (q == kOut) {
        ++pieces;
      } else if (p < q) {
        ++pieces;
        a = p;
        b = q;
      }
    }
    if (pieces != 1) return false;
    if (variant_ == Variant::path) return true;
    if (a < 0) return false;
    const auto& bag = node(x).bag;
    const Vertex u = bag[static_cast<std::size_t>(a)];
    const Vertex v = bag[static_cast<std::size_t>(b)];
    if (!g_.has_edge(u, v)) return false;
    closing = Edge{u, v};
    return true;
  }

  // Stores a state at node x. In target mode it is dropped when even taking
  // every fresh bag vertex and every vertex outside the subtree stays short.
  void emit(int x, const State& s, const Entry& e) {
    if (target_) {
      std::int64_t reach = e.weight;
      if (!s.done()) {
        reach += outside_[static_cast<std::size_t>(x)];
        const auto& bag = node(x).bag;
        for (int p = 0; p < s.size(); ++p) {
          if (s.code(p) == kFresh) reach += weight(bag[static_cast<std::size_t>(p)]);
        }
      }
      if (reach < *target_) return;
    }
    table(x).offer(s.key(), e);
  }

  void leaf(int x) { emit(x, State{}, Entry{}); }

  void introduce(int x) {
    const NiceNode& nd = node(x);
    const auto p = static_cast<int>(std::lower_bound(nd.bag.begin(), nd.bag.end(), nd.vertex) - nd.bag.begin());
    const Table& child = table(nd.children[0]);
    for (std::size_t i = 0; i < child.entries.size(); ++i) {
      State s = child.state(i);
      s.insert_fresh(p);
      Entry e;
      e.weight = child.entries[i].weight;
      e.left = static_cast<std::int32_t>(i);
      emit(x, s, e);
    }
  }

  // Joins the partial paths at bag positions a and b with an edge. A fresh
  // endpoint becomes a one-vertex path first and is charged in `gain`.
  bool add_edge(State& s, int a, int b, const std::vector<Vertex>& bag, std::int64_t& gain) const {
    if (s.done()) return false;
    const std::uint8_t ca = s.code(a);
    const std::uint8_t cb = s.code(b);
    if (ca == kInner || cb == kInner) return false;
    const std::uint8_t ea = ca == kFresh ? static_cast<std::uint8_t>(a) : s.partner(a);
    const std::uint8_t eb = cb == kFresh ? static_cast<std::uint8_t>(b) : s.partner(b);
    if (ca == kFresh) gain += weight(bag[static_cast<std::size_t>(a)]);
    if (cb == kFresh) gain += weight(bag[static_cast<std::size_t>(b)]);
    if (ea == b) {
      // Closing a cycle is only allowed as the final step.
      if (variant_ != Variant::cycle) return false;
      s.set(a, kInner);
      s.set(b, kInner);
      if (s.has_end()) return false;
      s.set_done();
      return true;
    }
    s.set(a, ca == kFresh ? kEnd : kInner, kNone);
    s.set(b, cb == kFresh ? kEnd : kInner, kNone);
    if (ea == kOut && eb == kOut) {
      if (s.has_end()) return false;
      s.set_done();
      return true;
    }
    if (ea != kOut) s.set(ea, kEnd, eb);
    if (eb != kOut) s.set(eb, kEnd, ea);
    return true;
  }

  // Settles the final degree of the vertex at position p and removes it.
  bool settle_and_remove(State& s, int p) const {
    if (s.code(p) == kEnd) {
      if (variant_ == Variant::cycle || s.ends() >= 2) return false;
      s.set_ends(s.ends() + 1);
      const std::uint8_t q = s.partner(p);
      if (q == kOut) {
        if (s.has_end(p)) return false;
        s.set_done();
      } else {
        s.set(q, kEnd, kOut);
      }
    }
    s.erase(p);
    return true;
  }

  void forget(int x) {
    const NiceNode& nd = node(x);
    const int child_id = nd.children[0];
    const std::vector<Vertex>& child_bag = node(child_id).bag;
    const auto p = static_cast<int>(std::lower_bound(child_bag.begin(), child_bag.end(), nd.vertex) - child_bag.begin());
    std::vector<int> nbr;
    for (int q = 0; q < static_cast<int>(child_bag.size()); ++q) {
      if (q != p && g_.has_edge(nd.vertex, child_bag[static_cast<std::size_t>(q)])) nbr.push_back(q);
    }

    const Table& child = table(child_id);
    std::vector<int> open;
    auto attempt = [&](const State& s, std::size_t idx, std::initializer_list<int> picks) {
      State t = s;
      Entry e;
      e.weight = child.entries[idx].weight;
      e.left = static_cast<std::int32_t>(idx);
      int slot = 0;
      for (int q : picks) {
        if (!add_edge(t, p, q, child_bag, e.weight)) return;
        e.edge[static_cast<std::size_t>(slot++)] = child_bag[static_cast<std::size_t>(q)];
      }
      e.used = t.code(p) != kFresh;
      if (!settle_and_remove(t, p)) return;
      emit(x, t, e);
    };

    for (std::size_t i = 0; i < child.entries.size(); ++i) {
      const State s = child.state(i);
      const std::uint8_t c = s.code(p);
      attempt(s, i, {});
      if (c == kFresh && variant_ == Variant::path && !s.done() && s.ends() == 0 && !s.has_end()) {
        // The vertex alone is the whole path.
        State t = s;
        Entry e;
        e.weight = child.entries[i].weight + weight(nd.vertex);
        e.left = static_cast<std::int32_t>(i);
        e.used = true;
        t.set_ends(2);
        t.set_done();
        t.erase(p);
        emit(x, t, e);
      }
      if (c == kInner || s.done()) continue;
      open.clear();
      for (int q : nbr) {
        if (s.code(q) != kInner) open.push_back(q);
      }
      for (std::size_t a = 0; a < open.size(); ++a) {
        attempt(s, i, {open[a]});
        if (c != kFresh) continue;
        for (std::size_t b = a + 1; b < open.size(); ++b) {
          // Both picks ending one partial path would close it through v.
          if (variant_ == Variant::path && s.partner(open[a]) == open[b]) continue;
          attempt(s, i, {open[a], open[b]});
        }
      }
    }
  }

  std::optional<State> combine(const State& l, const State& r) const {
    if (l.done() && r.done()) return std::nullopt;
    if (l.ends() + r.ends() > 2) return std::nullopt;
    // A closed side leaves nothing for the other side to add.
    if ((l.done() && !r.untouched()) || (r.done() && !l.untouched())) return std::nullopt;
    const int b = l.size();
    State out(std::string(static_cast<std::size_t>(b) + 1, '\0'));
    out.set_ends(l.ends() + r.ends());
    for (int p = 0; p < b; ++p) {
      const int d = l.code(p) + r.code(p);
      if (d > 2) return std::nullopt;
      out.set(p, static_cast<std::uint8_t>(d), kOut);
    }

    // Partial paths of both sides as links between bag positions and
    // tokens standing for forgotten endpoints.
    std::vector<std::pair<int, int>> links;
    int tokens = 0;
    for (const State* s : {&l, &r}) {
      for (int p = 0; p < b; ++p) {
        if (s->code(p) != kEnd) continue;
        const std::uint8_t q = s->partner(p);
        if (q == kOut) {
          links.emplace_back(p, b + tokens++);
        } else if (p < q) {
          links.emplace_back(p, q);
        }
      }
    }
    const int nodes = b + tokens;
    std::vector<std::array<int, 2>> incident(static_cast<std::size_t>(nodes), {-1, -1});
    for (int e = 0; e < static_cast<int>(links.size()); ++e) {
      for (int end : {links[static_cast<std::size_t>(e)].first, links[static_cast<std::size_t>(e)].second}) {
        auto& slot = incident[static_cast<std::size_t>(end)];
        if (slot[0] < 0) {
          slot[0] = e;
        } else {
          slot[1] = e;
        }
      }
    }
    auto link_degree = [&](int v) {
      const auto& s = incident[static_cast<std::size_t>(v)];
      return (s[0] >= 0 ? 1 : 0) + (s[1] >= 0 ? 1 : 0);
    };
    auto across = [&](int e, int from) {
      const auto& lk = links[static_cast<std::size_t>(e)];
      return lk.first == from ? lk.second : lk.first;
    };

    int closures = (l.done() || r.done()) ? 1 : 0;
    std::vector<char> used_link(links.size(), 0);
    for (int start = 0; start < nodes; ++start) {
      if (link_degree(start) != 1 || used_link[static_cast<std::size_t>(incident[static_cast<std::size_t>(start)][0])]) continue;
      int cur = start;
      int e = incident[static_cast<std::size_t>(start)][0];
      while (true) {
        used_link[static_cast<std::size_t>(e)] = 1;
        cur = across(e, cur);
        const auto& inc = incident[static_cast<std::size_t>(cur)];
        const int next = inc[0] == e ? inc[1] : inc[0];
        if (next < 0) break;
        e = next;
      }
      const bool start_token = start >= b;
      const bool end_token = cur >= b;
      if (start_token && end_token) {
        ++closures;
        continue;
      }
      if (!start_token) out.set(start, kEnd, end_token ? kOut : static_cast<std::uint8_t>(cur));
      if (!end_token) out.set(cur, kEnd, start_token ? kOut : static_cast<std::uint8_t>(start));
    }
    for (std::size_t e = 0; e < links.size(); ++e) {
      if (used_link[e]) continue;
      // Every remaining link lies on a cycle formed by both sides.
      if (variant_ != Variant::cycle) return std::nullopt;
      ++closures;
      int cur = links[e].first;
      int edge = static_cast<int>(e);
      while (!used_link[static_cast<std::size_t>(edge)]) {
        used_link[static_cast<std::size_t>(edge)] = 1;
        cur = across(edge, cur);
        const auto& inc = incident[static_cast<std::size_t>(cur)];
        edge = inc[0] == edge ? inc[1] : inc[0];
      }
    }
    if (closures > 1) return std::nullopt;
    if (closures == 1) {
      if (out.has_end()) return std::nullopt;
      out.set_done();
    }
    return out;
  }

  void join(int x) {
    const NiceNode& nd = node(x);
    const Table& lt = table(nd.children[0]);
    const Table& rt = table(nd.children[1]);
    std::vector<State> right_states;
    right_states.reserve(rt.entries.size());
    for (std::size_t j = 0; j < rt.entries.size(); ++j) right_states.push_back(rt.state(j));
    for (std::size_t i = 0; i < lt.entries.size(); ++i) {
      const State ls = lt.state(i);
      for (std::size_t j = 0; j < right_states.size(); ++j) {
        const State& rs = right_states[j];
        auto merged = combine(ls, rs);
        if (!merged) continue;
        Entry e;
        e.weight = lt.entries[i].weight + rt.entries[j].weight;
        // A bag vertex touched on both sides was charged twice.
        for (int p = 0; p < ls.size(); ++p) {
          if (ls.code(p) != kFresh && rs.code(p) != kFresh) e.weight -= weight(nd.bag[static_cast<std::size_t>(p)]);
        }
        e.left = static_cast<std::int32_t>(i);
        e.right = static_cast<std::int32_t>(j);
        emit(x, *merged, e);
      }
    }
  }

  // Keeps, per degree profile, a maximum-weight set of pairings whose rows
  // in the cut-consistency matrix are linearly independent over GF(2).
  void reduce(Table& t) const {
    constexpr int kMaxCutBits = 16;
    std::map<std::string, std::vector<std::size_t>> groups;
    std::vector<State> states;
    states.reserve(t.entries.size());
    for (std::size_t i = 0; i < t.entries.size(); ++i) {
      states.push_back(t.state(i));
      groups[states.back().shape()].push_back(i);
    }

    std::vector<char> keep(t.entries.size(), 1);
    for (auto& [shape, members] : groups) {
      if (members.size() < 3) continue;
      const State& first = states[members.front()];
      std::vector<int> element_of(static_cast<std::size_t>(first.size()), -1);
      int elements = 0;
      for (int p = 0; p < first.size(); ++p) {
        if (first.code(p) == kEnd) element_of[static_cast<std::size_t>(p)] = elements++;
      }
      const int terminal = first.ends() > 0 ? elements++ : -1;
      if (elements - 1 > kMaxCutBits || elements < 1) continue;
      const std::size_t columns = std::size_t{1} << (elements - 1);
      const std::size_t words = (columns + 63) / 64;

      std::stable_sort(members.begin(), members.end(), [&](std::size_t a, std::size_t b) {
        return t.entries[a].weight > t.entries[b].weight;
      });

      std::vector<std::pair<std::size_t, std::vector<std::uint64_t>>> basis;
      for (std::size_t idx : members) {
        if (basis.size() == columns) {
          keep[idx] = 0;
          continue;
        }
        const State& s = states[idx];
        UnionFind blocks(elements);
        for (int p = 0; p < s.size(); ++p) {
          if (s.code(p) != kEnd) continue;
          const std::uint8_t q = s.partner(p);
          blocks.unite(element_of[static_cast<std::size_t>(p)], q == kOut ? terminal : element_of[q]);
        }
        std::vector<int> root(static_cast<std::size_t>(elements));
        for (int e = 0; e < elements; ++e) root[static_cast<std::size_t>(e)] = blocks.find(e);

        // Element 0 is always on the left; a cut is consistent when each
        // block sits entirely on one side.
        std::vector<std::uint64_t> row(words, 0);
        std::vector<int> side(static_cast<std::size_t>(elements));
        for (std::size_t mask = 0; mask < columns; ++mask) {
          side[0] = 0;
          for (int e = 1; e < elements; ++e) side[static_cast<std::size_t>(e)] = static_cast<int>((mask >> (e - 1)) & 1U);
          bool consistent = true;
          for (int e = 1; e < elements && consistent; ++e) {
            consistent = side[static_cast<std::size_t>(e)] == side[static_cast<std::size_t>(root[static_cast<std::size_t>(e)])];
          }
          if (consistent) row[mask / 64] |= std::uint64_t{1} << (mask % 64);
        }
        for (const auto& [pivot, vec] : basis) {
          if ((row[pivot / 64] >> (pivot % 64)) & 1U) {
            for (std::size_t w = 0; w < words; ++w) row[w] ^= vec[w];
          }
        }
        std::size_t pivot = columns;
        for (std::size_t w = 0; w < words && pivot == columns; ++w) {
          if (row[w] != 0) pivot = w * 64 + static_cast<std::size_t>(__builtin_ctzll(row[w]));
        }
        if (pivot == columns) {
          keep[idx] = 0;
        } else {
          basis.emplace_back(pivot, std::move(row));
        }
      }
    }

    if (std::all_of(keep.begin(), keep.end(), [](char k) { return k != 0; })) return;
    Table pruned;
    pruned.live = t.live;
    pruned.limit = t.limit;
    *t.live -= static_cast<std::int64_t>(t.entries.size());
    for (std::size_t i = 0; i < t.entries.size(); ++i) {
      if (keep[i]) pruned.offer(t.keys[i], t.entries[i]);
    }
    t = std::move(pruned);
  }

  // Rebuilds the solution of entry `best` at node `from`. Bag vertices of
  // `from` are not forgotten yet, so they are read off the state itself.
  std::vector<Vertex> trace(int from, int best, std::int64_t expected, std::optional<Edge> closing = {}) const {
    std::vector<Vertex> used;
    std::vector<Edge> chosen;
    if (closing) chosen.push_back(*closing);
    const State top = tables_[static_cast<std::size_t>(from)].state(static_cast<std::size_t>(best));
    for (int p = 0; p < top.size(); ++p) {
      if (top.code(p) != kFresh) used.push_back(node(from).bag[static_cast<std::size_t>(p)]);
    }
    std::vector<std::pair<int, int>> stack{{from, best}};
    while (!stack.empty()) {
      auto [x, idx] = stack.back();
      stack.pop_back();
      const NiceNode& nd = node(x);
      const Entry& e = tables_[static_cast<std::size_t>(x)].entries[static_cast<std::size_t>(idx)];
      if (nd.kind == NiceKind::forget) {
        if (e.used) used.push_back(nd.vertex);
        for (Vertex u : e.edge) {
          if (u >= 0) chosen.emplace_back(nd.vertex, u);
        }
      }
      if (e.left >= 0) stack.emplace_back(nd.children[0], e.left);
      if (e.right >= 0) stack.emplace_back(nd.children[1], e.right);
    }

    std::sort(used.begin(), used.end());
    std::map<Vertex, std::vector<Vertex>> adj;
    for (auto [a, b] : chosen) {
      adj[a].push_back(b);
      adj[b].push_back(a);
    }
    std::vector<Vertex> seq;
    if (!used.empty()) {
      Vertex start = used.front();
      if (variant_ == Variant::path) {
        for (Vertex v : used) {
          if (adj[v].size() <= 1) {
            start = v;
            break;
          }
        }
      }
      Vertex prev = -1;
      Vertex cur = start;
      while (seq.size() <= used.size()) {
        seq.push_back(cur);
        const auto& nb = adj[cur];
        Vertex next = -1;
        for (Vertex u : nb) {
          if (u != prev) {
            next = u;
            break;
          }
        }
        if (next < 0 || next == start) break;
        prev = cur;
        cur = next;
      }
    }
    std::int64_t total = 0;
    for (Vertex v : seq) total += weight(v);
    std::vector<Vertex> sorted_seq = seq;
    std::sort(sorted_seq.begin(), sorted_seq.end());
    if (sorted_seq != used || !is_solution(g_, seq, variant_) || total != expected) {
      throw ContractViolation("dp: reconstructed witness failed validation");
    }
    return canonical(std::move(seq), variant_);
  }

  const Graph& g_;
  std::span<const std::int64_t> w_;
  const NiceTreeDecomposition& ntd_;
  Variant variant_;
  DpEngine engine_;
  std::int64_t budget_;
  std::optional<std::int64_t> target_;
  std::vector<std::int64_t> outside_;
  std::int64_t live_ = 0;
  std::vector<Table> tables_;
};

}  // namespace

DpResult max_weight_path(const Graph& g, std::span<const std::int64_t> weights, const NiceTreeDecomposition& ntd,
                         DpEngine engine, std::int64_t state_budget) {
  return max_weight_path(g, weights, ntd, DpOptions{engine, state_budget, std::nullopt});
}

DpResult max_weight_path(const Graph& g, std::span<const std::int64_t> weights, const NiceTreeDecomposition& ntd,
                         const DpOptions& opt) {
  return PathCycleDp(g, weights, ntd, Variant::path, opt).run();
}

DpResult max_weight_cycle(const Graph& g, std::span<const std::int64_t> weights, const NiceTreeDecomposition& ntd,
                          DpEngine engine, std::int64_t state_budget) {
  return max_weight_cycle(g, weights, ntd, DpOptions{engine, state_budget, std::nullopt});
}

DpResult max_weight_cycle(const Graph& g, std::span<const std::int64_t> weights, const NiceTreeDecomposition& ntd,
                          const DpOptions& opt) {
  return PathCycleDp(g, weights, ntd, Variant::cycle, opt).run();
}

DpResult best_aggregate_closure(const WeightedGraph& reduced) {
  DpResult best;
  for (Vertex c = 0; c < reduced.num_vertices(); ++c) {
    if (!reduced.is_aggregate(c)) continue;
    const std::int64_t w = reduced.weight[static_cast<std::size_t>(c)];
    if (w >= 3 && (!best.weight || w > *best.weight)) {
      best.weight = w;
      best.witness = {c};
    }
    const auto nb = reduced.graph.neighbors(c);
    if (w >= 2 && !nb.empty() && (!best.weight || w + 1 > *best.weight)) {
      best.weight = w + 1;
      best.witness = {std::min(c, nb.front()), std::max(c, nb.front())};
    }
  }
  if (best.weight && (!is_aggregate_closure(reduced, best.witness) || reduced.weight_of(best.witness) != *best.weight)) {
    throw ContractViolation("aggregate closure failed validation");
  }
  return best;
}

DpResult max_weight_reduced_cycle(const WeightedGraph& reduced, const NiceTreeDecomposition& ntd, DpEngine engine,
                                  std::int64_t state_budget) {
  DpResult proper = max_weight_cycle(reduced.graph, reduced.weight, ntd, engine, state_budget);
  DpResult closure = best_aggregate_closure(reduced);
  if (closure.weight && (!proper.weight || *closure.weight > *proper.weight)) {
    closure.states = proper.states;
    return closure;
  }
  return proper;
}

}  // namespace udgpath
