#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <deque>
#include <istream>
#include <iterator>
#include <limits>
#include <optional>
#include <ostream>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "tmatch/detail/text.hpp"
#include "tmatch/error.hpp"
#include "tmatch/overlap_graph.hpp"
#include "tmatch/static_graph.hpp"
#include "tmatch/temporal_graph.hpp"

namespace tmatch {

using NodeId = std::uint32_t;
inline constexpr NodeId kNoNode = std::numeric_limits<NodeId>::max();

/// Rooted tree of bags. `parent[root] == kNoNode`; bags are sorted.
struct TreeDecomposition {
  std::vector<std::vector<Vertex>> bags;
  std::vector<NodeId> parent;
  NodeId root = 0;

  std::size_t num_nodes() const { return bags.size(); }

  /// max |bag| - 1; -1 when every bag is empty.
  int width() const {
    std::size_t best = 0;
    for (const auto& b : bags) best = std::max(best, b.size());
    return static_cast<int>(best) - 1;
  }

  std::vector<std::vector<NodeId>> children() const {
    std::vector<std::vector<NodeId>> out(num_nodes());
    for (NodeId x = 0; x < num_nodes(); ++x) {
      if (parent[x] != kNoNode) out[parent[x]].push_back(x);
    }
    return out;
  }

  friend bool operator==(const TreeDecomposition&, const TreeDecomposition&) = default;
};

enum class ViolationKind { Structure, VertexOutOfRange, VertexCoverage, EdgeCoverage, Connectivity, NiceForm };

struct Violation {
  ViolationKind kind;
  std::string message;
  std::vector<Vertex> vertices;
};

inline std::string_view to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::Structure: return "structure";
    case ViolationKind::VertexOutOfRange: return "vertex-out-of-range";
    case ViolationKind::VertexCoverage: return "vertex-coverage";
    case ViolationKind::EdgeCoverage: return "edge-coverage";
    case ViolationKind::Connectivity: return "connectivity";
    case ViolationKind::NiceForm: return "nice-form";
  }
  return "unknown";
}

/// Checks tree shape, vertex coverage, edge coverage and connectivity of
/// `td` against `g`. Empty result means valid.
inline std::vector<Violation> validate_decomposition(const TreeDecomposition& td,
                                                     const StaticGraph& g) {
  std::vector<Violation> out;
  const std::size_t nodes = td.num_nodes();
  if (nodes == 0) {
    out.push_back({ViolationKind::Structure, "decomposition has no nodes", {}});
    return out;
  }
  if (td.parent.size() != nodes) {
    out.push_back({ViolationKind::Structure, "parent array size differs from bag count", {}});
    return out;
  }
  if (td.root >= nodes || td.parent[td.root] != kNoNode) {
    out.push_back({ViolationKind::Structure, "root is out of range or has a parent", {}});
    return out;
  }
  for (NodeId x = 0; x < nodes; ++x) {
    if (x != td.root && (td.parent[x] == kNoNode || td.parent[x] >= nodes)) {
      out.push_back({ViolationKind::Structure,
                     "node " + std::to_string(x) + " has no valid parent", {}});
    }
    const auto& bag = td.bags[x];
    if (!std::is_sorted(bag.begin(), bag.end()) ||
        std::adjacent_find(bag.begin(), bag.end()) != bag.end()) {
      out.push_back({ViolationKind::Structure,
                     "bag " + std::to_string(x) + " is not sorted and duplicate-free", {}});
    }
  }
  if (!out.empty()) return out;
  // Every node must reach the root; depth memo detects cycles.
  std::vector<int> state(nodes, 0);  // 0 unknown, 1 on stack, 2 reaches root
  state[td.root] = 2;
  for (NodeId x = 0; x < nodes; ++x) {
    std::vector<NodeId> path;
    NodeId y = x;
    while (state[y] == 0) {
      state[y] = 1;
      path.push_back(y);
      y = td.parent[y];
    }
    if (state[y] == 1) {
      out.push_back({ViolationKind::Structure, "parent pointers contain a cycle", {}});
      return out;
    }
    for (NodeId p : path) state[p] = 2;
  }

  const std::size_t n = g.num_vertices();
  std::vector<std::size_t> occurrences(n, 0);
  std::vector<std::size_t> tree_edges_within(n, 0);
  for (NodeId x = 0; x < nodes; ++x) {
    for (Vertex v : td.bags[x]) {
      if (v >= n) {
        out.push_back({ViolationKind::VertexOutOfRange,
                       "bag " + std::to_string(x) + " holds unknown vertex " + std::to_string(v),
                       {v}});
        continue;
      }
      ++occurrences[v];
      NodeId p = td.parent[x];
      if (p != kNoNode && std::binary_search(td.bags[p].begin(), td.bags[p].end(), v)) {
        ++tree_edges_within[v];
      }
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    if (occurrences[v] == 0) {
      out.push_back({ViolationKind::VertexCoverage,
                     "vertex " + std::to_string(v) + " is in no bag", {v}});
    } else if (tree_edges_within[v] + 1 != occurrences[v]) {
      out.push_back({ViolationKind::Connectivity,
                     "bags containing vertex " + std::to_string(v) + " are not connected", {v}});
    }
  }

  // For each vertex, the bags holding it; edge (a, b) is covered iff those
  // lists intersect.
  std::vector<std::vector<NodeId>> holders(n);
  for (NodeId x = 0; x < nodes; ++x) {
    for (Vertex v : td.bags[x]) {
      if (v < n) holders[v].push_back(x);
    }
  }
  for (auto [a, b] : g.edges()) {
    const auto& ha = holders[a];
    const auto& hb = holders[b];
    std::size_t i = 0, j = 0;
    bool covered = false;
    while (i < ha.size() && j < hb.size()) {
      if (ha[i] == hb[j]) {
        covered = true;
        break;
      }
      if (ha[i] < hb[j]) {
        ++i;
      } else {
        ++j;
      }
    }
    if (!covered) {
      out.push_back({ViolationKind::EdgeCoverage,
                     "edge " + std::to_string(a) + "-" + std::to_string(b) + " is in no bag",
                     {a, b}});
    }
  }
  return out;
}

enum class EliminationHeuristic { MinFill, MinDegree };

namespace detail {

inline bool sorted_contains(const std::vector<Vertex>& row, Vertex v) {
  return std::binary_search(row.begin(), row.end(), v);
}

inline void sorted_insert(std::vector<Vertex>& row, Vertex v) {
  auto it = std::lower_bound(row.begin(), row.end(), v);
  if (it == row.end() || *it != v) row.insert(it, v);
}

inline void sorted_erase(std::vector<Vertex>& row, Vertex v) {
  auto it = std::lower_bound(row.begin(), row.end(), v);
  if (it != row.end() && *it == v) row.erase(it);
}

/// Mutable elimination graph: eliminating v turns N(v) into a clique.
class EliminationGraph {
 public:
  explicit EliminationGraph(const StaticGraph& g) : adjacency_(g.num_vertices()) {
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      auto nb = g.neighbors(v);
      adjacency_[v].assign(nb.begin(), nb.end());
    }
  }

  const std::vector<Vertex>& neighbors(Vertex v) const { return adjacency_[v]; }

  std::size_t fill_in(Vertex v) const {
    const auto& nb = adjacency_[v];
    std::size_t missing = 0;
    for (std::size_t i = 0; i < nb.size(); ++i) {
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        if (!sorted_contains(adjacency_[nb[i]], nb[j])) ++missing;
      }
    }
    return missing;
  }

  /// Returns the neighbourhood of v at elimination time.
  std::vector<Vertex> eliminate(Vertex v) {
    std::vector<Vertex> nb = std::move(adjacency_[v]);
    adjacency_[v].clear();
    for (Vertex a : nb) sorted_erase(adjacency_[a], v);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        sorted_insert(adjacency_[nb[i]], nb[j]);
        sorted_insert(adjacency_[nb[j]], nb[i]);
      }
    }
    return nb;
  }

 private:
  std::vector<std::vector<Vertex>> adjacency_;
};

}  // namespace detail

/// Greedy elimination ordering. Ties break on degree (min-fill only) and then
/// on smallest vertex id.
inline std::vector<Vertex> elimination_ordering(const StaticGraph& g,
                                                EliminationHeuristic heuristic) {
  const std::size_t n = g.num_vertices();
  detail::EliminationGraph eg(g);
  std::vector<bool> eliminated(n, false);
  std::vector<std::size_t> fill(n, 0);
  std::vector<bool> dirty(n, true);
  std::vector<Vertex> order;
  order.reserve(n);
  for (std::size_t step = 0; step < n; ++step) {
    Vertex best = 0;
    bool have = false;
    std::pair<std::size_t, std::size_t> best_key{};
    for (Vertex v = 0; v < n; ++v) {
      if (eliminated[v]) continue;
      std::pair<std::size_t, std::size_t> key;
      if (heuristic == EliminationHeuristic::MinFill) {
        if (dirty[v]) {
          fill[v] = eg.fill_in(v);
          dirty[v] = false;
        }
        key = {fill[v], eg.neighbors(v).size()};
      } else {
        key = {eg.neighbors(v).size(), 0};
      }
      if (!have || key < best_key) {
        best = v;
        best_key = key;
        have = true;
      }
    }
    // Fill counts can change within distance two of the eliminated vertex.
    for (Vertex a : eg.neighbors(best)) {
      dirty[a] = true;
      for (Vertex b : eg.neighbors(a)) dirty[b] = true;
    }
    eg.eliminate(best);
    eliminated[best] = true;
    order.push_back(best);
  }
  return order;
}

/// Removes non-root nodes whose bag is contained in the parent's bag.
inline TreeDecomposition compress_decomposition(const TreeDecomposition& td) {
  const std::size_t nodes = td.num_nodes();
  std::vector<NodeId> parent = td.parent;
  std::vector<bool> removed(nodes, false);
  auto subset = [&](NodeId a, NodeId b) {
    return std::includes(td.bags[b].begin(), td.bags[b].end(), td.bags[a].begin(),
                         td.bags[a].end());
  };
  auto live_parent = [&](NodeId x) {
    NodeId p = parent[x];
    while (p != kNoNode && removed[p]) p = parent[p];
    return p;
  };
  // Top-down order so a removed node's children re-hang on a surviving node.
  std::vector<NodeId> order;
  order.reserve(nodes);
  auto kids = td.children();
  order.push_back(td.root);
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (NodeId c : kids[order[i]]) order.push_back(c);
  }
  for (NodeId x : order) {
    if (x == td.root) continue;
    NodeId p = live_parent(x);
    parent[x] = p;
    if (subset(x, p)) removed[x] = true;
  }
  std::vector<NodeId> renumber(nodes, kNoNode);
  TreeDecomposition out;
  for (NodeId x = 0; x < nodes; ++x) {
    if (removed[x]) continue;
    renumber[x] = static_cast<NodeId>(out.bags.size());
    out.bags.push_back(td.bags[x]);
  }
  out.parent.assign(out.bags.size(), kNoNode);
  for (NodeId x = 0; x < nodes; ++x) {
    if (removed[x] || x == td.root) continue;
    out.parent[renumber[x]] = renumber[live_parent(x)];
  }
  out.root = renumber[td.root];
  return out;
}

/// Standard construction: node i holds order[i] plus its later neighbours in
/// the filled graph and hangs below the node of the earliest such neighbour.
/// Components are chained under the node of the last eliminated vertex.
inline TreeDecomposition decomposition_from_ordering(const StaticGraph& g,
                                                     const std::vector<Vertex>& order) {
  const std::size_t n = g.num_vertices();
  if (order.size() != n) {
    throw Error(ErrorKind::InvalidArgument, "ordering does not cover every vertex");
  }
  TreeDecomposition td;
  if (n == 0) {
    td.bags.push_back({});
    td.parent.push_back(kNoNode);
    td.root = 0;
    return td;
  }
  std::vector<std::size_t> position(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (order[i] >= n || position[order[i]] != n) {
      throw Error(ErrorKind::InvalidArgument, "ordering is not a permutation");
    }
    position[order[i]] = i;
  }
  detail::EliminationGraph eg(g);
  td.bags.resize(n);
  td.parent.assign(n, kNoNode);
  std::vector<NodeId> roots;
  for (std::size_t i = 0; i < n; ++i) {
    Vertex v = order[i];
    auto later = eg.eliminate(v);
    auto& bag = td.bags[i];
    bag = later;
    bag.push_back(v);
    std::sort(bag.begin(), bag.end());
    if (later.empty()) {
      roots.push_back(static_cast<NodeId>(i));
    } else {
      std::size_t first = n;
      for (Vertex u : later) first = std::min(first, position[u]);
      td.parent[i] = static_cast<NodeId>(first);
    }
  }
  td.root = roots.back();
  for (NodeId r : roots) {
    if (r != td.root) td.parent[r] = td.root;
  }
  return compress_decomposition(td);
}

inline TreeDecomposition decompose_heuristic(const StaticGraph& g,
                                             EliminationHeuristic heuristic) {
  return decomposition_from_ordering(g, elimination_ordering(g, heuristic));
}

/// Minor-min-width: repeatedly contract a minimum-degree vertex into its
/// minimum-degree neighbour. Also takes the greedy clique bound.
inline int treewidth_lower_bound(const StaticGraph& g) {
  const std::size_t n = g.num_vertices();
  if (n == 0) return -1;
  int bound = 0;

  for (Vertex v = 0; v < n; ++v) {
    std::vector<Vertex> clique{v};
    std::vector<Vertex> candidates(g.neighbors(v).begin(), g.neighbors(v).end());
    std::sort(candidates.begin(), candidates.end(), [&](Vertex a, Vertex b) {
      return std::pair(g.degree(b), a) < std::pair(g.degree(a), b);
    });
    for (Vertex c : candidates) {
      bool all = std::all_of(clique.begin(), clique.end(), [&](Vertex q) { return g.has_edge(q, c); });
      if (all) clique.push_back(c);
    }
    bound = std::max(bound, static_cast<int>(clique.size()) - 1);
  }

  std::vector<std::vector<Vertex>> adj(n);
  for (Vertex v = 0; v < n; ++v) adj[v].assign(g.neighbors(v).begin(), g.neighbors(v).end());
  std::vector<bool> alive(n, true);
  std::size_t remaining = n;
  while (remaining > 1) {
    Vertex v = 0;
    std::size_t best = std::numeric_limits<std::size_t>::max();
    for (Vertex x = 0; x < n; ++x) {
      if (alive[x] && adj[x].size() < best) {
        best = adj[x].size();
        v = x;
      }
    }
    bound = std::max(bound, static_cast<int>(best));
    if (!adj[v].empty()) {
      Vertex u = adj[v].front();
      for (Vertex x : adj[v]) {
        if (adj[x].size() < adj[u].size()) u = x;
      }
      for (Vertex x : adj[v]) {
        detail::sorted_erase(adj[x], v);
        if (x != u) {
          detail::sorted_insert(adj[x], u);
          detail::sorted_insert(adj[u], x);
        }
      }
    }
    adj[v].clear();
    alive[v] = false;
    --remaining;
  }
  return bound;
}

enum class ExactStatus { Found, Infeasible, BudgetExhausted };

struct ExactResult {
  ExactStatus status = ExactStatus::BudgetExhausted;
  std::optional<TreeDecomposition> decomposition;  // set iff Found
  std::uint64_t expansions = 0;
};

inline constexpr std::uint64_t kUnlimitedBudget = std::numeric_limits<std::uint64_t>::max();

namespace detail {

/// Decides "treewidth <= k" by searching elimination orderings over the set
/// of already-eliminated vertices. The degree of v after eliminating S only
/// depends on S (vertices reachable from v through S), so failed sets are
/// memoized. Simplicial vertices of small degree are eliminated greedily.
class ExactTreewidthSearch {
 public:
  struct BudgetHit {};

  ExactTreewidthSearch(const StaticGraph& g, std::uint64_t budget)
      : n_(static_cast<int>(g.num_vertices())), budget_(budget), adjacency_(g.num_vertices(), 0) {
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      for (Vertex u : g.neighbors(v)) adjacency_[v] |= bit(u);
    }
    full_ = n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1;
  }

  std::optional<std::vector<Vertex>> ordering_within(int k) {
    failed_.clear();
    order_.clear();
    if (search(0, k)) return order_;
    return std::nullopt;
  }

  std::uint64_t expansions() const { return expansions_; }

 private:
  static std::uint64_t bit(int v) { return std::uint64_t{1} << v; }

  std::uint64_t reach_set(std::uint64_t eliminated, int v) const {
    std::uint64_t visited = bit(v);
    std::uint64_t frontier = adjacency_[v] & eliminated;
    std::uint64_t reach = adjacency_[v];
    while (frontier != 0) {
      int x = std::countr_zero(frontier);
      frontier &= frontier - 1;
      if (visited & bit(x)) continue;
      visited |= bit(x);
      reach |= adjacency_[x];
      frontier |= adjacency_[x] & eliminated & ~visited;
    }
    return reach & ~eliminated & ~bit(v);
  }

  bool search(std::uint64_t eliminated, int k) {
    if (++expansions_ > budget_) throw BudgetHit{};
    std::uint64_t remaining = full_ & ~eliminated;
    if (std::popcount(remaining) <= k + 1) {
      for (std::uint64_t r = remaining; r != 0; r &= r - 1) {
        order_.push_back(static_cast<Vertex>(std::countr_zero(r)));
      }
      return true;
    }
    if (failed_.count(eliminated)) return false;

    std::vector<std::uint64_t> q(n_, 0);
    for (std::uint64_t r = remaining; r != 0; r &= r - 1) {
      int v = std::countr_zero(r);
      q[v] = reach_set(eliminated, v);
    }
    auto try_vertex = [&](int v) {
      order_.push_back(static_cast<Vertex>(v));
      if (search(eliminated | bit(v), k)) return true;
      order_.pop_back();
      return false;
    };
    for (std::uint64_t r = remaining; r != 0; r &= r - 1) {
      int v = std::countr_zero(r);
      if (std::popcount(q[v]) > k) continue;
      bool simplicial = true;
      for (std::uint64_t s = q[v]; s != 0 && simplicial; s &= s - 1) {
        int u = std::countr_zero(s);
        std::uint64_t others = q[v] & ~bit(u);
        simplicial = (others & ~q[u]) == 0;
      }
      if (simplicial) {
        if (try_vertex(v)) return true;
        failed_.insert(eliminated);
        return false;
      }
    }
    for (std::uint64_t r = remaining; r != 0; r &= r - 1) {
      int v = std::countr_zero(r);
      if (std::popcount(q[v]) <= k && try_vertex(v)) return true;
    }
    failed_.insert(eliminated);
    return false;
  }

  int n_;
  std::uint64_t budget_;
  std::uint64_t expansions_ = 0;
  std::vector<std::uint64_t> adjacency_;
  std::uint64_t full_ = 0;
  std::unordered_set<std::uint64_t> failed_;
  std::vector<Vertex> order_;
};

}  // namespace detail

/// Minimum-width decomposition if one of width <= max_width exists, found
/// with at most `budget` search expansions. Graphs above 64 vertices are
/// rejected with SizeLimit; practical use is up to about 25 vertices.
inline ExactResult decompose_exact(const StaticGraph& g, int max_width,
                                   std::uint64_t budget = kUnlimitedBudget) {
  if (g.num_vertices() > 64) {
    throw Error(ErrorKind::SizeLimit, "exact decomposition supports at most 64 vertices");
  }
  ExactResult result;
  auto heuristic = decompose_heuristic(g, EliminationHeuristic::MinFill);
  const int upper = heuristic.width();
  const int lower = treewidth_lower_bound(g);
  if (max_width < lower) {
    result.status = ExactStatus::Infeasible;
    return result;
  }
  detail::ExactTreewidthSearch search(g, budget);
  try {
    for (int k = std::max(lower, 0); k < upper && k <= max_width; ++k) {
      if (auto order = search.ordering_within(k)) {
        result.status = ExactStatus::Found;
        result.decomposition = decomposition_from_ordering(g, *order);
        result.expansions = search.expansions();
        return result;
      }
    }
  } catch (const detail::ExactTreewidthSearch::BudgetHit&) {
    result.status = ExactStatus::BudgetExhausted;
    result.expansions = search.expansions();
    return result;
  }
  result.expansions = search.expansions();
  if (upper <= max_width) {
    result.status = ExactStatus::Found;
    result.decomposition = std::move(heuristic);
  } else {
    result.status = ExactStatus::Infeasible;
  }
  return result;
}

enum class NiceKind { Leaf, Introduce, Forget, Join };

struct NiceNode {
  NiceKind kind = NiceKind::Leaf;
  Vertex vertex = 0;  // Introduce/Forget only
  std::vector<Vertex> bag;
  NodeId left = kNoNode;
  NodeId right = kNoNode;  // Join only
};

/// Nodes are stored children-first; the root is the last node and has an
/// empty bag.
struct NiceTreeDecomposition {
  std::vector<NiceNode> nodes;

  NodeId root() const { return static_cast<NodeId>(nodes.size() - 1); }

  int width() const {
    std::size_t best = 0;
    for (const auto& node : nodes) best = std::max(best, node.bag.size());
    return static_cast<int>(best) - 1;
  }

  std::size_t count(NiceKind kind) const {
    return static_cast<std::size_t>(std::count_if(
        nodes.begin(), nodes.end(), [kind](const NiceNode& n) { return n.kind == kind; }));
  }

  TreeDecomposition as_tree_decomposition() const {
    TreeDecomposition td;
    td.bags.reserve(nodes.size());
    td.parent.assign(nodes.size(), kNoNode);
    for (NodeId x = 0; x < nodes.size(); ++x) {
      td.bags.push_back(nodes[x].bag);
      if (nodes[x].left != kNoNode) td.parent[nodes[x].left] = x;
      if (nodes[x].right != kNoNode) td.parent[nodes[x].right] = x;
    }
    td.root = root();
    return td;
  }
};

/// Between a node and each child: forget (ascending id), then introduce
/// (ascending id). Multi-child nodes become left-deep Join chains; the root
/// bag is emptied by a final Forget chain.
inline NiceTreeDecomposition make_nice(const TreeDecomposition& td) {
  NiceTreeDecomposition nice;
  auto add = [&](NiceKind kind, Vertex v, std::vector<Vertex> bag, NodeId left,
                 NodeId right = kNoNode) {
    nice.nodes.push_back({kind, v, std::move(bag), left, right});
    return static_cast<NodeId>(nice.nodes.size() - 1);
  };
  auto forget_to = [&](NodeId from, const std::vector<Vertex>& target) {
    NodeId cur = from;
    std::vector<Vertex> bag = nice.nodes[from].bag;
    std::vector<Vertex> drop;
    std::set_difference(bag.begin(), bag.end(), target.begin(), target.end(),
                        std::back_inserter(drop));
    for (Vertex v : drop) {
      detail::sorted_erase(bag, v);
      cur = add(NiceKind::Forget, v, bag, cur);
    }
    return cur;
  };
  auto introduce_to = [&](NodeId from, const std::vector<Vertex>& target) {
    NodeId cur = from;
    std::vector<Vertex> bag = nice.nodes[from].bag;
    std::vector<Vertex> extra;
    std::set_difference(target.begin(), target.end(), bag.begin(), bag.end(),
                        std::back_inserter(extra));
    for (Vertex v : extra) {
      detail::sorted_insert(bag, v);
      cur = add(NiceKind::Introduce, v, bag, cur);
    }
    return cur;
  };

  auto kids = td.children();
  // Iterative post-order over the input tree.
  std::vector<NodeId> post;
  post.reserve(td.num_nodes());
  std::vector<std::pair<NodeId, std::size_t>> stack{{td.root, 0}};
  while (!stack.empty()) {
    auto& [x, next] = stack.back();
    if (next < kids[x].size()) {
      NodeId c = kids[x][next++];
      stack.push_back({c, 0});
    } else {
      post.push_back(x);
      stack.pop_back();
    }
  }

  std::vector<NodeId> top(td.num_nodes(), kNoNode);
  for (NodeId x : post) {
    const auto& bag = td.bags[x];
    NodeId combined = kNoNode;
    if (kids[x].empty()) {
      combined = introduce_to(add(NiceKind::Leaf, 0, {}, kNoNode), bag);
    }
    for (NodeId c : kids[x]) {
      NodeId branch = introduce_to(forget_to(top[c], bag), bag);
      combined = combined == kNoNode ? branch : add(NiceKind::Join, 0, bag, combined, branch);
    }
    top[x] = combined;
  }
  forget_to(top[td.root], {});
  return nice;
}

/// Nice-form rules on top of validate_decomposition.
inline std::vector<Violation> validate_nice_decomposition(const NiceTreeDecomposition& nice,
                                                          const StaticGraph& g) {
  std::vector<Violation> out;
  if (nice.nodes.empty()) {
    out.push_back({ViolationKind::Structure, "nice decomposition has no nodes", {}});
    return out;
  }
  auto bad = [&](NodeId x, const std::string& what) {
    out.push_back({ViolationKind::NiceForm, "node " + std::to_string(x) + ": " + what, {}});
  };
  std::vector<std::size_t> forgotten(g.num_vertices(), 0);
  for (NodeId x = 0; x < nice.nodes.size(); ++x) {
    const auto& node = nice.nodes[x];
    auto child_ok = [&](NodeId c) { return c != kNoNode && c < x; };
    switch (node.kind) {
      case NiceKind::Leaf:
        if (!node.bag.empty()) bad(x, "leaf bag is not empty");
        if (node.left != kNoNode || node.right != kNoNode) bad(x, "leaf has children");
        break;
      case NiceKind::Introduce: {
        if (!child_ok(node.left) || node.right != kNoNode) {
          bad(x, "introduce needs exactly one earlier child");
          break;
        }
        auto expect = nice.nodes[node.left].bag;
        if (detail::sorted_contains(expect, node.vertex)) bad(x, "introduced vertex already present");
        detail::sorted_insert(expect, node.vertex);
        if (expect != node.bag) bad(x, "introduce bag is not child bag plus vertex");
        break;
      }
      case NiceKind::Forget: {
        if (!child_ok(node.left) || node.right != kNoNode) {
          bad(x, "forget needs exactly one earlier child");
          break;
        }
        auto expect = nice.nodes[node.left].bag;
        if (!detail::sorted_contains(expect, node.vertex)) bad(x, "forgotten vertex not in child");
        detail::sorted_erase(expect, node.vertex);
        if (expect != node.bag) bad(x, "forget bag is not child bag minus vertex");
        if (node.vertex < forgotten.size()) ++forgotten[node.vertex];
        break;
      }
      case NiceKind::Join:
        if (!child_ok(node.left) || !child_ok(node.right)) {
          bad(x, "join needs two earlier children");
          break;
        }
        if (nice.nodes[node.left].bag != node.bag || nice.nodes[node.right].bag != node.bag) {
          bad(x, "join bags differ from children");
        }
        break;
    }
  }
  if (!nice.nodes.back().bag.empty()) bad(nice.root(), "root bag is not empty");
  for (Vertex v = 0; v < forgotten.size(); ++v) {
    if (forgotten[v] != 1) {
      out.push_back({ViolationKind::NiceForm,
                     "vertex " + std::to_string(v) + " forgotten " + std::to_string(forgotten[v]) +
                         " times",
                     {v}});
    }
  }
  auto base = validate_decomposition(nice.as_tree_decomposition(), g);
  out.insert(out.end(), base.begin(), base.end());
  return out;
}

/// Replaces every vertex of a decomposition of the underlying graph with the
/// overlap vertices of its incident temporal edges. The result decomposes the
/// overlap graph with width at most (width(td_u) + 1) * maxdeg(G_U) - 1.
inline TreeDecomposition lift_decomposition(const TreeDecomposition& td_u, const TemporalGraph& g,
                                            const OverlapGraph& og) {
  if (og.graph.num_vertices() != g.num_edges() || og.vertex_of_edge.size() != g.num_edges()) {
    throw Error(ErrorKind::MismatchedInputs, "overlap graph does not belong to the temporal graph");
  }
  auto violations = validate_decomposition(td_u, underlying_graph(g));
  if (!violations.empty()) {
    throw Error(ErrorKind::MismatchedInputs,
                "not a decomposition of the underlying graph: " + violations.front().message);
  }
  TreeDecomposition lifted;
  lifted.parent = td_u.parent;
  lifted.root = td_u.root;
  lifted.bags.reserve(td_u.num_nodes());
  for (const auto& bag : td_u.bags) {
    std::vector<Vertex> out;
    for (Vertex v : bag) {
      for (EdgeId e : g.incident_edges(v)) out.push_back(og.vertex_of_edge[e]);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    lifted.bags.push_back(std::move(out));
  }
  return lifted;
}

/// PACE .td file: "s td <bags> <width+1> <vertices>", "b <id> <v...>" and
/// tree edges "<a> <b>", all 1-based.
inline void write_pace_decomposition(std::ostream& out, const TreeDecomposition& td,
                                     std::size_t n_vertices) {
  out << "s td " << td.num_nodes() << ' ' << td.width() + 1 << ' ' << n_vertices << '\n';
  for (NodeId x = 0; x < td.num_nodes(); ++x) {
    out << "b " << x + 1;
    for (Vertex v : td.bags[x]) out << ' ' << v + 1;
    out << '\n';
  }
  for (NodeId x = 0; x < td.num_nodes(); ++x) {
    if (td.parent[x] != kNoNode) out << td.parent[x] + 1 << ' ' << x + 1 << '\n';
  }
}

struct PaceDecomposition {
  std::size_t n_vertices = 0;
  TreeDecomposition decomposition;  // rooted at bag 1
};

inline PaceDecomposition read_pace_decomposition(std::istream& in) {
  auto lines = detail::content_lines(in);
  // PACE uses 'c' comment lines.
  std::erase_if(lines, [](const detail::SourceLine& l) {
    auto first = l.text.find_first_not_of(" \t");
    return l.text[first] == 'c';
  });
  if (lines.empty()) throw Error(ErrorKind::Syntax, "missing solution line");
  detail::LineCursor header(lines[0]);
  if (header.word() != "s" || header.word() != "td") {
    throw Error(ErrorKind::Syntax, "expected 's td' line", lines[0].number, 1);
  }
  auto n_bags = header.integer("bag count");
  header.integer("max bag size");
  auto n_vertices = header.integer("vertex count");
  header.expect_end();
  if (n_bags <= 0 || n_vertices < 0) {
    throw Error(ErrorKind::Syntax, "invalid counts in solution line", lines[0].number);
  }
  const auto bags = static_cast<std::size_t>(n_bags);
  PaceDecomposition result;
  result.n_vertices = static_cast<std::size_t>(n_vertices);
  auto& td = result.decomposition;
  td.bags.resize(bags);
  std::vector<bool> seen(bags, false);
  std::vector<std::vector<NodeId>> tree(bags);
  std::size_t tree_edges = 0;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    detail::LineCursor cur(lines[i]);
    auto node = [&](std::int64_t id) {
      if (id < 1 || id > n_bags) throw Error(ErrorKind::Syntax, "bag id out of range", lines[i].number);
      return static_cast<NodeId>(id - 1);
    };
    if (cur.peek() == 'b') {
      cur.word();
      NodeId x = node(cur.integer("bag id"));
      if (seen[x]) throw Error(ErrorKind::Syntax, "bag listed twice", lines[i].number);
      seen[x] = true;
      while (!cur.at_end()) {
        auto v = cur.integer("vertex");
        if (v < 1 || v > n_vertices) {
          throw Error(ErrorKind::VertexOutOfRange, "bag vertex out of range", lines[i].number);
        }
        td.bags[x].push_back(static_cast<Vertex>(v - 1));
      }
      std::sort(td.bags[x].begin(), td.bags[x].end());
      td.bags[x].erase(std::unique(td.bags[x].begin(), td.bags[x].end()), td.bags[x].end());
    } else {
      NodeId a = node(cur.integer("bag id"));
      NodeId b = node(cur.integer("bag id"));
      cur.expect_end();
      tree[a].push_back(b);
      tree[b].push_back(a);
      ++tree_edges;
    }
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end()) {
    throw Error(ErrorKind::Syntax, "not every bag is listed");
  }
  if (tree_edges != bags - 1) {
    throw Error(ErrorKind::InvalidDecomposition, "tree must have exactly bags-1 edges");
  }
  td.parent.assign(bags, kNoNode);
  td.root = 0;
  std::vector<bool> visited(bags, false);
  std::deque<NodeId> queue{0};
  visited[0] = true;
  while (!queue.empty()) {
    NodeId x = queue.front();
    queue.pop_front();
    for (NodeId y : tree[x]) {
      if (visited[y]) continue;
      visited[y] = true;
      td.parent[y] = x;
      queue.push_back(y);
    }
  }
  if (std::find(visited.begin(), visited.end(), false) != visited.end()) {
    throw Error(ErrorKind::InvalidDecomposition, "decomposition tree is disconnected");
  }
  return result;
}

}  // namespace tmatch
