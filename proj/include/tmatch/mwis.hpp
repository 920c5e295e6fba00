#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <vector>

#include "tmatch/error.hpp"
#include "tmatch/static_graph.hpp"
#include "tmatch/tree_decomposition.hpp"

namespace tmatch {

struct MwisResult {
  double weight = 0.0;
  std::vector<Vertex> solution;  // sorted
};

struct MwisStats {
  std::size_t max_table_entries = 0;
  std::size_t total_table_entries = 0;
  std::size_t max_bag_size = 0;
};

namespace detail {

/// Solution order used for ties: compares sorted vertex sequences
/// lexicographically; smaller wins.
inline bool lexicographically_smaller(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

/// Drops the trailing run of zero-weight vertices. Among optimal sets that
/// share every positive-weight choice, the shortest prefix is the
/// lexicographically smallest.
inline void strip_zero_weight_suffix(const StaticGraph& g, std::vector<Vertex>& solution) {
  while (!solution.empty() && g.weight(solution.back()) == 0.0) solution.pop_back();
}

inline std::uint64_t insert_zero_bit(std::uint64_t mask, unsigned pos) {
  std::uint64_t low = mask & ((std::uint64_t{1} << pos) - 1);
  return ((mask & ~low) << 1) | low;
}

inline std::uint64_t remove_bit(std::uint64_t mask, unsigned pos) {
  std::uint64_t low = mask & ((std::uint64_t{1} << pos) - 1);
  return ((mask >> (pos + 1)) << pos) | low;
}

/// DP table of one nice node. Key: subset of the bag (bit i = i-th smallest
/// bag vertex), only independent subsets present. Each entry carries the
/// weight of chosen vertices already forgotten below the node and the set of
/// those vertices as a bitset over the whole graph.
class DpTable {
 public:
  explicit DpTable(std::size_t words = 0) : words_(words) {}

  std::size_t size() const { return masks_.size(); }
  std::uint64_t mask(std::size_t i) const { return masks_[i]; }
  double forgotten(std::size_t i) const { return forgotten_[i]; }
  const std::uint64_t* set(std::size_t i) const { return sets_.data() + i * words_; }
  std::size_t words() const { return words_; }

  std::uint64_t* push(std::uint64_t mask, double forgotten, const std::uint64_t* set) {
    masks_.push_back(mask);
    forgotten_.push_back(forgotten);
    std::size_t at = sets_.size();
    sets_.resize(at + words_, 0);
    if (set != nullptr) std::copy(set, set + words_, sets_.begin() + static_cast<std::ptrdiff_t>(at));
    return sets_.data() + at;
  }

  /// Better = heavier, then the set containing the smallest differing vertex.
  static bool better(double wa, const std::uint64_t* a, double wb, const std::uint64_t* b,
                     std::size_t words) {
    if (wa != wb) return wa > wb;
    for (std::size_t k = 0; k < words; ++k) {
      std::uint64_t diff = a[k] ^ b[k];
      if (diff != 0) return (a[k] & (diff & (~diff + 1))) != 0;
    }
    return false;
  }

  /// Sorts by mask and keeps the best entry per mask.
  DpTable normalized() const {
    std::vector<std::size_t> order(size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      if (masks_[a] != masks_[b]) return masks_[a] < masks_[b];
      return better(forgotten_[a], set(a), forgotten_[b], set(b), words_);
    });
    DpTable out(words_);
    for (std::size_t i : order) {
      if (out.size() > 0 && out.masks_.back() == masks_[i]) continue;
      out.push(masks_[i], forgotten_[i], set(i));
    }
    return out;
  }

 private:
  std::size_t words_;
  std::vector<std::uint64_t> masks_;
  std::vector<double> forgotten_;
  std::vector<std::uint64_t> sets_;
};

}  // namespace detail

/// Maximum weight independent set by dynamic programming over a nice tree
/// decomposition. Ties resolve to the lexicographically smallest sorted set.
inline MwisResult mwis_treedp(const StaticGraph& g, const NiceTreeDecomposition& nice,
                              MwisStats* stats = nullptr) {
  auto violations = validate_nice_decomposition(nice, g);
  if (!violations.empty()) {
    throw Error(ErrorKind::InvalidDecomposition, violations.front().message);
  }
  if (nice.width() > 62) throw Error(ErrorKind::SizeLimit, "bag size above 63 is not supported");

  const std::size_t words = (g.num_vertices() + 63) / 64;
  MwisStats local;
  std::vector<detail::DpTable> tables(nice.nodes.size());

  for (NodeId x = 0; x < nice.nodes.size(); ++x) {
    const auto& node = nice.nodes[x];
    detail::DpTable table(words);
    switch (node.kind) {
      case NiceKind::Leaf:
        table.push(0, 0.0, nullptr);
        break;
      case NiceKind::Introduce: {
        const auto& child = tables[node.left];
        const auto& bag = node.bag;
        auto pos = static_cast<unsigned>(std::lower_bound(bag.begin(), bag.end(), node.vertex) -
                                         bag.begin());
        std::uint64_t conflicts = 0;
        for (unsigned q = 0; q < bag.size(); ++q) {
          if (g.has_edge(bag[q], node.vertex)) conflicts |= std::uint64_t{1} << q;
        }
        for (std::size_t i = 0; i < child.size(); ++i) {
          std::uint64_t m = detail::insert_zero_bit(child.mask(i), pos);
          table.push(m, child.forgotten(i), child.set(i));
          if ((m & conflicts) == 0) {
            table.push(m | (std::uint64_t{1} << pos), child.forgotten(i), child.set(i));
          }
        }
        table = table.normalized();
        break;
      }
      case NiceKind::Forget: {
        const auto& child = tables[node.left];
        const auto& child_bag = nice.nodes[node.left].bag;
        auto pos = static_cast<unsigned>(
            std::lower_bound(child_bag.begin(), child_bag.end(), node.vertex) - child_bag.begin());
        const std::uint64_t bit = std::uint64_t{1} << pos;
        for (std::size_t i = 0; i < child.size(); ++i) {
          std::uint64_t m = child.mask(i);
          if (m & bit) {
            auto* set = table.push(detail::remove_bit(m, pos),
                                   child.forgotten(i) + g.weight(node.vertex), child.set(i));
            set[node.vertex / 64] |= std::uint64_t{1} << (node.vertex % 64);
          } else {
            table.push(detail::remove_bit(m, pos), child.forgotten(i), child.set(i));
          }
        }
        table = table.normalized();
        break;
      }
      case NiceKind::Join: {
        const auto& a = tables[node.left];
        const auto& b = tables[node.right];
        std::size_t i = 0, j = 0;
        while (i < a.size() && j < b.size()) {
          if (a.mask(i) < b.mask(j)) {
            ++i;
          } else if (b.mask(j) < a.mask(i)) {
            ++j;
          } else {
            auto* set = table.push(a.mask(i), a.forgotten(i) + b.forgotten(j), a.set(i));
            const auto* other = b.set(j);
            for (std::size_t k = 0; k < words; ++k) set[k] |= other[k];
            ++i;
            ++j;
          }
        }
        break;
      }
    }
    // Children are consumed exactly once.
    if (node.left != kNoNode) tables[node.left] = detail::DpTable();
    if (node.right != kNoNode) tables[node.right] = detail::DpTable();
    local.max_table_entries = std::max(local.max_table_entries, table.size());
    local.total_table_entries += table.size();
    local.max_bag_size = std::max(local.max_bag_size, node.bag.size());
    tables[x] = std::move(table);
  }

  const auto& root = tables[nice.root()];
  MwisResult result;
  const auto* set = root.set(0);
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (set[v / 64] & (std::uint64_t{1} << (v % 64))) result.solution.push_back(v);
  }
  detail::strip_zero_weight_suffix(g, result.solution);
  result.weight = g.total_weight(result.solution);
  if (stats != nullptr) *stats = local;
  return result;
}

inline constexpr std::size_t kMwisBruteforceLimit = 24;

/// Exhaustive search over independent sets; same tie-break as mwis_treedp.
inline MwisResult mwis_bruteforce(const StaticGraph& g) {
  const std::size_t n = g.num_vertices();
  if (n > kMwisBruteforceLimit) {
    throw Error(ErrorKind::SizeLimit, "brute-force MWIS is limited to " +
                                          std::to_string(kMwisBruteforceLimit) + " vertices");
  }
  MwisResult best;
  std::vector<Vertex> current;
  auto visit = [&](auto&& self, Vertex v) -> void {
    if (v == n) {
      double w = g.total_weight(current);
      if (w > best.weight ||
          (w == best.weight && detail::lexicographically_smaller(current, best.solution))) {
        best.weight = w;
        best.solution = current;
      }
      return;
    }
    bool free = std::none_of(current.begin(), current.end(),
                             [&](Vertex u) { return g.has_edge(u, v); });
    if (free) {
      current.push_back(v);
      self(self, v + 1);
      current.pop_back();
    }
    self(self, v + 1);
  };
  visit(visit, 0);
  return best;
}

}  // namespace tmatch
