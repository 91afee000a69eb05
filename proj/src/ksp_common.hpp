#pragma once

// Shared machinery for the label-setting k-shortest-path searchers.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <vector>

#include "grksp/ksp.hpp"

namespace grksp::detail {

void validate_query(const Graph& g, std::size_t k, VertexId source, VertexId target);

using LabelId = std::uint32_t;
inline constexpr LabelId kNoLabel = std::numeric_limits<LabelId>::max();

// A partial path stored as a vertex plus a link to the label it extends.
struct Label {
  VertexId vertex;
  LabelId parent;
  double length;
  double arc_weight;  // weight of the arc joining parent and vertex
};

// Append-only pool of labels forming a prefix tree rooted at one endpoint.
// Chains are walked from a label toward the root.
//
// Result order between two labels ending at the same vertex: shorter first,
// then lexicographic on the vertex sequence. For labels grown from the
// source the sequence is read root -> vertex; for labels grown from the
// target it is read vertex -> root, which is the order those vertices take
// inside a source -> target path.
class LabelStore {
 public:
  LabelStore(std::size_t vertex_count, bool read_from_root)
      : stamp_(vertex_count, 0), read_from_root_(read_from_root) {}

  LabelId add(VertexId v, LabelId parent, double length, double arc_weight) {
    labels_.push_back({v, parent, length, arc_weight});
    return static_cast<LabelId>(labels_.size() - 1);
  }
  void drop_last() { labels_.pop_back(); }
  const Label& operator[](LabelId id) const { return labels_[id]; }
  std::size_t size() const { return labels_.size(); }

  bool chain_contains(LabelId id, VertexId v) const {
    for (; id != kNoLabel; id = labels_[id].parent)
      if (labels_[id].vertex == v) return true;
    return false;
  }

  // Marks every vertex on the chain of id; chain_marked() then tests others
  // against that set.
  void mark(LabelId id) {
    if (++epoch_ == 0) {
      std::fill(stamp_.begin(), stamp_.end(), 0);
      epoch_ = 1;
    }
    for (; id != kNoLabel; id = labels_[id].parent) stamp_[labels_[id].vertex] = epoch_;
  }
  bool marked(VertexId v) const { return stamp_[v] == epoch_; }
  bool chain_marked(LabelId id) const {
    for (; id != kNoLabel; id = labels_[id].parent)
      if (stamp_[labels_[id].vertex] != epoch_) return false;
    return true;
  }

  // Vertex sequence in chain order (label vertex first).
  void chain(LabelId id, std::vector<VertexId>& out) const {
    out.clear();
    for (; id != kNoLabel; id = labels_[id].parent) out.push_back(labels_[id].vertex);
  }

  bool precedes(LabelId a, LabelId b) const {
    if (labels_[a].length != labels_[b].length) return labels_[a].length < labels_[b].length;
    if (a == b) return false;
    chain(a, scratch_a_);
    chain(b, scratch_b_);
    if (read_from_root_)
      return std::lexicographical_compare(scratch_a_.rbegin(), scratch_a_.rend(), scratch_b_.rbegin(),
                                          scratch_b_.rend());
    return scratch_a_ < scratch_b_;
  }

 private:
  std::vector<Label> labels_;
  std::vector<std::uint32_t> stamp_;
  std::uint32_t epoch_ = 0;
  bool read_from_root_;
  mutable std::vector<VertexId> scratch_a_;
  mutable std::vector<VertexId> scratch_b_;
};

// Min-heap of labels in result order.
class LabelHeap {
 public:
  explicit LabelHeap(const LabelStore& store) : store_(&store) {}

  bool empty() const { return heap_.empty(); }
  LabelId top() const { return heap_.front(); }
  double top_length() const {
    return heap_.empty() ? std::numeric_limits<double>::infinity() : (*store_)[heap_.front()].length;
  }
  void push(LabelId id) {
    heap_.push_back(id);
    std::push_heap(heap_.begin(), heap_.end(), Later{store_});
  }
  LabelId pop() {
    std::pop_heap(heap_.begin(), heap_.end(), Later{store_});
    const LabelId id = heap_.back();
    heap_.pop_back();
    return id;
  }

 private:
  struct Later {
    const LabelStore* store;
    bool operator()(LabelId a, LabelId b) const { return store->precedes(b, a); }
  };
  const LabelStore* store_;
  std::vector<LabelId> heap_;
};

// Per-vertex bookkeeping for the count and vertex-queue prunings of one
// search direction.
class VertexPruner {
 public:
  VertexPruner(std::size_t vertex_count, std::size_t k, const SearchOptions& options)
      : k_(k),
        options_(options),
        finalized_(vertex_count),
        best_(options.vertex_queue_pruning ? vertex_count : 0) {}

  const std::vector<LabelId>& finalized(VertexId v) const { return finalized_[v]; }
  void finalize(VertexId v, LabelId id) { finalized_[v].push_back(id); }

  // Count pruning applied to a dequeued label: with dominance checking, k
  // finalized paths to the same vertex that precede it and use a subset of
  // its vertices make it redundant.
  bool redundant_on_pop(LabelStore& store, LabelId id) const {
    if (!options_.count_pruning || !options_.dominance_checked) return false;
    const VertexId v = store[id].vertex;
    store.mark(id);
    return count_dominators(store, id, finalized_[v]) >= k_;
  }

  // Count and vertex-queue prunings for a freshly generated label. Records
  // the label in the vertex queue when it survives.
  bool reject_new(LabelStore& store, LabelId id) {
    const VertexId w = store[id].vertex;
    if (options_.dominance_checked && (options_.count_pruning || options_.vertex_queue_pruning))
      store.mark(id);
    if (options_.count_pruning) {
      if (options_.dominance_checked) {
        if (count_dominators(store, id, finalized_[w]) >= k_) return true;
      } else if (finalized_[w].size() > k_) {
        return true;
      }
    }
    if (options_.vertex_queue_pruning) {
      auto& best = best_[w];
      if (best.size() == k_) {
        const bool beaten = options_.dominance_checked
                                ? count_dominators(store, id, best) >= k_
                                : store[id].length > store[best.back()].length;
        if (beaten) return true;
      }
      const auto pos = std::upper_bound(best.begin(), best.end(), id,
                                        [&](LabelId a, LabelId b) { return store.precedes(a, b); });
      best.insert(pos, id);
      if (best.size() > k_) best.pop_back();
    }
    return false;
  }

 private:
  // Requires store.mark(id) beforehand.
  std::size_t count_dominators(const LabelStore& store, LabelId id,
                               const std::vector<LabelId>& others) const {
    std::size_t count = 0;
    for (LabelId other : others) {
      if (store.precedes(other, id) && store.chain_marked(other) && ++count >= k_) break;
    }
    return count;
  }

  std::size_t k_;
  SearchOptions options_;
  std::vector<std::vector<LabelId>> finalized_;
  std::vector<std::vector<LabelId>> best_;  // ascending result order, at most k
};

}  // namespace grksp::detail
