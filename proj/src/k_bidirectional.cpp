#include <algorithm>
#include <cmath>
#include <set>

#include "grksp/ksp.hpp"
#include "ksp_common.hpp"

namespace grksp {

using detail::kNoLabel;
using detail::LabelId;

namespace {

// Length comparisons that mix source-side and target-side sums are made with
// this relative slack so rounding differences never cut a needed path.
double slack(double bound) { return 1e-9 * std::max(1.0, std::abs(bound)); }

struct Side {
  Side(const Graph& g, std::size_t k, const SearchOptions& options, bool from_source)
      : store(g.vertex_count(), from_source), heap(store), pruner(g.vertex_count(), k, options) {}

  detail::LabelStore store;
  detail::LabelHeap heap;
  detail::VertexPruner pruner;
};

class BidirectionalSearch {
  using LabelStore = detail::LabelStore;
  static constexpr double kInfinityLength = std::numeric_limits<double>::infinity();

 public:
  BidirectionalSearch(const Graph& g, std::size_t k, VertexId source, VertexId target,
                      const SearchOptions& options)
      : g_(g),
        k_(k),
        source_(source),
        target_(target),
        options_(options),
        forward_(g, k, options, true),
        backward_(g, k, options, false) {}

  std::vector<Path> run() {
    forward_.heap.push(forward_.store.add(source_, kNoLabel, 0.0, 0.0));
    backward_.heap.push(backward_.store.add(target_, kNoLabel, 0.0, 0.0));
    while (!forward_.heap.empty() || !backward_.heap.empty()) {
      const double top_s = forward_.heap.top_length();
      const double top_t = backward_.heap.top_length();
      // Every path not yet composed is at least top_s + top_t long.
      if (full() && top_s + top_t > kth_length() + slack(kth_length())) break;
      if (top_s <= top_t)
        step(forward_, backward_, true);
      else
        step(backward_, forward_, false);
    }
    return {best_.begin(), best_.end()};
  }

 private:
  bool full() const { return best_.size() == k_; }
  double kth_length() const { return full() ? best_.rbegin()->length : kInfinityLength; }

  // Lower bound on the remaining distance from v to the far endpoint, as
  // known to the opposite search.
  double remaining_bound(const Side& other, VertexId v) const {
    const auto& done = other.pruner.finalized(v);
    return done.empty() ? other.heap.top_length() : other.store[done.front()].length;
  }

  bool beyond_kth(const Side& other, double length, VertexId v) const {
    if (!options_.termination_pruning || !full()) return false;
    const double bound = length + remaining_bound(other, v);
    return bound > kth_length() + slack(kth_length());
  }

  void step(Side& side, Side& other, bool from_source) {
    const LabelId id = side.heap.pop();
    const VertexId v = side.store[id].vertex;
    if (beyond_kth(other, side.store[id].length, v)) return;
    if (side.pruner.redundant_on_pop(side.store, id)) return;
    side.pruner.finalize(v, id);
    compose_all(side, other, id, from_source);
    if (v == (from_source ? target_ : source_)) return;

    for (const Arc& arc : from_source ? g_.out_arcs(v) : g_.in_arcs(v)) {
      if (side.store.chain_contains(id, arc.to)) continue;
      const LabelId next = side.store.add(arc.to, id, side.store[id].length + arc.weight, arc.weight);
      compose_all(side, other, next, from_source);
      if (beyond_kth(other, side.store[next].length, arc.to) ||
          side.pruner.reject_new(side.store, next)) {
        side.store.drop_last();
        continue;
      }
      side.heap.push(next);
    }
  }

  void compose_all(Side& side, Side& other, LabelId id, bool from_source) {
    const VertexId v = side.store[id].vertex;
    for (LabelId other_id : other.pruner.finalized(v)) {
      if (from_source)
        compose(side.store, id, other.store, other_id);
      else
        compose(other.store, other_id, side.store, id);
    }
  }

  // Joins a source-side label and a target-side label ending at the same
  // vertex. The length is accumulated from the source like path_length().
  void compose(LabelStore& head_store, LabelId head, const LabelStore& tail_store, LabelId tail) {
    double length = head_store[head].length;
    for (LabelId t = tail; tail_store[t].parent != kNoLabel; t = tail_store[t].parent)
      length += tail_store[t].arc_weight;
    if (full() && length > kth_length()) return;

    head_store.mark(head);
    for (LabelId t = tail_store[tail].parent; t != kNoLabel; t = tail_store[t].parent)
      if (head_store.marked(tail_store[t].vertex)) return;

    Path path;
    path.length = length;
    head_store.chain(head, scratch_);
    path.vertices.assign(scratch_.rbegin(), scratch_.rend());
    for (LabelId t = tail_store[tail].parent; t != kNoLabel; t = tail_store[t].parent)
      path.vertices.push_back(tail_store[t].vertex);

    if (full() && !PathOrder{}(path, *best_.rbegin())) return;
    if (!best_.insert(std::move(path)).second) return;
    if (best_.size() > k_) best_.erase(std::prev(best_.end()));
  }

  const Graph& g_;
  std::size_t k_;
  VertexId source_;
  VertexId target_;
  SearchOptions options_;
  Side forward_;
  Side backward_;
  std::set<Path, PathOrder> best_;
  std::vector<VertexId> scratch_;
};

}  // namespace

KspResult k_bidirectional(const Graph& g, std::size_t k, VertexId source, VertexId target,
                          const SearchOptions& options) {
  detail::validate_query(g, k, source, target);
  BidirectionalSearch search(g, k, source, target, options);
  return {{source, target, k}, search.run()};
}

}  // namespace grksp
