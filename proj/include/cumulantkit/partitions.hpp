#ifndef CUMULANTKIT_PARTITIONS_HPP
#define CUMULANTKIT_PARTITIONS_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "cumulantkit/flavor.hpp"
#include "cumulantkit/rational.hpp"

namespace cumulantkit {

// A block is a nonempty strictly increasing list of elements of {1..n}.
using Block = std::vector<int>;

/// Set partition of {1..n}; blocks stored in canonical order
/// (ascending minimum element).
struct SetPartition {
    int n = 0;
    std::vector<Block> blocks;

    std::size_t size() const { return blocks.size(); }

    friend bool operator==(const SetPartition&, const SetPartition&) = default;
    friend auto operator<=>(const SetPartition&, const SetPartition&) = default;
};

/// Set partition together with a total order on its blocks; the sequence
/// lists blocks in increasing order.
struct OrderedPartition {
    int n = 0;
    std::vector<Block> sequence;

    SetPartition underlying() const;

    friend bool operator==(const OrderedPartition&, const OrderedPartition&) = default;
    friend auto operator<=>(const OrderedPartition&, const OrderedPartition&) = default;
};

// Sorts blocks by minimum and validates disjointness/coverage; throws
// std::invalid_argument on malformed input.
SetPartition make_partition(int n, std::vector<Block> blocks);

enum class PartitionKind { All, NonCrossing, Interval };

inline constexpr int kDefaultEnumerationBound = 10;

/// All partitions of {1..n} of the requested kind, in a deterministic
/// order. n must satisfy 1 <= n <= bound.
std::vector<SetPartition> enumerate_partitions(int n, PartitionKind kind,
                                               int bound = kDefaultEnumerationBound);

// Blocks V, W cross when a < b < c < d with a,c in V and b,d in W.
bool is_crossing(const SetPartition& p);
bool is_interval_partition(const SetPartition& p);

// V nests strictly inside W: some i,j in W satisfy i < k < j for all k in V.
bool nests_inside(const Block& v, const Block& w);

/// Full strict nesting order on the blocks of a non-crossing partition,
/// as index pairs (inner, outer) into p.blocks. Crossing input throws.
std::vector<std::pair<std::size_t, std::size_t>> nesting_order(const SetPartition& p);

/// All ordered partitions (V_1,...,V_k) whose underlying partition is
/// non-crossing and in which nested blocks appear later in the sequence.
std::vector<OrderedPartition> enumerate_monotone_partitions(int n,
                                                            int bound = kDefaultEnumerationBound);

// Number of admissible block orders of a non-crossing partition.
long long count_monotone_orderings(const SetPartition& p);

/// All consecutive-run subsets {i,...,i+j} of {1..n}; n(n+1)/2 of them.
std::vector<Block> interval_blocks(int n);

/// Maximal runs of {1..n} \ V in left-to-right order, one per gap of V.
/// Empty V yields the single run {1..n}.
std::vector<Block> complement_decomposition(int n, const Block& v);

/// Leading weight of a universal calculation rule: tensor 1 everywhere,
/// free 1 on non-crossing partitions, boolean 1 on interval partitions,
/// 0 otherwise. Monotone input throws (not a universal product).
Rational highest_coefficient(Flavor flavor, const SetPartition& p);

// {"n":4,"blocks":[[1,4],[2,3]]}; ordered partitions add "order", the
// sequence as indices into the canonical block list.
std::string partition_to_json_text(const SetPartition& p);
std::string ordered_partition_to_json_text(const OrderedPartition& p);
SetPartition partition_from_json_text(const std::string& text);

} // namespace cumulantkit

#endif
