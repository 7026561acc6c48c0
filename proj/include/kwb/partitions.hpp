#pragma once

// Integer partitions and set partitions.
//
// A Partition is a weakly decreasing vector of positive parts; the empty
// vector is the unique partition of 0.  The canonical order on partitions of
// fixed weight is: shorter first, then reverse-lexicographic (so (6) < (5,1)
// < (4,2) < (3,3) < (4,1,1) < ...).  Across weights, lower weight first.

#include <kwb/rational.hpp>

#include <cstdint>
#include <vector>

namespace kwb {

using Partition = std::vector<unsigned>;

unsigned partition_weight(const Partition& p);

// Canonical order described above; a strict weak ordering on all partitions.
bool partition_less(const Partition& a, const Partition& b);

struct PartitionLess {
    bool operator()(const Partition& a, const Partition& b) const {
        return partition_less(a, b);
    }
};

// All partitions of d with at most max_len parts, in canonical order.
std::vector<Partition> partitions(unsigned d, unsigned max_len);

inline std::vector<Partition> partitions(unsigned d) { return partitions(d, d); }

// |P(d, k)| by the standard count recurrence, independent of the enumerator.
Integer partition_count(unsigned d, unsigned k);

// Set partitions of {1..m}, blocks ordered by least element, enumerated in
// lexicographic order of restricted-growth strings.
using SetPartition = std::vector<std::vector<unsigned>>;

std::vector<SetPartition> set_partitions(unsigned m);

}  // namespace kwb
