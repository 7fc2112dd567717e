#pragma once

#include "sgh/signed_graph.hpp"

#include <cstdint>
#include <vector>

namespace sgh {

// Every signed graph on exactly n vertices with at least one edge or
// half-edge, one representative per relabeling-isomorphism class: the
// representative is the lexicographically least (positive edges, negative
// edges, half-edge set) over all vertex permutations.  n is capped at 4;
// the class counts for n = 1, 2, 3 are 1, 11, 119.
std::vector<SignedGraph> exhaustive_corpus(int n);

// Reproducible 64-bit linear congruential generator,
//   x ← 6364136223846793005·x + 1442695040888963407  (mod 2^64),
// with uniform doubles taken from the top 53 bits.  The update is spelled
// out so a corpus can be regenerated from its seed by any implementation.
class Lcg {
 public:
    explicit Lcg(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next_u64();
    double next_unit();  // uniform in [0, 1)

 private:
    std::uint64_t state_;
};

// count independent draws on n vertices.  Pairs {i,j} are visited in
// lexicographic order and one unit draw r decides each: positive if r < 0.3,
// negative if r < 0.6, else absent; then each vertex 1..n gets a half-edge
// when its own draw is < 0.35.  A draw with no edges at all is discarded
// and redrawn, so every graph supports a complex.
std::vector<SignedGraph> random_corpus(int n, int count, std::uint64_t seed);

}  // namespace sgh
