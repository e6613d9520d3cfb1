#pragma once

#include <cstdint>
#include <vector>

namespace hcert::matgroups {

using Permutation = std::vector<std::uint8_t>;

/// Closure of a set of permutations of {0..m-1}.
std::vector<Permutation> permutation_closure(const std::vector<Permutation>& gens, std::size_t points);

/// PSL_2(F_p) acting on the p + 1 points of the projective line, generated
/// by the images of [[1,1],[0,1]] and [[0,-1],[1,0]].
std::vector<Permutation> psl2_generators(std::uint32_t p);

struct SolvabilityReport {
    std::uint32_t p = 0;
    /// Orders along G >= G' >= G'' >= ... until it stabilizes.
    std::vector<std::size_t> derived_orders;
    bool solvable = false;
};

/// Derived series of PSL_2(F_p) by commutator closure. Accepts p in {2, 3}
/// and p = 5, the non-solvable control; other p throw std::invalid_argument.
SolvabilityReport solvability_check(std::uint32_t p);

}  // namespace hcert::matgroups
