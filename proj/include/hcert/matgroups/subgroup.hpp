#pragma once

#include "hcert/matgroups/mat2.hpp"

#include <cstddef>
#include <random>
#include <stdexcept>
#include <vector>

namespace hcert::matgroups {

class CapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kDefaultCap = 1000000;

/// Explicitly materialized subgroup of GL_2(Z/p^n Z).
class SubgroupHandle {
public:
    const Zmod& ring() const { return ring_; }
    const std::vector<Mat2Mod>& generators() const { return gens_; }
    const std::vector<Mat2Mod>& elements() const { return elems_; }
    u64 order() const { return elems_.size(); }
    /// lcm of element orders.
    u64 exponent() const { return exponent_; }
    bool contains(const Mat2Mod& x) const;
    /// Every product of an element with a generator stays inside.
    bool verify_closed() const;

    friend SubgroupHandle subgroup_closure(const Zmod& r, const std::vector<Mat2Mod>& gens, std::size_t cap,
                                           const SubgroupHandle* ambient);
    friend SubgroupHandle from_elements(const Zmod& r, std::vector<Mat2Mod> elems, std::vector<Mat2Mod> gens);

private:
    explicit SubgroupHandle(const Zmod& r) : ring_(r) {}
    void index();
    void compute_exponent();

    Zmod ring_;
    std::vector<Mat2Mod> gens_;
    std::vector<Mat2Mod> elems_;
    std::vector<u64> sorted_codes_;
    std::vector<bool> bitmap_;
    u64 exponent_ = 1;
};

/// Breadth-first closure of the generators under right multiplication.
/// Throws CapExceeded as soon as more than `cap` elements appear, and
/// std::invalid_argument for non-invertible generators. When `ambient`
/// contains the generators and the closure reaches its order, the two groups
/// coincide and the ambient exponent is reused.
SubgroupHandle subgroup_closure(const Zmod& r, const std::vector<Mat2Mod>& gens, std::size_t cap = kDefaultCap,
                                const SubgroupHandle* ambient = nullptr);

/// Handle over a known element list (must be a subgroup; verified closed
/// under the given generators by the caller through verify_closed()).
SubgroupHandle from_elements(const Zmod& r, std::vector<Mat2Mod> elems, std::vector<Mat2Mod> gens);

/// Generators of GL_2(Z/p^n Z): the two elementary unipotents and diag(u, 1)
/// for u running over generators of the unit group.
std::vector<Mat2Mod> standard_generators(const Zmod& r);

/// Uniform element of GL_2(Z/p^n Z) by rejection sampling; entries are
/// drawn as rng() mod p^n so the stream is reproducible across platforms.
Mat2Mod random_gl2(const Zmod& r, std::mt19937_64& rng);

/// Generators of the unit group of Z/p^n Z.
std::vector<u32> unit_group_generators(const Zmod& r);

}  // namespace hcert::matgroups
