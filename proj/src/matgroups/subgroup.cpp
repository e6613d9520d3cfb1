#include "hcert/matgroups/subgroup.hpp"

#include <algorithm>
#include <numeric>

namespace hcert::matgroups {

namespace {

// Membership test over all N^4 codes when that is small enough.
constexpr u64 kBitmapLimit = u64{1} << 28;

std::vector<u64> prime_divisors(u64 n)
{
    std::vector<u64> out;
    for (u64 d = 2; d * d <= n; ++d)
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    if (n > 1) out.push_back(n);
    return out;
}

}  // namespace

bool SubgroupHandle::contains(const Mat2Mod& x) const
{
    if (!bitmap_.empty()) return bitmap_[x.code(ring_)];
    return std::binary_search(sorted_codes_.begin(), sorted_codes_.end(), x.code(ring_));
}

bool SubgroupHandle::verify_closed() const
{
    for (const auto& g : elems_)
        for (const auto& s : gens_)
            if (!contains(mul(ring_, g, s))) return false;
    return true;
}

void SubgroupHandle::index()
{
    const u64 m = ring_.modulus();
    if (m * m * m * m <= kBitmapLimit) {
        bitmap_.assign(m * m * m * m, false);
        for (const auto& e : elems_) bitmap_[e.code(ring_)] = true;
        return;
    }
    sorted_codes_.clear();
    sorted_codes_.reserve(elems_.size());
    for (const auto& e : elems_) sorted_codes_.push_back(e.code(ring_));
    std::sort(sorted_codes_.begin(), sorted_codes_.end());
}

void SubgroupHandle::compute_exponent()
{
    // Orders divide |H|. Keep a running exponent e; an element with x^e = 1
    // adds nothing, otherwise its order is found by stripping prime factors
    // of |H| and folded into e.
    const u64 n = elems_.size();
    const auto primes = prime_divisors(n);
    u64 e = 1;
    for (const auto& x : elems_) {
        if (pow(ring_, x, e).is_identity()) continue;
        u64 m = n;
        for (u64 q : primes)
            while (m % q == 0 && pow(ring_, x, m / q).is_identity()) m /= q;
        e = std::lcm(e, m);
    }
    exponent_ = e;
}

SubgroupHandle subgroup_closure(const Zmod& r, const std::vector<Mat2Mod>& gens, std::size_t cap,
                                const SubgroupHandle* ambient)
{
    SubgroupHandle h(r);
    for (const auto& g : gens) {
        if (!g.in_gl2(r)) throw std::invalid_argument("generator is not invertible");
        if (!(g == Mat2Mod{g.a % r.modulus(), g.b % r.modulus(), g.c % r.modulus(), g.d % r.modulus()}))
            throw std::invalid_argument("generator entries not reduced");
    }
    h.gens_ = gens;
    const u64 m = r.modulus();
    const u64 space = m * m * m * m;
    std::vector<bool> bitmap;
    std::vector<u64> seen_sorted;
    const bool dense = space <= kBitmapLimit;
    if (dense) bitmap.assign(space, false);
    std::vector<u64> pending_codes;
    auto insert = [&](const Mat2Mod& x) {
        const u64 c = x.code(r);
        if (dense) {
            if (bitmap[c]) return;
            bitmap[c] = true;
        } else {
            if (std::binary_search(seen_sorted.begin(), seen_sorted.end(), c)) return;
            if (std::find(pending_codes.begin(), pending_codes.end(), c) != pending_codes.end()) return;
            pending_codes.push_back(c);
            if (pending_codes.size() > 256) {
                seen_sorted.insert(seen_sorted.end(), pending_codes.begin(), pending_codes.end());
                std::sort(seen_sorted.begin(), seen_sorted.end());
                pending_codes.clear();
            }
        }
        if (h.elems_.size() >= cap) throw CapExceeded("subgroup exceeds the materialization cap");
        h.elems_.push_back(x);
    };
    insert(Mat2Mod::identity());
    for (std::size_t i = 0; i < h.elems_.size(); ++i)
        for (const auto& g : gens) insert(mul(r, h.elems_[i], g));
    if (dense) h.bitmap_ = std::move(bitmap);
    else h.index();
    if (ambient && ambient->ring_ == r && ambient->order() == h.order() &&
        std::all_of(gens.begin(), gens.end(), [&](const Mat2Mod& g) { return ambient->contains(g); }))
        h.exponent_ = ambient->exponent_;
    else
        h.compute_exponent();
    return h;
}

SubgroupHandle from_elements(const Zmod& r, std::vector<Mat2Mod> elems, std::vector<Mat2Mod> gens)
{
    SubgroupHandle h(r);
    h.elems_ = std::move(elems);
    h.gens_ = std::move(gens);
    h.index();
    h.compute_exponent();
    return h;
}

std::vector<u32> unit_group_generators(const Zmod& r)
{
    const u32 m = r.modulus();
    if (r.p() == 2) {
        if (m == 2) return {1};
        if (m == 4) return {m - 1};
        return {m - 1, 5};
    }
    const u64 phi = static_cast<u64>(m / r.p()) * (r.p() - 1);
    for (u32 g = 2; g < m; ++g)
        if (r.is_unit(g) && r.order(g) == phi) return {g};
    return {1};
}

std::vector<Mat2Mod> standard_generators(const Zmod& r)
{
    std::vector<Mat2Mod> gens{Mat2Mod::of(r, 1, 1, 0, 1), Mat2Mod::of(r, 1, 0, 1, 1)};
    for (u32 u : unit_group_generators(r))
        if (u != 1) gens.push_back(Mat2Mod::of(r, u, 0, 0, 1));
    return gens;
}

Mat2Mod random_gl2(const Zmod& r, std::mt19937_64& rng)
{
    const u64 m = r.modulus();
    for (;;) {
        Mat2Mod x;
        x.a = static_cast<u32>(rng() % m);
        x.b = static_cast<u32>(rng() % m);
        x.c = static_cast<u32>(rng() % m);
        x.d = static_cast<u32>(rng() % m);
        if (x.in_gl2(r)) return x;
    }
}

}  // namespace hcert::matgroups
