#pragma once

#include "hcert/matgroups/subgroup.hpp"

#include <gmpxx.h>

#include <string>
#include <vector>

namespace hcert::matgroups {

/// |GL_2(Z/p^n Z)| = (p^2 - 1)(p^2 - p) p^(4(n-1)).
mpz_class group_order(u32 p, u32 n);
/// Count of 2x2 matrices mod p^n with unit determinant, by enumeration.
u64 enumerate_group_order(u32 p, u32 n);

/// U^(k) = 1 + p^k M_2(Z/p^n Z) with its structural checks.
struct UkReport {
    u32 p = 0, n = 0, k = 0;
    u64 order = 0;
    mpz_class expected_order;
    /// g U g^-1 = U for every standard generator g of G.
    bool normal = false;
    /// Reduction G -> GL_2(Z/p^k Z): images of generators generate the target.
    bool onto = false;
    /// Kernel of reduction equals U^(k) (checked by enumerating G when small,
    /// by order bookkeeping |G| = |U^(k)| |GL_2(Z/p^k Z)| otherwise).
    bool kernel_matches = false;
    std::string kernel_method;
    bool ok() const { return order == expected_order && normal && onto && kernel_matches; }
};

SubgroupHandle uk_subgroup(u32 p, u32 n, u32 k);
UkReport uk_report(u32 p, u32 n, u32 k);

/// |H| < p^(4 + 8 ord_p exp H) <= p^4 exp(H)^8.
struct BoundHReport {
    u64 order = 0;
    u64 exponent = 0;
    u32 ord_p_exponent = 0;
    mpz_class middle;  // p^(4 + 8 ord_p exp H)
    mpz_class right;   // p^4 exp(H)^8
    bool strict_holds = false;
    bool weak_holds = false;
    /// log_p(middle) - log_p |H|.
    double slack = 0;
    bool ok() const { return strict_holds && weak_holds; }
};

BoundHReport verify_bound_H(const SubgroupHandle& h);

/// Commutators of A = [[1, dx], [0, 1]] and B = [[1, 0], [dx, 1]] over the
/// integers x >= 0 with x < p^(n/3) / d, i.e. (dx)^3 < p^n.
struct CommutatorReport {
    u32 p = 0, n = 0, d = 0;
    std::vector<u64> xs;
    bool closed_form_holds = false;
    u64 distinct = 0;
    /// distinct >= p^(n/3) / d, decided as distinct^3 d^3 >= p^n.
    bool count_bound_holds = false;
    bool ok() const { return closed_form_holds && count_bound_holds; }
};

CommutatorReport commutator_witness(u32 p, u32 n, u32 d);

struct ExponentFacts {
    u32 p = 0, n = 0;
    /// Order of the unit group and a generator when it is cyclic (odd p).
    u64 unit_group_order = 0;
    u32 unit_generator = 0;
    bool unit_group_cyclic = false;
    /// Unit of order 2^(n-2) when p = 2, n >= 2.
    u32 two_power_element = 0;
    /// det(diag(u, 1)) = u for all units u.
    bool det_onto = false;
    /// Required divisor of exp(G) and a matrix of that order.
    u64 required_divisor = 0;
    Mat2Mod witness;
    bool witness_has_order = false;
    bool ok() const;
};

ExponentFacts exponent_facts(u32 p, u32 n);

/// |PSL_2(F_p)| = p(p^2 - 1)/2 and |A_n| = n!/2.
mpz_class psl2_order(u32 p);
mpz_class alternating_order(u32 n);
/// True when the two orders differ; needs p >= 5 prime and n >= 6.
bool psl2_vs_alternating(u32 p, u32 n);

}  // namespace hcert::matgroups
