#pragma once

#include "hcert/exact/int_poly.hpp"

#include <gmpxx.h>

namespace hcert::galois {

/// X^n - X - 1.
exact::IntPolynomial osada_polynomial(long n);

struct OsadaDiscCheck {
    long n = 0;
    mpz_class disc;
    /// n^n + (-1)^n (n-1)^(n-1)
    mpz_class expected_abs;
    bool ok = false;
};

/// Computes disc(X^n - X - 1) through the resultant and compares its
/// absolute value with n^n + (-1)^n (n-1)^(n-1).
OsadaDiscCheck osada_disc_check(long n);

struct CoprimalityCheck {
    long n = 0;
    mpz_class delta;
    mpz_class disc;
    /// gcd(delta, disc(X^n - X - 1)).
    mpz_class gcd_delta_disc;
    /// gcd(n, n^n + (n-1)^(n-1)) and gcd(n, n^n - (n-1)^(n-1)).
    mpz_class gcd_plus, gcd_minus;
    bool ok = false;
};

/// For delta | n and n >= 5, checks gcd(delta, disc) = 1 directly and that no
/// prime divides both n and n^n +/- (n-1)^(n-1). Throws
/// std::invalid_argument("hypothesis violated") when delta does not divide n.
CoprimalityCheck coprimality_check(long n, const mpz_class& delta);

}  // namespace hcert::galois
