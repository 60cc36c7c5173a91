#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <utility>
#include <vector>

namespace boxscope {

using Int = mpz_class;
using Rat = mpq_class;

// Prime decomposition with strictly increasing primes.
struct Factorization {
  std::vector<std::pair<Int, unsigned>> factors;

  Int value() const;
  bool contains(const Int& prime) const;
};

// Witness for ord_m(N): m^order = mu*N + 1. Only the residue of mu mod N is
// kept (it determines gcd(mu, N)); the full integer has ~order*log10(m)
// digits and is computed on demand.
struct OrderCertificate {
  Int m;
  Int n;
  Int order;
  Int mu_mod_n;

  Int mu() const;  // (m^order - 1) / n, exact; expensive for large orders
  Int gcd_mu_n() const;
};

// b^e mod n, n >= 1.
Int pow_mod(const Int& base, const Int& exp, const Int& n);

// Inverse of a mod n; requires gcd(a, n) = 1, n >= 1.
Int mod_inverse(const Int& a, const Int& n);

// Miller-Rabin: deterministic witness set below 2^64, >= 40 random rounds
// above.
bool is_prime(const Int& n);

// lcm of a nonempty list, computed both by the product/gcd identity and by
// pairwise folding; the two routes are cross-checked internally.
Int lcm_many(const std::vector<Int>& values);

// Trial division to 1e6, then Pollard rho. n >= 2.
Factorization factorize(const Int& n);

// Smallest e >= 1 with m^e = 1 mod n, by successive multiplication.
// ord_m(1) := 1. Oracle use only; throws ResourceError past the cap.
Int mult_order_bruteforce(const Int& m, const Int& n,
                          std::uint64_t iteration_cap = 10'000'000);

// Structural order: factor n, lift the order prime power by prime power,
// combine with lcm_many.
OrderCertificate mult_order(const Int& m, const Int& n);

// Same, with the factorization of n already known (sweep fast path).
OrderCertificate mult_order(const Int& m, const Int& n,
                            const Factorization& n_factors);

// eta_N(k) = 1 for k = 1, N^{k-1}/gcd(mu, N) for k >= 2.
Int eta(const Int& m, const Int& n, unsigned k);

// Euler phi from a factorization.
Int totient(const Factorization& f);

}  // namespace boxscope
