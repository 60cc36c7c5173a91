#include "boxscope/exact_arith.hpp"

#include <algorithm>
#include <array>
#include <map>

#include "boxscope/errors.hpp"

namespace boxscope {

namespace {

gmp_randclass& rng() {
  // Fixed seed: reproducible factorizations, identical CLI output per run.
  static gmp_randclass r(gmp_randinit_mt);
  static bool seeded = [] {
    r.seed(0x9e3779b97f4a7c15ULL);
    return true;
  }();
  (void)seeded;
  return r;
}

// One Miller-Rabin round for odd n = d*2^s + 1 with witness a.
bool mr_witness_passes(const Int& n, const Int& a, const Int& d, unsigned s) {
  Int x = pow_mod(a % n, d, n);
  if (x == 1 || x == n - 1) return true;
  for (unsigned i = 1; i < s; ++i) {
    x = x * x % n;
    if (x == n - 1) return true;
  }
  return false;
}

Int pollard_rho(const Int& n) {
  // Brent's cycle variant with batched gcds.
  if (n % 2 == 0) return 2;
  while (true) {
    Int y = rng().get_z_range(n - 3) + 2;
    Int c = rng().get_z_range(n - 1) + 1;
    Int x = y, ys = y, q = 1, g = 1;
    const unsigned long batch = 128;
    unsigned long r = 1;
    while (g == 1) {
      x = y;
      for (unsigned long i = 0; i < r; ++i) y = (y * y + c) % n;
      for (unsigned long k = 0; k < r && g == 1; k += batch) {
        ys = y;
        unsigned long lim = std::min(batch, r - k);
        for (unsigned long i = 0; i < lim; ++i) {
          y = (y * y + c) % n;
          q = q * abs(x - y) % n;
        }
        g = gcd(q, n);
      }
      r *= 2;
    }
    if (g == n) {
      // Backtrack one step at a time.
      do {
        ys = (ys * ys + c) % n;
        g = gcd(abs(x - ys), n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void factor_into(const Int& n, std::map<Int, unsigned>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out[n] += 1;
    return;
  }
  Int d = pollard_rho(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

// Order of m in (Z/pZ)^x: divisor reduction over phi(p) = p - 1.
Int order_mod_prime(const Int& m, const Int& p) {
  if (p == 2) return 1;
  Int d = p - 1;
  for (const auto& [q, e] : factorize(p - 1).factors) {
    while (d % q == 0 && pow_mod(m, d / q, p) == 1) d /= q;
  }
  return d;
}

// Order of m mod p^beta by stepwise lifting: the order mod p^j is the order
// mod p^{j-1}, or p times it. This is Lemma-2.5 reasoning applied one power
// at a time, which stays correct where the one-shot closed form does not
// (p = 2, higher Wieferich cases).
Int order_mod_prime_power(const Int& m, const Int& p, unsigned beta) {
  Int d = order_mod_prime(m % p, p);
  Int pj = p;
  for (unsigned j = 2; j <= beta; ++j) {
    pj *= p;
    if (pow_mod(m, d, pj) != 1) d *= p;
  }
  return d;
}

OrderCertificate certify(const Int& m, const Int& n, const Int& order) {
  Int mu_mod_n = 0;
  if (n > 1) {
    Int r = pow_mod(m, order, n * n);  // = mu*N + 1 mod N^2
    internal_check(r % n == 1, "mult_order: m^order != 1 mod N");
    mu_mod_n = (r - 1) / n;
  } else {
    mu_mod_n = 0;  // mu = m - 1, trivially 0 mod 1
  }
  return OrderCertificate{m, n, order, mu_mod_n};
}

}  // namespace

Int Factorization::value() const {
  Int v = 1;
  for (const auto& [p, e] : factors) {
    Int pe;
    mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), e);
    v *= pe;
  }
  return v;
}

bool Factorization::contains(const Int& prime) const {
  return std::any_of(factors.begin(), factors.end(),
                     [&](const auto& f) { return f.first == prime; });
}

Int OrderCertificate::mu() const {
  internal_check(mpz_fits_ulong_p(order.get_mpz_t()) != 0,
                 "mu(): order too large to exponentiate");
  Int p;
  mpz_pow_ui(p.get_mpz_t(), m.get_mpz_t(), mpz_get_ui(order.get_mpz_t()));
  return (p - 1) / n;
}

Int OrderCertificate::gcd_mu_n() const { return gcd(mu_mod_n, n); }

Int pow_mod(const Int& base, const Int& exp, const Int& n) {
  require(n >= 1, "pow_mod: modulus must be >= 1");
  Int r;
  mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), n.get_mpz_t());
  return r;
}

Int mod_inverse(const Int& a, const Int& n) {
  require(n >= 1, "mod_inverse: modulus must be >= 1");
  if (n == 1) return 0;
  Int r;
  int ok = mpz_invert(r.get_mpz_t(), a.get_mpz_t(), n.get_mpz_t());
  require(ok != 0, "mod_inverse: argument not invertible (gcd(a, n) != 1)");
  return r;
}

bool is_prime(const Int& n) {
  if (n < 2) return false;
  static const std::array<unsigned, 12> small = {2,  3,  5,  7,  11, 13,
                                                 17, 19, 23, 29, 31, 37};
  for (unsigned p : small) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  Int d = n - 1;
  unsigned s = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++s;
  }
  static const Int two_64 = Int(1) << 64;
  if (n < two_64) {
    // This witness set is deterministic for all n < 3.3e24 > 2^64.
    for (unsigned a : small) {
      if (!mr_witness_passes(n, a, d, s)) return false;
    }
    return true;
  }
  for (int round = 0; round < 40; ++round) {
    Int a = rng().get_z_range(n - 3) + 2;
    if (!mr_witness_passes(n, a, d, s)) return false;
  }
  return true;
}

Int lcm_many(const std::vector<Int>& values) {
  require(!values.empty(), "lcm_many: list must be nonempty");
  for (const auto& v : values)
    require(v >= 1, "lcm_many: all values must be >= 1");
  if (values.size() == 1) return values[0];

  // Route 1: product divided by the gcd of all (n-1)-fold subproducts.
  Int total = 1;
  for (const auto& v : values) total *= v;
  Int g = 0;
  for (std::size_t omit = 0; omit < values.size(); ++omit) {
    g = gcd(g, total / values[omit]);
  }
  Int by_formula = total / g;

  // Route 2: pairwise folding.
  Int by_fold = values[0];
  for (std::size_t i = 1; i < values.size(); ++i)
    by_fold = lcm(by_fold, values[i]);

  internal_check(by_formula == by_fold,
                 "lcm_many: product/gcd route disagrees with pairwise fold");
  return by_fold;
}

Factorization factorize(const Int& n) {
  require(n >= 2, "factorize: argument must be >= 2");
  std::map<Int, unsigned> acc;
  Int rest = n;
  while (rest % 2 == 0) {
    acc[2] += 1;
    rest /= 2;
  }
  for (Int p = 3; p <= 1'000'000 && p * p <= rest; p += 2) {
    while (rest % p == 0) {
      acc[p] += 1;
      rest /= p;
    }
  }
  if (rest > 1) {
    if (rest <= 1'000'000'000'000L) {
      // Below 1e12 any remaining cofactor is prime (no factor <= 1e6).
      acc[rest] += 1;
    } else {
      factor_into(rest, acc);
    }
  }
  Factorization f;
  f.factors.assign(acc.begin(), acc.end());
  return f;
}

Int mult_order_bruteforce(const Int& m, const Int& n,
                          std::uint64_t iteration_cap) {
  require(n >= 1, "mult_order_bruteforce: modulus must be >= 1");
  require(gcd(m, n) == 1, "mult_order_bruteforce: gcd(m, N) must be 1");
  if (n == 1) return 1;
  Int x = m % n;
  Int e = 1;
  while (x != 1) {
    x = x * (m % n) % n;
    ++e;
    if (e > iteration_cap)
      throw ResourceError(
          "mult_order_bruteforce: iteration cap exceeded (raise the cap or "
          "use mult_order)");
  }
  return e;
}

OrderCertificate mult_order(const Int& m, const Int& n) {
  require(n >= 1, "mult_order: modulus must be >= 1");
  require(gcd(m, n) == 1, "mult_order: gcd(m, N) must be 1");
  if (n == 1) return certify(m, n, 1);
  return mult_order(m, n, factorize(n));
}

OrderCertificate mult_order(const Int& m, const Int& n,
                            const Factorization& n_factors) {
  require(n >= 1, "mult_order: modulus must be >= 1");
  require(gcd(m, n) == 1, "mult_order: gcd(m, N) must be 1");
  if (n == 1) return certify(m, n, 1);
  internal_check(n_factors.value() == n,
                 "mult_order: factorization does not match modulus");
  std::vector<Int> orders;
  orders.reserve(n_factors.factors.size());
  for (const auto& [p, beta] : n_factors.factors)
    orders.push_back(order_mod_prime_power(m, p, beta));
  return certify(m, n, lcm_many(orders));
}

Int eta(const Int& m, const Int& n, unsigned k) {
  require(k >= 1, "eta: k must be >= 1");
  require(n >= 1 && gcd(m, n) == 1, "eta: gcd(m, N) must be 1");
  if (k == 1) return 1;
  OrderCertificate cert = mult_order(m, n);
  Int nk1;
  mpz_pow_ui(nk1.get_mpz_t(), n.get_mpz_t(), k - 1);
  return nk1 / cert.gcd_mu_n();
}

Int totient(const Factorization& f) {
  Int t = 1;
  for (const auto& [p, e] : f.factors) {
    Int pe;
    mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), e - 1);
    t *= pe * (p - 1);
  }
  return t;
}

}  // namespace boxscope
