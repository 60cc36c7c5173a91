#pragma once

#include "boxscope/bs_core.hpp"
#include "boxscope/exact_arith.hpp"

namespace boxscope {

// Z/NZ x|_m Z/LZ with ord_m(N) | L. L = ord_m(N) is the congruence
// quotient G_m/G_m(N); larger L gives the covering quotients.
struct QuotientGroup {
  Int m;
  Int modulus;   // N
  Int torsion;   // L
  Int m_inv;     // m^-1 mod N

  Int size() const { return modulus * torsion; }
};

struct QuotientElem {
  Int x;  // residue mod N
  Int k;  // residue mod L

  bool operator==(const QuotientElem&) const = default;
};

QuotientGroup build_quotient(const Int& m, const Int& n);
QuotientGroup build_covering_quotient(const Int& m, const Int& n,
                                      const Int& torsion);

QuotientElem q_identity();
QuotientElem q_mul(const QuotientGroup& g, const QuotientElem& u,
                   const QuotientElem& v);
QuotientElem q_inv(const QuotientGroup& g, const QuotientElem& u);

// Reduction mod N: (k, num/m^e) -> (num * m_inv^e mod N, k mod L).
QuotientElem reduce(const QuotientGroup& g, const BSElem& elem);

// g in G_m(N), i.e. reduce(g) is the identity.
bool is_congruence_member(const BSElem& elem, const Int& m, const Int& n);

}  // namespace boxscope
