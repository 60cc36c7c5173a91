#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "boxscope/exact_arith.hpp"

namespace boxscope {

// num / m^exp, canonical: exp = 0 or m does not divide num; zero is (0, 0).
struct RingElem {
  Int num = 0;
  unsigned long exp = 0;

  bool operator==(const RingElem&) const = default;
  bool is_zero() const { return num == 0; }
};

// (t-exponent k, translation r): the matrix [[m^k, r], [0, 1]].
struct BSElem {
  long k = 0;
  RingElem r;

  bool operator==(const BSElem&) const = default;
};

enum class Letter : unsigned char { A, AInv, T, TInv };

using Word = std::vector<Letter>;

// t^-i a^ell t^j; unique when m | ell implies i = 0 or j = 0.
struct NormalForm {
  unsigned long i = 0;
  Int ell = 0;
  unsigned long j = 0;

  bool operator==(const NormalForm&) const = default;
};

struct LengthBounds {
  std::optional<double> lower;
  double upper = 0;
};

// Compact word grammar: one letter per symbol, capitals are inverses.
Word parse_word(std::string_view text);
std::string format_word(const Word& w);
Letter inverse_letter(Letter l);

// Arithmetic of BS(1,m) through the standard embedding, for one fixed m.
class BsGroup {
 public:
  explicit BsGroup(Int m);

  const Int& base() const { return m_; }

  RingElem ring(Int num, long exp = 0) const;  // canonicalizes num/m^exp
  BSElem identity() const { return {}; }
  BSElem gen_a() const { return {0, {1, 0}}; }
  BSElem gen_t() const { return {1, {0, 0}}; }

  BSElem mul(const BSElem& x, const BSElem& y) const;
  BSElem inv(const BSElem& x) const;
  BSElem eval(const Word& w) const;

  NormalForm normal_form(const BSElem& g) const;
  NormalForm normal_form(const Word& w) const;

  // The element t^-i a^ell t^j (accepts non-canonical triples).
  BSElem element_of(const NormalForm& nf) const;
  NormalForm renormalize(const NormalForm& nf) const;

  // A word evaluating to nf's element, of length at most
  // (m+2) * (i + j + log_m(|ell|+1) + 1)  -- the certified bound.
  Word synthesize(const NormalForm& nf) const;
  double synthesis_length_bound(const NormalForm& nf) const;

  // Burillo-Elder envelope with C2 = D2 = m and natural log; the lower
  // bound needs caller-supplied (C1, D1), which the source estimate leaves
  // unspecified. A pure t-power has exact length i + j.
  LengthBounds length_bounds(
      const NormalForm& nf,
      std::optional<std::pair<double, double>> lower_constants = {}) const;

 private:
  Int m_;
  Int pow_m(unsigned long e) const;
};

}  // namespace boxscope
