#include "boxscope/bs_core.hpp"

#include <cmath>

#include "boxscope/errors.hpp"

namespace boxscope {

Word parse_word(std::string_view text) {
  Word w;
  w.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case 'a': w.push_back(Letter::A); break;
      case 'A': w.push_back(Letter::AInv); break;
      case 't': w.push_back(Letter::T); break;
      case 'T': w.push_back(Letter::TInv); break;
      default:
        throw ValidationError(std::string("parse_word: invalid letter '") +
                              c + "' (alphabet is a, A, t, T)");
    }
  }
  return w;
}

std::string format_word(const Word& w) {
  std::string s;
  s.reserve(w.size());
  for (Letter l : w) {
    switch (l) {
      case Letter::A: s += 'a'; break;
      case Letter::AInv: s += 'A'; break;
      case Letter::T: s += 't'; break;
      case Letter::TInv: s += 'T'; break;
    }
  }
  return s;
}

Letter inverse_letter(Letter l) {
  switch (l) {
    case Letter::A: return Letter::AInv;
    case Letter::AInv: return Letter::A;
    case Letter::T: return Letter::TInv;
    case Letter::TInv: return Letter::T;
  }
  throw InternalError("inverse_letter: bad letter");
}

BsGroup::BsGroup(Int m) : m_(std::move(m)) {
  require(m_ >= 2, "BsGroup: m must be >= 2");
}

Int BsGroup::pow_m(unsigned long e) const {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), m_.get_mpz_t(), e);
  return r;
}

RingElem BsGroup::ring(Int num, long exp) const {
  if (exp < 0) {
    num *= pow_m(static_cast<unsigned long>(-exp));
    exp = 0;
  }
  if (num == 0) return {0, 0};
  auto e = static_cast<unsigned long>(exp);
  while (e > 0 && num % m_ == 0) {
    num /= m_;
    --e;
  }
  return {std::move(num), e};
}

BSElem BsGroup::mul(const BSElem& x, const BSElem& y) const {
  // r = x.r + m^{x.k} * y.r, over a common power of m in the denominator.
  long fy = static_cast<long>(y.r.exp) - x.k;
  long fx = static_cast<long>(x.r.exp);
  long common = std::max(fx, fy);  // >= 0 since fx >= 0
  Int num = x.r.num * pow_m(static_cast<unsigned long>(common - fx)) +
            y.r.num * pow_m(static_cast<unsigned long>(common - fy));
  return {x.k + y.k, ring(std::move(num), common)};
}

BSElem BsGroup::inv(const BSElem& x) const {
  // (k, r)^-1 = (-k, -r / m^k)
  return {-x.k, ring(-x.r.num, static_cast<long>(x.r.exp) + x.k)};
}

BSElem BsGroup::eval(const Word& w) const {
  BSElem acc = identity();
  for (Letter l : w) {
    switch (l) {
      case Letter::A: acc = mul(acc, gen_a()); break;
      case Letter::AInv: acc = mul(acc, inv(gen_a())); break;
      case Letter::T: acc = mul(acc, gen_t()); break;
      case Letter::TInv: acc = mul(acc, inv(gen_t())); break;
    }
  }
  return acc;
}

NormalForm BsGroup::normal_form(const BSElem& g) const {
  // t^-i a^ell t^j = (j - i, ell / m^i); minimal i is the denominator
  // exponent, raised further only to keep j = k + i nonnegative.
  long i = static_cast<long>(g.r.exp);
  if (g.k + i < 0) i = -g.k;
  Int ell = g.r.num * pow_m(static_cast<unsigned long>(
                          i - static_cast<long>(g.r.exp)));
  long j = g.k + i;
  return {static_cast<unsigned long>(i), std::move(ell),
          static_cast<unsigned long>(j)};
}

NormalForm BsGroup::normal_form(const Word& w) const {
  return normal_form(eval(w));
}

BSElem BsGroup::element_of(const NormalForm& nf) const {
  long k = static_cast<long>(nf.j) - static_cast<long>(nf.i);
  return {k, ring(nf.ell, static_cast<long>(nf.i))};
}

NormalForm BsGroup::renormalize(const NormalForm& nf) const {
  return normal_form(element_of(nf));
}

Word BsGroup::synthesize(const NormalForm& input) const {
  NormalForm nf = renormalize(input);
  if (synthesis_length_bound(nf) > 1e8)
    throw ResourceError(
        "synthesize: certified word length bound exceeds 1e8 letters");

  // a^ell via balanced base-m digits: a^ell = a^c (t a^q t^-1) with
  // ell = c + m q, |c| <= m/2, |q| shrinking toward 0.
  std::vector<Int> digits;
  Int rem = nf.ell;
  while (rem != 0) {
    Int q, c;
    mpz_fdiv_qr(q.get_mpz_t(), c.get_mpz_t(), rem.get_mpz_t(),
                m_.get_mpz_t());
    if (2 * c > m_ || (2 * c == m_ && q < 0)) {
      c -= m_;
      q += 1;
    }
    digits.push_back(c);
    rem = q;
  }

  // W(ell) = a^{c_0} t W(ell div m) t^-1, least significant digit first.
  Word w(nf.i, Letter::TInv);
  std::size_t open = 0;
  for (std::size_t idx = 0; idx < digits.size(); ++idx) {
    const Int& c = digits[idx];
    for (Int r = 0; r < abs(c); ++r)
      w.push_back(c > 0 ? Letter::A : Letter::AInv);
    if (idx + 1 < digits.size()) {
      w.push_back(Letter::T);
      ++open;
    }
  }
  for (; open > 0; --open) w.push_back(Letter::TInv);

  for (unsigned long c = 0; c < nf.j; ++c) w.push_back(Letter::T);
  return w;
}

double BsGroup::synthesis_length_bound(const NormalForm& input) const {
  NormalForm nf = renormalize(input);
  double m = m_.get_d();
  double abs_ell = abs(nf.ell).get_d();
  return (m + 2.0) * (static_cast<double>(nf.i) + static_cast<double>(nf.j) +
                      std::log(abs_ell + 1.0) / std::log(m) + 1.0);
}

LengthBounds BsGroup::length_bounds(
    const NormalForm& input,
    std::optional<std::pair<double, double>> lower_constants) const {
  NormalForm nf = renormalize(input);
  double ij = static_cast<double>(nf.i) + static_cast<double>(nf.j);
  if (nf.ell == 0) {
    // Pure t-power: i or j is zero after renormalization, length is exact.
    return {ij, ij};
  }
  double m = m_.get_d();
  double core = ij + std::log(abs(nf.ell).get_d());
  LengthBounds b;
  b.upper = m * core + m;
  if (lower_constants) {
    auto [c1, d1] = *lower_constants;
    b.lower = std::max(0.0, c1 * core - d1);
  }
  return b;
}

}  // namespace boxscope
