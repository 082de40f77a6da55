#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

#include "fibtype/word.hpp"

namespace fibtype {

/// Parameters (n, m, k) of the presentation with defining word x_0 x_m x_k^{-1}.
/// m and k are stored reduced mod n.
struct FibTypeParams {
  int n = 1;
  int m = 0;
  int k = 0;

  friend bool operator==(const FibTypeParams&, const FibTypeParams&) = default;
  friend auto operator<=>(const FibTypeParams&, const FibTypeParams&) = default;

  static FibTypeParams make(long long n, long long m, long long k) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    FibTypeParams p;
    p.n = static_cast<int>(n);
    p.m = static_cast<int>(((m % n) + n) % n);
    p.k = static_cast<int>(((k % n) + n) % n);
    return p;
  }
};

/// n generators x_0..x_{n-1}; relators are the shifts of w.
struct CyclicPresentation {
  int n = 1;
  Word w;

  Word relator(int i) const { return shifted(w, i, n); }

  std::vector<Word> relators() const {
    std::vector<Word> out;
    out.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) out.push_back(relator(i));
    return out;
  }
};

/// Arbitrary finite presentation (output of rewriting, input to enumeration).
struct GeneralPresentation {
  int generator_count = 0;
  std::vector<Word> relators;
};

inline GeneralPresentation to_general(const CyclicPresentation& p) {
  return GeneralPresentation{p.n, p.relators()};
}

inline CyclicPresentation make_fib_presentation(const FibTypeParams& p) {
  Word w;
  w.letters.push_back(Letter{0, 1});
  w.letters.push_back(Letter{p.m, 1});
  w.letters.push_back(Letter{p.k, -1});
  // keep the unreduced length-3 word; reduction is applied by consumers only
  return CyclicPresentation{p.n, w};
}

struct GcdReduction {
  int d = 1;
  FibTypeParams q;
};

inline GcdReduction reduce_gcd(const FibTypeParams& p) {
  int d = std::gcd(p.n, std::gcd(p.m, p.k));
  if (d == 0) d = p.n;  // cannot happen: n >= 1
  return GcdReduction{d, FibTypeParams::make(p.n / d, p.m / d, p.k / d)};
}

namespace detail {

inline int mod_inverse(int a, int n) {
  int t = 0, newt = 1, r = n, newr = ((a % n) + n) % n;
  while (newr != 0) {
    int q = r / newr;
    t -= q * newt;
    std::swap(t, newt);
    r -= q * newr;
    std::swap(r, newr);
  }
  if (r != 1) throw std::invalid_argument("not invertible");
  return ((t % n) + n) % n;
}

/// Multiset equality of relator lists up to cyclic permutation and inversion.
inline bool relator_sets_match(std::vector<Word> a, const std::vector<Word>& b) {
  if (a.size() != b.size()) return false;
  for (const Word& rb : b) {
    auto it = std::find_if(a.begin(), a.end(), [&](const Word& ra) {
      return equal_up_to_rotation_or_inversion(ra, rb);
    });
    if (it == a.end()) return false;
    a.erase(it);
  }
  return true;
}

}  // namespace detail

struct HForm {
  int n = 1;
  int m_prime = 0;

  friend bool operator==(const HForm&, const HForm&) = default;
};

/// Maps G_n(m,k) with gcd(n,m,k)=1 to an isomorphic H(n,m') = G_n(m',1)
/// when gcd(n,k)=1 or gcd(n,m-k)=1; empty otherwise. The reindexing that
/// carries relator set to relator set is checked mechanically.
inline std::optional<HForm> to_h_form(const FibTypeParams& p) {
  if (reduce_gcd(p).d != 1)
    throw std::invalid_argument("to_h_form requires gcd(n,m,k)=1");
  const int n = p.n;

  auto solve_direct = [&](const FibTypeParams& q) -> HForm {
    // y_j = x_{jk mod n} turns relator x_{jk} x_{jk+m} x_{jk+k}^{-1}
    // into y_j y_{j+m k^{-1}} y_{j+1}^{-1}
    int kinv = detail::mod_inverse(q.k, n);
    int m_prime = static_cast<int>((static_cast<long long>(q.m) * kinv) % n);
    // verify: relator j of H(n,m') maps under x index j -> j*k onto a
    // relator of G_n(m,k), as unreduced words up to rotation/inversion
    std::vector<int> sigma(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j)
      sigma[static_cast<std::size_t>(j)] =
          static_cast<int>((static_cast<long long>(j) * q.k) % n);
    CyclicPresentation h = make_fib_presentation(FibTypeParams::make(n, m_prime, 1));
    std::vector<Word> mapped;
    for (const Word& r : h.relators()) mapped.push_back(remapped(r, sigma));
    if (!detail::relator_sets_match(mapped, make_fib_presentation(q).relators()))
      throw std::logic_error("h-form reindexing failed verification");
    return HForm{n, m_prime};
  };

  if (std::gcd(n, p.k) == 1) return solve_direct(p);

  if (std::gcd(n, p.m - p.k) == 1) {
    // parameter flip (m,k) -> (m, m-k), induced by x_i -> x_{-i}^{-1}
    FibTypeParams q = FibTypeParams::make(n, p.m, p.m - p.k);
    std::vector<int> neg(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) neg[static_cast<std::size_t>(i)] = ((-i) % n + n) % n;
    std::vector<Word> mapped;
    for (const Word& r : make_fib_presentation(p).relators())
      mapped.push_back(remapped_inverted(r, neg));
    if (!detail::relator_sets_match(mapped, make_fib_presentation(q).relators()))
      throw std::logic_error("parameter flip failed verification");
    return solve_direct(q);
  }

  return std::nullopt;
}

/// The parameter flip G_n(m,k) ~ G_n(m,m-k) used in normalization.
inline FibTypeParams flipped(const FibTypeParams& p) {
  return FibTypeParams::make(p.n, p.m, p.m - p.k);
}

/// Eliminates odd-indexed generators of F(2,2m) or S(2,2m), producing the
/// m-generator presentation on the even-indexed ones.
inline CyclicPresentation halve_even_presentation(const CyclicPresentation& p) {
  if (p.n < 4 || p.n % 2 != 0)
    throw std::invalid_argument("halve_even_presentation needs even n >= 4");
  int m = p.n / 2;
  auto same_word = [&](const FibTypeParams& q) {
    return normalized(p.w) == normalized(make_fib_presentation(q).w);
  };
  Word w;
  if (same_word(FibTypeParams::make(p.n, 2, 1))) {
    // Sieradski S(2,2m) -> G_m(y_0 y_1^2 y_2 y_1^{-1})
    w.letters = {Letter{0, 1}, Letter{1 % m, 2}, Letter{2 % m, 1}, Letter{1 % m, -1}};
  } else if (same_word(FibTypeParams::make(p.n, 1, 2))) {
    // Fibonacci F(2,2m) -> G_m(y_0^{-1} y_1^2 y_2^{-1} y_1)
    w.letters = {Letter{0, -1}, Letter{1 % m, 2}, Letter{2 % m, -1}, Letter{1 % m, 1}};
  } else {
    throw std::invalid_argument(
        "halve_even_presentation supports only the Fibonacci and Sieradski shapes");
  }
  return CyclicPresentation{m, normalized(w)};
}

/// Defining word of the alternative Fibonacci presentation of F(2,2m).
inline CyclicPresentation alt_fibonacci_presentation(int m) {
  Word w;
  w.letters = {Letter{0, -1}, Letter{1 % m, 2}, Letter{2 % m, -1}, Letter{1 % m, 1}};
  return CyclicPresentation{m, normalized(w)};
}

/// Defining word of the alternative Sieradski presentation of S(2,2m).
inline CyclicPresentation alt_sieradski_presentation(int m) {
  Word w;
  w.letters = {Letter{0, 1}, Letter{1 % m, 2}, Letter{2 % m, 1}, Letter{1 % m, -1}};
  return CyclicPresentation{m, normalized(w)};
}

}  // namespace fibtype
