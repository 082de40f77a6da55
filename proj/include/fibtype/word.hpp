#pragma once

#include <cctype>
#include <cstdlib>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace fibtype {

/// One syllable of a word: generator index with a nonzero exponent.
struct Letter {
  int gen = 0;
  int exp = 0;

  friend bool operator==(const Letter&, const Letter&) = default;
};

/// A word in the free group on generators x_0, x_1, ...
/// Stored as syllables; normalization merges adjacent syllables on the
/// same generator (which also performs free reduction).
struct Word {
  std::vector<Letter> letters;

  friend bool operator==(const Word&, const Word&) = default;

  int length() const {
    int n = 0;
    for (const Letter& l : letters) n += std::abs(l.exp);
    return n;
  }

  int max_gen() const {
    int g = -1;
    for (const Letter& l : letters) g = std::max(g, l.gen);
    return g;
  }
};

inline Word normalized(const Word& w) {
  Word out;
  for (const Letter& l : w.letters) {
    if (l.exp == 0) continue;
    if (!out.letters.empty() && out.letters.back().gen == l.gen) {
      out.letters.back().exp += l.exp;
      if (out.letters.back().exp == 0) out.letters.pop_back();
    } else {
      out.letters.push_back(l);
    }
  }
  return out;
}

inline Word freely_reduced(const Word& w) { return normalized(w); }

inline Word cyclically_reduced(const Word& w) {
  Word r = normalized(w);
  while (r.letters.size() >= 2 && r.letters.front().gen == r.letters.back().gen) {
    Letter a = r.letters.front();
    Letter b = r.letters.back();
    int s = a.exp + b.exp;
    r.letters.erase(r.letters.begin());
    r.letters.pop_back();
    if (s != 0) r.letters.insert(r.letters.begin(), Letter{a.gen, s});
    r = normalized(r);
  }
  return r;
}

inline Word inverse(const Word& w) {
  Word out;
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
    out.letters.push_back(Letter{it->gen, -it->exp});
  return out;
}

inline Word concat(const Word& a, const Word& b) {
  Word out = a;
  out.letters.insert(out.letters.end(), b.letters.begin(), b.letters.end());
  return normalized(out);
}

/// Index-shift substitution x_i -> x_{i+amount mod modulus}; exponents unchanged.
inline Word shifted(const Word& w, int amount, int modulus) {
  Word out = w;
  for (Letter& l : out.letters) {
    l.gen = ((l.gen + amount) % modulus + modulus) % modulus;
  }
  return out;
}

/// Substitution x_i -> x_{map[i]}.
inline Word remapped(const Word& w, const std::vector<int>& map) {
  Word out = w;
  for (Letter& l : out.letters) l.gen = map.at(static_cast<std::size_t>(l.gen));
  return out;
}

/// Substitution x_i -> x_{map[i]}^{-1} composed with nothing else
/// (exponents are negated).
inline Word remapped_inverted(const Word& w, const std::vector<int>& map) {
  Word out = w;
  for (Letter& l : out.letters) {
    l.gen = map.at(static_cast<std::size_t>(l.gen));
    l.exp = -l.exp;
  }
  return out;
}

/// Expansion to single letters, encoded as column indices:
/// x_g -> 2g, x_g^{-1} -> 2g+1.
inline std::vector<int> expand_to_columns(const Word& w) {
  std::vector<int> out;
  for (const Letter& l : w.letters) {
    int col = l.exp > 0 ? 2 * l.gen : 2 * l.gen + 1;
    for (int i = 0; i < std::abs(l.exp); ++i) out.push_back(col);
  }
  return out;
}

/// Text format: `x0 x3 X2` (uppercase = inverse). An optional `^e` suffix
/// gives an exponent, e.g. `x1^2`. Indices must be < gen_count.
inline Word parse_word(const std::string& text, int gen_count) {
  Word w;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    if (tok.size() < 2 || (tok[0] != 'x' && tok[0] != 'X'))
      throw std::invalid_argument("bad word token: " + tok);
    bool inv = tok[0] == 'X';
    std::size_t pos = 1;
    if (!std::isdigit(static_cast<unsigned char>(tok[pos])))
      throw std::invalid_argument("bad word token: " + tok);
    int gen = 0;
    while (pos < tok.size() && std::isdigit(static_cast<unsigned char>(tok[pos]))) {
      gen = gen * 10 + (tok[pos] - '0');
      ++pos;
    }
    int exp = 1;
    if (pos < tok.size()) {
      if (tok[pos] != '^') throw std::invalid_argument("bad word token: " + tok);
      exp = std::stoi(tok.substr(pos + 1));
      if (exp == 0) throw std::invalid_argument("zero exponent in token: " + tok);
    }
    if (gen >= gen_count)
      throw std::invalid_argument("generator index out of range: " + tok);
    if (inv) exp = -exp;
    w.letters.push_back(Letter{gen, exp});
  }
  return normalized(w);
}

inline std::string format_word(const Word& w) {
  std::ostringstream out;
  bool first = true;
  for (const Letter& l : w.letters) {
    for (int i = 0; i < std::abs(l.exp); ++i) {
      if (!first) out << ' ';
      out << (l.exp > 0 ? 'x' : 'X') << l.gen;
      first = false;
    }
  }
  return out.str();
}

/// Equality of relators up to cyclic permutation, compared as cyclic words
/// (both sides cyclically reduced first).
inline bool equal_up_to_rotation(const Word& a, const Word& b) {
  Word an = cyclically_reduced(a), bn = cyclically_reduced(b);
  // compare on fully expanded letter sequences so syllable splits don't matter
  std::vector<int> ea = expand_to_columns(an), eb = expand_to_columns(bn);
  if (ea.size() != eb.size()) return false;
  if (ea.empty()) return true;
  for (std::size_t r = 0; r < ea.size(); ++r) {
    bool ok = true;
    for (std::size_t i = 0; i < ea.size() && ok; ++i)
      ok = ea[(i + r) % ea.size()] == eb[i];
    if (ok) return true;
  }
  return false;
}

inline bool equal_up_to_rotation_or_inversion(const Word& a, const Word& b) {
  return equal_up_to_rotation(a, b) || equal_up_to_rotation(inverse(a), b);
}

}  // namespace fibtype
