#pragma once

#include <gmpxx.h>

#include <chrono>
#include <optional>
#include <stdexcept>
#include <vector>

#include "fibtype/presentation.hpp"
#include "fibtype/word.hpp"

namespace fibtype {

struct EnumerationLimits {
  long long max_cosets = 1'000'000;
  std::optional<std::chrono::milliseconds> max_time;
};

enum class Strategy { HLT, Felsch };

enum class EnumerationStatus { Complete, Overflowed };

/// Completed coset action. Column encoding matches expand_to_columns:
/// generator g acts by column 2g, its inverse by column 2g+1.
struct CosetTable {
  EnumerationStatus status = EnumerationStatus::Overflowed;
  int generator_count = 0;
  long long peak_cosets = 0;  // largest number of simultaneously live cosets
  std::vector<std::vector<int>> rows;

  int index() const { return static_cast<int>(rows.size()); }

  int apply(int coset, int column) const {
    return rows[static_cast<std::size_t>(coset)][static_cast<std::size_t>(column)];
  }

  int trace(int coset, const Word& w) const {
    for (int col : expand_to_columns(w)) coset = apply(coset, col);
    return coset;
  }
};

namespace detail {

/// Todd-Coxeter enumerator. Deterministic: cosets are defined in scan order,
/// coincidences always keep the smaller coset number.
class Enumerator {
 public:
  Enumerator(const GeneralPresentation& p, const std::vector<Word>& subgroup_gens,
             const EnumerationLimits& limits, Strategy strategy)
      : ncols_(2 * p.generator_count),
        gens_(p.generator_count),
        limits_(limits),
        strategy_(strategy) {
    if (p.generator_count < 0) throw std::invalid_argument("negative generator count");
    if (limits.max_cosets < 1) throw std::invalid_argument("max_cosets must be >= 1");
    for (const Word& r : p.relators) {
      std::vector<int> cols = expand_to_columns(cyclically_reduced(r));
      if (!cols.empty()) relators_.push_back(std::move(cols));
    }
    for (const Word& s : subgroup_gens) {
      std::vector<int> cols = expand_to_columns(freely_reduced(s));
      if (!cols.empty()) subgens_.push_back(std::move(cols));
    }
    if (strategy_ == Strategy::Felsch) build_rotations();
  }

  CosetTable run() {
    start_ = std::chrono::steady_clock::now();
    CosetTable out;
    out.generator_count = gens_;
    new_coset_row();
    bool complete = false;
    try {
      complete = strategy_ == Strategy::HLT ? run_hlt() : run_felsch();
    } catch (const Timeout&) {
      complete = false;
    }
    out.peak_cosets = peak_;
    if (!complete) return out;  // status stays Overflowed
    compact();
    out.status = EnumerationStatus::Complete;
    out.rows = std::move(tab_);
    return out;
  }

 private:
  struct TableFull {};
  struct Timeout {};

  static int inv(int c) { return c ^ 1; }

  bool dead(int a) const { return p_[static_cast<std::size_t>(a)] != a; }

  int rep(int a) {
    int r = a;
    while (p_[static_cast<std::size_t>(r)] != r) r = p_[static_cast<std::size_t>(r)];
    while (p_[static_cast<std::size_t>(a)] != a) {
      int nxt = p_[static_cast<std::size_t>(a)];
      p_[static_cast<std::size_t>(a)] = r;
      a = nxt;
    }
    return r;
  }

  int& at(int a, int c) {
    return tab_[static_cast<std::size_t>(a)][static_cast<std::size_t>(c)];
  }

  int new_coset_row() {
    if (static_cast<long long>(tab_.size()) >= limits_.max_cosets) throw TableFull{};
    tab_.emplace_back(static_cast<std::size_t>(ncols_), -1);
    p_.push_back(static_cast<int>(p_.size()));
    ++live_;
    peak_ = std::max(peak_, live_);
    return static_cast<int>(tab_.size()) - 1;
  }

  void define(int a, int c) {
    a = rep(a);
    if (at(a, c) >= 0) return;
    int b = new_coset_row();
    at(a, c) = b;
    at(b, inv(c)) = a;
    push_deduction(a, c);
  }

  void push_deduction(int a, int c) {
    if (strategy_ == Strategy::Felsch) deductions_.push_back({a, c});
  }

  void merge(int a, int b) {
    a = rep(a);
    b = rep(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    p_[static_cast<std::size_t>(b)] = a;
    --live_;
    queue_.push_back(b);
  }

  void coincidence(int a, int b) {
    merge(a, b);
    while (!queue_.empty()) {
      int y = queue_.back();
      queue_.pop_back();
      for (int c = 0; c < ncols_; ++c) {
        int d = at(y, c);
        if (d < 0) continue;
        at(d, inv(c)) = -1;  // the mirror entry; may itself be dead
        int mu = rep(y), nu = rep(d);
        if (at(mu, c) >= 0) {
          merge(nu, at(mu, c));
        } else if (at(nu, inv(c)) >= 0) {
          merge(mu, at(nu, inv(c)));
        } else {
          at(mu, c) = nu;
          at(nu, inv(c)) = mu;
          push_deduction(mu, c);
        }
      }
    }
  }

  /// Applies tab_[f][c] = b (and the mirror entry), resolving clashes as
  /// coincidences.
  void set_edge(int f, int c, int b) {
    f = rep(f);
    b = rep(b);
    if (at(f, c) >= 0) {
      coincidence(at(f, c), b);
      return;
    }
    if (at(b, inv(c)) >= 0) {
      coincidence(at(b, inv(c)), f);
      return;
    }
    at(f, c) = b;
    at(b, inv(c)) = f;
    push_deduction(f, c);
    push_deduction(b, inv(c));
  }

  /// Scans the cycle `cols` at coset a. With fill, missing entries are
  /// created so the scan always closes (possibly via a coincidence).
  void scan(int a, const std::vector<int>& cols, bool fill) {
    int f = rep(a);
    int b = f;
    std::size_t i = 0, j = cols.size();
    while (true) {
      while (i < j) {
        int nxt = at(f, cols[i]);
        if (nxt < 0) break;
        f = rep(nxt);
        ++i;
      }
      if (i == j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j > i) {
        int prv = at(b, inv(cols[j - 1]));
        if (prv < 0) break;
        b = rep(prv);
        --j;
      }
      if (j == i) {
        if (f != b) coincidence(f, b);
        return;
      }
      if (j == i + 1) {
        set_edge(f, cols[i], b);
        return;
      }
      if (!fill) return;
      define(f, cols[i]);
      f = rep(f);
      b = rep(b);
    }
  }

  void check_time() {
    if (!limits_.max_time) return;
    if (std::chrono::steady_clock::now() - start_ > *limits_.max_time) throw Timeout{};
  }

  bool run_hlt() {
    while (true) {
      try {
        for (const std::vector<int>& s : subgens_) scan(0, s, true);
        deductions_.clear();
        for (int alpha = 0; alpha < static_cast<int>(tab_.size()); ++alpha) {
          if (dead(alpha)) continue;
          check_time();
          for (const std::vector<int>& r : relators_) {
            scan(alpha, r, true);
            if (dead(alpha)) break;
          }
          if (dead(alpha)) continue;
          for (int c = 0; c < ncols_; ++c)
            if (at(alpha, c) < 0) define(alpha, c);
        }
        return true;
      } catch (const TableFull&) {
        lookahead();
        if (live_ >= limits_.max_cosets) return false;
        compact();  // frees dead rows; the pass restarts from coset 0
      }
    }
  }

  /// Fill-free pass over every live coset; only deductions and coincidences,
  /// so the table can shrink but not grow.
  void lookahead() {
    for (int alpha = 0; alpha < static_cast<int>(tab_.size()); ++alpha) {
      if (dead(alpha)) continue;
      check_time();
      for (const std::vector<int>& r : relators_) {
        scan(alpha, r, false);
        if (dead(alpha)) break;
      }
    }
  }

  bool run_felsch() {
    while (true) {
      try {
        for (const std::vector<int>& s : subgens_) scan(0, s, true);
        process_deductions();
        while (true) {
          check_time();
          int a = -1, c = -1;
          for (int alpha = 0; alpha < static_cast<int>(tab_.size()) && a < 0; ++alpha) {
            if (dead(alpha)) continue;
            for (int col = 0; col < ncols_; ++col)
              if (at(alpha, col) < 0) {
                a = alpha;
                c = col;
                break;
              }
          }
          if (a < 0) return true;
          define(a, c);
          process_deductions();
        }
      } catch (const TableFull&) {
        if (live_ >= limits_.max_cosets) return false;
        compact();
      }
    }
  }

  void process_deductions() {
    while (!deductions_.empty()) {
      auto [a, c] = deductions_.back();
      deductions_.pop_back();
      a = rep(a);
      for (const std::vector<int>& r : rotations_[static_cast<std::size_t>(c)]) {
        scan(a, r, false);
        if (dead(a)) break;
      }
    }
  }

  /// Rotations of each relator cycle and its inverse, grouped by first column.
  void build_rotations() {
    rotations_.assign(static_cast<std::size_t>(ncols_), {});
    for (const std::vector<int>& r : relators_) {
      std::vector<int> ri_mut(r.rbegin(), r.rend());
      for (int& c : ri_mut) c = inv(c);
      const std::vector<int>& ri = ri_mut;
      for (const std::vector<int>* w : {&r, &ri})
        for (std::size_t s = 0; s < w->size(); ++s) {
          std::vector<int> rot;
          rot.reserve(w->size());
          for (std::size_t i = 0; i < w->size(); ++i)
            rot.push_back((*w)[(s + i) % w->size()]);
          rotations_[static_cast<std::size_t>(rot.front())].push_back(std::move(rot));
        }
    }
  }

  /// Renumbers live cosets to 0..live-1 and drops dead rows.
  void compact() {
    std::vector<int> remap(tab_.size(), -1);
    int next = 0;
    for (int i = 0; i < static_cast<int>(tab_.size()); ++i)
      if (!dead(i)) remap[static_cast<std::size_t>(i)] = next++;
    std::vector<std::vector<int>> fresh;
    fresh.reserve(static_cast<std::size_t>(next));
    for (int i = 0; i < static_cast<int>(tab_.size()); ++i) {
      if (dead(i)) continue;
      std::vector<int> row = std::move(tab_[static_cast<std::size_t>(i)]);
      for (int& e : row)
        if (e >= 0) e = remap[static_cast<std::size_t>(rep(e))];
      fresh.push_back(std::move(row));
    }
    tab_ = std::move(fresh);
    p_.resize(tab_.size());
    for (std::size_t i = 0; i < p_.size(); ++i) p_[i] = static_cast<int>(i);
    for (auto& [a, c] : deductions_) a = remap[static_cast<std::size_t>(a)];
  }

  int ncols_;
  int gens_;
  EnumerationLimits limits_;
  Strategy strategy_;
  std::vector<std::vector<int>> relators_;
  std::vector<std::vector<int>> subgens_;
  std::vector<std::vector<std::vector<int>>> rotations_;

  std::vector<std::vector<int>> tab_;
  std::vector<int> p_;  // union-find over coset numbers
  std::vector<int> queue_;
  std::vector<std::pair<int, int>> deductions_;
  long long live_ = 0;
  long long peak_ = 0;
  std::chrono::steady_clock::time_point start_;
};

}  // namespace detail

/// Enumerates cosets of the subgroup generated by subgroup_gens.
/// An empty generator list enumerates the whole group.
inline CosetTable enumerate(const GeneralPresentation& p,
                            const std::vector<Word>& subgroup_gens = {},
                            const EnumerationLimits& limits = {},
                            Strategy strategy = Strategy::HLT) {
  return detail::Enumerator(p, subgroup_gens, limits, strategy).run();
}

inline CosetTable enumerate(const CyclicPresentation& p,
                            const std::vector<Word>& subgroup_gens = {},
                            const EnumerationLimits& limits = {},
                            Strategy strategy = Strategy::HLT) {
  return enumerate(to_general(p), subgroup_gens, limits, strategy);
}

/// Adds the given words as relators, presenting the quotient by their
/// normal closure.
inline GeneralPresentation quotient_by_normal_closure(const GeneralPresentation& p,
                                                      const std::vector<Word>& words) {
  GeneralPresentation q = p;
  q.relators.insert(q.relators.end(), words.begin(), words.end());
  return q;
}

/// Order of the permutation induced by w on the cosets (the element order
/// when the table is the regular representation).
inline mpz_class order_of_element(const CosetTable& t, const Word& w) {
  if (t.status != EnumerationStatus::Complete)
    throw std::invalid_argument("order_of_element needs a complete table");
  std::vector<int> cols = expand_to_columns(w);
  mpz_class order = 1;
  std::vector<bool> seen(static_cast<std::size_t>(t.index()), false);
  for (int s = 0; s < t.index(); ++s) {
    if (seen[static_cast<std::size_t>(s)]) continue;
    long long len = 0;
    int c = s;
    do {
      seen[static_cast<std::size_t>(c)] = true;
      for (int col : cols) c = t.apply(c, col);
      ++len;
    } while (c != s);
    mpz_class l = static_cast<long>(len);
    mpz_lcm(order.get_mpz_t(), order.get_mpz_t(), l.get_mpz_t());
  }
  return order;
}

}  // namespace fibtype
