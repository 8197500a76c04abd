#ifndef MAHONIA_STATS_HPP
#define MAHONIA_STATS_HPP

#include <limits>
#include <span>
#include <vector>

#include "mahonia/permcore.hpp"

namespace mahonia {

/// Upper endpoint marker for the unbounded cyclic interval ]]x, oo]].
inline constexpr int kCyclicInfinity = std::numeric_limits<int>::max();

/// Half-open cyclic interval ]]lo, hi]] on the alphabet [k]:
///   lo <= hi        -> { z : lo < z <= hi }
///   lo >  hi        -> { z : z > lo or z <= hi }
///   hi = infinity   -> { z : z > lo }
struct CyclicInterval {
  int lo;
  int hi;
  int k;

  bool contains(int z) const {
    if (hi == kCyclicInfinity) return z > lo;
    if (lo <= hi) return lo < z && z <= hi;
    return z > lo || z <= hi;
  }

  /// The interval materialized as an increasing subset of [k].
  std::vector<int> members() const;
};

/// 1-based positions i with w_i > w_{i+1}, in increasing order.
std::vector<int> descent_set(std::span<const int> w);

int des(std::span<const int> w);
long long maj(std::span<const int> w);
long long inv(std::span<const int> w);

/// Sum over letter pairs a < b of maj of the subword of a's and b's. Pairs
/// range over the declared alphabet [k]; empty or constant subwords add 0.
long long z_statistic(const Word& w);
long long z_statistic(const Permutation& sigma);

/// t_i = #{ j < i : w_j in ]]w_i, oo]] }. Entries always satisfy the E_n
/// bound; their sum is inv(w). Without an explicit alphabet size the largest
/// letter present is used; membership itself never depends on k.
std::vector<int> t_vector(std::span<const int> w);
std::vector<int> t_vector(std::span<const int> w, int alphabet_size);

/// s_i = #{ j < i : w_j in ]]w_i, w_{i+1}]] } with w_{n+1} = infinity. For
/// permutations the entries sum to maj.
std::vector<int> s_vector(std::span<const int> w);
std::vector<int> s_vector(std::span<const int> w, int alphabet_size);

inline std::vector<int> descent_set(const Word& w) { return descent_set(std::span(w.letters())); }
inline std::vector<int> descent_set(const Permutation& p) { return descent_set(std::span(p.values())); }
inline int des(const Word& w) { return des(std::span(w.letters())); }
inline int des(const Permutation& p) { return des(std::span(p.values())); }
inline long long maj(const Word& w) { return maj(std::span(w.letters())); }
inline long long maj(const Permutation& p) { return maj(std::span(p.values())); }
inline long long inv(const Word& w) { return inv(std::span(w.letters())); }
inline long long inv(const Permutation& p) { return inv(std::span(p.values())); }
inline std::vector<int> t_vector(const Word& w) {
  return t_vector(std::span(w.letters()), w.alphabet_size());
}
inline std::vector<int> t_vector(const Permutation& p) { return t_vector(std::span(p.values())); }
inline std::vector<int> s_vector(const Word& w) {
  return s_vector(std::span(w.letters()), w.alphabet_size());
}
inline std::vector<int> s_vector(const Permutation& p) { return s_vector(std::span(p.values())); }

}  // namespace mahonia

#endif
