#ifndef MAHONIA_FOATA_HPP
#define MAHONIA_FOATA_HPP

#include <span>
#include <vector>

#include "mahonia/permcore.hpp"

namespace mahonia {

/// The x-factorization w = v_1 b_1 ... v_p b_p. When the last letter of w is
/// <= x, every terminal b_i is <= x and every prefix letter is > x; when the
/// last letter is > x the roles flip. Ties (letters equal to x) always land
/// on the <= side. The last letter of w is always a terminal.
struct XFactorization {
  struct Block {
    std::vector<int> prefix;  // v_i, possibly empty
    int terminal;             // b_i
  };

  int pivot;           // x
  bool terminals_low;  // true in the "b_i <= x" branch
  std::vector<Block> blocks;

  /// Concatenates v_1 b_1 ... v_p b_p back into the original word.
  std::vector<int> reassemble() const;
};

XFactorization x_factorize(std::span<const int> w, int x);

/// gamma_x(w) = b_1 v_1 ... b_p v_p; gamma_x of the empty word is empty.
std::vector<int> gamma(int x, std::span<const int> w);

/// Foata's second fundamental transformation, computed as the left-to-right
/// fold u -> gamma_{w_i}(u) . w_i. Satisfies maj(w) = inv(phi(w)), preserves
/// the last letter, and is a bijection on each rearrangement class.
std::vector<int> foata_phi(std::span<const int> w);
Word foata_phi(const Word& w);
Permutation foata_phi(const Permutation& sigma);

/// k-th partial Foata map: identity for k = 1, otherwise applies
/// gamma_{sigma_k} to the prefix sigma_1 ... sigma_{k-1}. k is 1-based.
Permutation partial_foata(int k, const Permutation& sigma);

/// True when every prefix {sigma_1, ..., sigma_i} is an integer interval;
/// equivalent to sigma being fixed by every partial Foata map.
bool is_strong_fixed_point(const Permutation& sigma);

}  // namespace mahonia

#endif
