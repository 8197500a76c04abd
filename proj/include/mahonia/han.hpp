#ifndef MAHONIA_HAN_HPP
#define MAHONIA_HAN_HPP

#include <vector>

#include "mahonia/permcore.hpp"

namespace mahonia {

/// tau_i = sigma_i - x (mod n): subtract x, wrapping values below x up by n.
/// Maps permutations of [n] \ {x} onto S_{n-1}.
Permutation c_upper(int x, const GappedPermutation& sigma);

/// Standardization: values above x slide down by one. Order preserving map
/// from permutations of [n] \ {x} onto S_{n-1}.
Permutation c_lower(int x, const GappedPermutation& sigma);

GappedPermutation c_upper_inv(int x, const Permutation& tau);
GappedPermutation c_lower_inv(int x, const Permutation& nu);

/// Han's bijection by its recursive definition,
/// H(sigma) = C_{sigma_n}^{-1}(H(C^{sigma_n}(sigma'))) . sigma_n, bottoming
/// out at length <= 1. Kept as the independent reference for the code path.
Permutation han_h(const Permutation& sigma);

/// The same map computed as lehmer_decode(cyclic_major_encode(sigma)); the
/// production path.
Permutation han_h_via_codes(const Permutation& sigma);

/// Two-sided inverse of H: cyclic_major_decode(lehmer_encode(sigma)).
Permutation han_h_inverse(const Permutation& sigma);

/// One row of the reduction trace: the j-fold reduction, its last value L,
/// and the cyclic major code entry s_{n-j} = (n-j) - L it determines.
struct TraceRow {
  int j;
  Permutation reduced;
  int last;
  int s_entry;

  bool operator==(const TraceRow&) const = default;
};

/// Rows j = 0 ... n-1 of the iteration sigma -> C^{sigma_n}(sigma'), reading
/// the cyclic major code off the last values.
std::vector<TraceRow> c_iteration_trace(const Permutation& sigma);

/// Reassembles the cyclic major code from a trace (entry s_{n-j} per row).
Code code_from_trace(const std::vector<TraceRow>& rows);

}  // namespace mahonia

#endif
