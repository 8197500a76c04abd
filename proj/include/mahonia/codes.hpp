#ifndef MAHONIA_CODES_HPP
#define MAHONIA_CODES_HPP

#include "mahonia/permcore.hpp"

namespace mahonia {

/// Lehmer (inversion) code I: entry i counts earlier values greater than
/// sigma_i. Bijection S_n -> E_n; entries sum to inv(sigma).
Code lehmer_encode(const Permutation& sigma);
Permutation lehmer_decode(const Code& code);

/// Cyclic major code M: entry i counts earlier values in the cyclic interval
/// ]]sigma_i, sigma_{i+1}]]. Bijection S_n -> E_n; entries sum to maj(sigma).
Code cyclic_major_encode(const Permutation& sigma);

/// Decodes by the deletion procedure: sigma_n = n - s_n, then each sigma_k is
/// the (s_k+1)-th survivor of the cyclic descending sequence started at
/// sigma_{k+1} after removing already-placed values.
Permutation cyclic_major_decode(const Code& code);

/// s_n = t_n and s_i = t_i - t_{i+1} (mod i) for i < n.
Code t_to_s(const Code& t);

/// Inverse transform: t_n = s_n and t_i is the representative of
/// s_i + t_{i+1} (mod i) inside [0, i-1].
Code s_to_t(const Code& s);

/// b_i = i - 1 - a_i. An involution on E_n commuting with both codes:
/// I(c sigma) = c(I(sigma)) and M(c sigma) = c(M(sigma)).
Code code_complement(const Code& a);

}  // namespace mahonia

#endif
