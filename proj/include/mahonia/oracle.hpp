#ifndef MAHONIA_ORACLE_HPP
#define MAHONIA_ORACLE_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "mahonia/permcore.hpp"

namespace mahonia {

/// Default desk-scale caps for the exhaustive enumerators.
inline constexpr int kDefaultMaxN = 9;
inline constexpr std::uint64_t kDefaultMaxClassSize = 100000;

std::uint64_t factorial(int n);
std::uint64_t multinomial(const MultisetSpec& spec);

/// Visits S_n in lexicographic order. Throws when n exceeds the cap.
void for_each_permutation(int n, const std::function<void(const Permutation&)>& fn,
                          int max_n = kDefaultMaxN);

/// Visits the rearrangement class R(X) in lexicographic order. Throws when
/// the class size exceeds the cap.
void for_each_word(const MultisetSpec& spec, const std::function<void(const Word&)>& fn,
                   std::uint64_t max_class_size = kDefaultMaxClassSize);

/// Visits E_n in lexicographic order (n! codes).
void for_each_code(int n, const std::function<void(const Code&)>& fn,
                   int max_n = kDefaultMaxN);

/// Visits every multiset spec with positive multiplicities, total length in
/// [1, max_total] and alphabet size in [1, max_alphabet], smaller totals
/// first.
void for_each_spec(int max_total, int max_alphabet,
                   const std::function<void(const MultisetSpec&)>& fn);

/// Coefficients of [n]_q! = prod_{i=1..n} (1 + q + ... + q^{i-1}), computed
/// by plain polynomial multiplication. Independent of every statistic above;
/// serves as the distribution oracle.
std::vector<std::uint64_t> q_factorial_coefficients(int n);

enum class Stat { maj, inv, des, z };

std::string stat_name(Stat st);
long long stat_value(Stat st, const Word& w);
long long stat_value(Stat st, const Permutation& sigma);

/// Coefficient c_v = number of population elements with statistic value v.
struct DistributionTable {
  std::string stat_name;
  std::vector<std::uint64_t> coefficients;
  std::uint64_t population = 0;

  bool operator==(const DistributionTable&) const = default;
};

DistributionTable distribution_over_sn(Stat st, int n, int max_n = kDefaultMaxN);
DistributionTable distribution_over_class(Stat st, const MultisetSpec& spec,
                                          std::uint64_t max_class_size = kDefaultMaxClassSize);

/// Outcome of one exhaustive check. A failure always carries the first
/// counterexample in enumeration order, with enough detail to re-check it.
struct VerificationReport {
  std::string check_name;
  std::uint64_t population = 0;
  bool pass = true;
  std::string counterexample;
};

/// H(sigma) computed by the recursion agrees with lehmer_decode of the
/// cyclic major code on all of S_n.
VerificationReport verify_h_equals_im(int n, int max_n = kDefaultMaxN);

/// maj(sigma) = inv(H(sigma)), H preserves the last value, and H is a
/// bijection on S_n.
VerificationReport verify_h_properties(int n, int max_n = kDefaultMaxN);

/// H(c sigma) = c H(sigma) together with the code identities
/// M(c sigma) = c M(sigma) and I(c sigma) = c I(sigma).
VerificationReport verify_complement_commutation(int n, int max_n = kDefaultMaxN);

/// s_i(sigma) = i - L(C^{n-i}(sigma)): the trace-derived code equals M.
VerificationReport verify_trace_identity(int n, int max_n = kDefaultMaxN);

/// Both codes round-trip on S_n and both decoders invert onto E_n.
VerificationReport verify_code_roundtrips(int n, int max_n = kDefaultMaxN);

/// t_to_s(I(sigma)) = M(sigma) on S_n, and s_to_t / t_to_s are mutually
/// inverse on all of E_n.
VerificationReport verify_code_transform(int n, int max_n = kDefaultMaxN);

/// Sum of I is inv, sum of M is maj, and both vectors obey the E_n bound.
VerificationReport verify_code_sums(int n, int max_n = kDefaultMaxN);

/// maj = inv compose phi, last letter kept, bijectivity, all over S_n.
VerificationReport verify_foata_sn(int n, int max_n = kDefaultMaxN);

/// Same three properties over one rearrangement class.
VerificationReport verify_foata_class(const MultisetSpec& spec,
                                      std::uint64_t max_class_size = kDefaultMaxClassSize);

/// phi_n o ... o phi_1 = phi on S_n.
VerificationReport verify_partial_composition(int n, int max_n = kDefaultMaxN);

/// is_strong_fixed_point(sigma) iff phi_k(sigma) = sigma for every k.
VerificationReport verify_strong_fixed_equivalence(int n, int max_n = kDefaultMaxN);

/// maj, inv and Z are equidistributed over S_n, the table matches the
/// q-factorial oracle, and maj(sigma) = inv(phi(sigma)) pointwise.
VerificationReport verify_mahonian(int n, int max_n = kDefaultMaxN);

/// maj, inv and Z are equidistributed over R(X) and maj(w) = inv(phi(w))
/// pointwise.
VerificationReport verify_mahonian(const MultisetSpec& spec,
                                   std::uint64_t max_class_size = kDefaultMaxClassSize);

/// All 2^{n-1} fixed points of H, generated by decoding the codes with
/// t_i in {0, i-1}, each re-checked against H and the prefix criterion.
std::vector<Permutation> fixed_points_of_h(int n, int max_n = kDefaultMaxN);

/// Three-way agreement on S_n: H(sigma) = sigma iff every prefix is a
/// consecutive set iff every t_i is 0 or i-1; the fixed-point count is
/// 2^{n-1}; constructive generation matches; every fixed point is also
/// phi-fixed.
VerificationReport verify_fixed_point_characterization(int n, int max_n = kDefaultMaxN);

/// For n >= 4, some phi-fixed permutation is not H-fixed (vacuous below).
VerificationReport verify_phi_fixed_strictness(int n, int max_n = kDefaultMaxN);

struct SuiteOptions {
  int n = 7;                 // checks run over sizes 1..n
  int max_n = kDefaultMaxN;  // hard enumeration cap
  std::uint64_t max_class_size = kDefaultMaxClassSize;
  int word_total_cap = 8;    // word-class family: total <= min(n, cap)
  int word_alphabet_cap = 4;
};

/// Runs one named suite ("han", "codes", "foata", "fixed" or "all"),
/// aggregating each check over sizes 1..n. Throws on an unknown name.
std::vector<VerificationReport> run_suite(const std::string& suite, const SuiteOptions& options);

const std::vector<std::string>& suite_names();

}  // namespace mahonia

#endif
