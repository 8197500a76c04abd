#ifndef MAHONIA_PERMCORE_HPP
#define MAHONIA_PERMCORE_HPP

#include <compare>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace mahonia {

/// Thrown by the text parsers. Messages name the offending token and its
/// 1-based position.
class ParseError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Letter multiplicities of a rearrangement class: multiplicity(i) copies of
/// letter i over the alphabet [k]. Zero multiplicities are allowed; the
/// alphabet size is the declared k, not the largest letter actually present.
class MultisetSpec {
public:
  explicit MultisetSpec(std::vector<int> multiplicities);

  /// Spec observed from a letter sequence, with k = max letter.
  static MultisetSpec infer(std::span<const int> letters);

  int alphabet_size() const { return static_cast<int>(mult_.size()); }
  int length() const { return n_; }
  int multiplicity(int letter) const { return mult_.at(letter - 1); }
  const std::vector<int>& multiplicities() const { return mult_; }

  /// Copy with trailing zero multiplicities dropped.
  MultisetSpec trimmed() const;

  bool operator==(const MultisetSpec&) const = default;

private:
  std::vector<int> mult_;
  int n_ = 0;
};

/// A word over [k] with prescribed letter multiplicities.
class Word {
public:
  Word(std::vector<int> letters, MultisetSpec spec);
  explicit Word(std::vector<int> letters);  // spec inferred from the letters

  int size() const { return static_cast<int>(letters_.size()); }
  int operator[](int i) const { return letters_[i]; }  // 0-based
  int last() const { return letters_.back(); }
  int alphabet_size() const { return spec_.alphabet_size(); }
  const std::vector<int>& letters() const { return letters_; }
  const MultisetSpec& spec() const { return spec_; }

  bool operator==(const Word&) const = default;

private:
  std::vector<int> letters_;
  MultisetSpec spec_;
};

/// One-line notation sigma_1 ... sigma_n, a rearrangement of [n]. The empty
/// permutation is allowed as a recursion base; the parsers reject it.
class Permutation {
public:
  Permutation() = default;
  explicit Permutation(std::vector<int> values);

  static Permutation identity(int n);

  int size() const { return static_cast<int>(values_.size()); }
  bool empty() const { return values_.empty(); }
  int operator[](int i) const { return values_[i]; }  // 0-based
  int last() const { return values_.back(); }
  const std::vector<int>& values() const { return values_; }

  auto operator<=>(const Permutation&) const = default;

private:
  std::vector<int> values_;
};

/// tau_i = n + 1 - sigma_i. An involution on S_n.
Permutation complement(const Permutation& sigma);

/// A member of E_n: the i-th entry lies in [0, i-1] (1-based i).
class Code {
public:
  Code() = default;
  explicit Code(std::vector<int> entries);

  int size() const { return static_cast<int>(entries_.size()); }
  int operator[](int i) const { return entries_[i]; }  // 0-based
  const std::vector<int>& entries() const { return entries_; }

  auto operator<=>(const Code&) const = default;

private:
  std::vector<int> entries_;
};

/// A permutation of [n] \ {gap}, kept together with its excluded value.
class GappedPermutation {
public:
  GappedPermutation(std::vector<int> values, int gap);

  int ambient_size() const { return static_cast<int>(values_.size()) + 1; }
  int gap() const { return gap_; }
  const std::vector<int>& values() const { return values_; }

  bool operator==(const GappedPermutation&) const = default;

private:
  std::vector<int> values_;
  int gap_;
};

/// Splits delimiter-separated integers (spaces and/or commas), or, when the
/// text carries no delimiter at all, reads one single-digit value per
/// character. Compact form is therefore only available while every value
/// fits a single digit.
std::vector<int> parse_sequence(std::string_view text);

/// True when values is a rearrangement of {1, ..., n}.
bool is_rearrangement_of_identity(std::span<const int> values);

Permutation parse_permutation(std::string_view text);
Word parse_word(std::string_view text);
Word parse_word(std::string_view text, const MultisetSpec& spec);
Code parse_code(std::string_view text);

std::string render_compact(std::span<const int> seq);  // requires values <= 9
std::string render_spaced(std::span<const int> seq);
std::string render_csv(std::span<const int> seq);

/// Compact digit string when every value is a single digit, otherwise
/// space-separated.
std::string render(std::span<const int> seq);

inline std::string render(const Permutation& p) { return render(std::span(p.values())); }
inline std::string render(const Word& w) { return render(std::span(w.letters())); }

}  // namespace mahonia

#endif
