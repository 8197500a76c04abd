#include "mahonia/permcore.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

namespace mahonia {

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() &&
         std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

struct Token {
  std::string text;
  int position;  // 1-based
};

std::vector<Token> tokenize(std::string_view text) {
  auto is_delim = [](char c) { return c == ' ' || c == ',' || c == '\t' || c == '\n' || c == '\r'; };

  const bool has_delim = std::any_of(text.begin(), text.end(), is_delim);
  std::vector<Token> tokens;
  if (has_delim) {
    std::size_t i = 0;
    while (i < text.size()) {
      while (i < text.size() && is_delim(text[i])) ++i;
      std::size_t start = i;
      while (i < text.size() && !is_delim(text[i])) ++i;
      if (i > start)
        tokens.push_back({std::string(text.substr(start, i - start)),
                          static_cast<int>(tokens.size()) + 1});
    }
  } else {
    // Undelimited: one value per character.
    for (std::size_t i = 0; i < text.size(); ++i)
      tokens.push_back({std::string(1, text[i]), static_cast<int>(i) + 1});
  }
  return tokens;
}

int token_to_int(const Token& tok) {
  if (!all_digits(tok.text))
    throw ParseError("invalid token \"" + tok.text + "\" at position " +
                     std::to_string(tok.position));
  int value = 0;
  auto [ptr, ec] = std::from_chars(tok.text.data(), tok.text.data() + tok.text.size(), value);
  if (ec != std::errc() || ptr != tok.text.data() + tok.text.size())
    throw ParseError("invalid token \"" + tok.text + "\" at position " +
                     std::to_string(tok.position));
  return value;
}

}  // namespace

MultisetSpec::MultisetSpec(std::vector<int> multiplicities) : mult_(std::move(multiplicities)) {
  if (mult_.empty()) throw std::invalid_argument("MultisetSpec: alphabet must be nonempty");
  for (int m : mult_)
    if (m < 0) throw std::invalid_argument("MultisetSpec: negative multiplicity");
  n_ = std::accumulate(mult_.begin(), mult_.end(), 0);
  if (n_ < 1) throw std::invalid_argument("MultisetSpec: class must contain at least one letter");
}

MultisetSpec MultisetSpec::infer(std::span<const int> letters) {
  int k = 0;
  for (int c : letters) k = std::max(k, c);
  if (k < 1) throw std::invalid_argument("MultisetSpec::infer: no positive letters");
  std::vector<int> mult(k, 0);
  for (int c : letters) {
    if (c < 1) throw std::invalid_argument("MultisetSpec::infer: letters must be positive");
    ++mult[c - 1];
  }
  return MultisetSpec(std::move(mult));
}

MultisetSpec MultisetSpec::trimmed() const {
  std::vector<int> mult = mult_;
  while (mult.size() > 1 && mult.back() == 0) mult.pop_back();
  return MultisetSpec(std::move(mult));
}

Word::Word(std::vector<int> letters, MultisetSpec spec)
    : letters_(std::move(letters)), spec_(std::move(spec)) {
  const int k = spec_.alphabet_size();
  std::vector<int> seen(k, 0);
  for (int c : letters_) {
    if (c < 1 || c > k)
      throw std::invalid_argument("Word: letter " + std::to_string(c) +
                                  " outside alphabet [1," + std::to_string(k) + "]");
    ++seen[c - 1];
  }
  if (seen != spec_.multiplicities())
    throw std::invalid_argument("Word: letter multiplicities do not match the spec");
}

Word::Word(std::vector<int> letters)
    : letters_(std::move(letters)), spec_(MultisetSpec::infer(letters_)) {}

Permutation::Permutation(std::vector<int> values) : values_(std::move(values)) {
  const int n = static_cast<int>(values_.size());
  std::vector<char> seen(n + 1, 0);
  for (int v : values_) {
    if (v < 1 || v > n)
      throw std::invalid_argument("Permutation: value " + std::to_string(v) +
                                  " out of range [1," + std::to_string(n) + "]");
    if (seen[v]) throw std::invalid_argument("Permutation: duplicate value " + std::to_string(v));
    seen[v] = 1;
  }
}

Permutation Permutation::identity(int n) {
  if (n < 0) throw std::invalid_argument("Permutation::identity: negative size");
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  return Permutation(std::move(v));
}

Permutation complement(const Permutation& sigma) {
  const int n = sigma.size();
  std::vector<int> out;
  out.reserve(n);
  for (int v : sigma.values()) out.push_back(n + 1 - v);
  return Permutation(std::move(out));
}

Code::Code(std::vector<int> entries) : entries_(std::move(entries)) {
  for (std::size_t i = 0; i < entries_.size(); ++i)
    if (entries_[i] < 0 || entries_[i] > static_cast<int>(i))
      throw std::invalid_argument("Code: entry " + std::to_string(entries_[i]) +
                                  " at position " + std::to_string(i + 1) +
                                  " violates the E_n bound [0," + std::to_string(i) + "]");
}

GappedPermutation::GappedPermutation(std::vector<int> values, int gap)
    : values_(std::move(values)), gap_(gap) {
  const int n = static_cast<int>(values_.size()) + 1;
  if (gap_ < 1 || gap_ > n)
    throw std::invalid_argument("GappedPermutation: gap " + std::to_string(gap_) +
                                " out of range [1," + std::to_string(n) + "]");
  std::vector<char> seen(n + 1, 0);
  for (int v : values_) {
    if (v < 1 || v > n || v == gap_)
      throw std::invalid_argument("GappedPermutation: value " + std::to_string(v) +
                                  " outside [1," + std::to_string(n) + "] \\ {" +
                                  std::to_string(gap_) + "}");
    if (seen[v])
      throw std::invalid_argument("GappedPermutation: duplicate value " + std::to_string(v));
    seen[v] = 1;
  }
}

std::vector<int> parse_sequence(std::string_view text) {
  auto tokens = tokenize(text);
  if (tokens.empty()) throw ParseError("empty input");
  std::vector<int> values;
  values.reserve(tokens.size());
  for (const auto& tok : tokens) values.push_back(token_to_int(tok));
  return values;
}

bool is_rearrangement_of_identity(std::span<const int> values) {
  const int n = static_cast<int>(values.size());
  std::vector<char> seen(n + 1, 0);
  for (int v : values) {
    if (v < 1 || v > n || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

Permutation parse_permutation(std::string_view text) {
  std::vector<int> values = parse_sequence(text);
  const int n = static_cast<int>(values.size());
  std::vector<char> seen(n + 1, 0);
  for (int j = 0; j < n; ++j) {
    const int v = values[j];
    if (v < 1 || v > n)
      throw ParseError("value " + std::to_string(v) + " out of range [1," + std::to_string(n) +
                       "] at position " + std::to_string(j + 1));
    if (seen[v])
      throw ParseError("duplicate value " + std::to_string(v) + " at position " +
                       std::to_string(j + 1));
    seen[v] = 1;
  }
  return Permutation(std::move(values));
}

Word parse_word(std::string_view text) {
  std::vector<int> letters = parse_sequence(text);
  for (std::size_t j = 0; j < letters.size(); ++j)
    if (letters[j] < 1)
      throw ParseError("letter " + std::to_string(letters[j]) +
                       " must be positive, at position " + std::to_string(j + 1));
  MultisetSpec spec = MultisetSpec::infer(letters);
  return Word(std::move(letters), std::move(spec));
}

Word parse_word(std::string_view text, const MultisetSpec& spec) {
  std::vector<int> letters = parse_sequence(text);
  const int k = spec.alphabet_size();
  std::vector<int> counts(k, 0);
  for (std::size_t j = 0; j < letters.size(); ++j) {
    const int c = letters[j];
    if (c < 1 || c > k)
      throw ParseError("letter " + std::to_string(c) + " exceeds alphabet size " +
                       std::to_string(k) + " at position " + std::to_string(j + 1));
    ++counts[c - 1];
  }
  for (int i = 0; i < k; ++i)
    if (counts[i] != spec.multiplicity(i + 1))
      throw ParseError("letter " + std::to_string(i + 1) + " occurs " +
                       std::to_string(counts[i]) + " times, expected " +
                       std::to_string(spec.multiplicity(i + 1)));
  return Word(std::move(letters), spec);
}

Code parse_code(std::string_view text) {
  std::vector<int> entries = parse_sequence(text);
  for (std::size_t j = 0; j < entries.size(); ++j)
    if (entries[j] > static_cast<int>(j))
      throw ParseError("entry " + std::to_string(entries[j]) + " at position " +
                       std::to_string(j + 1) + " violates the E_n bound [0," +
                       std::to_string(j) + "]");
  return Code(std::move(entries));
}

std::string render_compact(std::span<const int> seq) {
  std::string out;
  out.reserve(seq.size());
  for (int v : seq) {
    if (v < 0 || v > 9)
      throw std::invalid_argument("render_compact: value " + std::to_string(v) +
                                  " needs more than one digit");
    out.push_back(static_cast<char>('0' + v));
  }
  return out;
}

std::string render_spaced(std::span<const int> seq) {
  std::string out;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (i) out.push_back(' ');
    out += std::to_string(seq[i]);
  }
  return out;
}

std::string render_csv(std::span<const int> seq) {
  std::string out;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (i) out.push_back(',');
    out += std::to_string(seq[i]);
  }
  return out;
}

std::string render(std::span<const int> seq) {
  const bool compact =
      std::all_of(seq.begin(), seq.end(), [](int v) { return v >= 0 && v <= 9; });
  return compact ? render_compact(seq) : render_spaced(seq);
}

}  // namespace mahonia
