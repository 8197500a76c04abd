#include "mahonia/stats.hpp"

#include <algorithm>

namespace mahonia {

std::vector<int> CyclicInterval::members() const {
  std::vector<int> out;
  for (int z = 1; z <= k; ++z)
    if (contains(z)) out.push_back(z);
  return out;
}

std::vector<int> descent_set(std::span<const int> w) {
  std::vector<int> out;
  const int n = static_cast<int>(w.size());
  for (int i = 0; i + 1 < n; ++i)
    if (w[i] > w[i + 1]) out.push_back(i + 1);
  return out;
}

int des(std::span<const int> w) {
  return static_cast<int>(descent_set(w).size());
}

long long maj(std::span<const int> w) {
  long long sum = 0;
  for (int i : descent_set(w)) sum += i;
  return sum;
}

long long inv(std::span<const int> w) {
  const int n = static_cast<int>(w.size());
  long long count = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (w[i] > w[j]) ++count;
  return count;
}

long long z_statistic(const Word& w) {
  const int k = w.alphabet_size();
  long long total = 0;
  for (int a = 1; a < k; ++a) {
    for (int b = a + 1; b <= k; ++b) {
      // maj of the subword of a's and b's, computed in one pass
      long long m = 0;
      int len = 0;
      int prev = 0;
      for (int c : w.letters()) {
        if (c != a && c != b) continue;
        ++len;
        if (len > 1 && prev > c) m += len - 1;
        prev = c;
      }
      total += m;
    }
  }
  return total;
}

long long z_statistic(const Permutation& sigma) {
  return z_statistic(Word(sigma.values()));
}

namespace {

int observed_alphabet(std::span<const int> w) {
  return w.empty() ? 0 : *std::max_element(w.begin(), w.end());
}

}  // namespace

std::vector<int> t_vector(std::span<const int> w) {
  return t_vector(w, observed_alphabet(w));
}

std::vector<int> t_vector(std::span<const int> w, int alphabet_size) {
  const int n = static_cast<int>(w.size());
  std::vector<int> out(n, 0);
  for (int i = 0; i < n; ++i) {
    const CyclicInterval iv{w[i], kCyclicInfinity, alphabet_size};
    for (int j = 0; j < i; ++j)
      if (iv.contains(w[j])) ++out[i];
  }
  return out;
}

std::vector<int> s_vector(std::span<const int> w) {
  return s_vector(w, observed_alphabet(w));
}

std::vector<int> s_vector(std::span<const int> w, int alphabet_size) {
  const int n = static_cast<int>(w.size());
  std::vector<int> out(n, 0);
  for (int i = 0; i < n; ++i) {
    const CyclicInterval iv{w[i], i + 1 < n ? w[i + 1] : kCyclicInfinity, alphabet_size};
    for (int j = 0; j < i; ++j)
      if (iv.contains(w[j])) ++out[i];
  }
  return out;
}

}  // namespace mahonia
