#include "mahonia/foata.hpp"

#include <algorithm>

namespace mahonia {

std::vector<int> XFactorization::reassemble() const {
  std::vector<int> out;
  for (const auto& blk : blocks) {
    out.insert(out.end(), blk.prefix.begin(), blk.prefix.end());
    out.push_back(blk.terminal);
  }
  return out;
}

XFactorization x_factorize(std::span<const int> w, int x) {
  if (w.empty()) throw std::invalid_argument("x_factorize: empty word");
  XFactorization f;
  f.pivot = x;
  f.terminals_low = w.back() <= x;
  std::vector<int> prefix;
  for (int c : w) {
    const bool terminal = f.terminals_low ? c <= x : c > x;
    if (terminal) {
      f.blocks.push_back({std::move(prefix), c});
      prefix.clear();
    } else {
      prefix.push_back(c);
    }
  }
  // The branch choice makes the last letter a terminal, so nothing dangles.
  return f;
}

std::vector<int> gamma(int x, std::span<const int> w) {
  if (w.empty()) return {};
  std::vector<int> out;
  out.reserve(w.size());
  for (const auto& blk : x_factorize(w, x).blocks) {
    out.push_back(blk.terminal);
    out.insert(out.end(), blk.prefix.begin(), blk.prefix.end());
  }
  return out;
}

std::vector<int> foata_phi(std::span<const int> w) {
  std::vector<int> acc;
  acc.reserve(w.size());
  for (int c : w) {
    acc = gamma(c, acc);
    acc.push_back(c);
  }
  return acc;
}

Word foata_phi(const Word& w) {
  return Word(foata_phi(std::span(w.letters())), w.spec());
}

Permutation foata_phi(const Permutation& sigma) {
  return Permutation(foata_phi(std::span(sigma.values())));
}

Permutation partial_foata(int k, const Permutation& sigma) {
  const int n = sigma.size();
  if (k < 1 || k > n)
    throw std::invalid_argument("partial_foata: k = " + std::to_string(k) +
                                " out of range [1," + std::to_string(n) + "]");
  if (k == 1) return sigma;
  const auto& v = sigma.values();
  std::vector<int> out = gamma(v[k - 1], std::span(v.data(), k - 1));
  out.insert(out.end(), v.begin() + (k - 1), v.end());
  return Permutation(std::move(out));
}

bool is_strong_fixed_point(const Permutation& sigma) {
  int lo = 0;
  int hi = 0;
  for (int i = 0; i < sigma.size(); ++i) {
    const int v = sigma[i];
    if (i == 0) {
      lo = hi = v;
    } else {
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
    if (hi - lo != i) return false;  // prefix of i+1 values must be an interval
  }
  return true;
}

}  // namespace mahonia
