#include "mahonia/codes.hpp"

#include <numeric>

#include "mahonia/stats.hpp"

namespace mahonia {

Code lehmer_encode(const Permutation& sigma) {
  return Code(t_vector(sigma));
}

Permutation lehmer_decode(const Code& code) {
  const int n = code.size();
  std::vector<int> available(n);
  std::iota(available.begin(), available.end(), 1);
  std::vector<int> out(n);
  // Right to left: every value still unplaced sits left of position i, so
  // code[i] equals the number of available values above sigma_i.
  for (int i = n - 1; i >= 0; --i) {
    const int idx = static_cast<int>(available.size()) - 1 - code[i];
    out[i] = available[idx];
    available.erase(available.begin() + idx);
  }
  return Permutation(std::move(out));
}

Code cyclic_major_encode(const Permutation& sigma) {
  return Code(s_vector(sigma));
}

Permutation cyclic_major_decode(const Code& code) {
  const int n = code.size();
  if (n == 0) return Permutation();
  std::vector<int> sigma(n);
  std::vector<char> placed(n + 1, 0);
  sigma[n - 1] = n - code[n - 1];
  placed[sigma[n - 1]] = 1;
  for (int k = n - 1; k >= 1; --k) {
    // Walk sigma_{k+1}, sigma_{k+1}-1, ..., 1, n, ..., sigma_{k+1}+1 and pick
    // the (s_k+1)-th value not already placed.
    int remaining = code[k - 1] + 1;
    int value = 0;
    int v = sigma[k];
    for (int step = 0; step < n; ++step) {
      if (!placed[v] && --remaining == 0) {
        value = v;
        break;
      }
      v = (v == 1) ? n : v - 1;
    }
    if (value == 0)
      throw std::logic_error("cyclic_major_decode: survivor index out of range");
    sigma[k - 1] = value;
    placed[value] = 1;
  }
  return Permutation(std::move(sigma));
}

Code t_to_s(const Code& t) {
  const int n = t.size();
  std::vector<int> out(n);
  if (n > 0) out[n - 1] = t[n - 1];
  for (int i = 0; i + 1 < n; ++i) {
    const int d = t[i] - t[i + 1];
    out[i] = d >= 0 ? d : d + (i + 1);
  }
  return Code(std::move(out));
}

Code s_to_t(const Code& s) {
  const int n = s.size();
  std::vector<int> out(n);
  if (n > 0) out[n - 1] = s[n - 1];
  for (int i = n - 2; i >= 0; --i) out[i] = (s[i] + out[i + 1]) % (i + 1);
  return Code(std::move(out));
}

Code code_complement(const Code& a) {
  const int n = a.size();
  std::vector<int> out(n);
  for (int i = 0; i < n; ++i) out[i] = i - a[i];
  return Code(std::move(out));
}

}  // namespace mahonia
