#include "mahonia/han.hpp"

#include "mahonia/codes.hpp"

namespace mahonia {

namespace {

GappedPermutation drop_last(const Permutation& sigma) {
  std::vector<int> head(sigma.values().begin(), sigma.values().end() - 1);
  return GappedPermutation(std::move(head), sigma.last());
}

}  // namespace

Permutation c_upper(int x, const GappedPermutation& sigma) {
  if (x != sigma.gap())
    throw std::invalid_argument("c_upper: pivot " + std::to_string(x) +
                                " does not match the gap " + std::to_string(sigma.gap()));
  const int n = sigma.ambient_size();
  std::vector<int> out;
  out.reserve(sigma.values().size());
  for (int v : sigma.values()) out.push_back(v < x ? v - x + n : v - x);
  return Permutation(std::move(out));
}

Permutation c_lower(int x, const GappedPermutation& sigma) {
  if (x != sigma.gap())
    throw std::invalid_argument("c_lower: pivot " + std::to_string(x) +
                                " does not match the gap " + std::to_string(sigma.gap()));
  std::vector<int> out;
  out.reserve(sigma.values().size());
  for (int v : sigma.values()) out.push_back(v < x ? v : v - 1);
  return Permutation(std::move(out));
}

GappedPermutation c_upper_inv(int x, const Permutation& tau) {
  const int n = tau.size() + 1;
  if (x < 1 || x > n)
    throw std::invalid_argument("c_upper_inv: x = " + std::to_string(x) +
                                " out of range [1," + std::to_string(n) + "]");
  std::vector<int> out;
  out.reserve(tau.values().size());
  for (int v : tau.values()) out.push_back(v <= n - x ? v + x : v + x - n);
  return GappedPermutation(std::move(out), x);
}

GappedPermutation c_lower_inv(int x, const Permutation& nu) {
  const int n = nu.size() + 1;
  if (x < 1 || x > n)
    throw std::invalid_argument("c_lower_inv: x = " + std::to_string(x) +
                                " out of range [1," + std::to_string(n) + "]");
  std::vector<int> out;
  out.reserve(nu.values().size());
  for (int v : nu.values()) out.push_back(v < x ? v : v + 1);
  return GappedPermutation(std::move(out), x);
}

Permutation han_h(const Permutation& sigma) {
  if (sigma.size() <= 1) return sigma;
  const int x = sigma.last();
  Permutation reduced = c_upper(x, drop_last(sigma));
  GappedPermutation lifted = c_lower_inv(x, han_h(reduced));
  std::vector<int> out = lifted.values();
  out.push_back(x);
  return Permutation(std::move(out));
}

Permutation han_h_via_codes(const Permutation& sigma) {
  return lehmer_decode(cyclic_major_encode(sigma));
}

Permutation han_h_inverse(const Permutation& sigma) {
  return cyclic_major_decode(lehmer_encode(sigma));
}

std::vector<TraceRow> c_iteration_trace(const Permutation& sigma) {
  std::vector<TraceRow> rows;
  if (sigma.empty()) return rows;
  const int n = sigma.size();
  rows.reserve(n);
  Permutation cur = sigma;
  for (int j = 0; j < n; ++j) {
    rows.push_back({j, cur, cur.last(), cur.size() - cur.last()});
    if (cur.size() > 1) cur = c_upper(cur.last(), drop_last(cur));
  }
  return rows;
}

Code code_from_trace(const std::vector<TraceRow>& rows) {
  const int n = static_cast<int>(rows.size());
  std::vector<int> entries(n);
  for (const TraceRow& row : rows) entries[n - 1 - row.j] = row.s_entry;
  return Code(std::move(entries));
}

}  // namespace mahonia
