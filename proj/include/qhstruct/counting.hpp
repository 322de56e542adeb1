#pragma once

#include <map>
#include <tuple>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "qhstruct/util.hpp"

namespace qhstruct {

using BigInt = boost::multiprecision::cpp_int;

/// n-th Catalan number c_n = binom(2n, n) / (n + 1), exact.
inline BigInt catalan(int n) {
  if (n < 0) throw Error("catalan(n) needs n >= 0");
  BigInt b = 1;
  for (int k = 1; k <= n; ++k) {
    b *= (n + k);
    b /= k;  // exact at every step: b = binom(n+k, k)
  }
  return b / (n + 1);
}

inline BigInt factorial(int n) {
  BigInt f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

/// |qh.str| of the type D orientation Q(n-3,1,1): 2c_n - 3c_{n-1}.
inline BigInt count_D1(int n) {
  if (n < 3) throw Error("count_D1(n) needs n >= 3");
  return 2 * catalan(n) - 3 * catalan(n - 1);
}

/// |qh.str| of the type D orientation Q(1,n-3,1): 3c_{n-1} - c_{n-2}.
inline BigInt count_D2(int n) {
  if (n < 3) throw Error("count_D2(n) needs n >= 3");
  return 3 * catalan(n - 1) - catalan(n - 2);
}

struct StarCensus {
  BigInt total;
  std::vector<BigInt> c;  // c[k-1] = |C_k|, k = 1..t
};

namespace detail {

using StarMemo = std::map<std::tuple<int, int, int>, BigInt>;

inline BigInt count_star_rec(int r, int s, int t, StarMemo& memo);

// structures of Q(r,s,u) not representable with a maximal b-vertex
inline BigInt star_minus_b_max(int r, int s, int u, StarMemo& memo) {
  BigInt d = count_star_rec(r, s, u, memo);
  for (int j = 1; j <= s; ++j)
    d -= catalan(s - j) * count_star_rec(r, j - 1, u, memo);
  return d;
}

inline BigInt count_star_rec(int r, int s, int t, StarMemo& memo) {
  if (t == 0) return catalan(r + s + 1);  // equioriented A_{r+s+1}
  if (s == 0) return catalan(r + t + 1);
  if (r == 0) return catalan(s + 1) * catalan(t + 1);  // source deconcatenation
  if (s < t) std::swap(s, t);  // the two out-arms are interchangeable
  auto key = std::make_tuple(r, s, t);
  if (auto it = memo.find(key); it != memo.end()) return it->second;

  // vertex deletions: each quotient algebra splits off an equioriented tail
  // and a smaller star
  BigInt total = catalan(r) * catalan(s) * catalan(t);  // delete the center
  for (int i = 1; i <= r; ++i)
    total += catalan(r - i) * count_star_rec(i - 1, s, t, memo);
  for (int j = 1; j <= s; ++j)
    total += catalan(s - j) * count_star_rec(r, j - 1, t, memo);
  for (int k = 1; k <= t; ++k)
    total += catalan(t - k) * star_minus_b_max(r, s, k - 1, memo);

  memo.emplace(key, total);
  return total;
}

}  // namespace detail

/// |qh.str(kQ(r,s,t))| by idempotent-reduction recursion.
inline BigInt count_star(int r, int s, int t) {
  if (r < 0 || s < 0 || t < 0) throw Error("count_star needs r,s,t >= 0");
  detail::StarMemo memo;
  return detail::count_star_rec(r, s, t, memo);
}

/// Same, but also reports the intermediate |C_k| terms of the decomposition.
inline StarCensus star_census(int r, int s, int t) {
  if (r < 0 || s < 0 || t < 0) throw Error("star_census needs r,s,t >= 0");
  detail::StarMemo memo;
  StarCensus out;
  out.total = detail::count_star_rec(r, s, t, memo);
  for (int k = 1; k <= t; ++k)
    out.c.push_back(catalan(t - k) *
                    detail::star_minus_b_max(r, s, k - 1, memo));
  return out;
}

}  // namespace qhstruct
