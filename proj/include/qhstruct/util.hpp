#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace qhstruct {

// Vertex sets are 64-bit masks; vertices are 0-based internally and 1-based
// in all I/O and error messages.
using Vset = std::uint64_t;

inline constexpr int kMaxVertices = 64;

inline constexpr Vset bit(int v) { return Vset{1} << v; }
inline constexpr bool has(Vset s, int v) { return (s >> v) & 1; }
inline constexpr Vset all_of(int n) {
  return n >= kMaxVertices ? ~Vset{0} : (Vset{1} << n) - 1;
}
inline int popcount(Vset s) { return std::popcount(s); }
inline int lowest(Vset s) { return std::countr_zero(s); }

// for (int v : bits(mask)) ...
struct bits {
  Vset m;
  explicit bits(Vset m) : m(m) {}
  struct iter {
    Vset m;
    bool operator!=(const iter& o) const { return m != o.m; }
    void operator++() { m &= m - 1; }
    int operator*() const { return std::countr_zero(m); }
  };
  iter begin() const { return {m}; }
  iter end() const { return {0}; }
};

inline std::string vset_str(Vset s) {
  std::string out = "{";
  for (int v : bits(s)) {
    if (out.size() > 1) out += ",";
    out += std::to_string(v + 1);
  }
  return out + "}";
}

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Transitive closure would identify two vertices; carries one witness cycle.
struct CycleError : Error {
  std::vector<int> cycle;  // 0-based vertex sequence, closed
  explicit CycleError(std::vector<int> c)
      : Error(make_message(c)), cycle(std::move(c)) {}

 private:
  static std::string make_message(const std::vector<int>& c) {
    std::string m = "relation is cyclic:";
    for (int v : c) m += " " + std::to_string(v + 1);
    return m;
  }
};

struct SizeError : Error {
  using Error::Error;
};
struct UnsupportedError : Error {
  using Error::Error;
};
struct ParallelArrowError : Error {
  using Error::Error;
};
struct NotSinkSourceError : Error {
  using Error::Error;
};
struct NotTypeAError : Error {
  using Error::Error;
};
struct PreconditionError : Error {
  using Error::Error;
};

// order_to_tree failure; `condition` names the violated characterization (1 or 2).
struct NotTreeOrderError : Error {
  int condition;
  NotTreeOrderError(int cond, const std::string& what)
      : Error(what), condition(cond) {}
};

// Row-major bit matrix for posets over structure indices (may exceed 64 rows).
struct BitMatrix {
  int m = 0, words = 0;
  std::vector<std::uint64_t> data;

  BitMatrix() = default;
  explicit BitMatrix(int m)
      : m(m), words((m + 63) / 64), data(std::size_t(m) * words, 0) {}

  bool get(int r, int c) const {
    return (data[std::size_t(r) * words + c / 64] >> (c % 64)) & 1;
  }
  void set(int r, int c) {
    data[std::size_t(r) * words + c / 64] |= std::uint64_t{1} << (c % 64);
  }
  const std::uint64_t* row(int r) const { return &data[std::size_t(r) * words]; }
  std::uint64_t* row(int r) { return &data[std::size_t(r) * words]; }

  bool row_subset(int r1, int r2) const {  // row r1 ⊆ row r2
    const std::uint64_t *a = row(r1), *b = row(r2);
    for (int w = 0; w < words; ++w)
      if (a[w] & ~b[w]) return false;
    return true;
  }

  BitMatrix transposed() const {
    BitMatrix t(m);
    for (int r = 0; r < m; ++r)
      for (int c = 0; c < m; ++c)
        if (get(r, c)) t.set(c, r);
    return t;
  }

  void close_transitively() {
    for (int k = 0; k < m; ++k)
      for (int r = 0; r < m; ++r)
        if (get(r, k)) {
          const std::uint64_t* src = row(k);
          std::uint64_t* dst = row(r);
          for (int w = 0; w < words; ++w) dst[w] |= src[w];
        }
  }

  bool operator==(const BitMatrix& o) const {
    return m == o.m && data == o.data;
  }
};

struct VecU64Hash {
  std::size_t operator()(const std::vector<std::uint64_t>& v) const {
    std::uint64_t h = 1469598103934665603ull;
    for (std::uint64_t x : v) {
      h ^= x;
      h *= 1099511628211ull;
    }
    return std::size_t(h);
  }
};

}  // namespace qhstruct
