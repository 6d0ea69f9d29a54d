#ifndef TROPGW_NUMERIC_HPP
#define TROPGW_NUMERIC_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace tropgw {

using Int = mpz_class;
using Rat = mpq_class;

using VecZ = std::vector<Int>;
using VecQ = std::vector<Rat>;

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline Rat make_rat(const Int& num, const Int& den) {
  Rat q(num, den);
  q.canonicalize();
  return q;
}

inline Rat make_rat(long num, long den) {
  Rat q(num, den);
  q.canonicalize();
  return q;
}

inline std::string to_string(const Int& z) { return z.get_str(); }

// Renders integers without a denominator, everything else as p/q.
inline std::string to_string(const Rat& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rat parse_rat(const std::string& s);
Int parse_int(const std::string& s);

inline std::string to_string(const VecZ& v) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += " ";
    s += to_string(v[i]);
  }
  return s;
}

inline std::string to_string(const VecQ& v) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += " ";
    s += to_string(v[i]);
  }
  return s;
}

inline bool is_zero(const VecZ& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

inline bool is_zero(const VecQ& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

inline VecZ add(const VecZ& a, const VecZ& b) {
  VecZ r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline VecZ neg(const VecZ& a) {
  VecZ r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

inline VecQ add(const VecQ& a, const VecQ& b) {
  VecQ r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline VecQ sub(const VecQ& a, const VecQ& b) {
  VecQ r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline VecQ scale(const Rat& c, const VecQ& a) {
  VecQ r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
  return r;
}

inline VecQ to_vecq(const VecZ& a) {
  VecQ r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = Rat(a[i]);
  return r;
}

// Divides out the gcd and fixes the sign so the first nonzero entry is
// positive. Zero vectors pass through unchanged.
VecZ primitive_part(const VecZ& v);

// gcd of all entries, nonnegative; 0 for the zero vector.
Int content(const VecZ& v);

Int dot(const VecZ& a, const VecZ& b);
Rat dot(const VecQ& a, const VecQ& b);

// Deterministic 64-bit stream used for seeded point configurations.
// splitmix64: the output is a documented, platform-independent sequence.
struct SplitMix64 {
  std::uint64_t state;
  explicit SplitMix64(std::uint64_t seed) : state(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  // Uniform in [0, bound)
  std::uint64_t below(std::uint64_t bound) { return next() % bound; }
};

}  // namespace tropgw

#endif
