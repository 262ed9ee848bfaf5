#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "emu/error.hpp"

namespace emu {

/// Exact fraction in lowest terms with positive denominator.
using Rational = mpq_class;
using Integer = mpz_class;

/// Dense rational vector.
using Vec = std::vector<Rational>;
/// Dense integer vector; cone rays and normals are stored this way.
using IntVec = std::vector<Integer>;

/// n/d in lowest terms. mpq_class's two-argument constructor does not
/// canonicalize on its own.
inline Rational frac(long n, unsigned long d) {
  Rational r(n, d);
  r.canonicalize();
  return r;
}

/// Parses "n", "-n" or "n/d" (d > 0 after sign handling). The result is
/// canonicalized.
inline Rational parse_rational(std::string_view text) {
  auto fail = [&] {
    return Error(ErrorKind::parse,
                 "malformed rational '" + std::string(text) + "'");
  };
  std::size_t i = 0;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
  std::size_t digits = 0;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
    ++i;
    ++digits;
  }
  if (digits == 0) throw fail();
  if (i < text.size()) {
    if (text[i] != '/') throw fail();
    ++i;
    std::size_t den_digits = 0;
    while (i < text.size() &&
           std::isdigit(static_cast<unsigned char>(text[i]))) {
      ++i;
      ++den_digits;
    }
    if (den_digits == 0 || i != text.size()) throw fail();
  }
  std::string buf(text);
  if (buf[0] == '+') buf.erase(0, 1);
  Rational r;
  if (r.set_str(buf, 10) != 0) throw fail();
  if (r.get_den() == 0) {
    throw Error(ErrorKind::parse,
                "zero denominator in '" + std::string(text) + "'");
  }
  r.canonicalize();
  return r;
}

/// "num/den", or "num" when the denominator is 1.
inline std::string to_string(const Rational& r) { return r.get_str(10); }

inline std::string to_string(const Integer& z) { return z.get_str(10); }

inline Rational dot(const Vec& x, const Vec& y) {
  Rational s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (sgn(x[i]) != 0 && sgn(y[i]) != 0) s += x[i] * y[i];
  }
  return s;
}

inline Integer dot(const IntVec& x, const IntVec& y) {
  Integer s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}

inline Rational dot(const IntVec& x, const Vec& y) {
  Rational s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (sgn(x[i]) != 0 && sgn(y[i]) != 0) s += Rational(x[i]) * y[i];
  }
  return s;
}

inline bool is_zero(const Vec& x) {
  return std::all_of(x.begin(), x.end(),
                     [](const Rational& v) { return sgn(v) == 0; });
}

inline bool is_zero(const IntVec& x) {
  return std::all_of(x.begin(), x.end(),
                     [](const Integer& v) { return sgn(v) == 0; });
}

inline Vec to_rational(const IntVec& x) {
  Vec out;
  out.reserve(x.size());
  for (const auto& v : x) out.emplace_back(v);
  return out;
}

/// Clears denominators and divides by the gcd. Orientation is preserved;
/// the zero vector maps to the zero vector.
inline IntVec primitive(const Vec& x) {
  Integer l = 1;
  for (const auto& v : x) {
    if (sgn(v) != 0) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
  }
  IntVec out(x.size());
  Integer g = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    out[i] = x[i].get_num() * (l / x[i].get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), out[i].get_mpz_t());
  }
  if (g > 1) {
    for (auto& v : out) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
  }
  return out;
}

inline IntVec primitive(IntVec x) {
  Integer g = 0;
  for (const auto& v : x) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  if (g > 1) {
    for (auto& v : x) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
  }
  return x;
}

inline IntVec negate(IntVec x) {
  for (auto& v : x) v = -v;
  return x;
}

/// Lexicographic order on integer vectors of equal length.
inline bool lex_less(const IntVec& a, const IntVec& b) {
  return std::lexicographical_compare(
      a.begin(), a.end(), b.begin(), b.end(),
      [](const Integer& x, const Integer& y) { return cmp(x, y) < 0; });
}

/// Sorts lexicographically and removes exact duplicates.
inline void sort_unique(std::vector<IntVec>& rows) {
  std::sort(rows.begin(), rows.end(), lex_less);
  rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
}

}  // namespace emu
