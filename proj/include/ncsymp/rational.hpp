#ifndef NCSYMP_RATIONAL_HPP
#define NCSYMP_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace ncsymp {

// Exact arbitrary-precision integers and rationals.  Rationals are kept in
// lowest terms with positive denominator by the backend, which is what the
// structural equality used throughout the library relies on.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rat& r) { return numerator(r); }
inline Int rat_den(const Rat& r) { return denominator(r); }

/// num/den as a canonical rational; den may be negative or non-reduced.
inline Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  return Rat(num) / Rat(den);
}

inline bool is_integer(const Rat& r) { return rat_den(r) == 1; }

inline int sign_of(const Rat& r) {
  if (r == 0) return 0;
  return r > 0 ? 1 : -1;
}

inline std::string int_to_string(const Int& v) { return v.str(); }

inline std::string rat_to_string(const Rat& r) {
  return rat_num(r).str() + "/" + rat_den(r).str();
}

inline Int parse_int(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty integer literal");
  return Int(s);
}

/// Accepts "p" or "p/q".
inline Rat parse_rat(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rat(parse_int(s));
  Int num = parse_int(s.substr(0, slash));
  Int den = parse_int(s.substr(slash + 1));
  return make_rat(num, den);
}

inline Rat rat_pow(const Rat& base, long exp) {
  if (exp < 0) {
    if (base == 0) throw std::domain_error("inverse of zero");
    return rat_pow(Rat(1) / base, -exp);
  }
  Rat acc(1), b = base;
  long e = exp;
  while (e > 0) {
    if (e & 1) acc *= b;
    b *= b;
    e >>= 1;
  }
  return acc;
}

inline Int int_pow(const Int& base, unsigned exp) {
  Int acc(1), b = base;
  unsigned e = exp;
  while (e > 0) {
    if (e & 1) acc *= b;
    b *= b;
    e >>= 1;
  }
  return acc;
}

}  // namespace ncsymp

#endif  // NCSYMP_RATIONAL_HPP
