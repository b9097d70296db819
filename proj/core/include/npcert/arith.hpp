#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace npcert {

// All lattice and cohomology arithmetic is arbitrary-precision; all
// comparisons of fractional quantities go through Rat. No floating point.
// Expression templates are off so every operator yields a plain value.
using Int = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                          boost::multiprecision::et_off>;
using Rat =
    boost::multiprecision::number<boost::multiprecision::cpp_rational_backend,
                                  boost::multiprecision::et_off>;

inline std::string str(const Int& v) { return v.str(); }

inline std::string str(const Rat& v) {
  const Int num = boost::multiprecision::numerator(v);
  const Int den = boost::multiprecision::denominator(v);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

// Smallest integer >= v.
inline Int ceil_rat(const Rat& v) {
  const Int num = boost::multiprecision::numerator(v);
  const Int den = boost::multiprecision::denominator(v);
  Int q = num / den;
  if (q * den < num) ++q;
  return q;
}

}  // namespace npcert
