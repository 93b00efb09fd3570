#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>
#include <vector>

namespace siltgeo {

/* Exact rational scalar. Every numeric value in the library is one of
   these; there is no floating point anywhere in the computation path.
   Expression templates are off so values behave like plain scalars. */
using Rat =
    boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                  boost::multiprecision::et_off>;
using BigInt =
    boost::multiprecision::number<boost::multiprecision::gmp_int,
                                  boost::multiprecision::et_off>;

using RatVec = std::vector<Rat>;
using IntVec = std::vector<long>;

std::string rat_to_string(const Rat& r);

/* Parses "p", "-p" or "p/q". Throws std::invalid_argument on junk. */
Rat rat_from_string(const std::string& s);

}  // namespace siltgeo
