#ifndef BCR_RATIONAL_HPP
#define BCR_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace bcr {

// Exact arbitrary-precision integers and rationals. Every quantity in this
// library is exact; there is no floating point anywhere. cpp_rational keeps
// values canonical (lowest terms, positive denominator, 0 = 0/1), which is
// exactly the contract the rest of the code relies on.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rat& r) { return numerator(r); }
inline Int rat_den(const Rat& r) { return denominator(r); }

inline bool rat_is_integer(const Rat& r) { return denominator(r) == 1; }

// Parses "p", "p/q" or surrounding-whitespace-free signed decimal strings.
// Throws std::invalid_argument on malformed input or zero denominator.
Rat rat_parse(const std::string& s);

// Canonical textual form: "p" when the denominator is 1, else "p/q".
std::string rat_to_string(const Rat& r);

// n! as a big integer (n >= 0).
Int factorial(unsigned n);

} // namespace bcr

#endif
