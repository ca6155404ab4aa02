#include "bcr/rational.hpp"

namespace bcr {

namespace {

bool is_decimal_integer(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9') return false;
  return true;
}

// The big-integer string constructor rejects an explicit leading '+'.
Int parse_int(const std::string& s) {
  return Int(s[0] == '+' ? s.substr(1) : s);
}

} // namespace

Rat rat_parse(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) {
    if (!is_decimal_integer(s))
      throw std::invalid_argument("not a rational: '" + s + "'");
    return Rat(parse_int(s));
  }
  std::string num = s.substr(0, slash), den = s.substr(slash + 1);
  if (!is_decimal_integer(num) || !is_decimal_integer(den))
    throw std::invalid_argument("not a rational: '" + s + "'");
  Int d = parse_int(den);
  if (d == 0) throw std::invalid_argument("zero denominator: '" + s + "'");
  return Rat(parse_int(num), d);
}

std::string rat_to_string(const Rat& r) {
  std::string out = rat_num(r).str();
  if (!rat_is_integer(r)) out += "/" + rat_den(r).str();
  return out;
}

Int factorial(unsigned n) {
  Int f = 1;
  for (unsigned i = 2; i <= n; ++i) f *= i;
  return f;
}

} // namespace bcr
