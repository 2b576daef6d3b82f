#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

#include <sstream>
#include <stdexcept>
#include <string>

namespace nat {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::rational<Int>;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Input violates a precondition (bad degree, non-generating set, ...).
struct InvalidInput : Error {
  using Error::Error;
};

/// A configured desk-scale bound was hit; the input is fine, the engine
/// refuses to thrash.  The message names the stage that gave up.
struct BoundExceeded : Error {
  using Error::Error;
};

struct ParseError : Error {
  using Error::Error;
};

inline std::string to_string(const Int& v) { return v.str(); }

/// "3", "-3" or "p/q" with q > 0 after normalization.
inline std::string to_string(const Rat& r) {
  if (r.denominator() == 1) return r.numerator().str();
  return r.numerator().str() + "/" + r.denominator().str();
}

inline Rat parse_rational(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(Int(s), Int(1));
    Int num(s.substr(0, slash));
    Int den(s.substr(slash + 1));
    if (den == 0) throw ParseError("zero denominator in '" + s + "'");
    return Rat(num, den);
  } catch (const std::runtime_error&) {
    throw ParseError("not a rational number: '" + s + "'");
  }
}

inline double to_double(const Rat& r) {
  return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

}  // namespace nat
