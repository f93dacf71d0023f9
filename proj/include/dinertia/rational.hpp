#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace dinertia {

using BigInt = boost::multiprecision::cpp_int;

/// Exact arbitrary-precision rational. Always in lowest terms with a
/// positive denominator; arithmetic never overflows or rounds.
using Rational = boost::multiprecision::cpp_rational;

class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what, int line = 0)
      : std::runtime_error(what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

namespace detail {
inline bool is_plain_integer(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}
}  // namespace detail

/// Parses "<int>" or "<int>/<int>" in decimal. Throws ParseError on anything
/// else (including a zero denominator).
inline Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    if (!detail::is_plain_integer(text))
      throw ParseError("bad rational literal: '" + std::string(text) + "'");
    return Rational(BigInt(std::string(text)));
  }
  const std::string_view num = text.substr(0, slash);
  const std::string_view den = text.substr(slash + 1);
  if (!detail::is_plain_integer(num) || !detail::is_plain_integer(den))
    throw ParseError("bad rational literal: '" + std::string(text) + "'");
  const BigInt d{std::string(den)};
  if (d == 0)
    throw ParseError("zero denominator in '" + std::string(text) + "'");
  return Rational(BigInt(std::string(num)), d);
}

/// Formats as "p" for integers, "p/q" otherwise.
inline std::string to_string(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

inline bool is_integer(const Rational& q) { return denominator(q) == 1; }

inline int sign(const Rational& q) { return q < 0 ? -1 : (q > 0 ? 1 : 0); }

}  // namespace dinertia
