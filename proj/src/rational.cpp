#include "flagform/rational.hpp"

#include <cctype>

#include "flagform/errors.hpp"

namespace flagform {

namespace {

bool valid_integer(const std::string& s, size_t begin, size_t end) {
  if (begin >= end) return false;
  size_t i = begin;
  if (s[i] == '-') ++i;
  if (i >= end) return false;
  for (; i < end; ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

Rational parse_rational(const std::string& s) {
  size_t slash = s.find('/');
  bool ok;
  if (slash == std::string::npos) {
    ok = valid_integer(s, 0, s.size());
  } else {
    ok = valid_integer(s, 0, slash) && valid_integer(s, slash + 1, s.size()) &&
         s.find('/', slash + 1) == std::string::npos;
  }
  if (!ok) fail(ErrorCode::ParseError, "invalid rational literal: '" + s + "'");
  Rational r(s);
  if (r.get_den() == 0)
    fail(ErrorCode::ParseError, "zero denominator in rational: '" + s + "'");
  r.canonicalize();
  return r;
}

std::string rational_str(const Rational& r) { return r.get_str(); }

bool is_zero(const Rational& r) { return sgn(r) == 0; }

}  // namespace flagform
