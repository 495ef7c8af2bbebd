#include "hilbert/rational.hpp"

namespace hilbert {

Rat rat_from_string(std::string_view text) {
  if (text.empty()) fail(Errc::ParseError, "empty rational literal");
  for (char ch : text) {
    bool ok = (ch >= '0' && ch <= '9') || ch == '/' || ch == '-' || ch == '+';
    if (!ok)
      fail(Errc::ParseError,
           "invalid rational literal '" + std::string(text) + "' (floats are not accepted)");
  }
  mpq_class value;
  if (value.set_str(std::string(text), 10) != 0)
    fail(Errc::ParseError, "invalid rational literal '" + std::string(text) + "'");
  if (value.get_den() == 0)
    fail(Errc::ParseError, "zero denominator in '" + std::string(text) + "'");
  value.canonicalize();
  return value;
}

std::string rat_to_string(const Rat& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

}  // namespace hilbert
