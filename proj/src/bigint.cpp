#include "pellcf/bigint.hpp"

#include "pellcf/errors.hpp"

namespace pellcf {

BigInt parse_bigint(std::string_view text) {
  std::string s(text);
  std::size_t digits_from = (!s.empty() && s[0] == '-') ? 1 : 0;
  if (s.size() == digits_from) throw DomainError("expected an integer, got '" + s + "'");
  for (std::size_t i = digits_from; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') throw DomainError("expected an integer, got '" + s + "'");
  }
  return BigInt(s, 10);
}

}  // namespace pellcf
