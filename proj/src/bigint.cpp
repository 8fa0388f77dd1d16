#include "stern/bigint.hpp"

#include <cctype>
#include <stdexcept>

namespace diatomic {

Integer parse_natural(std::string_view text) {
  int base = 10;
  std::string_view digits = text;
  if (digits.size() > 2 && digits[0] == '0' && (digits[1] == 'x' || digits[1] == 'X')) {
    base = 16;
    digits.remove_prefix(2);
  }
  if (digits.empty()) throw std::invalid_argument("empty number");
  for (char ch : digits) {
    const auto uc = static_cast<unsigned char>(ch);
    const bool ok = base == 16 ? std::isxdigit(uc) != 0 : std::isdigit(uc) != 0;
    if (!ok) throw std::invalid_argument("not a natural number: '" + std::string(text) + "'");
  }
  Integer value;
  if (value.set_str(std::string(digits), base) != 0)
    throw std::invalid_argument("not a natural number: '" + std::string(text) + "'");
  return value;
}

std::string to_string(const Integer& value) { return value.get_str(10); }

}  // namespace diatomic
