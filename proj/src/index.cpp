#include "tornheim/index.hpp"

namespace tornheim {

Sign parse_sign(const std::string& text) {
  if (text == "+" || text == "1" || text == "+1") return Sign::plus;
  if (text == "-" || text == "-1") return Sign::minus;
  throw std::invalid_argument("sign must be + or -, got '" + text + "'");
}

std::string to_string(const SignedIndex& k) {
  const std::string v = std::to_string(k.value);
  return k.barred() ? "bar(" + v + ")" : v;
}

std::string to_string(const SignedExponent& k) {
  const std::string v = k.value.to_string();
  return k.barred() ? "bar(" + v + ")" : v;
}

}  // namespace tornheim
