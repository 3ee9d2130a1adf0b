#include "ttkc/numeric.hpp"

#include <cctype>
#include <stdexcept>

namespace ttkc {

rational parse_rational(const std::string &text) {
  if (text.empty())
    throw std::invalid_argument("empty number");
  auto dot = text.find('.');
  if (dot == std::string::npos) {
    for (std::size_t i = 0; i < text.size(); ++i) {
      char c = text[i];
      if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '/' ||
            (i == 0 && (c == '-' || c == '+'))))
        throw std::invalid_argument("bad number '" + text + "'");
    }
    if (text.back() == '/' || text.front() == '/')
      throw std::invalid_argument("bad number '" + text + "'");
    rational q(text);
    if (q.get_den() == 0)
      throw std::invalid_argument("zero denominator in '" + text + "'");
    q.canonicalize();
    return q;
  }
  // Decimal: digits '.' digits, converted exactly.
  std::string whole = text.substr(0, dot);
  std::string frac = text.substr(dot + 1);
  bool negative = !whole.empty() && whole.front() == '-';
  if (negative || (!whole.empty() && whole.front() == '+'))
    whole.erase(0, 1);
  if (whole.empty() && frac.empty())
    throw std::invalid_argument("bad number '" + text + "'");
  for (char c : whole + frac)
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw std::invalid_argument("bad number '" + text + "'");
  mpz_class num(whole.empty() ? std::string("0") : whole);
  mpz_class den = 1;
  for (char c : frac) {
    num = num * 10 + (c - '0');
    den *= 10;
  }
  rational q(negative ? mpz_class(-num) : num, den);
  q.canonicalize();
  return q;
}

} // namespace ttkc
