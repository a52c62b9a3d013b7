#include "jaccoord/rat.hpp"

#include <cctype>

#include "jaccoord/errors.hpp"

namespace jaccoord {

std::string to_string(const Rat& r) { return r.get_str(); }

namespace {

Int parse_int(std::string_view text, std::size_t offset, bool allow_sign) {
  std::size_t i = 0;
  bool neg = false;
  if (allow_sign && i < text.size() && (text[i] == '-' || text[i] == '+')) {
    neg = text[i] == '-';
    ++i;
  }
  if (i == text.size()) throw SyntaxError(offset + i, "expected digits");
  for (std::size_t k = i; k < text.size(); ++k) {
    if (!std::isdigit(static_cast<unsigned char>(text[k])))
      throw SyntaxError(offset + k, "unexpected character in rational literal");
  }
  Int v(std::string(text.substr(i)), 10);
  return neg ? Int(-v) : v;
}

}  // namespace

Rat parse_rat(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rat(parse_int(text, 0, true));
  Int num = parse_int(text.substr(0, slash), 0, true);
  Int den = parse_int(text.substr(slash + 1), slash + 1, false);
  if (den == 0) throw SyntaxError(slash + 1, "zero denominator");
  return make_rat(num, den);
}

Rat pow(const Rat& r, unsigned long e) {
  Rat out;
  mpz_pow_ui(out.get_num_mpz_t(), r.get_num_mpz_t(), e);
  mpz_pow_ui(out.get_den_mpz_t(), r.get_den_mpz_t(), e);
  return out;
}

}  // namespace jaccoord
