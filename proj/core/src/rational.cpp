#include "coadjoint/rational.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace coadjoint {

namespace {

bool is_integer_token(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

// mpz's string constructor takes "-6" but not "+6".
mpz_class parse_integer(const std::string& s) {
  return mpz_class(s[0] == '+' ? s.substr(1) : s);
}

}  // namespace

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) {
    if (!is_integer_token(text)) {
      throw std::invalid_argument("not a rational: '" + text + "'");
    }
    return Rational(parse_integer(text));
  }
  const std::string num = text.substr(0, slash);
  const std::string den = text.substr(slash + 1);
  if (!is_integer_token(num) || !is_integer_token(den)) {
    throw std::invalid_argument("not a rational: '" + text + "'");
  }
  mpz_class d = parse_integer(den);
  if (d == 0) {
    throw std::invalid_argument("zero denominator in '" + text + "'");
  }
  Rational r(parse_integer(num), d);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string to_string(const Vec& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ", ";
    os << to_string(v[i]);
  }
  os << ")";
  return os.str();
}

Vec parse_rational_list(const std::string& text) {
  Vec out;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, ',')) {
    out.push_back(parse_rational(token));
  }
  if (out.empty()) {
    throw std::invalid_argument("empty rational list");
  }
  return out;
}

}  // namespace coadjoint
