#include "covagram/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace covagram {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational make_rational(long num, long den) {
  return make_rational(BigInt(num), BigInt(den));
}

Rational parse_rational(std::string_view text) {
  size_t begin = text.find_first_not_of(" \t\r\n");
  size_t end = text.find_last_not_of(" \t\r\n");
  if (begin == std::string_view::npos)
    throw std::invalid_argument("empty rational literal");
  std::string s(text.substr(begin, end - begin + 1));

  bool negative = false;
  std::string_view body = s;
  if (!body.empty() && (body.front() == '+' || body.front() == '-')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }

  auto fail = [&]() -> Rational {
    throw std::invalid_argument("cannot parse rational literal: '" + s + "'");
  };

  if (size_t slash = body.find('/'); slash != std::string_view::npos) {
    std::string_view num = body.substr(0, slash);
    std::string_view den = body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) return fail();
    Rational q = make_rational(BigInt(std::string(num)), BigInt(std::string(den)));
    return negative ? Rational(-q) : q;
  }

  if (size_t dot = body.find('.'); dot != std::string_view::npos) {
    std::string_view ip = body.substr(0, dot);
    std::string_view fp = body.substr(dot + 1);
    if (ip.empty() && fp.empty()) return fail();
    if (!ip.empty() && !all_digits(ip)) return fail();
    if (!fp.empty() && !all_digits(fp)) return fail();
    BigInt scale = 1;
    for (size_t i = 0; i < fp.size(); ++i) scale *= 10;
    BigInt whole = ip.empty() ? BigInt(0) : BigInt(std::string(ip));
    BigInt frac = fp.empty() ? BigInt(0) : BigInt(std::string(fp));
    Rational q = make_rational(whole * scale + frac, scale);
    return negative ? Rational(-q) : q;
  }

  if (!all_digits(body)) return fail();
  Rational q{BigInt(std::string(body))};
  return negative ? Rational(-q) : q;
}

std::string format_rational(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

std::string format_decimal(const Rational& value, int digits) {
  if (digits < 0) throw std::invalid_argument("negative digit count");
  BigInt num = value.get_num();
  BigInt den = value.get_den();
  bool negative = num < 0;
  if (negative) num = -num;
  BigInt scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  // round(num * scale / den), ties away from zero
  BigInt scaled = num * scale;
  BigInt q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), scaled.get_mpz_t(), den.get_mpz_t());
  if (2 * r >= den) q += 1;
  std::string body = q.get_str();
  std::string out;
  if (digits == 0) {
    out = body;
  } else {
    if (body.size() <= static_cast<size_t>(digits))
      body.insert(0, static_cast<size_t>(digits) + 1 - body.size(), '0');
    out = body.substr(0, body.size() - digits) + "." + body.substr(body.size() - digits);
  }
  if (negative && q != 0) out.insert(0, 1, '-');
  return out;
}

BigInt floor_of(const Rational& value) {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), value.get_num().get_mpz_t(), value.get_den().get_mpz_t());
  return q;
}

BigInt ceil_of(const Rational& value) {
  BigInt q;
  mpz_cdiv_q(q.get_mpz_t(), value.get_num().get_mpz_t(), value.get_den().get_mpz_t());
  return q;
}

}  // namespace covagram
