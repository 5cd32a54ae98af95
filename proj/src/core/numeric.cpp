#include "core/numeric.hpp"

#include <limits>

#include "core/error.hpp"

namespace homcert {
namespace {

bool is_decimal_integer(std::string_view text) {
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) text.remove_prefix(1);
  if (text.empty()) return false;
  for (char c : text) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const auto num_text = text.substr(0, slash);
  const auto den_text = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
  if (!is_decimal_integer(num_text) || !is_decimal_integer(den_text) || den_text.front() == '-' ||
      den_text.front() == '+') {
    throw Error(ErrorCode::invalid_input, "malformed rational '" + std::string(text) + "'");
  }
  const auto strip_plus = [](std::string_view s) {
    return std::string(!s.empty() && s.front() == '+' ? s.substr(1) : s);
  };
  BigCount num(strip_plus(num_text), 10);
  BigCount den(strip_plus(den_text), 10);
  if (den == 0) throw Error(ErrorCode::invalid_input, "zero denominator in '" + std::string(text) + "'");
  Rational value(num, den);
  value.canonicalize();
  return value;
}

std::string to_string(const BigCount& value) { return value.get_str(10); }

std::string to_string(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str(10);
  return value.get_num().get_str(10) + "/" + value.get_den().get_str(10);
}

BigCount pow(const BigCount& base, std::uint64_t exponent) {
  if (exponent > std::numeric_limits<unsigned long>::max()) {
    throw Error(ErrorCode::cap_exceeded, "exponent too large");
  }
  BigCount result;
  mpz_pow_ui(result.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(exponent));
  return result;
}

Rational pow(const Rational& base, std::uint64_t exponent) {
  Rational result(pow(BigCount(base.get_num()), exponent), pow(BigCount(base.get_den()), exponent));
  result.canonicalize();
  return result;
}

BigCount lcm(const BigCount& a, const BigCount& b) {
  BigCount result;
  mpz_lcm(result.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return result;
}

}  // namespace homcert
