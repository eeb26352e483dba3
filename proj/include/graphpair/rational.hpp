#pragma once

#include <boost/rational.hpp>

#include <charconv>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace graphpair {

using rational = boost::rational<std::int64_t>;

inline std::string to_string(const rational& q) {
  std::ostringstream os;
  os << q.numerator();
  if (q.denominator() != 1) os << '/' << q.denominator();
  return os.str();
}

inline std::int64_t parse_int64(std::string_view s, std::string_view whole) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
    throw std::invalid_argument("not a rational: '" + std::string(whole) + "'");
  return v;
}

// "3", "-2/5"
inline rational parse_rational(std::string_view s) {
  auto slash = s.find('/');
  if (slash == std::string_view::npos) return rational(parse_int64(s, s));
  std::int64_t num = parse_int64(s.substr(0, slash), s);
  std::int64_t den = parse_int64(s.substr(slash + 1), s);
  if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(s) + "'");
  return rational(num, den);
}

inline std::vector<rational> parse_rational_list(const std::string& s) {
  std::vector<rational> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) throw std::invalid_argument("empty entry in rational list");
    out.push_back(parse_rational(item));
  }
  return out;
}

}  // namespace graphpair
