#include "walktransfer/time_expr.hpp"

#include <charconv>
#include <cmath>
#include <string>

#include "walktransfer/types.hpp"

namespace wt {

namespace {

[[noreturn]] void bad_time(std::string_view text) {
  throw DomainError("cannot parse time '" + std::string(text) + "'");
}

long long parse_integer(std::string_view s, std::string_view whole) {
  long long value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) bad_time(whole);
  return value;
}

double parse_decimal(std::string_view s, std::string_view whole) {
  const std::string copy(s);
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(copy, &used);
  } catch (const std::exception&) {
    bad_time(whole);
  }
  if (used != copy.size() || !std::isfinite(value)) bad_time(whole);
  return value;
}

}  // namespace

double parse_time(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (c != ' ') s.push_back(c);
  }
  const auto at = s.find("pi");
  if (at == std::string::npos) return parse_decimal(s, text);

  std::string_view head(s.data(), at);
  std::string_view tail(s.data() + at + 2, s.size() - at - 2);
  double sign = 1.0;
  if (!head.empty() && (head.front() == '-' || head.front() == '+')) {
    if (head.front() == '-') sign = -1.0;
    head.remove_prefix(1);
  }
  if (!head.empty() && head.back() == '*') head.remove_suffix(1);
  long long num = head.empty() ? 1 : parse_integer(head, text);
  long long den = 1;
  if (!tail.empty() && tail.front() == '*') {
    tail.remove_prefix(1);
    const auto slash = tail.find('/');
    num *= parse_integer(tail.substr(0, slash), text);
    tail = slash == std::string_view::npos ? std::string_view{} : tail.substr(slash);
  }
  if (!tail.empty()) {
    if (tail.front() != '/') bad_time(text);
    den = parse_integer(tail.substr(1), text);
  }
  if (den <= 0) bad_time(text);
  return sign * static_cast<double>(num) * kPi / static_cast<double>(den);
}

}  // namespace wt
