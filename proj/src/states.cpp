#include "walktransfer/states.hpp"

#include <charconv>
#include <cmath>
#include <string>
#include <vector>

#include <json.hpp>

namespace wt {

namespace {

void check_index(int n, int a) {
  if (a < 0 || a >= n) {
    throw DomainError("vertex " + std::to_string(a) + " out of range for " + std::to_string(n) +
                      " vertices");
  }
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (true) {
    const std::size_t next = s.find(sep, pos);
    out.push_back(s.substr(pos, next == std::string_view::npos ? std::string_view::npos : next - pos));
    if (next == std::string_view::npos) break;
    pos = next + 1;
  }
  return out;
}

int parse_int(std::string_view s, std::string_view whole) {
  int value = 0;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, value);
  if (ec != std::errc() || ptr != end || s.empty()) {
    throw DomainError("bad vertex index in state '" + std::string(whole) + "'");
  }
  return value;
}

double parse_real(std::string_view s, std::string_view whole) {
  std::string copy(s);
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(copy, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != copy.size() || !std::isfinite(value)) {
    throw DomainError("bad coefficient in state '" + std::string(whole) + "'");
  }
  return value;
}

}  // namespace

PureState PureState::from_vector(Vector v) {
  if (v.size() == 0) throw DomainError("state vector is empty");
  if (!v.allFinite()) throw DomainError("state vector has non-finite entries");
  if (std::abs(v.norm() - 1.0) > 1e-12) throw DomainError("state vector is not a unit vector");
  return PureState(std::move(v));
}

PureState PureState::normalized(Vector v) {
  if (v.size() == 0) throw DomainError("state vector is empty");
  if (!v.allFinite()) throw DomainError("state vector has non-finite entries");
  const double norm = v.norm();
  if (norm == 0.0) throw DomainError("state vector is zero");
  return PureState(v / norm);
}

PureState vertex_state(int n, int a) {
  check_index(n, a);
  Vector v = Vector::Zero(n);
  v(a) = 1.0;
  return PureState::from_vector(std::move(v));
}

PureState s_pair_state(int n, int a, int b, double s) {
  check_index(n, a);
  check_index(n, b);
  if (a == b) throw DomainError("pair states need two distinct vertices");
  if (s == 0.0 || !std::isfinite(s)) throw DomainError("pair coefficient must be finite and nonzero");
  Vector v = Vector::Zero(n);
  const double scale = 1.0 / std::sqrt(1.0 + s * s);
  v(a) = scale;
  v(b) = s * scale;
  return PureState::from_vector(std::move(v));
}

PureState parse_state(std::string_view text, int n) {
  if (!text.empty() && text.front() == '[') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception&) {
      throw DomainError("state vector is not valid JSON");
    }
    if (!j.is_array() || static_cast<int>(j.size()) != n) {
      throw DomainError("state vector must be a JSON array of " + std::to_string(n) + " numbers");
    }
    Vector v(n);
    for (int i = 0; i < n; ++i) {
      if (!j[static_cast<std::size_t>(i)].is_number()) throw DomainError("state vector entries must be numbers");
      v(i) = j[static_cast<std::size_t>(i)].get<double>();
    }
    return PureState::normalized(std::move(v));
  }

  const std::size_t colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw DomainError("state '" + std::string(text) + "' should look like v:a, plus:a,b, pair:a,b or spair:a,b,s");
  }
  const std::string_view tag = text.substr(0, colon);
  const auto args = split(text.substr(colon + 1), ',');
  if (tag == "v" && args.size() == 1) return vertex_state(n, parse_int(args[0], text));
  if (tag == "plus" && args.size() == 2) {
    return plus_state(n, parse_int(args[0], text), parse_int(args[1], text));
  }
  if (tag == "pair" && args.size() == 2) {
    return pair_state(n, parse_int(args[0], text), parse_int(args[1], text));
  }
  if (tag == "spair" && args.size() == 3) {
    return s_pair_state(n, parse_int(args[0], text), parse_int(args[1], text), parse_real(args[2], text));
  }
  throw DomainError("unrecognised state '" + std::string(text) + "'");
}

}  // namespace wt
