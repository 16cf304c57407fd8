#pragma once

// Run configuration: module defaults, optional overrides from a line-oriented
// key=value file, and the pinned per-procedure bounds used by the claims.

#include <fstream>
#include <optional>
#include <stdexcept>
#include <string>

#include "semiflow/rational.hpp"

namespace semiflow {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  // module defaults; explicit overrides win everywhere, including over the
  // per-claim pinned bounds
  Rational epsilon{1, 100};
  long long scale_d = 20;
  long long affine_d = 50;
  long long twist_cap = 200;
  long long horizon = 18;
  long long max_k = 512;
  std::uint64_t seed = 12345;
  std::uint64_t samples = 100000;
  std::string format = "text";  // json | csv | text
  std::string out;              // empty = stdout

  bool epsilon_overridden = false;
  bool scale_overridden = false;
  bool affine_overridden = false;
  bool twist_overridden = false;
  bool horizon_overridden = false;

  // claim procedures pin their own bound unless the user overrode the family
  long long affine_bound_or(long long pinned) const {
    return affine_overridden ? affine_d : pinned;
  }
  long long twist_bound_or(long long pinned) const {
    return twist_overridden ? twist_cap : pinned;
  }
  long long scale_bound_or(long long pinned) const {
    return scale_overridden ? scale_d : pinned;
  }
  long long horizon_or(long long pinned) const {
    return horizon_overridden ? horizon : pinned;
  }

  void set(const std::string& key, const std::string& value) {
    auto to_ll = [&](const std::string& v) -> long long {
      Rational r = Rational::parse(v);
      if (!r.is_integer() || r < Rational(1) || r > Rational(100000000))
        throw std::invalid_argument("expected a positive integer");
      return static_cast<long long>(r.num());
    };
    if (key == "epsilon") {
      Rational e = Rational::parse(value);
      if (!(e > Rational(0))) throw std::invalid_argument("epsilon must be positive");
      epsilon = e;
      epsilon_overridden = true;
    } else if (key == "scale_d") {
      scale_d = to_ll(value);
      scale_overridden = true;
    } else if (key == "affine_d") {
      affine_d = to_ll(value);
      affine_overridden = true;
    } else if (key == "twist_cap") {
      twist_cap = to_ll(value);
      twist_overridden = true;
    } else if (key == "horizon") {
      horizon = to_ll(value);
      horizon_overridden = true;
    } else if (key == "max_k") {
      max_k = to_ll(value);
    } else if (key == "seed") {
      seed = static_cast<std::uint64_t>(to_ll(value));
    } else if (key == "samples") {
      samples = static_cast<std::uint64_t>(to_ll(value));
    } else if (key == "format") {
      if (value != "json" && value != "csv" && value != "text")
        throw std::invalid_argument("format must be json, csv or text");
      format = value;
    } else if (key == "out") {
      out = value;
    } else {
      throw std::invalid_argument("unknown key '" + key + "'");
    }
  }
};

// Line-oriented key=value; blank lines and '#' comments allowed. Errors name
// the offending line.
inline RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config: cannot open '" + path + "'");
  RunConfig cfg;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string trimmed;
    for (char c : line)
      if (c != ' ' && c != '\t' && c != '\r') trimmed += c;
    if (trimmed.empty() || trimmed[0] == '#') continue;
    auto eq = trimmed.find('=');
    if (eq == std::string::npos || eq == 0)
      throw ConfigError("config: line " + std::to_string(lineno) +
                        ": expected key=value");
    try {
      cfg.set(trimmed.substr(0, eq), trimmed.substr(eq + 1));
    } catch (const std::exception& e) {
      throw ConfigError("config: line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return cfg;
}

}  // namespace semiflow
