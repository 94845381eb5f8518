#include "dessinkit/caps.hpp"

#include <cstdlib>
#include <string>

#include "dessinkit/error.hpp"

namespace dessinkit {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

mpz_class parse_positive(std::string_view key, std::string_view value) {
  mpz_class out;
  if (value.empty() || out.set_str(std::string(value), 10) != 0 || out <= 0) {
    fail(ErrorCode::SyntaxError,
         "cap '" + std::string(key) + "' needs a positive integer, got '" + std::string(value) + "'");
  }
  return out;
}

std::uint64_t to_u64(std::string_view key, const mpz_class& v) {
  if (!v.fits_ulong_p()) {
    fail(ErrorCode::SyntaxError, "cap '" + std::string(key) + "' is too large");
  }
  return v.get_ui();
}

}  // namespace

Caps parse_caps(std::string_view spec, Caps base) {
  while (!spec.empty()) {
    auto comma = spec.find(',');
    auto item = trim(spec.substr(0, comma));
    spec = comma == std::string_view::npos ? std::string_view{} : spec.substr(comma + 1);
    if (item.empty()) continue;
    auto eq = item.find('=');
    if (eq == std::string_view::npos) {
      fail(ErrorCode::SyntaxError, "cap entry '" + std::string(item) + "' lacks '='");
    }
    auto key = trim(item.substr(0, eq));
    auto value = parse_positive(key, trim(item.substr(eq + 1)));
    if (key == "degree") {
      base.max_degree = to_u64(key, value);
    } else if (key == "transversal_bytes") {
      base.max_transversal_bytes = to_u64(key, value);
    } else if (key == "group_order") {
      base.max_group_order = value;
    } else if (key == "stage_size") {
      base.max_stage_size = to_u64(key, value);
    } else if (key == "expand_degree") {
      base.max_expand_degree = to_u64(key, value);
    } else if (key == "value_bits") {
      base.max_value_bits = to_u64(key, value);
    } else {
      fail(ErrorCode::SyntaxError, "unknown cap '" + std::string(key) + "'");
    }
  }
  return base;
}

Caps caps_from_env() {
  const char* env = std::getenv("DESSINKIT_CAPS");
  return env ? parse_caps(env) : Caps{};
}

}  // namespace dessinkit
