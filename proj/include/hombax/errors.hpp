#pragma once

#include <stdexcept>
#include <string>

namespace hombax {

// Every failure the engine can signal. Codes in the "malformed input"
// group map to CLI exit 2, the "failed hypothesis" group to exit 1.
enum class Errc {
  // malformed input / usage
  parse_error,
  schema_error,
  shape_error,
  dim_mismatch,
  field_mismatch,
  division_by_zero,
  missing_companion,
  space_too_large,
  unknown_name,
  unsupported_dim,
  invalid_input,
  // failed hypothesis of a construction
  not_associative,
  not_morphism,
  not_weighted_rb,
  not_yb_pair,
  not_pseudotwistor,
  not_invariant,
  invalid_system,
};

const char* errc_name(Errc c);

// True for codes that indicate a failed mathematical hypothesis rather
// than malformed input.
bool errc_is_check_failure(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, std::string message)
      : std::runtime_error(std::move(message)), code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& message) {
  throw Error(code, std::string(errc_name(code)) + ": " + message);
}

}  // namespace hombax
