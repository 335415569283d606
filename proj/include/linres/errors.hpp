#pragma once

#include <stdexcept>
#include <string>

namespace linres {

enum class errc {
  invalid_input,              // malformed parameters or clutter data
  parse_error,                // text/json input could not be parsed
  zero_ideal,                 // Betti data requested for the zero ideal
  capacity_exceeded,          // input beyond the documented exact-computation caps
  unsupported_shape,          // operation requires dim(clique complex) == d-1
  not_pseudo_manifold,        // orientability asked for a non-pseudo-manifold
  non_integral_betti,         // closed form produced a negative or fractional value
  inconsistent_input,         // formula profile does not match its case
  invalid_glue,               // identification set fails the clique condition
  fixture_validation_failed,  // embedded triangulation failed its invariants
};

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  errc code() const { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

}  // namespace linres
