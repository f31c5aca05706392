#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace invg {

// A well-formed request that the mathematics rejects (illegal reflection,
// non-simple input where a simple one is required, ...).
struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input exceeds the size envelope of an exhaustive operation.
struct SizeCapError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed text or JSON payload.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace caps {

// Raise every soft cap to `n` (clamped to each operation's hard cap).
// Zero restores the defaults. Intended to be set once at program start.
void set_override(int n);
int override_value();

// Throws SizeCapError if n exceeds the effective cap for `op`.
void require(std::string_view op, int n, int soft, int hard);

}  // namespace caps
}  // namespace invg
