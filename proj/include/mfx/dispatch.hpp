#pragma once

#include "mfx/json_io.hpp"

namespace mfx {

// Exit-code convention: 0 verified-true/success, 1 verified-false,
// 2 malformed input or internal failure.
struct DispatchResult {
    int exit_code = 0;
    Json output;  // {"op", "ok", "result"} (plus "error" on failure)
};

// Runs the named operation ("gb", "mod.check-exact", "cert.theorem0", ...)
// on a JSON input carrying the ring context. Never throws: every error is
// folded into the result per the exit-code convention. When the input has a
// "truncation_oracle" degree, exactness checks additionally run the
// finite-field truncated cross-check and must agree with it.
DispatchResult dispatch(const std::string& op, const Json& input);

// Sorted list of the operation names dispatch understands.
std::vector<std::string> dispatch_ops();

}  // namespace mfx
