#pragma once

// Command-line front end: eval, check and suite subcommands.
//
// Exit codes: 0 success or HOLDS, 1 VIOLATED, 2 usage or parse error,
// 3 domain, constraint or evaluation error, 4 HYPOTHESIS_FAILED.

#include <iosfwd>
#include <map>
#include <string>
#include <string_view>

#include "lfi/errors.hpp"
#include "lfi/functional.hpp"

namespace lfi {

/// Missing or malformed command-line input.
class UsageError : public Error {
public:
    using Error::Error;
};

/// Builds a functional from a kind and named parameters (alpha, beta, eta, mu,
/// q, t, a, b, n, K, panels, points, weights). List values use ';' or ' '.
FunctionalSpec build_functional(FunctionalKind kind, const std::map<std::string, std::string>& params);

/// "kind:key=value,key=value", e.g. "riemann:a=0,b=1" or "discrete:points=1;2".
FunctionalSpec parse_functional(std::string_view descriptor);

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace lfi
