// Command-line interface.
//
// Subcommands: validate, invariants, gradings, homology, lambda,
// distinguish, tau, move, front.  All output is deterministic: identical
// inputs and flags produce byte-identical bytes on stdout/stderr.
//
// Exit codes: 0 success, 1 domain error (invalid diagram data, illegal
// move, violated mathematical audit), 2 usage error, 3 resource limit.
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gridhfk {

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace gridhfk
