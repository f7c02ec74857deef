#pragma once

#include <cstdint>
#include <ostream>

namespace mpar::cli {

struct VerifyOptions {
    std::uint64_t seed = 1;
    int sizes = 40;               // cases per suite
    bool flip_kasteleyn_sign = false;
};

// Prints one row per suite; returns the number of failed suites.
int run_verify(const VerifyOptions& opt, std::ostream& out);

}  // namespace mpar::cli
