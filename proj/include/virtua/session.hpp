#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "virtua/io.hpp"

namespace virtua {

// One CLI invocation: the ring, the loaded artifacts (already type-checked
// against it), and the run options.
struct Session {
    std::string subcommand;
    RingPtr ring;
    std::optional<FreeComplex> complex_chain;
    std::optional<Ideal> ideal;
    std::optional<Presentation> presentation;
    std::optional<Ideal> by_ideal;
    std::optional<Multidegree> degree;
    int index = 1;
    int maxlen = 0;  // 0: nvars + 1
    int fitting_j = -1;
    bool want_oracle = false;
    bool want_json = false;
    bool want_saturate = false;
    std::uint64_t seed = kDefaultSeed;
};

// Parses, validates, dispatches. Exit codes: 0 success / virtual,
// 1 negative verdict, 2 input error, 3 resource cap exceeded.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace virtua
