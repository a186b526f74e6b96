#pragma once

#include "sumfree/taxonomy.hpp"

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace sumfree {

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitVerificationFailed = 2;

/// Seams for fault-injection tests. Defaults reproduce normal behaviour.
struct CliHooks {
    std::function<void()> before_cache_rename;
    Classifier classifier;
};

/// Runs one command. args excludes the program name. Reports go to out,
/// human summaries and errors to err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
            const CliHooks& hooks = {});

}  // namespace sumfree
