#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace cubiq::cli {

/// One invocation's structured output: ordered key/value pairs, printed one
/// per line as "key = value" or, in machine mode, as a single JSON object.
struct Record {
    std::vector<std::pair<std::string, std::string>> kv;

    void add(std::string key, std::string value) {
        kv.emplace_back(std::move(key), std::move(value));
    }
    std::string text() const;
    std::string json() const;
};

/// Dispatch a full command line (without argv[0]). Exit codes: 0 success,
/// 1 input error (with a machine-readable error record on out), 2 internal
/// invariant violation.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cubiq::cli
