#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace kmw {

// Error codes double as CLI exit classes: "ParseError" exits 1, the
// internal-mismatch codes ("InternalMismatch", "NoWitness", "NoStep",
// "ChainNotFound") exit 3, every other code is a precondition violation
// and exits 2.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& what)
        : std::runtime_error(code + ": " + what), code_(std::move(code)) {}

    const std::string& code() const { return code_; }

private:
    std::string code_;
};

[[noreturn]] inline void fail(const std::string& code, const std::string& what) {
    throw Error(code, what);
}

inline void require(bool ok, const std::string& code, const std::string& what) {
    if (!ok) fail(code, what);
}

}  // namespace kmw
