#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace accessnet {

// Domain failure with a stable machine-readable code (surfaces in CLI error
// objects and test assertions). Maps to exit code 1.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

// Malformed input file/stream or bad usage. Maps to exit code 2.
class ParseError : public Error {
public:
    using Error::Error;
};

}  // namespace accessnet
