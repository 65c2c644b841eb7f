#pragma once

#include <stdexcept>
#include <string>

namespace rs2 {

// Error categories mirrored by the C API status codes.
enum class ErrorCode : int {
    invalid_argument = -1,
    io = -2,
    parse = -3,
    contract = -4,
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void throw_invalid(const std::string& what) {
    throw Error(ErrorCode::invalid_argument, what);
}

[[noreturn]] inline void throw_io(const std::string& what) {
    throw Error(ErrorCode::io, what);
}

[[noreturn]] inline void throw_parse(const std::string& what) {
    throw Error(ErrorCode::parse, what);
}

[[noreturn]] inline void throw_contract(const std::string& what) {
    throw Error(ErrorCode::contract, what);
}

}  // namespace rs2
