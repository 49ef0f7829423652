#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace srdef {

/// Machine-readable failure categories. The CLI maps these onto exit codes
/// and the `error.code` field of its JSON output.
enum class ErrorCode {
    capacity,     // vertex index or count beyond the fixed VertexSet width
    domain,       // precondition on the mathematical input violated
    usage,        // malformed identifier, flag or argument
    unsupported,  // outside what the library can decide (e.g. dim >= 4 manifolds)
    resource,     // configured caps or budgets exceeded
    parse,        // malformed facet file line
    io,           // unreadable file
};

std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace srdef
