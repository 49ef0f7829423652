#include "srdef/error.hpp"

namespace srdef {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::capacity: return "capacity";
        case ErrorCode::domain: return "domain";
        case ErrorCode::usage: return "usage";
        case ErrorCode::unsupported: return "unsupported";
        case ErrorCode::resource: return "resource";
        case ErrorCode::parse: return "parse";
        case ErrorCode::io: return "io";
    }
    return "unknown";
}

}  // namespace srdef
