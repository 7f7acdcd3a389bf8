#pragma once

#include <stdexcept>
#include <string>

namespace qyang {

enum class errc {
    invalid_index,
    size_mismatch,
    not_in_centralizer,
    undefined_degree,
    parse_error,
    config_error,
    invalid_argument,
};

class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    errc code() const { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw Error(code, what); }

inline const char* errc_name(errc c) {
    switch (c) {
        case errc::invalid_index: return "invalid-index";
        case errc::size_mismatch: return "size-mismatch";
        case errc::not_in_centralizer: return "not-in-centralizer";
        case errc::undefined_degree: return "undefined-degree";
        case errc::parse_error: return "parse-error";
        case errc::config_error: return "config-error";
        case errc::invalid_argument: return "invalid-argument";
    }
    return "unknown";
}

}  // namespace qyang
