#pragma once

#include <stdexcept>
#include <string>

namespace connspace {

// Every failure mode surfaced by the library. Codes are stable; tests match on
// them rather than on message text.
enum class Errc {
    missing_empty_set,
    not_union_closed,
    missing_singleton,
    not_integral,
    size_limit_exceeded,
    family_size_limit_exceeded,
    ground_mismatch,
    not_connected,
    not_realizable,
    no_index_for_empty_space,
    invalid_partition,
    invalid_point,
    invalid_edge,
    not_irreducible,
    not_morphism,
    hom_too_large,
    search_too_large,
    parse_error,
    unknown_label,
    bad_argument,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    Errc code() const { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& message) {
    throw Error(code, message);
}

} // namespace connspace
