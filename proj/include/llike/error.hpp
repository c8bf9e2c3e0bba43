// error.hpp
// Error type shared by every llike module. Each failure carries a kind
// so callers (and the CLI's exit-code mapping) can branch on it, plus a
// message in the "Kind(details)" form printed to users.

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace llike {

enum class Errc {
    not_coprime,
    element_too_small,
    empty_set,
    bad_params,
    not_in_semigroup,
    overflow,
    arity_too_large,
    range_too_large,
    set_bound_exceeded,
    degenerate_spec,
    invariant_violation,
    io,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& details);

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

// Convenience constructors for the errors that name offending values.
Error not_coprime(std::uint64_t a, std::uint64_t b);
Error element_too_small(std::uint64_t a);

} // namespace llike
