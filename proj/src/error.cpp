#include "llike/error.hpp"

namespace llike {

const char* errc_name(Errc code) {
    switch (code) {
    case Errc::not_coprime: return "NotCoprime";
    case Errc::element_too_small: return "ElementTooSmall";
    case Errc::empty_set: return "EmptySet";
    case Errc::bad_params: return "BadParams";
    case Errc::not_in_semigroup: return "NotInSemigroup";
    case Errc::overflow: return "Overflow";
    case Errc::arity_too_large: return "ArityTooLarge";
    case Errc::range_too_large: return "RangeTooLarge";
    case Errc::set_bound_exceeded: return "SetBoundExceeded";
    case Errc::degenerate_spec: return "DegenerateSpec";
    case Errc::invariant_violation: return "InvariantViolation";
    case Errc::io: return "IoError";
    }
    return "Unknown";
}

Error::Error(Errc code, const std::string& details)
    : std::runtime_error(std::string(errc_name(code)) + "(" + details + ")"), code_(code) {}

Error not_coprime(std::uint64_t a, std::uint64_t b) {
    return Error(Errc::not_coprime, std::to_string(a) + "," + std::to_string(b));
}

Error element_too_small(std::uint64_t a) {
    return Error(Errc::element_too_small, std::to_string(a));
}

} // namespace llike
