#pragma once

#include <stdexcept>
#include <string>

namespace shiftlab {

// Every failure the library can signal, coarse enough to map 1:1 onto the
// C API status codes.  `internal` is reserved for broken invariants (a
// coherence check that a theorem says cannot fail) and always indicates a bug.
enum class errc {
    parse,          // malformed spec / pipeline / rational text
    domain,         // value outside mathematical domain (log of <= 0, weight <= 0, ...)
    range,          // index or parameter out of range, horizon exceeded
    backend,        // exact and approximate scalars mixed in one expression
    precondition,   // caller broke an operation's stated precondition
    internal,       // invariant violation; a bug, not a user error
};

class error : public std::runtime_error {
public:
    error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    errc code() const noexcept { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

} // namespace shiftlab
