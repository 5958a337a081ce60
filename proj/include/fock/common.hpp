#pragma once

#include <stdexcept>
#include <string>

namespace fock {

/* Bad caller input: malformed text, out-of-domain arguments, shape
   mismatches.  The CLI reports these as a machine-readable error object
   and exits with code 2. */
struct input_error : std::runtime_error {
    explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

/* A violated internal invariant: a state the library promises cannot
   happen.  The CLI exits with code 3 on these. */
struct internal_error : std::logic_error {
    explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

inline void require(bool ok, const std::string& msg) {
    if (!ok) throw input_error(msg);
}

inline void ensure(bool ok, const std::string& msg) {
    if (!ok) throw internal_error(msg);
}

/* Floored modulus/division, m > 0: imod is always in [0, m). */
inline int imod(long long a, long long m) {
    long long r = a % m;
    return static_cast<int>(r < 0 ? r + m : r);
}

inline long long idiv(long long a, long long m) {
    return (a - imod(a, m)) / m;
}

} // namespace fock
