#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>

namespace zigzag {

// All counting is exact: GMP integers/rationals, no floating point anywhere.
using BigInt = mpz_class;
using BigRat = mpq_class;

inline constexpr const char* kLibraryVersion = "1.0.0";
inline constexpr int kReportSchemaVersion = 1;

// A quantity that is provably impossible showed up anyway.  Always a bug in
// this library (or a falsified expectation), never a usage error.
struct property_violation : std::logic_error {
    using std::logic_error::logic_error;
};

// Two supposedly-equivalent internal routes disagreed (e.g. a series residue
// that must vanish did not).
struct internal_inconsistency : std::logic_error {
    using std::logic_error::logic_error;
};

// Throws std::overflow_error if the value does not fit.
std::int64_t to_int64(const BigInt& value);

BigInt binomial(unsigned n, unsigned k);

}  // namespace zigzag
