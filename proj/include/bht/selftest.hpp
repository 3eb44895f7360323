#pragma once

#include <cstdint>
#include <ostream>

namespace bht {

// Compact oracle-equivalence battery behind `bht selftest`; prints one line
// per section and returns false on any failure.
bool selftest(std::ostream& os, std::uint64_t seed);

}  // namespace bht
