#pragma once

#include <cstdint>

#include "randsat/cnf.hpp"

namespace randsat {

/// m independent odd-parity triples x_{3i+1} ^ x_{3i+2} ^ x_{3i+3}, i < m,
/// over n = 3m variables. Each triple (a, b, c) becomes the four clauses
/// (a|b|c), (a|~b|~c), (~a|b|~c), (~a|~b|c). Every solution has exactly n
/// critical clauses and no neighbouring solution. Requires m >= 1.
CnfFormula xor_chain(std::uint32_t m);

/// m clauses, each over 3 distinct variables drawn uniformly without
/// replacement from 1..n with fair-coin polarities. Requires n >= 3.
CnfFormula random_3cnf(std::uint32_t n, std::uint32_t m, std::uint64_t seed);

} // namespace randsat
