#pragma once

namespace oddbic {

// Exhaustive searches refuse graphs above these orders. Both defaults can be
// overridden by the ODDBIC_ORACLE_LIMIT environment variable; bitmask
// kernels cap everything at 64.
inline constexpr int kDefaultIndependenceLimit = 32;
inline constexpr int kDefaultBicriticalLimit = 26;
inline constexpr int kHardOracleCap = 64;

int independence_oracle_limit();
int bicritical_oracle_limit();

// Throws Error{OracleLimitExceeded} when n > limit.
void require_within_limit(int n, int limit, const char* what);

}  // namespace oddbic
