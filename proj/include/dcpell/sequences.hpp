#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "dcpell/rings.hpp"

namespace dcpell {

// P(0)=0, P(1)=1            P(n) = 2 P(n-1) + P(n-2)
// Q(0)=2, Q(1)=2            same recurrence (Pell-Lucas)
// q(n) = Q(n)/2             modified Pell: 1, 1, 3, 7, 17, ...
enum class SeqKind { Pell, PellLucas, ModifiedPell };

const char* seq_kind_name(SeqKind k);
std::optional<SeqKind> seq_kind_from_name(std::string_view name);

// Exact value at any signed index. Negative indices run the recurrence
// backward, x(n-2) = x(n) - 2 x(n-1), which reproduces the reflection rules
// P(-n) = (-1)^(n+1) P(n) and Q(-n) = (-1)^n Q(n). Values are memoized behind
// a lock; concurrent use is fine.
BigInt seq_at(SeqKind kind, std::int64_t n);

// (value at n, value at n+1) in O(log n) big-integer multiplications by
// Pell fast doubling:
//   P(2k)   = 2 P(k) (P(k+1) - P(k))
//   P(2k+1) = P(k)^2 + P(k+1)^2
// with Q(n) = 2 (P(n+1) - P(n)) and q(n) = P(n+1) - P(n). Does not touch the
// memo cache, so it is an independent route from seq_at. Requires n >= 0.
std::pair<BigInt, BigInt> seq_pair_fast(SeqKind kind, std::int64_t n);

// Values at lo..hi inclusive; lo > hi is a usage error.
std::vector<BigInt> seq_range(SeqKind kind, std::int64_t lo, std::int64_t hi);

}  // namespace dcpell
