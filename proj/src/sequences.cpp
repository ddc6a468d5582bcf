#include "dcpell/sequences.hpp"

#include <bit>
#include <mutex>
#include <stdexcept>

namespace dcpell {

namespace {

// Forward and backward memo for one recurrence. bwd[k] holds the value at
// index -(k+1).
class SeqCache {
 public:
  SeqCache(long v0, long v1) : fwd_{BigInt(v0), BigInt(v1)} {}

  BigInt at(std::int64_t n) {
    std::scoped_lock lock(mu_);
    if (n >= 0) {
      auto idx = static_cast<std::size_t>(n);
      while (fwd_.size() <= idx) {
        std::size_t s = fwd_.size();
        fwd_.push_back(2 * fwd_[s - 1] + fwd_[s - 2]);
      }
      return fwd_[idx];
    }
    auto k = static_cast<std::size_t>(-(n + 1));
    while (bwd_.size() <= k) {
      std::size_t s = bwd_.size();
      const BigInt& next = s >= 1 ? bwd_[s - 1] : fwd_[0];       // value at -s
      const BigInt& next2 = s >= 2 ? bwd_[s - 2] : fwd_[1 - s];  // value at -s+1
      bwd_.push_back(next2 - 2 * next);
    }
    return bwd_[k];
  }

 private:
  std::mutex mu_;
  std::vector<BigInt> fwd_;
  std::vector<BigInt> bwd_;
};

SeqCache& pell_cache() {
  static SeqCache c(0, 1);
  return c;
}

SeqCache& pell_lucas_cache() {
  static SeqCache c(2, 2);
  return c;
}

// (P(n), P(n+1)) by binary doubling, top bit first.
std::pair<BigInt, BigInt> pell_pair(std::uint64_t n) {
  BigInt a = 0, b = 1;
  if (n == 0) return {a, b};
  for (int i = std::bit_width(n) - 1; i >= 0; --i) {
    BigInt c = 2 * a * (b - a);  // P(2k)
    BigInt d = a * a + b * b;    // P(2k+1)
    if ((n >> i) & 1) {
      a = d;
      b = 2 * d + std::move(c);
    } else {
      a = std::move(c);
      b = std::move(d);
    }
  }
  return {a, b};
}

}  // namespace

const char* seq_kind_name(SeqKind k) {
  switch (k) {
    case SeqKind::Pell: return "pell";
    case SeqKind::PellLucas: return "pell-lucas";
    case SeqKind::ModifiedPell: return "modified-pell";
  }
  return "?";
}

std::optional<SeqKind> seq_kind_from_name(std::string_view name) {
  if (name == "pell") return SeqKind::Pell;
  if (name == "pell-lucas") return SeqKind::PellLucas;
  if (name == "modified-pell") return SeqKind::ModifiedPell;
  return std::nullopt;
}

BigInt seq_at(SeqKind kind, std::int64_t n) {
  switch (kind) {
    case SeqKind::Pell: return pell_cache().at(n);
    case SeqKind::PellLucas: return pell_lucas_cache().at(n);
    case SeqKind::ModifiedPell: return pell_lucas_cache().at(n) / 2;  // Q(n) is always even
  }
  throw std::invalid_argument("seq_at: bad kind");
}

std::pair<BigInt, BigInt> seq_pair_fast(SeqKind kind, std::int64_t n) {
  if (n < 0) throw std::invalid_argument("seq_pair_fast: n must be >= 0");
  auto [a, b] = pell_pair(static_cast<std::uint64_t>(n));
  switch (kind) {
    case SeqKind::Pell: return {std::move(a), std::move(b)};
    case SeqKind::PellLucas: return {2 * (b - a), 2 * (b + a)};
    case SeqKind::ModifiedPell: return {b - a, b + a};
  }
  throw std::invalid_argument("seq_pair_fast: bad kind");
}

std::vector<BigInt> seq_range(SeqKind kind, std::int64_t lo, std::int64_t hi) {
  if (lo > hi) throw std::invalid_argument("seq_range: lo > hi");
  std::vector<BigInt> out;
  out.reserve(static_cast<std::size_t>(hi - lo + 1));
  for (std::int64_t n = lo; n <= hi; ++n) out.push_back(seq_at(kind, n));
  return out;
}

}  // namespace dcpell
