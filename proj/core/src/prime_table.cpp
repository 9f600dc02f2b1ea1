#include "gdlab/prime_table.hpp"

namespace gdlab {

PrimeTable::PrimeTable(std::uint64_t limit) : limit_(limit), bits_((limit >> 7) + 1, 0) {
  bits_[0] |= 1U;  // 1 is not prime
  for (std::uint64_t p = 3; p * p <= limit; p += 2) {
    if (!is_prime(p)) continue;
    for (std::uint64_t m = p * p; m <= limit; m += 2 * p) {
      const std::uint64_t k = m >> 1;
      bits_[k >> 6] |= std::uint64_t{1} << (k & 63);
    }
  }
}

}  // namespace gdlab
