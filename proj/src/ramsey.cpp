#include "biased/ramsey.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace biased {

namespace {

// 2^22 bits of exponent is already far beyond anything printable.
const BigInt kMaxExponent = BigInt(1) << 22;
const BigInt kMaxBinomialTerms = BigInt(1) << 16;

BigInt binomial(const BigInt& n, BigInt k) {
  if (k < 0 || k > n) return 0;
  if (n - k < k) k = n - k;
  if (k > kMaxBinomialTerms) throw std::overflow_error("Ramsey bound too large to represent");
  BigInt r = 1;
  for (BigInt i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

BigInt power(unsigned long base, const BigInt& exponent) {
  if (exponent > kMaxExponent) throw std::overflow_error("Ramsey bound too large to represent");
  return boost::multiprecision::pow(BigInt(base), exponent.convert_to<unsigned>());
}

BigInt bound(int k, std::vector<BigInt> sizes) {
  const BigInt smallest = *std::min_element(sizes.begin(), sizes.end());
  if (smallest < k) return smallest;
  if (sizes.size() == 1) return sizes.front();
  if (k == 1) {
    BigInt total = 1;
    for (const auto& s : sizes) total += s - 1;
    return total;
  }
  if (k == 2) {
    if (sizes.size() > 2) {
      std::vector<BigInt> rest(sizes.begin() + 1, sizes.end());
      return bound(2, {sizes.front(), bound(2, rest)});
    }
    return binomial(sizes[0] + sizes[1] - 2, sizes[0] - 1);
  }
  std::vector<BigInt> reduced;
  for (const auto& s : sizes) reduced.push_back(s - 1);
  const BigInt m = bound(k - 1, reduced) + 1;
  return m * power(static_cast<unsigned long>(sizes.size()), binomial(m, k - 1));
}

}  // namespace

BigInt ramsey_upper_bound(int k, std::span<const BigInt> sizes) {
  if (k < 1) throw std::invalid_argument("ramsey_upper_bound needs k >= 1");
  if (sizes.empty()) throw std::invalid_argument("ramsey_upper_bound needs at least one size");
  for (const auto& s : sizes)
    if (s < 0) throw std::invalid_argument("ramsey_upper_bound: negative size");
  return bound(k, std::vector<BigInt>(sizes.begin(), sizes.end()));
}

BigInt ramsey_upper_bound(int k, std::initializer_list<long long> sizes) {
  std::vector<BigInt> v(sizes.begin(), sizes.end());
  return ramsey_upper_bound(k, v);
}

}  // namespace biased
