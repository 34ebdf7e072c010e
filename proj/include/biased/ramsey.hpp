#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <initializer_list>
#include <span>

namespace biased {

using BigInt = boost::multiprecision::cpp_int;

/// Upper bound on R_k(n_1, ..., n_l): any l-colouring of the k-subsets of a
/// set this large has a colour-i set of size n_i all of whose k-subsets get
/// colour i.
///
/// k = 1 is pigeonhole, two colours at k = 2 use C(s+t-2, s-1), more colours
/// nest, and k >= 3 steps down through the Erdos-Rado greedy sequence:
/// R_k <= M * l^C(M, k-1) with M = R_{k-1}(n_1 - 1, ..., n_l - 1) + 1.
/// If some n_i < k the answer is min(n_i), since such a set has no k-subsets.
/// Throws std::overflow_error once an exponent outgrows what can be stored.
BigInt ramsey_upper_bound(int k, std::span<const BigInt> sizes);
BigInt ramsey_upper_bound(int k, std::initializer_list<long long> sizes);

}  // namespace biased
