#pragma once

#include <string>
#include <vector>

#include "orient/bigint.hpp"

namespace orient {

// An inequality A + b5*log2(5) + b3*log2(3) < C, decided exactly by
// comparing 5^b5 * 3^b3 * 2^A against 2^C in big-integer arithmetic.
struct ExactInequality {
    std::string description;
    long long a = 0;   // integer part A
    long long b5 = 0;  // coefficient of log2(5)
    long long b3 = 0;  // coefficient of log2(3)
    long long c = 0;   // right side C
    bool holds = false;

    std::string to_json_line() const;
};

ExactInequality check_log_inequality(std::string description, long long a, long long b5,
                                     long long b3, long long c);

// t_{k-1}(k+1) + (log2(5)+k-3)(n-k-1) + t_{k-1}(n-k-1) < t_{k-1}(n),
// for k in [k_min,k_max], n in (k, n_max].
std::vector<ExactInequality> proposition1(int k_min, int k_max, int n_max);

// t_{k-1}(k) + (log2(3)+k-3)(n-k) + t_{k-1}(n-k) < t_{k-1}(n), same range.
std::vector<ExactInequality> proposition2(int k_min, int k_max, int n_max);

// log2(40) + (log2(3)+1)(n-4) + t_3(n-4) < t_3(n), for n in [9, n_max]
// (log2(40) carried as 3 + log2(5)).
std::vector<ExactInequality> proposition3(int n_max);

}  // namespace orient
