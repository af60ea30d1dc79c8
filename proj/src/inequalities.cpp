#include "orient/inequalities.hpp"

#include <algorithm>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "orient/small_graph.hpp"

namespace orient {

std::string ExactInequality::to_json_line() const {
    nlohmann::ordered_json j;
    j["description"] = description;
    j["a"] = a;
    j["b5"] = b5;
    j["b3"] = b3;
    j["c"] = c;
    j["holds"] = holds;
    return j.dump();
}

ExactInequality check_log_inequality(std::string description, long long a, long long b5,
                                     long long b3, long long c) {
    if (b5 < 0 || b3 < 0)
        throw std::invalid_argument("check_log_inequality: negative log coefficients");
    ExactInequality q{std::move(description), a, b5, b3, c, false};
    // shift by min(a,c,0) so both exponents are nonnegative
    const long long shift = std::min({a, c, 0ll});
    const BigInt lhs = ipow(5, static_cast<unsigned long long>(b5)) *
                       ipow(3, static_cast<unsigned long long>(b3)) *
                       pow2(static_cast<unsigned long long>(a - shift));
    const BigInt rhs = pow2(static_cast<unsigned long long>(c - shift));
    q.holds = lhs < rhs;
    return q;
}

std::vector<ExactInequality> proposition1(int k_min, int k_max, int n_max) {
    if (k_min < 4) throw std::invalid_argument("proposition1: requires k >= 4");
    std::vector<ExactInequality> out;
    for (int k = k_min; k <= k_max; ++k)
        for (int n = k + 1; n <= n_max; ++n) {
            const long long a = turan_edges(k + 1, k - 1) +
                                static_cast<long long>(k - 3) * (n - k - 1) +
                                turan_edges(n - k - 1, k - 1);
            out.push_back(check_log_inequality(
                "prop1 k=" + std::to_string(k) + " n=" + std::to_string(n), a, n - k - 1, 0,
                turan_edges(n, k - 1)));
        }
    return out;
}

std::vector<ExactInequality> proposition2(int k_min, int k_max, int n_max) {
    if (k_min < 4) throw std::invalid_argument("proposition2: requires k >= 4");
    std::vector<ExactInequality> out;
    for (int k = k_min; k <= k_max; ++k)
        for (int n = k + 1; n <= n_max; ++n) {
            const long long a = turan_edges(k, k - 1) +
                                static_cast<long long>(k - 3) * (n - k) +
                                turan_edges(n - k, k - 1);
            out.push_back(check_log_inequality(
                "prop2 k=" + std::to_string(k) + " n=" + std::to_string(n), a, 0, n - k,
                turan_edges(n, k - 1)));
        }
    return out;
}

std::vector<ExactInequality> proposition3(int n_max) {
    std::vector<ExactInequality> out;
    for (int n = 9; n <= n_max; ++n) {
        // log2(40) = 3 + log2(5)
        const long long a = 3 + (n - 4) + turan_edges(n - 4, 3);
        out.push_back(check_log_inequality("prop3 n=" + std::to_string(n), a, 1, n - 4,
                                           turan_edges(n, 3)));
    }
    return out;
}

}  // namespace orient
