#include "lospa/assignment.hpp"

#include "lospa/error.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <limits>
#include <numeric>

namespace labelled_ospa {

AssignmentSolution solve_brute_force(const CostMatrix& cost, std::size_t cap) {
    const std::size_t t = cost.size();
    if (t > cap) {
        throw Error(ErrorCode::CapExceeded,
                    fmt::format("exhaustive search limited to t <= {} (got t = {}); use the optimal "
                                "assignment backend instead",
                                cap, t));
    }

    std::vector<std::size_t> current(t);
    std::iota(current.begin(), current.end(), std::size_t{0});
    std::vector<std::size_t> best = current;
    double best_cost = std::numeric_limits<double>::infinity();
    do {
        double sum = 0.0;
        for (std::size_t j = 0; j < t; ++j) sum += cost(j, current[j]);
        if (sum < best_cost) {
            best_cost = sum;
            best = current;
        }
    } while (std::next_permutation(current.begin(), current.end()));

    return {Permutation(std::move(best)), best_cost};
}

AssignmentSolution solve_optimal(const CostMatrix& cost) {
    const std::size_t n = cost.size();
    constexpr double inf = std::numeric_limits<double>::infinity();

    // 1-based working arrays; index 0 is a virtual column used as the root of
    // every augmenting path. row_of[c] is the row currently matched to column c.
    std::vector<double> u(n + 1, 0.0);
    std::vector<double> v(n + 1, 0.0);
    std::vector<std::size_t> row_of(n + 1, 0);
    std::vector<std::size_t> prev_col(n + 1, 0);
    std::vector<double> min_slack(n + 1);
    std::vector<char> visited(n + 1);

    for (std::size_t row = 1; row <= n; ++row) {
        row_of[0] = row;
        std::size_t col0 = 0;
        std::fill(min_slack.begin(), min_slack.end(), inf);
        std::fill(visited.begin(), visited.end(), 0);
        do {
            visited[col0] = 1;
            const std::size_t r0 = row_of[col0];
            double delta = inf;
            std::size_t col1 = 0;
            for (std::size_t c = 1; c <= n; ++c) {
                if (visited[c]) continue;
                const double reduced = cost(r0 - 1, c - 1) - u[r0] - v[c];
                if (reduced < min_slack[c]) {
                    min_slack[c] = reduced;
                    prev_col[c] = col0;
                }
                if (min_slack[c] < delta) {
                    delta = min_slack[c];
                    col1 = c;
                }
            }
            for (std::size_t c = 0; c <= n; ++c) {
                if (visited[c]) {
                    u[row_of[c]] += delta;
                    v[c] -= delta;
                } else {
                    min_slack[c] -= delta;
                }
            }
            col0 = col1;
        } while (row_of[col0] != 0);

        // Flip the matching along the augmenting path.
        do {
            const std::size_t col1 = prev_col[col0];
            row_of[col0] = row_of[col1];
            col0 = col1;
        } while (col0 != 0);
    }

    std::vector<std::size_t> mapping(n);
    for (std::size_t c = 1; c <= n; ++c) mapping[row_of[c] - 1] = c - 1;
    Permutation perm(std::move(mapping));
    const double total = cost.total(perm);
    return {std::move(perm), total};
}

} // namespace labelled_ospa
