#include "lf/zigzag.hpp"

#include <algorithm>
#include <numeric>

#include "lf/dct.hpp"
#include "lf/error.hpp"

namespace lf {

std::vector<int> zigzag_order(int d) {
    if (d < 2 || d > 4)
        throw ParamError("zigzag: dimensionality must be 2, 3, or 4");
    const std::size_t n = block_size(d);
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);

    auto index_sum = [d](int linear) {
        int sum = 0;
        for (int a = 0; a < d; ++a) {
            sum += linear % kBlockEdge;
            linear /= kBlockEdge;
        }
        return sum;
    };
    // Row-major linear order is already lexicographic on (u_1..u_d), so a
    // stable sort on the index sum gives the lexicographic tiebreak.
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return index_sum(a) < index_sum(b); });
    return order;
}

}  // namespace lf
