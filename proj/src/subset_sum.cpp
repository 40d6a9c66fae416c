#include "vulnkit/subset_sum.hpp"

#include <algorithm>
#include <stdexcept>

namespace vulnkit {

namespace {

void check_positive(std::span<const Weight> weights) {
    for (Weight w : weights)
        if (w <= 0)
            throw std::invalid_argument("subset-sum weights must be positive");
}

/// reach[i][s]: some subset of the first i items sums to exactly s.
class ReachTable {
public:
    ReachTable(std::span<const Weight> weights, Weight limit)
        : width_(static_cast<std::size_t>(limit) + 1),
          cells_((weights.size() + 1) * width_, 0) {
        cells_[0] = 1;
        for (std::size_t i = 0; i < weights.size(); ++i) {
            const char* prev = row(i);
            char* cur = row(i + 1);
            const auto w = static_cast<std::size_t>(weights[i]);
            for (std::size_t s = 0; s < width_; ++s)
                cur[s] = prev[s] || (s >= w && prev[s - w]);
        }
    }

    bool reachable(std::size_t items, Weight sum) const {
        return row(items)[static_cast<std::size_t>(sum)] != 0;
    }

    IndexSet reconstruct(std::span<const Weight> weights, Weight sum) const {
        IndexSet out;
        for (std::size_t i = weights.size(); i > 0; --i) {
            if (reachable(i - 1, sum))
                continue;
            out.push_back(i - 1);
            sum -= weights[i - 1];
        }
        std::reverse(out.begin(), out.end());
        return out;
    }

private:
    const char* row(std::size_t i) const { return cells_.data() + i * width_; }
    char* row(std::size_t i) { return cells_.data() + i * width_; }

    std::size_t width_;
    std::vector<char> cells_;
};

Weight total_of(std::span<const Weight> weights) {
    Weight total = 0;
    for (Weight w : weights)
        total = checked_add(total, w);
    return total;
}

} // namespace

IndexSet minsup(std::span<const Weight> weights, Weight target) {
    check_positive(weights);
    if (target <= 0)
        return {};
    const Weight total = total_of(weights);
    if (total < target)
        throw std::invalid_argument("minsup target " + std::to_string(target) +
                                    " exceeds total weight " + std::to_string(total));
    // dropping any item of a minimal solution falls below target
    const Weight heaviest = *std::max_element(weights.begin(), weights.end());
    const Weight limit = std::min(total, checked_add(target, heaviest - 1));
    ReachTable table(weights, limit);
    for (Weight s = target; s <= limit; ++s)
        if (table.reachable(weights.size(), s))
            return table.reconstruct(weights, s);
    throw std::logic_error("minsup: total weight should always be reachable");
}

IndexSet maxinf(std::span<const Weight> weights, Weight cap) {
    check_positive(weights);
    if (cap < 0)
        throw std::invalid_argument("maxinf cap must be non-negative");
    const Weight limit = std::min(cap, total_of(weights));
    ReachTable table(weights, limit);
    for (Weight s = limit; s >= 0; --s)
        if (table.reachable(weights.size(), s))
            return table.reconstruct(weights, s);
    return {};
}

Weight sum_at(std::span<const Weight> weights, const IndexSet& indices) {
    Weight sum = 0;
    for (std::size_t i : indices)
        sum = checked_add(sum, weights[i]);
    return sum;
}

} // namespace vulnkit
