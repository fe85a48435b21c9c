#include "canalg/kernels.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <string>

#include "canalg/errors.hpp"

namespace canalg::kernels {

namespace {

constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max() / 4;

// Min-envelope of lines y = a x + b over integer x in [0, size).
class LiChao {
public:
    explicit LiChao(std::int64_t size)
        : size_(size), a_(static_cast<std::size_t>(4 * size), 0), b_(static_cast<std::size_t>(4 * size), kInf) {}

    void insert(std::int64_t a, std::int64_t b) { insert(1, 0, size_ - 1, a, b); }

    std::int64_t query(std::int64_t x) const {
        std::int64_t best = kInf;
        std::size_t node = 1;
        std::int64_t lo = 0;
        std::int64_t hi = size_ - 1;
        while (true) {
            best = std::min(best, eval(node, x));
            if (lo == hi) break;
            const std::int64_t mid = lo + (hi - lo) / 2;
            if (x <= mid) {
                node = 2 * node;
                hi = mid;
            } else {
                node = 2 * node + 1;
                lo = mid + 1;
            }
        }
        return best;
    }

private:
    std::int64_t eval(std::size_t node, std::int64_t x) const {
        return b_[node] == kInf ? kInf : a_[node] * x + b_[node];
    }

    void insert(std::size_t node, std::int64_t lo, std::int64_t hi, std::int64_t a, std::int64_t b) {
        while (true) {
            const std::int64_t mid = lo + (hi - lo) / 2;
            const bool empty = b_[node] == kInf;
            const bool better_mid = empty || a * mid + b < eval(node, mid);
            if (better_mid) {
                std::swap(a, a_[node]);
                std::swap(b, b_[node]);
                if (empty) return;
            }
            if (lo == hi) return;
            if (a * lo + b < eval(node, lo)) {
                node = 2 * node;
                hi = mid;
            } else if (a * hi + b < eval(node, hi)) {
                node = 2 * node + 1;
                lo = mid + 1;
            } else {
                return;
            }
        }
    }

    std::int64_t size_;
    std::vector<std::int64_t> a_;
    std::vector<std::int64_t> b_;
};

// Reference DP tables: cost[j][v] for positions j in [1, m-1].
std::vector<std::vector<std::int64_t>> reference_tables(int m, std::int64_t s) {
    const auto width = static_cast<std::size_t>(s + 1);
    std::vector<std::vector<std::int64_t>> cost(static_cast<std::size_t>(m), std::vector<std::int64_t>(width, kInf));
    for (std::int64_t v = 0; v <= s; ++v) cost[1][static_cast<std::size_t>(v)] = v * v - v * s;
    for (int j = 2; j < m; ++j) {
        for (std::int64_t v = 0; v <= s; ++v) {
            std::int64_t best = kInf;
            for (std::int64_t u = v; u <= s; ++u) {
                best = std::min(best, cost[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(u)] - u * v);
            }
            cost[static_cast<std::size_t>(j)][static_cast<std::size_t>(v)] = v * v + best;
        }
    }
    return cost;
}

void require_arm(int m, std::int64_t s) {
    if (m < 2) throw InvalidInput("arm length must be at least 2");
    if (s < 0 || s > kMaxLevel) throw OutOfRange("slice " + std::to_string(s) + " outside the DP range");
}

}  // namespace

void require_dp_range(const CanonicalType& t, std::int64_t p) {
    if (p > kMaxLevel) {
        throw OutOfRange("level " + std::to_string(p) + " exceeds the DP limit " + std::to_string(kMaxLevel));
    }
    const Int bound = Int(t.total() + 4) * Int(p) * Int(p) * 4;
    if (bound > Int(std::numeric_limits<std::int64_t>::max() / 4)) {
        throw OutOfRange("type " + t.str() + " at level " + std::to_string(p) + " overflows the DP");
    }
}

std::int64_t arm_min_reference(int m, std::int64_t s) {
    require_arm(m, s);
    const auto cost = reference_tables(m, s);
    const auto& last = cost[static_cast<std::size_t>(m - 1)];
    return *std::min_element(last.begin(), last.end());
}

std::int64_t arm_min(int m, std::int64_t s) {
    require_arm(m, s);
    const auto width = static_cast<std::size_t>(s + 1);
    std::vector<std::int64_t> cost(width);
    for (std::int64_t v = 0; v <= s; ++v) cost[static_cast<std::size_t>(v)] = v * v - v * s;
    std::vector<std::int64_t> next(width);
    for (int j = 2; j < m; ++j) {
        // next(v) = v^2 + min_{u >= v} (cost(u) - u v): lines added as v descends.
        LiChao envelope(s + 1);
        for (std::int64_t v = s; v >= 0; --v) {
            envelope.insert(-v, cost[static_cast<std::size_t>(v)]);
            next[static_cast<std::size_t>(v)] = v * v + envelope.query(v);
        }
        std::swap(cost, next);
    }
    return *std::min_element(cost.begin(), cost.end());
}

ArmMinCount arm_min_count(int m, std::int64_t s) {
    require_arm(m, s);
    const auto cost = reference_tables(m, s);
    const auto width = static_cast<std::size_t>(s + 1);
    // count[j][v]: optimal chains x_1..x_j with x_j = v.
    std::vector<std::vector<Int>> count(static_cast<std::size_t>(m), std::vector<Int>(width, 0));
    std::fill(count[1].begin(), count[1].end(), Int(1));
    for (int j = 2; j < m; ++j) {
        const auto& prev = cost[static_cast<std::size_t>(j - 1)];
        for (std::int64_t v = 0; v <= s; ++v) {
            const std::int64_t target = cost[static_cast<std::size_t>(j)][static_cast<std::size_t>(v)] - v * v;
            Int c = 0;
            for (std::int64_t u = v; u <= s; ++u) {
                if (prev[static_cast<std::size_t>(u)] - u * v == target) c += count[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(u)];
            }
            count[static_cast<std::size_t>(j)][static_cast<std::size_t>(v)] = c;
        }
    }
    const auto& last = cost[static_cast<std::size_t>(m - 1)];
    ArmMinCount out{*std::min_element(last.begin(), last.end()), 0};
    for (std::size_t v = 0; v < width; ++v) {
        if (last[v] == out.min) out.count += count[static_cast<std::size_t>(m - 1)][v];
    }
    return out;
}

std::vector<std::vector<std::int64_t>> arm_minimizers(int m, std::int64_t s, std::uint64_t cap) {
    require_arm(m, s);
    const auto cost = reference_tables(m, s);
    const auto& last = cost[static_cast<std::size_t>(m - 1)];
    const std::int64_t best = *std::min_element(last.begin(), last.end());

    std::vector<std::vector<std::int64_t>> out;
    std::vector<std::int64_t> chain(static_cast<std::size_t>(m - 1));
    // Walk backwards from x_{m-1}; x_{j-1} = u is admissible when it realises cost[j][x_j].
    auto extend = [&](auto&& self, int j, std::int64_t v) -> void {
        chain[static_cast<std::size_t>(j - 1)] = v;
        if (j == 1) {
            if (out.size() >= cap) throw CapExceeded("too many minimising arm chains");
            out.push_back(chain);
            return;
        }
        const std::int64_t target = cost[static_cast<std::size_t>(j)][static_cast<std::size_t>(v)] - v * v;
        for (std::int64_t u = v; u <= s; ++u) {
            if (cost[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(u)] - u * v == target) self(self, j - 1, u);
        }
    };
    for (std::int64_t v = 0; v <= s; ++v) {
        if (last[static_cast<std::size_t>(v)] == best) extend(extend, m - 1, v);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::int64_t> slice_minima_serial(const CanonicalType& t, std::int64_t p) {
    require_dp_range(t, p);
    std::vector<std::int64_t> out(static_cast<std::size_t>(p + 1), 0);
    for (std::int64_t s = 1; s <= p; ++s) {
        std::int64_t total = s * s;
        for (int m : t.arms()) total += arm_min_reference(m, s);
        out[static_cast<std::size_t>(s)] = total;
    }
    return out;
}

std::vector<std::int64_t> slice_minima_parallel(const CanonicalType& t, std::int64_t p) {
    require_dp_range(t, p);
    std::map<int, int> multiplicity;
    for (int m : t.arms()) ++multiplicity[m];
    const std::vector<std::pair<int, int>> lengths(multiplicity.begin(), multiplicity.end());

    std::vector<std::int64_t> out(static_cast<std::size_t>(p + 1), 0);
#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t s = 1; s <= p; ++s) {
        std::int64_t total = s * s;
        for (const auto& [m, count] : lengths) total += count * arm_min(m, s);
        out[static_cast<std::size_t>(s)] = total;
    }
    return out;
}

}  // namespace canalg::kernels
