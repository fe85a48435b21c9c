#include "canalg/zeroset.hpp"

#include <algorithm>
#include <functional>

#include <omp.h>
#include <string>

#include "canalg/errors.hpp"
#include "canalg/forms.hpp"
#include "canalg/geometry.hpp"
#include "canalg/kernels.hpp"

namespace canalg {

namespace {

using Flat = std::vector<std::int64_t>;

// Flat-coordinate view of a type used by the enumeration kernel.
struct Layout {
    explicit Layout(const CanonicalType& type) : t(type), size(static_cast<std::size_t>(type.vertex_count())) {
        std::size_t k = 1;
        for (int m : t.arms()) {
            arm_start.push_back(k);
            simple_start.push_back(simples);
            k += static_cast<std::size_t>(m - 1);
            simples += m;
        }
        if (simples > 64) throw OutOfRange("type " + t.str() + " has too many exceptional simples for Z_p enumeration");
    }

    // flat index of vertex (i, j), j in [0, m_i]
    std::size_t index(int i, int j) const {
        if (j == 0) return 0;
        if (j == t.arm_length(i)) return size - 1;
        return arm_start[static_cast<std::size_t>(i - 1)] + static_cast<std::size_t>(j - 1);
    }

    std::uint64_t simple_bit(int i, int j) const {
        return std::uint64_t{1} << (simple_start[static_cast<std::size_t>(i - 1)] + j);
    }

    bool in_Q(const Flat& d) const {
        if (std::all_of(d.begin(), d.end(), [](std::int64_t v) { return v == 0; })) return true;
        if (!(d.front() >= 0 && d.front() < d.back())) return false;
        for (int i = 1; i <= t.n(); ++i) {
            for (int j = 0; j < t.arm_length(i); ++j) {
                if (d[index(i, j)] > d[index(i, j + 1)]) return false;
            }
        }
        return true;
    }

    // Simples (i, j) with <d', e_{i,j}> = d'_{i,j} - d'_{i,j+1} = 0.
    std::uint64_t uncovered_simples(const Flat& dprime) const {
        std::uint64_t mask = 0;
        for (int i = 1; i <= t.n(); ++i) {
            for (int j = 0; j < t.arm_length(i); ++j) {
                if (dprime[index(i, j)] == dprime[index(i, j + 1)]) mask |= simple_bit(i, j);
            }
        }
        return mask;
    }

    const CanonicalType& t;
    std::size_t size;
    std::vector<std::size_t> arm_start;
    std::vector<int> simple_start;
    int simples = 0;
};

struct IndecEntry {
    TubeIndec x;
    Flat dim;
    std::uint64_t top_bit;
};

struct FlatTriple {
    int q;
    Flat dprime;
    Flat ddouble;
    std::vector<std::size_t> members;  // indices into the indec table
};

struct Task {
    int q;
    Flat dprime;
};

class ZpEnumerator {
public:
    ZpEnumerator(const CanonicalType& t, std::int64_t q_max) : t_(t), layout_(t) {
        const DimVector bound = DimVector::constant(t, Int(q_max));
        for (const auto& x : tube_indecs_below(t, bound)) {
            table_.push_back({x, dim_vector(t, x).to_flat(), layout_.simple_bit(x.arm, x.top(t))});
        }
    }

    const std::vector<IndecEntry>& table() const { return table_; }

    // Calls emit for every X completing (q, d') to a triple in Z_p, in
    // lexicographic order of the sorted member lists.
    template <class Emit>
    void run(const Task& task, Emit&& emit) const {
        Flat budget(layout_.size, task.q);
        for (std::size_t k = 0; k < budget.size(); ++k) budget[k] -= task.dprime[k];
        const std::uint64_t need = layout_.uncovered_simples(task.dprime);
        std::vector<std::size_t> chosen;
        walk(0, budget, 0, need, chosen, task, emit);
    }

private:
    // false once emit has asked to stop
    template <class Emit>
    bool walk(std::size_t from, Flat& budget, std::uint64_t covered, std::uint64_t need,
              std::vector<std::size_t>& chosen, const Task& task, Emit& emit) const {
        if ((need & ~covered) == 0 && layout_.in_Q(budget)) {
            if (!emit(FlatTriple{task.q, task.dprime, budget, chosen})) return false;
        }
        for (std::size_t k = from; k < table_.size(); ++k) {
            const Flat& dim = table_[k].dim;
            bool fits = true;
            for (std::size_t c = 0; c < dim.size() && fits; ++c) fits = dim[c] <= budget[c];
            if (!fits) continue;
            for (std::size_t c = 0; c < dim.size(); ++c) budget[c] -= dim[c];
            chosen.push_back(k);
            const bool go_on = walk(k, budget, covered | table_[k].top_bit, need, chosen, task, emit);
            chosen.pop_back();
            for (std::size_t c = 0; c < dim.size(); ++c) budget[c] += dim[c];
            if (!go_on) return false;
        }
        return true;
    }

    const CanonicalType& t_;
    Layout layout_;
    std::vector<IndecEntry> table_;
};

ZTriple materialise(const CanonicalType& t, const ZpEnumerator& e, const FlatTriple& f) {
    std::vector<TubeIndec> members;
    members.reserve(f.members.size());
    for (std::size_t k : f.members) members.push_back(e.table()[k].x);
    return {DimVector::from_flat(t, f.dprime), DimVector::from_flat(t, f.ddouble),
            RegularModuleClass(std::move(members)), f.q};
}

void require_level(std::int64_t p) {
    if (p < 1) throw PreconditionError("level p must be at least 1");
}

Int pairing_with_h(const CanonicalType& t, const DimVector& d) { return euler_form(t, d, basis::h(t)); }

bool mod_is_irreducible(const CanonicalType& t, std::int64_t p) {
    const GeometryReport g = analyze_geometry(t, p, 0);
    return g.is_ci && g.component_count == 1;
}

}  // namespace

bool in_bruteforce_scope(const CanonicalType& t, std::int64_t p, const BruteForceScope& scope) {
    return t.product() <= scope.max_product && p <= scope.max_level;
}

bool in_Zp(const CanonicalType& t, std::int64_t p, const ZTriple& z) {
    if (!z.dprime.shaped_for(t) || !z.ddouble.shaped_for(t)) return false;
    if (z.q < 1 || z.q > p) return false;
    if (z.dprime.is_zero() || !in_P(t, z.dprime) || !in_Q(t, z.ddouble)) return false;
    for (const auto& x : z.X.members()) {
        if (x.arm < 1 || x.arm > t.n() || x.socle < 0 || x.socle >= t.arm_length(x.arm) || x.qlen < 1) return false;
    }
    if (z.dprime + z.ddouble + dim_vector(t, z.X) != Int(z.q) * basis::h(t)) return false;
    for (int i = 1; i <= t.n(); ++i) {
        for (int j = 0; j < t.arm_length(i); ++j) {
            if (euler_form(t, z.dprime, basis::e(t, i, j)) == 0 && !hom_to_simple_nonzero(t, z.X, i, j)) return false;
        }
    }
    return true;
}

namespace {

// Nonzero d' in P below q h for q in [q_min, q_max], in enumeration order.
std::vector<Task> collect_tasks(const CanonicalType& t, std::int64_t q_min, std::int64_t q_max,
                                const std::function<bool(const Flat&, std::int64_t)>& keep) {
    std::vector<Task> tasks;
    for (std::int64_t q = q_min; q <= q_max; ++q) {
        for_each_P_flat(t, q, kDefaultCap, [&](const Flat& d) {
            if (std::any_of(d.begin(), d.end(), [](std::int64_t v) { return v != 0; }) && keep(d, q)) {
                tasks.push_back({static_cast<int>(q), d});
            }
            return true;
        });
    }
    return tasks;
}

// Hands the triples of every task to `visit` in task order; stops early when
// visit returns false. The parallel schedule works through small chunks of
// tasks, buffering only the chunk in flat form.
void stream_tasks(const CanonicalType& t, const ZpEnumerator& enumerator, const std::vector<Task>& tasks,
                  Schedule schedule, const std::function<bool(const ZTriple&)>& visit) {
    if (schedule == Schedule::Serial) {
        bool go_on = true;
        for (const auto& task : tasks) {
            enumerator.run(task, [&](FlatTriple&& f) { return go_on = visit(materialise(t, enumerator, f)); });
            if (!go_on) return;
        }
        return;
    }
    const std::size_t chunk = 4 * static_cast<std::size_t>(std::max(1, omp_get_max_threads()));
    for (std::size_t lo = 0; lo < tasks.size(); lo += chunk) {
        const std::size_t hi = std::min(tasks.size(), lo + chunk);
        std::vector<std::vector<FlatTriple>> found(hi - lo);
#pragma omp parallel for schedule(dynamic, 1)
        for (std::int64_t k = static_cast<std::int64_t>(lo); k < static_cast<std::int64_t>(hi); ++k) {
            const auto kk = static_cast<std::size_t>(k);
            enumerator.run(tasks[kk], [&](FlatTriple&& f) {
                found[kk - lo].push_back(std::move(f));
                return true;
            });
        }
        for (auto& bucket : found) {
            for (const auto& f : bucket)
                if (!visit(materialise(t, enumerator, f))) return;
            bucket.clear();
            bucket.shrink_to_fit();
        }
    }
}

bool keep_all(const Flat&, std::int64_t) { return true; }

}  // namespace

void for_each_Zp_levels(const CanonicalType& t, std::int64_t p, std::int64_t q_min, std::int64_t q_max,
                        const std::function<bool(const ZTriple&)>& visit, Schedule schedule) {
    require_level(p);
    q_min = std::max<std::int64_t>(q_min, 1);
    q_max = std::min(q_max, p);
    if (q_min > q_max) return;
    const ZpEnumerator enumerator(t, q_max);
    stream_tasks(t, enumerator, collect_tasks(t, q_min, q_max, keep_all), schedule, visit);
}

void for_each_Zp(const CanonicalType& t, std::int64_t p, const std::function<bool(const ZTriple&)>& visit,
                 Schedule schedule) {
    for_each_Zp_levels(t, p, 1, p, visit, schedule);
}

std::vector<ZTriple> enumerate_Zp_levels(const CanonicalType& t, std::int64_t p, std::int64_t q_min, std::int64_t q_max,
                                         std::uint64_t cap, Schedule schedule) {
    std::vector<ZTriple> out;
    for_each_Zp_levels(
        t, p, q_min, q_max,
        [&](const ZTriple& z) {
            if (out.size() >= cap) throw CapExceeded("Z_p enumeration exceeded the cap of " + std::to_string(cap) + " triples");
            out.push_back(z);
            return true;
        },
        schedule);
    return out;
}

std::vector<ZTriple> enumerate_Zp(const CanonicalType& t, std::int64_t p, std::uint64_t cap, Schedule schedule) {
    return enumerate_Zp_levels(t, p, 1, p, cap, schedule);
}

Int diff(const CanonicalType& t, std::int64_t p, const ZTriple& z) {
    const Int slope = pairing_with_h(t, z.dprime);
    return Int(p - z.q) * slope + Int(p - t.n()) * (slope - 1) + (euler_form(t, z.dprime, z.dprime) - 1);
}

Int stratum_dim(const CanonicalType& t, std::int64_t p, const ZTriple& z) {
    const Int slope = pairing_with_h(t, z.dprime);
    const Int codim = Int(2 * p - z.q) * slope + euler_form(t, z.dprime, z.dprime) +
                      euler_form(t, z.dprime, dim_vector(t, z.X)) + Int(end_dim(t, z.X));
    return a_dim(t, DimVector::constant(t, Int(p))) - codim;
}

Int target_zero_dim(const CanonicalType& t, std::int64_t p) {
    return a_dim(t, DimVector::constant(t, Int(p))) - t.total() - p - 1 + t.n();
}

bool satisfies_plus(const CanonicalType& t, std::int64_t p, const ZTriple& z) {
    const Int slope = pairing_with_h(t, z.dprime);
    return slope == 1 && z.q == p && euler_form(t, z.dprime, dim_vector(t, z.X)) == 0 &&
           Int(end_dim(t, z.X)) == Int(t.total()) - Int(t.n()) * slope;
}

std::vector<ZTriple> components_bruteforce(const CanonicalType& t, std::int64_t p, std::uint64_t cap) {
    require_level(p);
    // (+) fixes q = p and <d', h> = d'_0 - d'_inf = 1; the other two equations are tested per triple.
    const ZpEnumerator enumerator(t, p);
    const auto tasks = collect_tasks(t, p, p, [](const Flat& d, std::int64_t) { return d.front() - d.back() == 1; });
    std::vector<ZTriple> out;
    stream_tasks(t, enumerator, tasks, Schedule::Parallel, [&](const ZTriple& z) {
        if (!satisfies_plus(t, p, z)) return true;
        if (out.size() >= cap) throw CapExceeded("more than " + std::to_string(cap) + " (+)-triples");
        out.push_back(z);
        return true;
    });
    return out;
}

Int component_count_formula(const CanonicalType& t, std::int64_t p) {
    if (p < t.n()) throw PreconditionError("the component count formula needs p >= n");
    // elementary symmetric polynomials e_0..e_n of the arm lengths
    std::vector<Int> e(static_cast<std::size_t>(t.n() + 1), 0);
    e[0] = 1;
    for (int m : t.arms()) {
        for (std::size_t l = e.size() - 1; l >= 1; --l) e[l] += e[l - 1] * m;
    }
    Int count = Int(p - t.n()) * t.product() + 1;
    for (int l = 1; l <= t.n() - 1; ++l) count += e[static_cast<std::size_t>(l)];
    return count;
}

Int threshold_N(const CanonicalType& t) {
    const Rational d = t.delta();
    if (d < 0) return t.n();
    if (d == 0) return t.n() + 1;
    if (d < 1) return canalg::ceil(Rational(t.n() + 1) / (1 - d));
    throw OutOfRange("type " + t.str() + " has delta = " + to_string(d) +
                     " >= 1; zero-set thresholds are only proved for delta < 1");
}

Rational wild_bound_f(const CanonicalType& t, std::int64_t p, const Rational& x) {
    return -t.delta() * x * x + x * Rational(p - t.n()) + Rational(t.n() - p - 1);
}

bool wild_bound_check(const CanonicalType& t, std::int64_t p) {
    const Rational d = t.delta();
    if (!(d > 0 && d < 1)) throw PreconditionError("wild_bound_check needs 0 < delta < 1");
    if (Int(p) < threshold_N(t)) throw PreconditionError("wild_bound_check needs p >= threshold_N");
    if (wild_bound_f(t, p, 2) <= 0 || wild_bound_f(t, p, Rational(p)) <= 0) return false;
    for (std::int64_t x = 2; x <= p; ++x) {
        if (wild_bound_f(t, p, Rational(x)) <= 0) return false;
    }
    return true;
}

bool threshold_gap_holds(const CanonicalType& t) {
    const Rational d = t.delta();
    if (!(d > 0 && d < 1)) throw PreconditionError("threshold_gap_holds needs 0 < delta < 1");
    return 4 * d + t.n() + 1 < Rational(t.n() + 1) / (1 - d);
}

bool zeroset_is_ci(const CanonicalType& t, std::int64_t p, const BruteForceScope& scope, std::uint64_t cap) {
    require_level(p);
    if (!mod_is_irreducible(t, p)) {
        throw PreconditionError("mod(p h) is not irreducible for type " + t.str() + " at p = " + std::to_string(p));
    }
    // diff >= (p - n)(s - 1) + min <d', d'> - 1 over the slice s = <d', h>.
    const auto minima = kernels::slice_minima_parallel(t, p);
    bool screened = true;
    for (std::int64_t s = 1; s <= p && screened; ++s) {
        screened = (p - t.n()) * (s - 1) + minima[static_cast<std::size_t>(s)] - 1 >= 0;
    }
    if (screened) return true;
    if (!in_bruteforce_scope(t, p, scope)) {
        throw OutOfRange("cannot decide the zero set of type " + t.str() + " at p = " + std::to_string(p) +
                         " without enumerating Z_p beyond the brute-force scope");
    }
    // diff depends on (q, d') only: look for a completing X wherever it is negative.
    (void)cap;
    const ZpEnumerator enumerator(t, p);
    const DimVector h = basis::h(t);
    const auto tasks = collect_tasks(t, 1, p, [&](const Flat& f, std::int64_t q) {
        const DimVector d = DimVector::from_flat(t, f);
        const Int slope = euler_form(t, d, h);
        return Int(p - q) * slope + Int(p - t.n()) * (slope - 1) + (euler_form(t, d, d) - 1) < 0;
    });
    bool violated = false;
#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t k = 0; k < static_cast<std::int64_t>(tasks.size()); ++k) {
        bool hit = false;
        enumerator.run(tasks[static_cast<std::size_t>(k)], [&](FlatTriple&&) {
            hit = true;
            return false;
        });
        if (hit) {
#pragma omp atomic write
            violated = true;
        }
    }
    return !violated;
}

ZeroSetReport analyze_zeroset(const CanonicalType& t, std::int64_t p, const BruteForceScope& scope, std::uint64_t cap) {
    ZeroSetReport report;
    report.p = p;
    report.threshold = threshold_N(t);
    report.target_dim = target_zero_dim(t, p);
    report.is_ci = zeroset_is_ci(t, p, scope, cap);
    if (report.is_ci && Int(p) >= report.threshold) {
        report.component_count = component_count_formula(t, p);
        const Rational d = t.delta();
        // the domestic and tubular counts are proved for p beyond the threshold only
        report.count_proved = d > 0 || Int(p) > report.threshold;
    }
    if (in_bruteforce_scope(t, p, scope)) report.bruteforce_count = components_bruteforce(t, p, cap).size();
    return report;
}

}  // namespace canalg
