#include "zonodt/divisor.hpp"

#include <omp.h>

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "zonodt/errors.hpp"

namespace zonodt {

namespace {

int popcount32(uint32_t x) { return __builtin_popcount(x); }

struct SubsetBound {
    uint32_t mask;
    long long need;  // formal genus of the induced subgraph
};

// Connected induced subsets with positive genus; tree-like subsets impose no
// constraint on an effective divisor.
std::vector<SubsetBound> break_bounds(const Multigraph& g) {
    const int n = g.num_vertices();
    const uint32_t full = (1u << n) - 1;
    std::vector<SubsetBound> bounds;
    for (uint32_t mask = 1; mask < full; ++mask) {
        if (!g.connected_within(mask)) continue;
        const long long genus = g.edges_within(mask) - popcount32(mask) + 1;
        if (genus >= 1) bounds.push_back({mask, genus});
    }
    return bounds;
}

bool satisfies_bounds(const Divisor& x, const std::vector<SubsetBound>& bounds) {
    for (const SubsetBound& b : bounds) {
        long long total = 0;
        uint32_t m = b.mask;
        while (m) {
            const int i = __builtin_ctz(m);
            total += x[i];
            m &= m - 1;
        }
        if (total < b.need) return false;
    }
    return true;
}

void fill_compositions(Divisor& x, std::size_t pos, long long remaining,
                       const std::vector<SubsetBound>& bounds, std::vector<Divisor>& out) {
    if (pos + 1 == x.size()) {
        x[pos] = remaining;
        if (satisfies_bounds(x, bounds)) out.push_back(x);
        return;
    }
    for (long long v = 0; v <= remaining; ++v) {
        x[pos] = v;
        fill_compositions(x, pos + 1, remaining - v, bounds, out);
    }
}

std::vector<Divisor> break_divisors_core(const Multigraph& g, long long max_edges,
                                          bool parallel) {
    if (!g.is_connected()) throw ValidationError("break divisors: graph is not connected");
    if (g.edge_count() > max_edges)
        throw CapExceeded("break divisors: " + std::to_string(g.edge_count()) +
                          " edges exceed the cap " + std::to_string(max_edges));
    const int n = g.num_vertices();
    const long long genus = g.genus();
    const auto bounds = break_bounds(g);

    if (n == 1) return {Divisor{0}};

    std::vector<std::vector<Divisor>> buckets(static_cast<std::size_t>(genus) + 1);
    if (parallel) {
#pragma omp parallel for schedule(dynamic)
        for (long long first = 0; first <= genus; ++first) {
            Divisor x(n, 0);
            x[0] = first;
            fill_compositions(x, 1, genus - first, bounds, buckets[first]);
        }
    } else {
        for (long long first = 0; first <= genus; ++first) {
            Divisor x(n, 0);
            x[0] = first;
            fill_compositions(x, 1, genus - first, bounds, buckets[first]);
        }
    }

    std::vector<Divisor> result;
    for (const auto& b : buckets) result.insert(result.end(), b.begin(), b.end());
    std::sort(result.begin(), result.end());
    return result;
}

} // namespace

std::vector<Divisor> enumerate_break_divisors(const Multigraph& g, long long max_edges) {
    return break_divisors_core(g, max_edges, true);
}

std::vector<Divisor> enumerate_break_divisors_serial(const Multigraph& g,
                                                     long long max_edges) {
    return break_divisors_core(g, max_edges, false);
}

std::vector<Divisor> tree_chip_divisors(const Multigraph& g,
                                        const std::vector<std::pair<int, int>>& tree_edges) {
    const int n = g.num_vertices();
    if (static_cast<int>(tree_edges.size()) != n - 1)
        throw ValidationError("tree has " + std::to_string(tree_edges.size()) +
                              " edges, expected " + std::to_string(n - 1));
    std::vector<int> parent(n);
    for (int i = 0; i < n; ++i) parent[i] = i;
    auto find = [&](int a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    };
    std::map<std::pair<int, int>, int> used;
    for (auto [u, v] : tree_edges) {
        if (u > v) std::swap(u, v);
        if (u < 0 || v >= n || u == v) throw ValidationError("tree edge out of range");
        if (g.multiplicity(u, v) == 0)
            throw ValidationError("tree edge {" + std::to_string(u + 1) + "," +
                                  std::to_string(v + 1) + "} is not an edge of the graph");
        if (++used[{u, v}] > 1) throw ValidationError("tree repeats an edge pair");
        int a = find(u), b = find(v);
        if (a == b) throw ValidationError("tree edges contain a cycle");
        parent[a] = b;
    }

    std::vector<Edge> free_classes;
    long long total_free = 0;
    for (const Edge& e : g.edges()) {
        auto it = used.find({e.u, e.v});
        const int f = e.mult - (it == used.end() ? 0 : 1);
        if (f > 0) {
            free_classes.push_back({e.u, e.v, f});
            total_free += f;
        }
    }
    if (total_free > kMaxEdgesDefault)
        throw CapExceeded("too many non-tree edges: " + std::to_string(total_free));

    std::vector<Divisor> out;
    Divisor x(n, 0);
    // chips assigned class by class: k copies toward u, the rest toward v
    std::function<void(std::size_t)> assign = [&](std::size_t idx) {
        if (idx == free_classes.size()) {
            out.push_back(x);
            return;
        }
        const Edge& e = free_classes[idx];
        for (int k = 0; k <= e.mult; ++k) {
            x[e.u] += k;
            x[e.v] += e.mult - k;
            assign(idx + 1);
            x[e.u] -= k;
            x[e.v] -= e.mult - k;
        }
    };
    assign(0);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

namespace {

std::vector<std::pair<int, int>> edge_instances(const Multigraph& g) {
    std::vector<std::pair<int, int>> inst;
    for (const Edge& e : g.edges())
        for (int c = 0; c < e.mult; ++c) inst.push_back({e.u, e.v});
    return inst;
}

std::vector<Divisor> orientable_core(const Multigraph& g, long long max_edges, bool parallel) {
    if (!g.is_connected()) throw ValidationError("orientable divisors: graph is not connected");
    const long long m = g.edge_count();
    if (m > max_edges)
        throw CapExceeded("edge count " + std::to_string(m) + " exceeds cap " +
                          std::to_string(max_edges) + " for the 2^|E| orientation sweep");
    const int n = g.num_vertices();
    const auto inst = edge_instances(g);
    const uint64_t total = 1ull << m;

    auto sweep = [&](uint64_t lo, uint64_t hi, std::set<Divisor>& sink) {
        Divisor d(n);
        for (uint64_t code = lo; code < hi; ++code) {
            std::fill(d.begin(), d.end(), -1);
            for (std::size_t b = 0; b < inst.size(); ++b)
                d[(code >> b) & 1 ? inst[b].first : inst[b].second] += 1;
            sink.insert(d);
        }
    };

    std::set<Divisor> merged;
    if (parallel && m >= 10) {
        int nthreads = 1;
#pragma omp parallel
        {
#pragma omp single
            nthreads = omp_get_num_threads();
        }
        std::vector<std::set<Divisor>> locals(nthreads);
#pragma omp parallel num_threads(nthreads)
        {
            const int tid = omp_get_thread_num();
            const uint64_t chunk = (total + nthreads - 1) / nthreads;
            const uint64_t lo = std::min<uint64_t>(total, chunk * tid);
            const uint64_t hi = std::min<uint64_t>(total, lo + chunk);
            sweep(lo, hi, locals[tid]);
        }
        for (auto& s : locals) merged.merge(s);
    } else {
        sweep(0, total, merged);
    }
    return std::vector<Divisor>(merged.begin(), merged.end());
}

std::vector<Divisor> filter_interior(const Multigraph& g, std::vector<Divisor> points) {
    const int n = g.num_vertices();
    const uint32_t full = (1u << n) - 1;
    for (uint32_t mask = 1; mask < full && !points.empty(); ++mask) {
        const long long lo = g.edges_within(mask) - popcount32(mask);
        const long long hi = lo + g.cut_size(mask);
        std::erase_if(points, [&](const Divisor& d) {
            long long x = 0;
            uint32_t m = mask;
            while (m) {
                x += d[__builtin_ctz(m)];
                m &= m - 1;
            }
            return x <= lo || x >= hi;
        });
    }
    return points;
}

} // namespace

std::vector<Divisor> enumerate_orientable_divisors(const Multigraph& g, long long max_edges) {
    return orientable_core(g, max_edges, true);
}

std::vector<Divisor> enumerate_orientable_divisors_serial(const Multigraph& g,
                                                          long long max_edges) {
    return orientable_core(g, max_edges, false);
}

std::vector<Divisor> interior_orientable_divisors(const Multigraph& g, long long max_edges) {
    return filter_interior(g, orientable_core(g, max_edges, true));
}

OrbitReport orbits(const std::vector<Divisor>& points, const PermGroup& grp) {
    const int n = grp.degree();
    std::map<Divisor, int> index;
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (static_cast<int>(points[i].size()) != n)
            throw ValidationError("orbit points must match the group degree");
        if (!index.emplace(points[i], static_cast<int>(i)).second)
            throw ValidationError("orbit points contain duplicates");
    }

    std::vector<int> parent(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) parent[i] = static_cast<int>(i);
    std::function<int(int)> find = [&](int a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    };

    Divisor image(n);
    for (std::size_t i = 0; i < points.size(); ++i) {
        for (const Perm& sigma : grp.generators()) {
            for (int v = 0; v < n; ++v) image[sigma[v]] = points[i][v];
            auto it = index.find(image);
            if (it == index.end())
                throw ValidationError("point set is not closed under the group action");
            int a = find(static_cast<int>(i)), b = find(it->second);
            if (a != b) parent[a] = b;
        }
    }

    std::map<int, OrbitInfo> classes;
    for (std::size_t i = 0; i < points.size(); ++i) {
        OrbitInfo& info = classes[find(static_cast<int>(i))];
        info.size += 1;
        if (info.rep.empty() || points[i] > info.rep) info.rep = points[i];
    }

    OrbitReport report;
    for (auto& [root, info] : classes) {
        if (grp.is_full_symmetric()) {
            std::map<long long, long long> mult;
            for (long long v : info.rep) mult[v] += 1;
            for (const auto& [value, count] : mult) info.stab_type.push_back(count);
            std::sort(info.stab_type.rbegin(), info.stab_type.rend());
        }
        report.orbits.push_back(std::move(info));
    }
    std::sort(report.orbits.begin(), report.orbits.end(),
              [](const OrbitInfo& a, const OrbitInfo& b) { return a.rep > b.rep; });
    return report;
}

long long numerical_dt(const SymmetricQuiver& q, const DimensionVector& gamma) {
    const CoveringGraph cov = covering_graph(q, gamma);
    const auto breaks = enumerate_break_divisors(cov.graph);
    return static_cast<long long>(orbits(breaks, young_subgroup(cov.block_sizes)).orbits.size());
}

namespace {

long long subset_sum(const Divisor& d, uint32_t mask) {
    long long x = 0;
    while (mask) {
        x += d[__builtin_ctz(mask)];
        mask &= mask - 1;
    }
    return x;
}

bool interval_exact(const std::vector<Divisor>& points, uint32_t mask, long long lo,
                    long long hi, std::string& why) {
    std::set<long long> values;
    for (const Divisor& d : points) values.insert(subset_sum(d, mask));
    if (values.empty()) {
        why = "no points to evaluate";
        return false;
    }
    if (*values.begin() != lo || *values.rbegin() != hi ||
        static_cast<long long>(values.size()) != hi - lo + 1) {
        why = "value set is not exactly [" + std::to_string(lo) + "," + std::to_string(hi) + "]";
        return false;
    }
    return true;
}

bool interpolant_vanishes(const std::vector<Divisor>& points, uint32_t mask, long long lo,
                          long long hi) {
    for (const Divisor& d : points) {
        mpz_class prod = 1;
        const long long x = subset_sum(d, mask);
        for (long long i = lo; i <= hi; ++i) prod *= mpz_class(static_cast<long>(x - i));
        if (prod != 0) return false;
    }
    return true;
}

std::string mask_to_string(uint32_t mask) {
    std::string s = "{";
    bool first = true;
    while (mask) {
        if (!first) s += ",";
        s += std::to_string(__builtin_ctz(mask) + 1);
        first = false;
        mask &= mask - 1;
    }
    return s + "}";
}

} // namespace

CheckReport check_break_vanishing(const Multigraph& g) {
    CheckReport report;
    const long long genus = g.genus();
    const auto breaks = enumerate_break_divisors(g);

    for (const Divisor& d : breaks) {
        ++report.checks;
        if (subset_sum(d, (1u << g.num_vertices()) - 1) != genus) {
            report.pass = false;
            report.detail = "break divisor of degree != g(G)";
            return report;
        }
    }

    for (const Bond& bond : enumerate_bonds(g)) {
        const uint32_t full = (1u << g.num_vertices()) - 1;
        for (uint32_t mask : {bond.side_mask, full & ~bond.side_mask}) {
            const long long g_side = g.edges_within(mask) - popcount32(mask) + 1;
            const long long g_other =
                g.edges_within(full & ~mask) - popcount32(full & ~mask) + 1;
            const long long lo = g_side;
            const long long hi = genus - g_other;
            ++report.checks;
            std::string why;
            if (!interval_exact(breaks, mask, lo, hi, why) ||
                !interpolant_vanishes(breaks, mask, lo, hi)) {
                report.pass = false;
                report.detail = "bond side " + mask_to_string(mask) + ": " +
                                (why.empty() ? "interpolant does not vanish" : why);
                return report;
            }
        }
    }
    return report;
}

CheckReport check_orientable_vanishing(const Multigraph& g, long long max_edges) {
    CheckReport report;
    const long long genus = g.genus();
    const auto all = enumerate_orientable_divisors(g, max_edges);
    const auto inner = filter_interior(g, all);
    const int n = g.num_vertices();
    const uint32_t full = (1u << n) - 1;

    for (const Divisor& d : all) {
        ++report.checks;
        if (subset_sum(d, full) != genus - 1) {
            report.pass = false;
            report.detail = "orientable divisor of degree != g(G)-1";
            return report;
        }
    }

    for (uint32_t mask = 1; mask < full; ++mask) {
        const long long lo = g.edges_within(mask) - popcount32(mask);
        const long long hi = lo + g.cut_size(mask);
        ++report.checks;
        std::string why;
        if (!interval_exact(all, mask, lo, hi, why) ||
            !interpolant_vanishes(all, mask, lo, hi)) {
            report.pass = false;
            report.detail = "subset " + mask_to_string(mask) + " on the full set: " +
                            (why.empty() ? "interpolant does not vanish" : why);
            return report;
        }
        for (const Divisor& d : inner) {
            const long long x = subset_sum(d, mask);
            if (x <= lo || x >= hi) {
                report.pass = false;
                report.detail =
                    "subset " + mask_to_string(mask) + ": interior point on the boundary";
                return report;
            }
        }
        if (!interpolant_vanishes(inner, mask, lo + 1, hi - 1)) {
            report.pass = false;
            report.detail =
                "subset " + mask_to_string(mask) + ": interior interpolant does not vanish";
            return report;
        }
    }
    return report;
}

std::vector<std::vector<long long>> g_parking_functions(const Multigraph& g, int root) {
    const int n = g.num_vertices();
    if (root < 0 || root >= n)
        throw ValidationError("parking root " + std::to_string(root + 1) + " out of range");
    if (!g.is_connected()) throw ValidationError("parking functions: graph is not connected");

    std::vector<int> others;
    for (int v = 0; v < n; ++v)
        if (v != root) others.push_back(v);
    const int k = static_cast<int>(others.size());
    if (k == 0) return {std::vector<long long>{}};

    // out[i][mask]: edges from others[i] to vertices outside the subset coded
    // by mask (mask bits index `others`; the root is always outside).
    const uint32_t subsets = 1u << k;
    std::vector<std::vector<long long>> out(k, std::vector<long long>(subsets, 0));
    for (int i = 0; i < k; ++i)
        for (uint32_t mask = 0; mask < subsets; ++mask) {
            long long total = g.multiplicity(others[i], root);
            for (int j = 0; j < k; ++j)
                if (!((mask >> j) & 1)) total += g.multiplicity(others[i], others[j]);
            out[i][mask] = total;
        }

    std::vector<std::vector<long long>> result;
    std::vector<long long> a(k, 0);
    std::function<void(int)> rec = [&](int pos) {
        if (pos == k) {
            for (uint32_t mask = 1; mask < subsets; ++mask) {
                bool ok = false;
                for (uint32_t m = mask; m && !ok; m &= m - 1) {
                    const int i = __builtin_ctz(m);
                    ok = a[i] < out[i][mask];
                }
                if (!ok) return;
            }
            result.push_back(a);
            return;
        }
        const long long cap = g.degree(others[pos]);
        for (long long v = 0; v < cap; ++v) {
            a[pos] = v;
            rec(pos + 1);
        }
        a[pos] = 0;
    };
    rec(0);
    std::sort(result.begin(), result.end());
    return result;
}

} // namespace zonodt
