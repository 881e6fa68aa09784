#include "zonodt/pspace.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <string>

#include "zonodt/divisor.hpp"
#include "zonodt/errors.hpp"
#include "zonodt/linalg.hpp"

namespace zonodt {

long long graded_total(const GradedDims& dims) {
    return std::accumulate(dims.begin(), dims.end(), 0ll);
}

MultiPoly p_of_edges(const Multigraph& g, const std::vector<int>& counts) {
    const auto& classes = g.edges();
    if (counts.size() != classes.size())
        throw ValidationError("edge count vector does not match the number of edge classes");
    const int n = g.num_vertices();
    MultiPoly result = MultiPoly::constant(n, 1);
    for (std::size_t c = 0; c < classes.size(); ++c) {
        if (counts[c] < 0 || counts[c] > classes[c].mult)
            throw ValidationError("edge multiplicity out of range in p_Y");
        if (counts[c] == 0) continue;
        MultiPoly factor =
            MultiPoly::variable(n, classes[c].u) - MultiPoly::variable(n, classes[c].v);
        for (int k = 0; k < counts[c]; ++k) result = result * factor;
    }
    return result;
}

SlimSubsets slim_subsets(const Multigraph& g, long long max_edges) {
    if (!g.is_connected()) throw ValidationError("slim subsets: graph is not connected");
    if (g.edge_count() > max_edges)
        throw CapExceeded("edge count " + std::to_string(g.edge_count()) + " exceeds cap " +
                          std::to_string(max_edges));
    const auto& classes = g.edges();
    const int n = g.num_vertices();
    const std::size_t k = classes.size();

    SlimSubsets result;
    result.labeled_count = 0;
    std::vector<int> y(k, 0);

    std::function<void(std::size_t)> rec = [&](std::size_t pos) {
        if (pos == k) {
            // complement keeps every class with y below full multiplicity
            std::vector<int> parent(n);
            std::iota(parent.begin(), parent.end(), 0);
            std::function<int(int)> find = [&](int a) {
                while (parent[a] != a) a = parent[a] = parent[parent[a]];
                return a;
            };
            int comps = n;
            for (std::size_t c = 0; c < k; ++c) {
                if (y[c] >= classes[c].mult) continue;
                const int a = find(classes[c].u), b = find(classes[c].v);
                if (a != b) {
                    parent[a] = b;
                    --comps;
                }
            }
            if (comps != 1) return;
            result.count_vectors.push_back(y);
            mpz_class ways = 1;
            for (std::size_t c = 0; c < k; ++c) {
                mpz_class b;
                mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(classes[c].mult),
                             static_cast<unsigned long>(y[c]));
                ways *= b;
            }
            result.labeled_count += ways;
            return;
        }
        for (int v = 0; v <= classes[pos].mult; ++v) {
            y[pos] = v;
            rec(pos + 1);
        }
        y[pos] = 0;
    };
    rec(0);
    return result;
}

namespace {

long long span_rank(const std::vector<const MultiPoly*>& polys) {
    if (polys.empty()) return 0;
    std::map<MultiPoly::Exponents, int> col;
    for (const MultiPoly* p : polys)
        for (const auto& [e, c] : p->terms()) col.emplace(e, 0);
    int next = 0;
    for (auto& [e, idx] : col) idx = next++;

    IntMatrix m;
    m.reserve(polys.size());
    for (const MultiPoly* p : polys) {
        mpz_class denom = 1;
        for (const auto& [e, c] : p->terms())
            mpz_lcm(denom.get_mpz_t(), denom.get_mpz_t(), c.get_den().get_mpz_t());
        std::vector<mpz_class> row(col.size(), 0);
        for (const auto& [e, c] : p->terms())
            row[col[e]] = c.get_num() * (denom / c.get_den());
        m.push_back(std::move(row));
    }
    return bareiss_rank(m);
}

GradedDims trim_trailing_zeros(GradedDims dims) {
    while (!dims.empty() && dims.back() == 0) dims.pop_back();
    return dims;
}

GradedDims graded_rank_core(const std::vector<MultiPoly>& polys, bool parallel) {
    long long maxdeg = -1;
    for (const MultiPoly& p : polys) {
        if (!p.is_homogeneous())
            throw ValidationError("graded_rank: inputs must be homogeneous");
        maxdeg = std::max(maxdeg, p.degree());
    }
    if (maxdeg < 0) return {};

    std::vector<std::vector<const MultiPoly*>> buckets(maxdeg + 1);
    for (const MultiPoly& p : polys)
        if (!p.is_zero()) buckets[p.degree()].push_back(&p);

    GradedDims dims(maxdeg + 1, 0);
    if (parallel) {
#pragma omp parallel for schedule(dynamic)
        for (long long d = 0; d <= maxdeg; ++d) dims[d] = span_rank(buckets[d]);
    } else {
        for (long long d = 0; d <= maxdeg; ++d) dims[d] = span_rank(buckets[d]);
    }
    return trim_trailing_zeros(dims);
}

} // namespace

GradedDims graded_rank(const std::vector<MultiPoly>& polys) {
    return graded_rank_core(polys, true);
}

GradedDims graded_rank_serial(const std::vector<MultiPoly>& polys) {
    return graded_rank_core(polys, false);
}

GradedDims pspace_hilbert(const Multigraph& g, long long max_edges) {
    const SlimSubsets slims = slim_subsets(g, max_edges);
    std::vector<MultiPoly> polys;
    polys.reserve(slims.count_vectors.size());
    for (const auto& y : slims.count_vectors) polys.push_back(p_of_edges(g, y));
    return graded_rank(polys);
}

namespace {

MultiPoly subset_sum_form(int n, uint32_t mask) {
    std::vector<mpq_class> coeffs(n, 0);
    for (uint32_t m = mask; m; m &= m - 1) coeffs[__builtin_ctz(m)] = 1;
    return MultiPoly::linear_form(coeffs);
}

} // namespace

std::vector<MultiPoly> central_power_ideal(const Multigraph& g) {
    if (!g.is_connected()) throw ValidationError("power ideal: graph is not connected");
    const int n = g.num_vertices();
    std::vector<MultiPoly> gens;
    gens.push_back(subset_sum_form(n, (1u << n) - 1));
    for (const Bond& bond : enumerate_bonds(g)) {
        const uint32_t other = ((1u << n) - 1) & ~bond.side_mask;
        gens.push_back(subset_sum_form(n, bond.side_mask).pow(static_cast<int>(bond.cut_size)));
        gens.push_back(subset_sum_form(n, other).pow(static_cast<int>(bond.cut_size)));
    }
    return gens;
}

PowerIdeal pm_power_ideal(const Multigraph& g, int shift) {
    if (shift != 1 && shift != -1)
        throw ValidationError("power ideal shift must be +1 or -1");
    if (!g.is_connected()) throw ValidationError("power ideal: graph is not connected");
    const int n = g.num_vertices();
    PowerIdeal ideal;
    ideal.generators.push_back(subset_sum_form(n, (1u << n) - 1));
    for (const Bond& bond : enumerate_bonds(g)) {
        const uint32_t other = ((1u << n) - 1) & ~bond.side_mask;
        const int e = static_cast<int>(bond.cut_size) + shift;
        if (e == 0) ideal.is_unit = true;
        for (uint32_t mask : {bond.side_mask, other})
            ideal.generators.push_back(subset_sum_form(n, mask).pow(e));
    }
    return ideal;
}

MacaulayReport macaulay_check(const Multigraph& g, long long max_edges) {
    MacaulayReport report;
    const int n = g.num_vertices();
    const uint32_t full = (1u << n) - 1;
    const SlimSubsets slims = slim_subsets(g, max_edges);
    const auto bonds = enumerate_bonds(g);

    for (const auto& y : slims.count_vectors) {
        const MultiPoly p = p_of_edges(g, y);

        ++report.checks;
        if (!directional_derivative(p, full).is_zero()) {
            report.pass = false;
            report.witness = "x_[n] does not annihilate a slim product";
            return report;
        }

        for (const Bond& bond : bonds) {
            for (uint32_t mask : {bond.side_mask, full & ~bond.side_mask}) {
                ++report.checks;
                MultiPoly cur = p;
                for (long long k = 0; k < bond.cut_size && !cur.is_zero(); ++k)
                    cur = directional_derivative(cur, mask);
                if (!cur.is_zero()) {
                    report.pass = false;
                    report.witness = "bond power fails to annihilate a slim product";
                    return report;
                }
            }
        }
    }
    return report;
}

namespace {

void monomials_rec(int nvars, int pos, int remaining, MultiPoly::Exponents& cur,
                   std::vector<MultiPoly::Exponents>& out) {
    if (pos + 1 == nvars) {
        cur[pos] = remaining;
        out.push_back(cur);
        return;
    }
    for (int v = remaining; v >= 0; --v) {
        cur[pos] = v;
        monomials_rec(nvars, pos + 1, remaining - v, cur, out);
    }
    cur[pos] = 0;
}

std::vector<MultiPoly::Exponents> monomials_of_degree(int nvars, int d) {
    std::vector<MultiPoly::Exponents> out;
    if (nvars == 0) {
        if (d == 0) out.push_back({});
        return out;
    }
    MultiPoly::Exponents cur(nvars, 0);
    monomials_rec(nvars, 0, d, cur, out);
    return out;
}

MultiPoly substitute_variable(const MultiPoly& f, int p, const MultiPoly& sub) {
    const int n = f.nvars();
    std::vector<MultiPoly> powers{MultiPoly::constant(n, 1)};
    MultiPoly result(n);
    for (const auto& [e, c] : f.terms()) {
        while (static_cast<int>(powers.size()) <= e[p])
            powers.push_back(powers.back() * sub);
        MultiPoly::Exponents stripped = e;
        stripped[p] = 0;
        MultiPoly mono(n);
        mono.add_term(stripped, c);
        result = result + mono * powers[e[p]];
    }
    return result;
}

MultiPoly drop_variable(const MultiPoly& f, int p) {
    MultiPoly result(f.nvars() - 1);
    MultiPoly::Exponents shrunk(f.nvars() - 1);
    for (const auto& [e, c] : f.terms()) {
        for (int i = 0, j = 0; i < f.nvars(); ++i) {
            if (i == p) continue;
            shrunk[j++] = e[i];
        }
        result.add_term(shrunk, c);
    }
    return result;
}

} // namespace

GradedDims inverse_system_dims(const std::vector<MultiPoly>& generators, int nvars,
                               long long degree_cap) {
    std::vector<MultiPoly> gens;
    for (const MultiPoly& g : generators) {
        if (g.nvars() != nvars)
            throw ValidationError("generator variable count does not match nvars");
        if (!g.is_homogeneous())
            throw ValidationError("inverse system: generators must be homogeneous");
        if (!g.is_zero()) gens.push_back(g);
    }

    // Substitute linear generators away; each elimination removes a variable.
    int r = nvars;
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < gens.size(); ++i) {
            if (gens[i].degree() != 1) continue;
            int p = -1;
            mpq_class cp;
            for (const auto& [e, c] : gens[i].terms())
                for (int v = r - 1; v >= 0; --v)
                    if (e[v] == 1 && v > p) {
                        p = v;
                        cp = c;
                        break;
                    }
            const MultiPoly sub =
                MultiPoly::variable(r, p) - gens[i].scaled(mpq_class(1) / cp);
            std::vector<MultiPoly> next;
            for (std::size_t j = 0; j < gens.size(); ++j) {
                if (j == i) continue;
                MultiPoly s = substitute_variable(gens[j], p, sub);
                if (!s.is_zero()) next.push_back(drop_variable(s, p));
            }
            gens = std::move(next);
            r -= 1;
            changed = true;
            break;
        }
    }

    // Clear denominators; scaling a generator does not change its kernel.
    for (MultiPoly& g : gens) {
        mpz_class denom = 1;
        for (const auto& [e, c] : g.terms())
            mpz_lcm(denom.get_mpz_t(), denom.get_mpz_t(), c.get_den().get_mpz_t());
        g = g.scaled(mpq_class(denom));
    }

    GradedDims dims;
    for (long long d = 0;; ++d) {
        if (d > degree_cap)
            throw CapExceeded("inverse system dimensions did not reach zero by degree " +
                              std::to_string(degree_cap));
        const auto cols = monomials_of_degree(r, static_cast<int>(d));
        std::map<MultiPoly::Exponents, int> colIndex;
        for (std::size_t j = 0; j < cols.size(); ++j) colIndex.emplace(cols[j], j);

        IntMatrix m;
        for (const MultiPoly& g : gens) {
            const long long e = g.degree();
            if (e > d) continue;
            const auto outs = monomials_of_degree(r, static_cast<int>(d - e));
            std::map<MultiPoly::Exponents, int> outIndex;
            for (std::size_t j = 0; j < outs.size(); ++j) outIndex.emplace(outs[j], j);
            std::vector<std::vector<mpz_class>> rows(
                outs.size(), std::vector<mpz_class>(cols.size(), 0));
            MultiPoly::Exponents shifted(r);
            for (std::size_t j = 0; j < cols.size(); ++j) {
                for (const auto& [pe, pc] : g.terms()) {
                    mpz_class falling = 1;
                    bool alive = true;
                    for (int v = 0; v < r && alive; ++v) {
                        if (cols[j][v] < pe[v]) {
                            alive = false;
                            break;
                        }
                        for (int k = 0; k < pe[v]; ++k) falling *= cols[j][v] - k;
                        shifted[v] = cols[j][v] - pe[v];
                    }
                    if (!alive) continue;
                    rows[outIndex[shifted]][j] += pc.get_num() * falling;
                }
            }
            for (auto& row : rows) {
                const bool nonzero =
                    std::any_of(row.begin(), row.end(), [](const mpz_class& z) { return z != 0; });
                if (nonzero) m.push_back(std::move(row));
            }
        }

        const long long dim = static_cast<long long>(cols.size()) - bareiss_rank(m);
        if (dim == 0) break;
        dims.push_back(dim);
    }
    return dims;
}

namespace {

MultiPoly averaged(const MultiPoly& f, const PermGroup& grp, long long max_group_order,
                   bool signed_sum) {
    const auto elems = grp.elements(max_group_order);
    MultiPoly total(f.nvars());
    for (const Perm& sigma : elems) {
        const MultiPoly image = f.permuted(sigma);
        total = signed_sum && perm_sign(sigma) < 0 ? total - image : total + image;
    }
    return total.scaled(mpq_class(1, static_cast<unsigned long>(elems.size())));
}

} // namespace

MultiPoly reynolds(const MultiPoly& f, const PermGroup& grp, long long max_group_order) {
    return averaged(f, grp, max_group_order, false);
}

MultiPoly sign_average(const MultiPoly& f, const PermGroup& grp, long long max_group_order) {
    return averaged(f, grp, max_group_order, true);
}

namespace {

// Action of a vertex permutation on the edge classes: where each class goes,
// and whether its linear form x_u - x_v changes sign.
struct ClassAction {
    std::vector<int> perm;
    std::vector<char> flip;
};

ClassAction edge_class_perm(const Multigraph& g, const Perm& sigma) {
    const auto& classes = g.edges();
    std::map<std::pair<int, int>, int> index;
    for (std::size_t c = 0; c < classes.size(); ++c)
        index.emplace(std::make_pair(classes[c].u, classes[c].v), static_cast<int>(c));
    ClassAction action;
    action.perm.resize(classes.size());
    action.flip.resize(classes.size());
    for (std::size_t c = 0; c < classes.size(); ++c) {
        int a = sigma[classes[c].u], b = sigma[classes[c].v];
        action.flip[c] = a > b;
        if (a > b) std::swap(a, b);
        auto it = index.find({a, b});
        if (it == index.end() || classes[it->second].mult != classes[c].mult)
            throw ValidationError("permutation is not a graph automorphism");
        action.perm[c] = it->second;
    }
    return action;
}

std::vector<int> apply_class_perm(const std::vector<int>& perm, const std::vector<int>& y) {
    std::vector<int> image(y.size());
    for (std::size_t c = 0; c < y.size(); ++c) image[perm[c]] = y[c];
    return image;
}

// sigma . p_Y = sign * p_{sigma Y}: one -1 per flipped parallel copy.
int action_sign(const ClassAction& action, const std::vector<int>& y) {
    int sign = 1;
    for (std::size_t c = 0; c < y.size(); ++c)
        if (action.flip[c] && (y[c] & 1)) sign = -sign;
    return sign;
}

// Orbit partition of the slim count vectors under a vertex group; returns the
// member lists, each sorted, ordered by their lexicographically largest
// member.
std::vector<std::vector<int>> slim_orbit_reps(const std::vector<std::vector<int>>& vectors,
                                              const std::vector<ClassAction>& generators) {
    std::map<std::vector<int>, std::size_t> index;
    for (std::size_t i = 0; i < vectors.size(); ++i) index.emplace(vectors[i], i);

    std::vector<std::size_t> parent(vectors.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<std::size_t(std::size_t)> find = [&](std::size_t a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    };

    for (std::size_t i = 0; i < vectors.size(); ++i)
        for (const ClassAction& action : generators) {
            auto it = index.find(apply_class_perm(action.perm, vectors[i]));
            if (it == index.end())
                throw ValidationError("slim subsets are not closed under the group action");
            const std::size_t a = find(i), b = find(it->second);
            if (a != b) parent[a] = b;
        }

    std::map<std::size_t, std::size_t> largest;
    for (std::size_t i = 0; i < vectors.size(); ++i) {
        const std::size_t root = find(i);
        auto [it, inserted] = largest.emplace(root, i);
        if (!inserted && vectors[i] > vectors[it->second]) it->second = i;
    }
    std::vector<std::vector<int>> reps;
    reps.reserve(largest.size());
    for (const auto& [root, i] : largest) reps.push_back(vectors[i]);
    std::sort(reps.begin(), reps.end());
    return reps;
}

// Spanning set of the isotypic component: per orbit representative Y, the
// group average sum_sigma w(sigma) sigma . p_Y where w is 1 for the trivial
// character and sign(sigma) for the sign character. The action sign of each
// sigma on each Y is what makes this differ from a plain orbit sum.
std::vector<MultiPoly> isotypic_spanning(const Multigraph& g, const PermGroup& grp,
                                         const Caps& caps, bool sign_character) {
    const auto elems = grp.elements(caps.max_group_order);
    const SlimSubsets slims = slim_subsets(g, caps.max_edges);

    std::vector<ClassAction> gen_actions;
    for (const Perm& sigma : grp.generators()) gen_actions.push_back(edge_class_perm(g, sigma));
    const auto reps = slim_orbit_reps(slims.count_vectors, gen_actions);

    std::vector<std::pair<ClassAction, int>> actions;
    actions.reserve(elems.size());
    for (const Perm& sigma : elems)
        actions.push_back({edge_class_perm(g, sigma), sign_character ? perm_sign(sigma) : 1});

    std::vector<MultiPoly> projected;
    for (const auto& rep : reps) {
        std::map<std::vector<int>, long long> weights;
        for (const auto& [action, chi] : actions)
            weights[apply_class_perm(action.perm, rep)] += chi * action_sign(action, rep);
        MultiPoly sum(g.num_vertices());
        for (const auto& [vec, w] : weights) {
            if (w == 0) continue;
            sum = sum + p_of_edges(g, vec).scaled(mpq_class(static_cast<long>(w)));
        }
        if (!sum.is_zero()) projected.push_back(std::move(sum));
    }
    return projected;
}

} // namespace

QuantumDT quantum_dt(const SymmetricQuiver& q, const DimensionVector& gamma, const Caps& caps) {
    const CoveringGraph cov = covering_graph(q, gamma);
    const PermGroup grp = young_subgroup(cov.block_sizes);

    QuantumDT out;
    out.dims = graded_rank(isotypic_spanning(cov.graph, grp, caps, false));
    out.chi = euler_form(q, gamma, gamma);
    out.n_gamma = n_gamma(q, gamma);
    for (std::size_t d = 0; d < out.dims.size(); ++d)
        out.gradings.push_back(2 * static_cast<long long>(d) + out.chi);
    out.numerical = numerical_dt(q, gamma);
    return out;
}

GradedDims sign_isotypic_dims(const Multigraph& g, const PermGroup& grp, const Caps& caps) {
    return graded_rank(isotypic_spanning(g, grp, caps, true));
}

long long top_degree_dim(const Multigraph& g, long long max_edges) {
    const GradedDims dims = pspace_hilbert(g, max_edges);
    const long long genus = g.genus();
    if (static_cast<long long>(dims.size()) == genus + 1) return dims.back();
    return 0;
}

} // namespace zonodt
