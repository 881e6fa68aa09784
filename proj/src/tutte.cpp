#include "zonodt/tutte.hpp"
#include "zonodt/errors.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <unordered_map>

namespace zonodt {

namespace {
const mpz_class kZero = 0;
}

TuttePoly TuttePoly::constant(const mpz_class& c) {
    TuttePoly p;
    if (c != 0) p.c_ = {{c}};
    return p;
}

TuttePoly TuttePoly::x_power(int k) {
    TuttePoly p;
    p.c_.assign(k + 1, {kZero});
    p.c_[k][0] = 1;
    return p;
}

const mpz_class& TuttePoly::coeff(int i, int j) const {
    if (i < 0 || j < 0 || i >= static_cast<int>(c_.size())) return kZero;
    if (j >= static_cast<int>(c_[i].size())) return kZero;
    return c_[i][j];
}

int TuttePoly::y_degree() const {
    int d = -1;
    for (const auto& row : c_)
        for (int j = static_cast<int>(row.size()) - 1; j >= 0; --j)
            if (row[j] != 0) {
                d = std::max(d, j);
                break;
            }
    return d;
}

void TuttePoly::trim() {
    while (!c_.empty()) {
        bool zero = std::all_of(c_.back().begin(), c_.back().end(),
                                [](const mpz_class& z) { return z == 0; });
        if (!zero) break;
        c_.pop_back();
    }
}

TuttePoly TuttePoly::operator+(const TuttePoly& o) const {
    TuttePoly r;
    const std::size_t rows = std::max(c_.size(), o.c_.size());
    r.c_.resize(rows);
    for (std::size_t i = 0; i < rows; ++i) {
        const auto* a = i < c_.size() ? &c_[i] : nullptr;
        const auto* b = i < o.c_.size() ? &o.c_[i] : nullptr;
        const std::size_t w = std::max(a ? a->size() : 0, b ? b->size() : 0);
        r.c_[i].assign(w, kZero);
        for (std::size_t j = 0; j < w; ++j) {
            if (a && j < a->size()) r.c_[i][j] += (*a)[j];
            if (b && j < b->size()) r.c_[i][j] += (*b)[j];
        }
    }
    r.trim();
    return r;
}

TuttePoly TuttePoly::shifted_y(int k) const {
    if (k == 0) return *this;
    TuttePoly r;
    r.c_.resize(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) {
        r.c_[i].assign(c_[i].size() + k, kZero);
        for (std::size_t j = 0; j < c_[i].size(); ++j) r.c_[i][j + k] = c_[i][j];
    }
    return r;
}

mpz_class TuttePoly::eval(const mpz_class& x, const mpz_class& y) const {
    mpz_class total = 0;
    mpz_class xp = 1;
    for (const auto& row : c_) {
        mpz_class yp = 1;
        for (const auto& cij : row) {
            if (cij != 0) total += cij * xp * yp;
            yp *= y;
        }
        xp *= x;
    }
    return total;
}

std::vector<mpz_class> TuttePoly::central_hilbert(long long g) const {
    // T(1, y) coefficients, then reverse: coefficient of q^k is t_{g-k}.
    std::vector<mpz_class> t(static_cast<std::size_t>(g) + 1, 0);
    for (const auto& row : c_)
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (row[j] == 0) continue;
            if (static_cast<long long>(j) > g)
                throw ValidationError("central_hilbert: y-degree exceeds genus");
            t[j] += row[j];
        }
    std::vector<mpz_class> h(t.rbegin(), t.rend());
    return h;
}

namespace {

// Internal recursion graph: pair list sorted by (u, v), loops never stored
// (contraction absorbs them into y-powers immediately).
struct TGraph {
    int n = 0;
    std::vector<Edge> edges;
};

struct UF {
    std::vector<int> p;
    explicit UF(int n) : p(n) {
        for (int i = 0; i < n; ++i) p[i] = i;
    }
    int find(int x) {
        while (p[x] != x) x = p[x] = p[p[x]];
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        p[b] = a;
        return true;
    }
};

bool is_single_bridge(const TGraph& g, std::size_t idx) {
    if (g.edges[idx].mult > 1) return false;
    UF uf(g.n);
    int comps = g.n;
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
        if (i == idx) continue;
        if (uf.unite(g.edges[i].u, g.edges[i].v)) --comps;
    }
    UF all(g.n);
    int base = g.n;
    for (const Edge& e : g.edges)
        if (all.unite(e.u, e.v)) --base;
    return comps > base;
}

TGraph delete_one(const TGraph& g, std::size_t idx) {
    TGraph r = g;
    if (--r.edges[idx].mult == 0) r.edges.erase(r.edges.begin() + idx);
    return r;
}

// Contract the pair at idx: v is merged into u, vertices above v shift down.
TGraph contract_pair(const TGraph& g, std::size_t idx) {
    const int u = g.edges[idx].u, v = g.edges[idx].v;
    std::map<std::pair<int, int>, int> acc;
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
        if (i == idx) continue;
        int a = g.edges[i].u, b = g.edges[i].v;
        if (a == v) a = u;
        if (b == v) b = u;
        if (a == b) continue;
        if (a > v) --a;
        if (b > v) --b;
        if (a > b) std::swap(a, b);
        acc[{a, b}] += g.edges[i].mult;
    }
    TGraph r;
    r.n = g.n - 1;
    for (const auto& [pr, m] : acc) r.edges.push_back({pr.first, pr.second, m});
    return r;
}

// Canonical memo key: iterated color refinement, then vertices relabeled by
// (final color, index) and the full relabeled edge multiset emitted. Equal keys
// mean equal relabeled graphs, so memo hits are always sound; refinement only
// improves the hit rate.
std::string canonical_key(const TGraph& g) {
    const int n = g.n;
    std::vector<long long> color(n);
    for (const Edge& e : g.edges) {
        color[e.u] += e.mult;
        color[e.v] += e.mult;
    }
    std::vector<long long> next(n);
    for (int round = 0; round < n; ++round) {
        std::vector<std::vector<std::pair<long long, int>>> sig(n);
        for (const Edge& e : g.edges) {
            sig[e.u].push_back({color[e.v], e.mult});
            sig[e.v].push_back({color[e.u], e.mult});
        }
        std::map<std::pair<long long, std::vector<std::pair<long long, int>>>, long long> ids;
        for (int v = 0; v < n; ++v) {
            std::sort(sig[v].begin(), sig[v].end());
            auto key = std::make_pair(color[v], std::move(sig[v]));
            auto it = ids.find(key);
            if (it == ids.end()) it = ids.emplace(std::move(key), ids.size()).first;
            next[v] = it->second;
        }
        if (next == color) break;
        color = next;
    }
    std::vector<int> order(n), rank(n);
    for (int v = 0; v < n; ++v) order[v] = v;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return color[a] != color[b] ? color[a] < color[b] : a < b;
    });
    for (int i = 0; i < n; ++i) rank[order[i]] = i;

    std::vector<std::array<int, 3>> rel;
    rel.reserve(g.edges.size());
    for (const Edge& e : g.edges) {
        int a = rank[e.u], b = rank[e.v];
        if (a > b) std::swap(a, b);
        rel.push_back({a, b, e.mult});
    }
    std::sort(rel.begin(), rel.end());

    std::string key;
    key.reserve(rel.size() * 9 + 8);
    key += std::to_string(n);
    for (const auto& t : rel) {
        key += '|';
        key += std::to_string(t[0]);
        key += ',';
        key += std::to_string(t[1]);
        key += ',';
        key += std::to_string(t[2]);
    }
    return key;
}

std::unordered_map<std::string, TuttePoly> memo;
std::shared_mutex memo_mutex;

TuttePoly tutte_rec(const TGraph& g) {
    if (g.edges.empty()) return TuttePoly::constant(1);

    std::size_t pivot = g.edges.size();
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
        if (!is_single_bridge(g, i)) {
            pivot = i;
            break;
        }
    }
    if (pivot == g.edges.size()) {
        // every remaining edge is a bridge with multiplicity one
        return TuttePoly::x_power(static_cast<int>(g.edges.size()));
    }

    const std::string key = canonical_key(g);
    {
        std::shared_lock lock(memo_mutex);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
    }

    const int extra = g.edges[pivot].mult - 1;  // parallel copies become loops on contraction
    TuttePoly result =
        tutte_rec(delete_one(g, pivot)) + tutte_rec(contract_pair(g, pivot)).shifted_y(extra);

    {
        std::unique_lock lock(memo_mutex);
        memo.emplace(key, result);
    }
    return result;
}

} // namespace

TuttePoly tutte(const Multigraph& g) {
    if (!g.is_connected()) throw ValidationError("tutte: graph is not connected");
    TGraph t;
    t.n = g.num_vertices();
    t.edges = g.edges();
    return tutte_rec(t);
}

void tutte_memo_clear() {
    std::unique_lock lock(memo_mutex);
    memo.clear();
}

} // namespace zonodt
