#include "zonodt/perm_group.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "zonodt/errors.hpp"

namespace zonodt {

Perm identity_perm(int n) {
    Perm p(n);
    std::iota(p.begin(), p.end(), 0);
    return p;
}

Perm compose_perms(const Perm& f, const Perm& g) {
    Perm r(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) r[i] = f[g[i]];
    return r;
}

Perm inverse_perm(const Perm& p) {
    Perm r(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) r[p[i]] = static_cast<int>(i);
    return r;
}

int perm_sign(const Perm& p) {
    std::vector<char> seen(p.size(), 0);
    int sign = 1;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (std::size_t j = i; !seen[j]; j = p[j]) {
            seen[j] = 1;
            ++len;
        }
        if (len % 2 == 0) sign = -sign;
    }
    return sign;
}

PermGroup::PermGroup(int degree, std::vector<Perm> generators)
    : degree_(degree), gens_(std::move(generators)) {
    if (degree_ <= 0) throw ValidationError("permutation group: degree must be positive");
    for (const Perm& p : gens_) {
        if (static_cast<int>(p.size()) != degree_)
            throw ValidationError("permutation group: generator length " +
                                  std::to_string(p.size()) + " does not match degree " +
                                  std::to_string(degree_));
        std::vector<char> hit(degree_, 0);
        for (int v : p) {
            if (v < 0 || v >= degree_ || hit[v])
                throw ValidationError("permutation group: generator is not a bijection");
            hit[v] = 1;
        }
    }
}

bool PermGroup::is_full_symmetric() const {
    if (degree_ == 1) return true;
    return blocks_.size() == 1 && blocks_[0] == degree_;
}

std::vector<Perm> PermGroup::elements(long long max_order) const {
    // Young groups expand as a direct product of per-block permutations.
    if (!blocks_.empty()) {
        mpz_class ord = order(max_order);
        if (ord > static_cast<long>(max_order))
            throw CapExceeded("group order " + ord.get_str() + " exceeds cap " +
                              std::to_string(max_order));
        std::vector<Perm> result{identity_perm(degree_)};
        int offset = 0;
        for (int b : blocks_) {
            std::vector<int> local(b);
            std::iota(local.begin(), local.end(), 0);
            std::vector<std::vector<int>> arrangements;
            do {
                arrangements.push_back(local);
            } while (std::next_permutation(local.begin(), local.end()));
            std::vector<Perm> next;
            next.reserve(result.size() * arrangements.size());
            for (const Perm& base : result)
                for (const auto& arr : arrangements) {
                    Perm p = base;
                    for (int i = 0; i < b; ++i) p[offset + i] = offset + arr[i];
                    next.push_back(std::move(p));
                }
            result = std::move(next);
            offset += b;
        }
        std::sort(result.begin(), result.end());
        return result;
    }

    std::set<Perm> seen;
    std::vector<Perm> queue{identity_perm(degree_)};
    seen.insert(queue[0]);
    for (std::size_t head = 0; head < queue.size(); ++head) {
        Perm current = queue[head];
        for (const Perm& g : gens_) {
            Perm next = compose_perms(g, current);
            if (seen.insert(next).second) {
                if (static_cast<long long>(seen.size()) > max_order)
                    throw CapExceeded("group order exceeds cap " + std::to_string(max_order));
                queue.push_back(std::move(next));
            }
        }
    }
    return std::vector<Perm>(seen.begin(), seen.end());
}

mpz_class PermGroup::order(long long max_order) const {
    if (!blocks_.empty()) {
        mpz_class ord = 1;
        for (int b : blocks_) {
            mpz_class f;
            mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(b));
            ord *= f;
        }
        return ord;
    }
    return mpz_class(static_cast<long>(elements(max_order).size()));
}

PermGroup young_subgroup(const std::vector<int>& block_sizes) {
    int n = 0;
    for (int b : block_sizes) {
        if (b <= 0) throw ValidationError("young subgroup: block sizes must be positive");
        n += b;
    }
    if (n == 0) throw ValidationError("young subgroup: no blocks");
    std::vector<Perm> gens;
    int offset = 0;
    for (int b : block_sizes) {
        for (int i = 0; i + 1 < b; ++i) {
            Perm t = identity_perm(n);
            std::swap(t[offset + i], t[offset + i + 1]);
            gens.push_back(std::move(t));
        }
        offset += b;
    }
    PermGroup grp(n, std::move(gens));
    grp.blocks_ = block_sizes;
    return grp;
}

} // namespace zonodt
