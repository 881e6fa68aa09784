#ifndef ZONODT_PERM_GROUP_HPP
#define ZONODT_PERM_GROUP_HPP

#include <gmpxx.h>

#include <vector>

namespace zonodt {

// A permutation of {0,..,n-1} stored as its image list: p[i] is where i goes.
using Perm = std::vector<int>;

Perm identity_perm(int n);
Perm compose_perms(const Perm& f, const Perm& g);  // (f o g)[i] = f[g[i]]
Perm inverse_perm(const Perm& p);
int perm_sign(const Perm& p);

class PermGroup {
public:
    PermGroup(int degree, std::vector<Perm> generators);

    int degree() const { return degree_; }
    const std::vector<Perm>& generators() const { return gens_; }

    // Consecutive block sizes when built by young_subgroup, empty otherwise.
    const std::vector<int>& young_blocks() const { return blocks_; }
    bool is_full_symmetric() const;

    // Every element, sorted; closure of the generators. Throws CapExceeded
    // when the group has more than max_order elements.
    std::vector<Perm> elements(long long max_order) const;
    mpz_class order(long long max_order) const;

private:
    friend PermGroup young_subgroup(const std::vector<int>& block_sizes);
    int degree_;
    std::vector<Perm> gens_;
    std::vector<int> blocks_;
};

// S_{b_1} x ... x S_{b_k} acting on consecutive blocks, generated by the
// adjacent transpositions inside each block.
PermGroup young_subgroup(const std::vector<int>& block_sizes);

} // namespace zonodt

#endif
