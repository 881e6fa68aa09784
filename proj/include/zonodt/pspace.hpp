#ifndef ZONODT_PSPACE_HPP
#define ZONODT_PSPACE_HPP

#include <gmpxx.h>

#include <string>
#include <vector>

#include "zonodt/caps.hpp"
#include "zonodt/multigraph.hpp"
#include "zonodt/multipoly.hpp"
#include "zonodt/perm_group.hpp"
#include "zonodt/quiver.hpp"

namespace zonodt {

// Dimension per polynomial degree, trailing zeros trimmed.
using GradedDims = std::vector<long long>;

long long graded_total(const GradedDims& dims);

// Product of (x_u - x_v) over the edge classes of g, with the multiplicity of
// class i taken from counts[i]; the smaller vertex index carries the plus sign.
MultiPoly p_of_edges(const Multigraph& g, const std::vector<int>& counts);

struct SlimSubsets {
    // Per-edge-class multiplicities of every Y with g minus Y connected,
    // sorted lexicographically.
    std::vector<std::vector<int>> count_vectors;
    // Number of slim subsets counting parallel copies as distinct edges;
    // equals T_g(1,2).
    mpz_class labeled_count;
};

SlimSubsets slim_subsets(const Multigraph& g, long long max_edges = kMaxEdgesDefault);

// Dimension of the span, degree by degree. Inputs must be homogeneous.
GradedDims graded_rank(const std::vector<MultiPoly>& polys);
GradedDims graded_rank_serial(const std::vector<MultiPoly>& polys);

// Graded dimensions of the span of all slim p_Y.
GradedDims pspace_hilbert(const Multigraph& g, long long max_edges = kMaxEdgesDefault);

// x_1+...+x_n together with x_S^{d(S)} for both sides of every bond.
std::vector<MultiPoly> central_power_ideal(const Multigraph& g);

struct PowerIdeal {
    std::vector<MultiPoly> generators;
    bool is_unit = false;  // the internal shift turns a bridge bond into x_S^0 = 1
};

// Bond powers shifted by +1 (external) or -1 (internal).
PowerIdeal pm_power_ideal(const Multigraph& g, int shift);

struct MacaulayReport {
    bool pass = true;
    long long checks = 0;
    std::string witness;
};

// Every central power-ideal generator annihilates every slim p_Y as a
// differential operator.
MacaulayReport macaulay_check(const Multigraph& g, long long max_edges = kMaxEdgesDefault);

// Graded dimensions of {f : g(d/dx) f = 0 for every generator}; equals the
// Hilbert function of the quotient by the ideal. Stops at the first zero
// dimension; throws CapExceeded when degree_cap is reached first.
GradedDims inverse_system_dims(const std::vector<MultiPoly>& generators, int nvars,
                               long long degree_cap = kDegreeCapDefault);

// Group averaging (1/|grp|) sum of sigma . f.
MultiPoly reynolds(const MultiPoly& f, const PermGroup& grp,
                   long long max_group_order = kMaxGroupOrderDefault);

// Signed averaging (1/|grp|) sum of sign(sigma) sigma . f.
MultiPoly sign_average(const MultiPoly& f, const PermGroup& grp,
                       long long max_group_order = kMaxGroupOrderDefault);

struct QuantumDT {
    GradedDims dims;                  // graded dimensions of the invariant subspace
    long long chi = 0;                // euler_form(q, gamma, gamma)
    std::vector<long long> gradings;  // 2d + chi for each degree d
    long long numerical = 0;          // break-divisor orbit count; the value at q = 1
    long long n_gamma = 0;
};

QuantumDT quantum_dt(const SymmetricQuiver& q, const DimensionVector& gamma,
                     const Caps& caps = Caps{});

// Graded dimensions of the sign-isotypic component of the span of slim p_Y.
GradedDims sign_isotypic_dims(const Multigraph& g, const PermGroup& grp,
                              const Caps& caps = Caps{});

// Coefficient of q^{g(G)} in pspace_hilbert; the number of spanning trees of
// external activity zero.
long long top_degree_dim(const Multigraph& g, long long max_edges = kMaxEdgesDefault);

} // namespace zonodt

#endif
