#ifndef ZONODT_CAPS_HPP
#define ZONODT_CAPS_HPP

namespace zonodt {

// Enumeration guards. Exceeding a cap raises CapExceeded rather than running
// an open-ended computation.
inline constexpr long long kMaxEdgesDefault = 24;            // 2^|E| orientation sweeps
inline constexpr long long kMaxBreakEdgesDefault = 64;       // composition search, no 2^|E| term
inline constexpr long long kMaxGroupOrderDefault = 3628800;  // 10!
inline constexpr long long kMaxDsetPointsDefault = 20000000;
inline constexpr long long kDegreeCapDefault = 64;

struct Caps {
    long long max_edges = kMaxEdgesDefault;
    long long max_group_order = kMaxGroupOrderDefault;
    long long max_dset_points = kMaxDsetPointsDefault;
    long long degree_cap = kDegreeCapDefault;
};

} // namespace zonodt

#endif
