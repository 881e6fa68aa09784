#ifndef ZONODT_VERSION_HPP
#define ZONODT_VERSION_HPP

namespace zonodt {

inline constexpr const char* kVersion = "1.0.0";

} // namespace zonodt

#endif
