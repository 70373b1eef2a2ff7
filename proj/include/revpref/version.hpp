#ifndef REVPREF_VERSION_HPP
#define REVPREF_VERSION_HPP

namespace revpref {

inline constexpr const char* kVersion = "0.1.0";

// Fixed interpretation choices surfaced in every machine-readable report.
inline constexpr const char* kSweepNote =
    "number sweep starts with an empty processed set; first class gets U=lambda=1";
inline constexpr const char* kBigMNote = "A_t = p_t.x_t + max_s p_t.x_s + 1";

}  // namespace revpref

#endif
