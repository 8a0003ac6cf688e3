#ifndef IDEALFORGE_ROOTS_HPP
#define IDEALFORGE_ROOTS_HPP

#include <cstdint>
#include <vector>

#include "idealforge/polynomial.hpp"

namespace idealforge {

inline constexpr std::uint64_t kDefaultScanBound = 1'000'000;

/// The distinct roots of a polynomial found inside its own field, plus a
/// completeness flag: complete means the polynomial splits into distinct
/// linear factors over the field, i.e. as many roots were found as the
/// degree.
struct RootSet {
    FieldSpec field;
    Polynomial poly;
    std::vector<Scalar> roots;
    bool complete = false;
};

/// Root scan. Over F_p every field element is tried (the modulus must not
/// exceed scan_bound). Over Q only rational-root-theorem candidates are
/// tried, so completeness is reported honestly rather than guaranteed.
RootSet find_roots(const Polynomial& p, std::uint64_t scan_bound = kDefaultScanBound);

}  // namespace idealforge

#endif  // IDEALFORGE_ROOTS_HPP
