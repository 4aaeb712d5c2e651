#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "skewsieve/tableaux.hpp"

namespace skewsieve {

/// An operation that combinatorial theory guarantees cannot fail did fail;
/// always an implementation or convention bug, never expected on valid input.
class CrystalTheoryViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Orbit iteration exceeded its safety bound without returning to the start.
class NonPeriodicError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Lowering operator f_i: bracket-match the reading word (i+1 opens, i
/// closes, a closing i pairs with the nearest open i+1 before it), then turn
/// the rightmost unmatched i into i+1.  Empty when no i is unmatched.
std::optional<Tableau> lower(const Tableau& t, int i);

/// Raising operator e_i: with the same matching, turns the leftmost
/// unmatched i+1 into i.  Empty when no i+1 is unmatched.  Inverse of lower
/// where both are defined.
std::optional<Tableau> raise(const Tableau& t, int i);

/// Reflection sigma_i: with k = w_i - w_{i+1}, applies f_i k times (k > 0)
/// or e_i |k| times (k < 0).  Involution; swaps w_i and w_{i+1}.
Tableau reflect(const Tableau& t, int i);

/// sigma_1, then sigma_2, ..., finally sigma_{alphabet-1}.  The image's
/// weight is the input's weight cyclically shifted by one.
Tableau cyclic_action(const Tableau& t);

/// Cycle of a tableau under cyclic_action, listed from its lexicographically
/// least element.
struct CyclicOrbit {
    Tableau representative;
    std::vector<Tableau> elements;  // element k+1 = cyclic_action(element k), cyclically
    std::size_t size() const { return elements.size(); }
};

inline constexpr std::size_t kOrbitSafetyBound = 1'000'000;

CyclicOrbit orbit(const Tableau& t, std::size_t safety_bound = kOrbitSafetyBound);

/// Least k >= 1 with cyclic_action^k = identity on all of SSYT(shape, n);
/// the lcm of the orbit sizes.
long long action_order(const SkewShape& shape, int n);

/// Entry swap i <-> i+1 on free entries: an i is bound when i+1 sits
/// directly below, an i+1 is bound when i sits directly above; per row the
/// free entries form a block i^a (i+1)^b, rewritten to i^b (i+1)^a.
/// Involution; swaps w_i and w_{i+1}.
Tableau bk_involution(const Tableau& t, int i);

/// bk_1, then bk_2, ..., finally bk_{alphabet-1}: same composition order as
/// cyclic_action, for a like-for-like comparison of the two actions.
Tableau promotion(const Tableau& t);

/// Least k >= 1 with promotion^k = identity on all of SSYT(shape, n).
long long promotion_order(const SkewShape& shape, int n);

}  // namespace skewsieve
