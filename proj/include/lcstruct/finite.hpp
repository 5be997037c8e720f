#pragma once

#include "lcstruct/cech.hpp"
#include "lcstruct/plocal.hpp"

#include <span>
#include <vector>

namespace lcstruct {

// Finite abelian p-group as the ascending multiset of exponents gamma of its
// cyclic factors Z/p^gamma.
using FiniteGroup = std::vector<int>;

// Homology at every spot of a complex of free Z/p^K modules, computed with
// Smith forms over Z/p^K alone. Throws InvalidComplex when d*d != 0 mod p^K.
std::vector<FiniteGroup> finite_approx(const FiniteComplex& c);

// Universal-coefficient prediction of H^i(C (x) Z/p^K) from the homology of
// a complex C of flat Z_(p)-modules: H^i / p^K + Tor(H^{i+1}, Z/p^K).
std::vector<FiniteGroup> uct_predict(std::span<const PElem> homology, int K);

}  // namespace lcstruct
