#pragma once

#include "lcstruct/arith.hpp"
#include "lcstruct/cech.hpp"
#include "lcstruct/matrix.hpp"

#include <iosfwd>
#include <vector>

namespace lcstruct {

// Isomorphism class L^free + Q^divfree + E(p)^prufer + sum_j Z/p^{torsion_j}
// of a module over L = Z_(p), with E(p) = Q/L.
struct PElem {
  Int p;
  int free = 0;
  int divfree = 0;
  int prufer = 0;
  std::vector<int> torsion;  // ascending, each >= 1

  int torsion_count() const { return static_cast<int>(torsion.size()); }
  bool is_zero() const { return free == 0 && divfree == 0 && prufer == 0 && torsion.empty(); }

  friend bool operator==(const PElem&, const PElem&) = default;
};

std::ostream& operator<<(std::ostream& out, const PElem& e);

// Morphism between sums of L and Q; rows index the target.
struct ValMatrix {
  std::vector<Kind> rows;
  std::vector<Kind> cols;
  RatMatrix entries;
};

// Throws ValuationViolation if some entry breaks the L/Q morphism rules.
void check_morphism(const ValMatrix& f, const Int& p);

struct LocalSnf {
  RatMatrix U, D, V;      // m = U * D * V
  RatMatrix U_inv, V_inv; // D = U_inv * m * V_inv
  std::vector<int> exponents;  // D(k, k) = p^{exponents[k]}, nondecreasing
};

// Smith form over Z_(p). Throws ValuationViolation on an entry with
// negative valuation.
LocalSnf local_snf(const RatMatrix& m, const Int& p);

// ker f = L^free_rank + Q^divisible_rank inside the source. Columns of
// `basis` are the generators: the first free_rank span the L part (with
// saturated L-coordinates), the rest span the Q part (zero L-coordinates).
struct KernelBasis {
  int free_rank = 0;
  int divisible_rank = 0;
  RatMatrix basis;
};

KernelBasis kernel_basis(const ValMatrix& f, const Int& p);

// Throws InvalidComplex when shapes, morphism rules or d*d = 0 fail.
void check_complex(const PLocalComplex& c);

// Homology at spot i, as an isomorphism class. Throws InvalidComplex or
// InconsistentImage. When trace is non-null, reduction steps are logged.
PElem homology_at(const PLocalComplex& c, std::size_t spot, std::ostream* trace = nullptr);

std::vector<PElem> homology_all(const PLocalComplex& c, std::ostream* trace = nullptr);

}  // namespace lcstruct
