#include "lcstruct/plocal.hpp"

#include "lcstruct/error.hpp"

#include <algorithm>
#include <ostream>
#include <string>

namespace lcstruct {

std::ostream& operator<<(std::ostream& out, const PElem& e) {
  const std::string p = e.p.get_str();
  std::vector<std::string> parts;
  auto with_power = [](std::string name, int count) {
    return count == 1 ? name : name + "^" + std::to_string(count);
  };
  if (e.free) parts.push_back(with_power("L(" + p + ")", e.free));
  if (e.divfree) parts.push_back(with_power("Q", e.divfree));
  if (e.prufer) parts.push_back(with_power("E(" + p + ")", e.prufer));
  for (int beta : e.torsion) parts.push_back(p + "^" + std::to_string(beta));
  if (parts.empty()) return out << "0";
  for (std::size_t k = 0; k < parts.size(); ++k) out << (k ? " + " : "") << parts[k];
  return out;
}

void check_morphism(const ValMatrix& f, const Int& p) {
  if (f.entries.rows() != f.rows.size() || f.entries.cols() != f.cols.size())
    throw Error(Errc::ValuationViolation, "morphism shape does not match its summand tags");
  for (std::size_t r = 0; r < f.rows.size(); ++r) {
    if (f.rows[r] != Kind::L) continue;
    for (std::size_t c = 0; c < f.cols.size(); ++c) {
      const Rat& x = f.entries(r, c);
      if (x == 0) continue;
      if (f.cols[c] == Kind::Q)
        throw Error(Errc::ValuationViolation,
                    "nonzero entry from a Q summand to an L summand at (" + std::to_string(r) +
                        ", " + std::to_string(c) + ")");
      if (valuation(x, p) < 0)
        throw Error(Errc::ValuationViolation,
                    "L -> L entry " + x.get_str() + " is not " + p.get_str() + "-integral");
    }
  }
}

LocalSnf local_snf(const RatMatrix& m, const Int& p) {
  const std::size_t rows = m.rows(), cols = m.cols();
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      if (m(r, c) != 0 && valuation(m(r, c), p) < 0)
        throw Error(Errc::ValuationViolation,
                    "entry " + m(r, c).get_str() + " has negative " + p.get_str() + "-valuation");

  LocalSnf out;
  RatMatrix a = m;
  out.U = out.U_inv = RatMatrix::identity(rows);
  out.V = out.V_inv = RatMatrix::identity(cols);

  for (std::size_t k = 0; k < std::min(rows, cols); ++k) {
    // pivot: minimal valuation, ties broken by smallest (row, col)
    int best = kInfiniteValuation;
    std::size_t pr = 0, pc = 0;
    for (std::size_t r = k; r < rows; ++r)
      for (std::size_t c = k; c < cols; ++c) {
        if (a(r, c) == 0) continue;
        const int v = valuation(a(r, c), p);
        if (v < best) {
          best = v;
          pr = r;
          pc = c;
        }
      }
    if (best == kInfiniteValuation) break;

    a.swap_rows(k, pr);
    out.U_inv.swap_rows(k, pr);
    out.U.swap_cols(k, pr);
    a.swap_cols(k, pc);
    out.V_inv.swap_cols(k, pc);
    out.V.swap_rows(k, pc);

    for (std::size_t r = k + 1; r < rows; ++r) {
      if (a(r, k) == 0) continue;
      const Rat f = -a(r, k) / a(k, k);
      a.add_row(r, k, f);
      out.U_inv.add_row(r, k, f);
      out.U.add_col(k, r, Rat(-f));
    }
    for (std::size_t c = k + 1; c < cols; ++c) {
      if (a(k, c) == 0) continue;
      const Rat g = -a(k, c) / a(k, k);
      a.add_col(c, k, g);
      out.V_inv.add_col(c, k, g);
      out.V.add_row(k, c, Rat(-g));
    }
    const Rat s = Rat(power(p, static_cast<unsigned long>(best))) / a(k, k);
    a.scale_row(k, s);
    out.U_inv.scale_row(k, s);
    out.U.scale_col(k, Rat(1 / s));
    out.exponents.push_back(best);
  }
  out.D = std::move(a);
  return out;
}

namespace {

// Scales each column by the lcm of its denominators.
RatMatrix clear_column_denominators(RatMatrix m) {
  for (std::size_t c = 0; c < m.cols(); ++c) {
    Int l = 1;
    for (std::size_t r = 0; r < m.rows(); ++r)
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(r, c).get_den_mpz_t());
    m.scale_col(c, Rat(l));
  }
  return m;
}

RatMatrix select_rows(const RatMatrix& m, const std::vector<std::size_t>& rows) {
  RatMatrix out(rows.size(), m.cols());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = m(rows[r], c);
  return out;
}

}  // namespace

KernelBasis kernel_basis(const ValMatrix& f, const Int& p) {
  check_morphism(f, p);
  const std::size_t n = f.cols.size();
  std::vector<std::size_t> l_coords;
  for (std::size_t c = 0; c < n; ++c)
    if (f.cols[c] == Kind::L) l_coords.push_back(c);

  const RatMatrix kernel = nullspace(f.entries);
  const std::size_t k = kernel.cols();

  // Q part: kernel vectors with vanishing L-coordinates.
  RatMatrix stacked(f.entries.rows() + l_coords.size(), n);
  for (std::size_t r = 0; r < f.entries.rows(); ++r)
    for (std::size_t c = 0; c < n; ++c) stacked(r, c) = f.entries(r, c);
  for (std::size_t j = 0; j < l_coords.size(); ++j) stacked(f.entries.rows() + j, l_coords[j]) = 1;
  const RatMatrix divisible = nullspace(stacked);

  // L part: the projection of the kernel to the L-coordinates spans a
  // subspace P; its intersection with L^r is spanned by the leading columns
  // of the left transform of a local Smith form.
  const RatMatrix projection = select_rows(kernel, l_coords);
  std::vector<std::vector<Rat>> lifts;
  if (!l_coords.empty() && k > 0) {
    const LocalSnf snf = local_snf(clear_column_denominators(projection), p);
    for (std::size_t j = 0; j < snf.exponents.size(); ++j) {
      const auto y = solve(projection, snf.U.column(j));
      if (!y) consistency_violation("kernel_basis: saturated lattice vector outside the projection");
      std::vector<Rat> x(n, Rat(0));
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < k; ++c) x[r] += kernel(r, c) * (*y)[c];
      lifts.push_back(std::move(x));
    }
  }
  if (lifts.size() + divisible.cols() != k)
    consistency_violation("kernel_basis: L and Q parts do not add up to the rational kernel");

  KernelBasis out;
  out.free_rank = static_cast<int>(lifts.size());
  out.divisible_rank = static_cast<int>(divisible.cols());
  out.basis = RatMatrix(n, k);
  for (std::size_t j = 0; j < lifts.size(); ++j)
    for (std::size_t r = 0; r < n; ++r) out.basis(r, j) = lifts[j][r];
  for (std::size_t j = 0; j < divisible.cols(); ++j)
    for (std::size_t r = 0; r < n; ++r) out.basis(r, lifts.size() + j) = divisible(r, j);
  return out;
}

void check_complex(const PLocalComplex& c) {
  if (!is_prime(c.p)) throw Error(Errc::InvalidComplex, c.p.get_str() + " is not prime");
  if (c.terms.empty() || c.differentials.size() + 1 != c.terms.size())
    throw Error(Errc::InvalidComplex, "a complex with m terms needs m - 1 differentials");
  for (std::size_t k = 0; k < c.differentials.size(); ++k) {
    const auto& d = c.differentials[k];
    if (d.rows() != c.terms[k + 1].size() || d.cols() != c.terms[k].size())
      throw Error(Errc::InvalidComplex, "differential " + std::to_string(k) + " has the wrong shape");
    try {
      check_morphism({c.terms[k + 1], c.terms[k], d}, c.p);
    } catch (const Error& e) {
      throw Error(Errc::InvalidComplex, "differential " + std::to_string(k) + ": " + e.what());
    }
    if (k + 1 < c.differentials.size() && !(c.differentials[k + 1] * d).is_zero())
      throw Error(Errc::InvalidComplex, "d^" + std::to_string(k + 1) + " * d^" +
                                            std::to_string(k) + " is not zero");
  }
}

namespace {

void log_matrix(std::ostream& out, const char* name, const RatMatrix& m) {
  out << "    " << name << " (" << m.rows() << "x" << m.cols() << ")";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    out << (r ? "; " : " [");
    for (std::size_t c = 0; c < m.cols(); ++c) out << (c ? " " : "") << m(r, c).get_str();
  }
  out << (m.rows() ? "]" : "") << '\n';
}

}  // namespace

PElem homology_at(const PLocalComplex& c, std::size_t spot, std::ostream* trace) {
  check_complex(c);
  if (spot >= c.terms.size())
    throw Error(Errc::InvalidComplex, "spot " + std::to_string(spot) + " is outside the complex");
  const Int& p = c.p;
  const auto& source = c.terms[spot];

  ValMatrix outgoing;
  outgoing.cols = source;
  if (spot < c.differentials.size()) {
    outgoing.rows = c.terms[spot + 1];
    outgoing.entries = c.differentials[spot];
  } else {
    outgoing.entries = RatMatrix(0, source.size());
  }
  const KernelBasis kernel = kernel_basis(outgoing, p);
  const std::size_t s = kernel.free_rank, t = kernel.divisible_rank;
  if (trace) {
    *trace << "  spot " << spot << " at p=" << p.get_str() << ": kernel L^" << s << " + Q^" << t
           << '\n';
    log_matrix(*trace, "kernel basis", kernel.basis);
  }

  // Image of the incoming differential in kernel coordinates.
  std::vector<std::vector<Rat>> lattice_gens;   // from L sources: (L | Q) coordinates
  std::vector<std::vector<Rat>> subspace_gens;  // from Q sources: Q coordinates only
  if (spot > 0) {
    const auto& d = c.differentials[spot - 1];
    const auto& from = c.terms[spot - 1];
    for (std::size_t col = 0; col < d.cols(); ++col) {
      const auto z = solve(kernel.basis, d.column(col));
      if (!z)
        throw Error(Errc::InconsistentImage,
                    "image column " + std::to_string(col) + " is not in the kernel");
      if (from[col] == Kind::Q) {
        for (std::size_t j = 0; j < s; ++j)
          if ((*z)[j] != 0) consistency_violation("image of a Q summand has an L component");
        subspace_gens.emplace_back(z->begin() + s, z->end());
      } else {
        for (std::size_t j = 0; j < s; ++j)
          if ((*z)[j] != 0 && valuation((*z)[j], p) < 0)
            consistency_violation("image of an L summand is not p-integral in the kernel");
        lattice_gens.push_back(*z);
      }
    }
  }

  // Quotient the Q coordinates by the subspace W: complete a basis of W by
  // unit vectors and keep the complementary coordinates.
  RatMatrix w_rows(subspace_gens.size(), t);
  for (std::size_t r = 0; r < subspace_gens.size(); ++r)
    for (std::size_t j = 0; j < t; ++j) w_rows(r, j) = subspace_gens[r][j];
  const auto w_pivots = rref(w_rows);
  const std::size_t w_dim = w_pivots.size();
  const std::size_t q_left = t - w_dim;
  RatMatrix completion(t, t);
  {
    std::vector<bool> pivot(t, false);
    for (std::size_t r = 0; r < w_dim; ++r) {
      pivot[w_pivots[r]] = true;
      for (std::size_t j = 0; j < t; ++j) completion(j, r) = w_rows(r, j);
    }
    std::size_t col = w_dim;
    for (std::size_t j = 0; j < t; ++j)
      if (!pivot[j]) completion(j, col++) = 1;
  }
  const RatMatrix to_completion = t ? inverse(completion) : RatMatrix(0, 0);

  RatMatrix gens(s + q_left, lattice_gens.size());
  for (std::size_t col = 0; col < lattice_gens.size(); ++col) {
    const auto& z = lattice_gens[col];
    for (std::size_t j = 0; j < s; ++j) gens(j, col) = z[j];
    for (std::size_t r = 0; r < q_left; ++r) {
      Rat v = 0;
      for (std::size_t j = 0; j < t; ++j) v += to_completion(w_dim + r, j) * z[s + j];
      gens(s + r, col) = v;
    }
  }
  // Rescaling a Q coordinate is an automorphism; make those rows integral.
  for (std::size_t r = s; r < gens.rows(); ++r) {
    Int l = 1;
    for (std::size_t col = 0; col < gens.cols(); ++col)
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), gens(r, col).get_den_mpz_t());
    gens.scale_row(r, Rat(l));
  }
  if (trace) {
    *trace << "    divisible image dim " << w_dim << ", lattice generators " << lattice_gens.size()
           << '\n';
    log_matrix(*trace, "generators", gens);
  }

  PElem out;
  out.p = p;
  RatMatrix q_block(q_left, gens.cols());
  for (std::size_t r = 0; r < q_left; ++r)
    for (std::size_t col = 0; col < gens.cols(); ++col) q_block(r, col) = gens(s + r, col);

  std::size_t pivots = 0;
  if (s > 0 && gens.cols() > 0) {
    RatMatrix l_block(s, gens.cols());
    for (std::size_t r = 0; r < s; ++r)
      for (std::size_t col = 0; col < gens.cols(); ++col) l_block(r, col) = gens(r, col);
    const LocalSnf snf = local_snf(l_block, p);
    // Column operations act on the Q rows too; L rows may be added to Q rows
    // freely, which clears the Q entries under every pivot.
    q_block = q_block * snf.V_inv;
    pivots = snf.exponents.size();
    for (std::size_t k = 0; k < pivots; ++k) {
      for (std::size_t r = 0; r < q_left; ++r) q_block(r, k) = 0;
      if (snf.exponents[k] > 0) out.torsion.push_back(snf.exponents[k]);
    }
    if (trace) {
      *trace << "    local Smith exponents:";
      for (int e : snf.exponents) *trace << ' ' << e;
      *trace << '\n';
    }
  }
  const std::size_t lattice_rank = rank(q_block);
  out.free = static_cast<int>(s - pivots);
  out.prufer = static_cast<int>(lattice_rank);
  out.divfree = static_cast<int>(q_left - lattice_rank);
  std::sort(out.torsion.begin(), out.torsion.end());
  if (trace) *trace << "    H^" << spot << " = " << out << '\n';
  return out;
}

std::vector<PElem> homology_all(const PLocalComplex& c, std::ostream* trace) {
  std::vector<PElem> out;
  for (std::size_t spot = 0; spot < c.terms.size(); ++spot) out.push_back(homology_at(c, spot, trace));
  return out;
}

}  // namespace lcstruct
