#include "lcstruct/finite.hpp"

#include "lcstruct/error.hpp"

#include <algorithm>

namespace lcstruct {

namespace {

struct ModularRing {
  Int p;
  int K;
  Int q;

  Int reduce(Int x) const {
    mpz_mod(x.get_mpz_t(), x.get_mpz_t(), q.get_mpz_t());
    return x;
  }
  int val(const Int& x) const {
    const Int r = reduce(x);
    return r == 0 ? K : std::min(valuation(r, p), K);
  }
  Int invert(const Int& unit) const {
    Int out;
    if (mpz_invert(out.get_mpz_t(), unit.get_mpz_t(), q.get_mpz_t()) == 0)
      throw std::logic_error("finite_approx: non-unit inverted");
    return out;
  }
};

struct ModularSnf {
  IntMatrix col_transform;      // a * col_transform = row_transform^-1 * D
  IntMatrix col_transform_inv;
  std::vector<int> exponents;   // pivot k carries p^{exponents[k]}, < K
};

// Smith form over Z/p^K tracking the column transform.
ModularSnf modular_snf(IntMatrix a, const ModularRing& ring) {
  const std::size_t rows = a.rows(), cols = a.cols();
  ModularSnf out;
  out.col_transform = out.col_transform_inv = IntMatrix::identity(cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) a(r, c) = ring.reduce(a(r, c));

  for (std::size_t k = 0; k < std::min(rows, cols); ++k) {
    int best = ring.K;
    std::size_t pr = 0, pc = 0;
    for (std::size_t r = k; r < rows; ++r)
      for (std::size_t c = k; c < cols; ++c) {
        const int v = ring.val(a(r, c));
        if (v < best) {
          best = v;
          pr = r;
          pc = c;
        }
      }
    if (best == ring.K) break;
    a.swap_rows(k, pr);
    a.swap_cols(k, pc);
    out.col_transform.swap_cols(k, pc);
    out.col_transform_inv.swap_rows(k, pc);

    const Int scale = power(ring.p, static_cast<unsigned long>(best));
    const Int unit_inv = ring.invert(Int(a(k, k) / scale));
    for (std::size_t r = k + 1; r < rows; ++r) {
      if (a(r, k) == 0) continue;
      const Int f = ring.reduce(-(a(r, k) / scale) * unit_inv);
      a.add_row(r, k, f);
      for (std::size_t c = 0; c < cols; ++c) a(r, c) = ring.reduce(a(r, c));
    }
    for (std::size_t c = k + 1; c < cols; ++c) {
      if (a(k, c) == 0) continue;
      const Int g = ring.reduce(-(a(k, c) / scale) * unit_inv);
      a.add_col(c, k, g);
      out.col_transform.add_col(c, k, g);
      out.col_transform_inv.add_row(k, c, Int(-g));
      for (std::size_t r = 0; r < rows; ++r) a(r, c) = ring.reduce(a(r, c));
    }
    out.exponents.push_back(best);
  }
  for (std::size_t r = 0; r < cols; ++r)
    for (std::size_t c = 0; c < cols; ++c) {
      out.col_transform(r, c) = ring.reduce(out.col_transform(r, c));
      out.col_transform_inv(r, c) = ring.reduce(out.col_transform_inv(r, c));
    }
  return out;
}

void check_finite_complex(const FiniteComplex& c, const ModularRing& ring) {
  if (c.dims.empty() || c.differentials.size() + 1 != c.dims.size())
    throw Error(Errc::InvalidComplex, "a complex with m terms needs m - 1 differentials");
  for (std::size_t k = 0; k < c.differentials.size(); ++k) {
    const auto& d = c.differentials[k];
    if (d.rows() != c.dims[k + 1] || d.cols() != c.dims[k])
      throw Error(Errc::InvalidComplex, "differential " + std::to_string(k) + " has the wrong shape");
    if (k + 1 < c.differentials.size()) {
      const IntMatrix dd = c.differentials[k + 1] * d;
      for (std::size_t r = 0; r < dd.rows(); ++r)
        for (std::size_t col = 0; col < dd.cols(); ++col)
          if (ring.reduce(dd(r, col)) != 0)
            throw Error(Errc::InvalidComplex, "d*d is not zero mod p^K");
    }
  }
}

}  // namespace

std::vector<FiniteGroup> finite_approx(const FiniteComplex& c) {
  if (c.K < 1) throw Error(Errc::NonpositiveK, "K must be positive");
  const ModularRing ring{c.p, c.K, c.modulus()};
  check_finite_complex(c, ring);

  std::vector<FiniteGroup> out;
  for (std::size_t spot = 0; spot < c.dims.size(); ++spot) {
    const std::size_t n = c.dims[spot];
    const IntMatrix outgoing = spot < c.differentials.size() ? c.differentials[spot] : IntMatrix(0, n);
    const ModularSnf snf = modular_snf(outgoing, ring);

    // In coordinates y = T^-1 x the kernel is sum_j p^{s_j} Z/p^K.
    std::vector<int> shift(n, 0);
    for (std::size_t j = 0; j < snf.exponents.size(); ++j) shift[j] = c.K - snf.exponents[j];

    const std::size_t incoming_cols = spot > 0 ? c.dims[spot - 1] : 0;
    IntMatrix image(n, incoming_cols);
    if (spot > 0) image = snf.col_transform_inv * c.differentials[spot - 1];

    // Relations among the kernel generators: the image, plus p^K = 0.
    IntMatrix relations(n, incoming_cols + n);
    for (std::size_t j = 0; j < n; ++j) {
      const Int scale = power(c.p, static_cast<unsigned long>(shift[j]));
      for (std::size_t col = 0; col < incoming_cols; ++col) {
        const Int y = ring.reduce(image(j, col));
        if (!mpz_divisible_p(y.get_mpz_t(), scale.get_mpz_t()))
          throw Error(Errc::InvalidComplex, "image leaves the kernel mod p^K");
        relations(j, col) = y / scale;
      }
      relations(j, incoming_cols + j) = power(c.p, static_cast<unsigned long>(c.K - shift[j]));
    }
    const ModularSnf rel = modular_snf(relations, ring);
    FiniteGroup group;
    for (int e : rel.exponents)
      if (e > 0) group.push_back(e);
    for (std::size_t j = rel.exponents.size(); j < n; ++j) group.push_back(c.K);
    std::sort(group.begin(), group.end());
    out.push_back(std::move(group));
  }
  return out;
}

std::vector<FiniteGroup> uct_predict(std::span<const PElem> homology, int K) {
  std::vector<FiniteGroup> out;
  for (std::size_t i = 0; i < homology.size(); ++i) {
    FiniteGroup group;
    const PElem& here = homology[i];
    group.insert(group.end(), here.free, K);
    for (int beta : here.torsion) group.push_back(std::min(beta, K));
    if (i + 1 < homology.size()) {
      const PElem& next = homology[i + 1];
      group.insert(group.end(), next.prufer, K);
      for (int beta : next.torsion) group.push_back(std::min(beta, K));
    }
    std::sort(group.begin(), group.end());
    out.push_back(std::move(group));
  }
  return out;
}

}  // namespace lcstruct
