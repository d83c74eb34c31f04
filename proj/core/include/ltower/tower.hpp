#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ltower/bigint.hpp"
#include "ltower/gen_poly.hpp"
#include "ltower/int_matrix.hpp"
#include "ltower/multigraph.hpp"

namespace ltower {

// Matrix-Tree cross-check depth used when none is configured:
// 5 for ell = 2, 3 for ell = 3, 2 otherwise.
unsigned default_matrix_tree_max_level(std::uint64_t ell);

struct TowerOptions {
  std::optional<unsigned> matrix_tree_max_level;
  DeterminantOptions determinant;
  unsigned threads = 1;
};

// N_i = h_X(1, Psi_i), the product of f(zeta) over the primitive ell^i-th
// roots of unity, computed as Res(Phi_{ell^i}, reduce_level(f, i)).
// N_0 is 1 by convention.
BigInt level_norm(const GenPoly& f, unsigned i);

// Spanning-tree counts of the levels 0..depth of an abelian ell-tower.
//
// kappa_0 comes from the Matrix-Tree theorem; higher levels use
// ell^n * kappa_n = kappa_0 * N_1 * ... * N_n, and levels up to the
// cross-check depth are also counted directly on the derived covers.
class Tower {
 public:
  // Throws PrecisionError when depth exceeds the voltage precision and
  // DisconnectedGraphError when the covers are not connected.
  Tower(VoltageAssignment va, unsigned depth, const TowerOptions& options = {});

  const VoltageAssignment& voltages() const noexcept { return va_; }
  std::uint64_t ell() const noexcept { return va_.ell(); }
  unsigned depth() const noexcept { return depth_; }
  const GenPoly& f() const noexcept { return f_; }

  const BigInt& kappa(unsigned n) const { return kappas_.at(n); }
  const std::vector<BigInt>& kappas() const noexcept { return kappas_; }
  const BigInt& norm(unsigned i) const { return norms_.at(i); }
  const std::vector<BigInt>& norms() const noexcept { return norms_; }

  unsigned matrix_tree_level() const noexcept { return mt_level_; }
  std::optional<BigInt> matrix_tree_kappa(unsigned n) const;
  // True iff both routes agree on every cross-checked level.
  bool cross_check_ok() const noexcept { return cross_check_ok_; }

 private:
  VoltageAssignment va_;
  unsigned depth_;
  GenPoly f_;
  std::vector<BigInt> norms_;
  std::vector<BigInt> kappas_;
  std::vector<BigInt> mt_kappas_;
  unsigned mt_level_ = 0;
  bool cross_check_ok_ = true;
};

struct ProductIdentityCheck {
  bool holds = true;
  // ell^n * kappa_n - kappa_X * prod N_i for n = 1..depth.
  std::vector<BigInt> residuals;
};

// Checks the product identity level by level with Matrix-Tree counts.
ProductIdentityCheck verify_product_identity(const VoltageAssignment& va, const GenPoly& f,
                                             unsigned depth,
                                             const DeterminantOptions& options = {});

}  // namespace ltower
