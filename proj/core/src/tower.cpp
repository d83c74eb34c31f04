#include "ltower/tower.hpp"

#include "ltower/derived_cover.hpp"
#include "ltower/errors.hpp"
#include "ltower/spanning_trees.hpp"
#include "parallel.hpp"

namespace ltower {

unsigned default_matrix_tree_max_level(std::uint64_t ell) {
  if (ell == 2) return 5;
  if (ell == 3) return 3;
  return 2;
}

BigInt level_norm(const GenPoly& f, unsigned i) {
  if (i == 0) return 1;
  const IntPoly reduced = reduce_level(f, i);
  if (reduced.is_zero()) return 0;
  const BigInt order = pow_ui(f.ell(), i);
  const IntPoly phi = cyclotomic(order.get_ui());
  const IntPoly rem = divmod_monic(reduced, phi).remainder;
  if (rem.is_zero()) return 0;
  return resultant(phi, rem);
}

Tower::Tower(VoltageAssignment va, unsigned depth, const TowerOptions& options)
    : va_(std::move(va)), depth_(depth), f_(va_.ell(), 1) {
  if (depth_ > va_.precision()) {
    throw PrecisionError("depth " + std::to_string(depth_) + " exceeds voltage precision " +
                         std::to_string(va_.precision()));
  }
  const ValidationReport report = validate(va_.graph());
  if (!report.accepted()) {
    std::string why;
    for (const auto& v : report.violations) why += (why.empty() ? "" : "; ") + v;
    throw InapplicableError("base graph violates the standing hypotheses: " + why);
  }
  if (!cycle_voltages_generate(va_, depth_ > 0 ? 1 : 0)) {
    throw DisconnectedGraphError("derived covers are not connected (no cycle voltage is a unit)");
  }

  f_ = determinant(voltage_matrix(va_));

  norms_.assign(depth_ + 1, BigInt(1));
  detail::parallel_for(depth_, options.threads,
                       [&](std::size_t k) { norms_[k + 1] = level_norm(f_, static_cast<unsigned>(k + 1)); });

  kappas_.assign(depth_ + 1, BigInt(0));
  kappas_[0] = spanning_tree_count(va_.graph(), options.determinant);
  BigInt product = kappas_[0];
  for (unsigned n = 1; n <= depth_; ++n) {
    product *= norms_[n];
    const BigInt scale = pow_ui(va_.ell(), n);
    if (!mpz_divisible_p(product.get_mpz_t(), scale.get_mpz_t())) {
      throw Error("product of level norms is not divisible by ell^n at level " + std::to_string(n));
    }
    mpz_divexact(kappas_[n].get_mpz_t(), product.get_mpz_t(), scale.get_mpz_t());
  }

  mt_level_ = std::min(depth_, options.matrix_tree_max_level.value_or(
                                   default_matrix_tree_max_level(va_.ell())));
  mt_kappas_.assign(mt_level_ + 1, BigInt(0));
  mt_kappas_[0] = kappas_[0];
  detail::parallel_for(mt_level_, options.threads, [&](std::size_t k) {
    const unsigned n = static_cast<unsigned>(k + 1);
    mt_kappas_[n] = spanning_tree_count(derived_graph(va_, n).graph(), options.determinant);
  });
  for (unsigned n = 0; n <= mt_level_; ++n) {
    if (mt_kappas_[n] != kappas_[n]) cross_check_ok_ = false;
  }
}

std::optional<BigInt> Tower::matrix_tree_kappa(unsigned n) const {
  if (n > mt_level_) return std::nullopt;
  return mt_kappas_[n];
}

ProductIdentityCheck verify_product_identity(const VoltageAssignment& va, const GenPoly& f,
                                             unsigned depth, const DeterminantOptions& options) {
  ProductIdentityCheck check;
  if (depth == 0) return check;
  const BigInt base = spanning_tree_count(va.graph(), options);
  BigInt product = base;
  for (unsigned n = 1; n <= depth; ++n) {
    product *= level_norm(f, n);
    const BigInt kappa = spanning_tree_count(derived_graph(va, n).graph(), options);
    BigInt residual = pow_ui(va.ell(), n) * kappa - product;
    if (residual != 0) check.holds = false;
    check.residuals.push_back(std::move(residual));
  }
  return check;
}

}  // namespace ltower
