#include "ltower/omega.hpp"

#include "parallel.hpp"

namespace ltower {

CyclotomicStrip strip_cyclotomics(const IntPoly& U1) {
  CyclotomicStrip out{{}, U1};
  if (U1.degree() <= 0) return out;
  // phi(d) >= sqrt(d / 2), so phi(d) <= D forces d <= 2 D^2.
  const std::uint64_t D = static_cast<std::uint64_t>(U1.degree());
  const std::uint64_t d_max = 2 * D * D + 2;
  for (std::uint64_t d = 1; d <= d_max && out.remainder.degree() > 0; ++d) {
    if (totient(d) > static_cast<std::uint64_t>(out.remainder.degree())) continue;
    const IntPoly phi = cyclotomic(d);
    unsigned k = 0;
    for (;;) {
      PolyDivision qr = divmod_monic(out.remainder, phi);
      if (!qr.remainder.is_zero()) break;
      out.remainder = std::move(qr.quotient);
      ++k;
    }
    if (k > 0) out.factors.push_back({d, k});
  }
  return out;
}

std::string to_string(OmegaVerdict verdict) {
  switch (verdict) {
    case OmegaVerdict::bounded:
      return "bounded";
    case OmegaVerdict::unbounded:
      return "unbounded";
    case OmegaVerdict::inapplicable:
      return "inapplicable";
  }
  return "inapplicable";
}

OmegaClassification classify_omega(const GenPoly& f, const FactorBudget& budget) {
  OmegaClassification out;
  if (!f.integral_exponents()) return out;

  const Integerized in = integerize(f);
  out.U = in.U;
  out.b = in.b;
  const UnitRootFactor unit = unit_root_factor(in.U);
  out.unit_root_multiplicity = unit.multiplicity;

  CyclotomicStrip strip = strip_cyclotomics(unit.cofactor);
  out.cyclotomic_factors = std::move(strip.factors);
  const IntPoly& rest = strip.remainder;
  out.content = rest.content();
  if (rest.leading() < 0) out.content = -out.content;
  out.non_cyclotomic_part = rest.divexact(out.content);
  out.verdict = rest.degree() > 0 ? OmegaVerdict::unbounded : OmegaVerdict::bounded;

  for (const PrimePower& pp : factor_kappa(abs(out.content), budget).factors) {
    out.content_primes.push_back(pp.prime);
  }
  return out;
}

std::vector<OmegaEntry> omega_sequence(const Tower& tower, const FactorBudget& budget,
                                       unsigned threads) {
  std::vector<OmegaEntry> out(tower.depth() + 1);
  detail::parallel_for(out.size(), threads, [&](std::size_t n) {
    OmegaEntry& entry = out[n];
    entry.level = static_cast<unsigned>(n);
    entry.factorization = factor_kappa(tower.kappa(entry.level), budget);
    entry.omega = entry.factorization.omega();
    entry.complete = entry.factorization.complete();
  });
  return out;
}

}  // namespace ltower
