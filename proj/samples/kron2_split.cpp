// Builds the (1+1) Kronecker-sum representation, splits it, and maps the
// nontrivial block onto the builtin 3x3 irrep.

#include <iostream>

#include "dkp/dkp.hpp"

int main() {
  using namespace dkp;
  const auto kron = build_kronecker_rep(build_gamma(GammaBasis::dirac2), /*include_half=*/true);
  std::cout << "DKP algebra: " << (verify_dkp(kron).passed ? "holds" : "fails") << "\n";

  const auto result = decompose(kron);
  std::cout << "blocks:";
  for (auto d : result.block_dims()) std::cout << ' ' << d;
  std::cout << "\n";

  const auto& block = result.blocks.back().subrep;
  const auto irrep = builtin_irrep_1p1();
  if (auto cert = intertwiner(block, irrep)) {
    const auto u = unitarize(*cert, block, irrep);
    std::cout << "S =\n" << u.S << "\nunitarity: " << to_string(u.unitarity);
    if (u.lambda) std::cout << ", lambda = " << to_string(*u.lambda);
    std::cout << "\n";
  }

  const Momentum p({Rational(5), Rational(4)}, Rational(3));
  const auto sol = solution_space(irrep, p);
  std::cout << "on-shell amplitude at p=(5,4), m=3:\n" << sol.amplitude_basis.front() << "\n";
}
