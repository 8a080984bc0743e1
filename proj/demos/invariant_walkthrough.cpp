// Walkthrough: characteristic-polynomial invariants of matrix tuples.
//
// theta_k(f) are the coefficients of det(tI - f(M1..Mm)) at the generic
// matrices whose entries are the indeterminates xi[k,i,j]. Restricting a
// tuple to its diagonal (the map xi[k,i,j] -> x[i,k] for i = j, else 0)
// lands every theta_k(f) on a multisymmetric polynomial, and every
// multisymmetric polynomial arises this way.

#include <iostream>

#include "msym/msym.hpp"

using namespace msym;

int main() {
  // theta of a single generic 2x2 matrix: trace and determinant.
  Context ctx(Ring::integers(), 2, 1);
  std::vector<Polynomial> th = theta(FreeElement::letter(ctx, 1));
  for (unsigned k = 1; k <= ctx.n; ++k)
    std::cout << "theta[" << k << "](z1) = " << th[k - 1].str() << "\n";
  std::cout << "\n";

  // Diagonal restriction agrees with e_k of the abelianized word.
  Context c22(Ring::integers(), 2, 2);
  FreeElement prod = FreeElement::letter(c22, 1) * FreeElement::letter(c22, 2);
  auto [lhs, rhs] = junker_weyl_witness(prod);
  for (unsigned k = 1; k <= c22.n; ++k) {
    std::cout << "Delta(theta[" << k << "](z1*z2)) = " << lhs[k - 1].str()
              << "\n";
    std::cout << "e_" << k << "(y1*y2)           = " << rhs[k - 1].str()
              << "\n";
  }
  std::cout << "\n";

  // Going the other way: an explicit preimage of a multisymmetric target.
  Polynomial target = Polynomial::variable(ctx, VarId::x(1, 1)).pow(2) +
                      Polynomial::variable(ctx, VarId::x(2, 1)).pow(2);
  Polynomial pre = preimage_in_C(target);
  std::cout << "target                = " << target.str() << "\n";
  std::cout << "preimage in xi        = " << pre.str() << "\n";
  std::cout << "diagonal of preimage  = " << delta_specialize(pre).str()
            << "\n\n";

  // Numeric sanity: theta is constant on conjugation orbits over Z/101.
  const Ring f101 = Ring::mod(101);
  Context nctx(f101, 3, 2);
  std::mt19937_64 rng(7);
  FreeElement f = sample_element(nctx, 3, rng);
  MatrixTuple t = sample_tuple(nctx, rng);
  ScalarMatrix g = sample_invertible_matrix(f101, nctx.n, rng);
  std::cout << "random conjugation trial over Z/101: "
            << (invariance_trial(f, t, g) ? "invariant" : "NOT invariant")
            << "\n";
  return 0;
}
