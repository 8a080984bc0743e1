// Walkthrough: writing multisymmetric polynomials in the generators E(k;f).
//
// The ring of S_n-invariant polynomials in the variables x[i,k] (i = row
// copy, k = which of the m series) is generated by the elementary symmetric
// evaluations e_k applied to the row copies of monomials f in y1..ym. The
// Decomposer finds such an expression exactly, over the integers, the
// rationals, or a prime field.

#include <iostream>

#include "msym/msym.hpp"

using namespace msym;

int main() {
  // Two copies (n = 2) of a single series (m = 1), integer coefficients.
  Context ctx(Ring::integers(), 2, 1);

  // The power sum p = x[1,1]^2 + x[2,1]^2 is multisymmetric.
  Polynomial p = Polynomial::variable(ctx, VarId::x(1, 1)).pow(2) +
                 Polynomial::variable(ctx, VarId::x(2, 1)).pow(2);
  std::cout << "p               = " << p.str() << "\n";

  // Decompose it in the generators and verify by expanding back.
  GeneratorExpr g = decompose(p);
  std::cout << "decomposition   = " << g.str() << "\n";
  std::cout << "round trip ok   = "
            << (expand_generator_expr(g) == p ? "yes" : "no") << "\n\n";

  // The same orbit sum over Z/2: power sums no longer generate, but the
  // elementary symmetric generators still do.
  Context c2(Ring::mod(2), 2, 1);
  Polynomial q = Polynomial::variable(c2, VarId::x(1, 1)) *
                 Polynomial::variable(c2, VarId::x(2, 1));
  std::cout << "over Z/2, x[1,1]*x[2,1] = " << decompose(q).str() << "\n\n";

  // Two series (m = 2): a mixed orbit sum needs a product monomial f = y1*y2.
  Context c22(Ring::integers(), 2, 2);
  Polynomial mixed = Polynomial::variable(c22, VarId::x(1, 1)) *
                         Polynomial::variable(c22, VarId::x(2, 2)) +
                     Polynomial::variable(c22, VarId::x(1, 2)) *
                         Polynomial::variable(c22, VarId::x(2, 1));
  std::cout << "mixed orbit sum = " << mixed.str() << "\n";
  std::cout << "decomposition   = " << decompose(mixed).str() << "\n";
  return 0;
}
