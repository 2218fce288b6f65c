#pragma once

// Chebyshev differences and the three-function expansion, on pairs of
// functionals. Each operation has a ScalarFunction form and a form taking
// values already sampled at the nodes.

#include <array>
#include <vector>

#include "lfi/functional.hpp"

namespace lfi {

/// Values of one function at the nodes of A and at the nodes of B.
struct PairSamples {
    std::vector<double> a;
    std::vector<double> b;
};

PairSamples sample_pair(const FunctionalSpec& A, const FunctionalSpec& B, const ScalarFunction& f);

/// T(A,B,p,q,f,g) = B(q)A(pfg) + A(p)B(qfg) - A(pf)B(qg) - A(pg)B(qf).
double chebyshev_difference(const FunctionalSpec& A, const FunctionalSpec& B, const ScalarFunction& p,
                            const ScalarFunction& q, const ScalarFunction& f, const ScalarFunction& g);
double chebyshev_difference(const FunctionalSpec& A, const FunctionalSpec& B, const PairSamples& p,
                            const PairSamples& q, const PairSamples& f, const PairSamples& g);

/// A(p)A(pfg) - A(pf)A(pg).
double chebyshev_difference_single(const FunctionalSpec& A, const ScalarFunction& p, const ScalarFunction& f,
                                   const ScalarFunction& g);

/// The eight signed products of the expansion, in the order
///   +A(pfgh)B(q), +A(pf)B(qgh), +A(pg)B(qfh), +A(ph)B(qfg),
///   -A(pgh)B(qf), -A(pfh)B(qg), -A(pfg)B(qh), -A(p)B(qfgh).
std::array<double, 8> triple_expansion_terms(const FunctionalSpec& A, const FunctionalSpec& B, const PairSamples& p,
                                             const PairSamples& q, const PairSamples& f, const PairSamples& g,
                                             const PairSamples& h);

/// Sum of triple_expansion_terms.
double triple_expansion(const FunctionalSpec& A, const FunctionalSpec& B, const ScalarFunction& p,
                        const ScalarFunction& q, const ScalarFunction& f, const ScalarFunction& g,
                        const ScalarFunction& h);
double triple_expansion(const FunctionalSpec& A, const FunctionalSpec& B, const PairSamples& p, const PairSamples& q,
                        const PairSamples& f, const PairSamples& g, const PairSamples& h);

/// B_y A_x (p(x) q(y) (f(x)-f(y)) (g(x)-g(y)) (h(x)-h(y))) as a direct double node sum.
double triple_tensor(const FunctionalSpec& A, const FunctionalSpec& B, const ScalarFunction& p,
                     const ScalarFunction& q, const ScalarFunction& f, const ScalarFunction& g,
                     const ScalarFunction& h);
double triple_tensor(const FunctionalSpec& A, const FunctionalSpec& B, const PairSamples& p, const PairSamples& q,
                     const PairSamples& f, const PairSamples& g, const PairSamples& h);

} // namespace lfi
