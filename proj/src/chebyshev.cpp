#include "lfi/chebyshev.hpp"

#include <span>

namespace lfi {

namespace {

using Span = std::span<const double>;

Span sa(const PairSamples& s) { return s.a; }
Span sb(const PairSamples& s) { return s.b; }

} // namespace

PairSamples sample_pair(const FunctionalSpec& A, const FunctionalSpec& B, const ScalarFunction& f) {
    return {sample_at_nodes(A, f), sample_at_nodes(B, f)};
}

double chebyshev_difference(const FunctionalSpec& A, const FunctionalSpec& B, const PairSamples& p,
                            const PairSamples& q, const PairSamples& f, const PairSamples& g) {
    const double bq = weighted_product(B, {sb(q)});
    const double apfg = weighted_product(A, {sa(p), sa(f), sa(g)});
    const double ap = weighted_product(A, {sa(p)});
    const double bqfg = weighted_product(B, {sb(q), sb(f), sb(g)});
    const double apf = weighted_product(A, {sa(p), sa(f)});
    const double bqg = weighted_product(B, {sb(q), sb(g)});
    const double apg = weighted_product(A, {sa(p), sa(g)});
    const double bqf = weighted_product(B, {sb(q), sb(f)});
    return bq * apfg + ap * bqfg - apf * bqg - apg * bqf;
}

double chebyshev_difference(const FunctionalSpec& A, const FunctionalSpec& B, const ScalarFunction& p,
                            const ScalarFunction& q, const ScalarFunction& f, const ScalarFunction& g) {
    return chebyshev_difference(A, B, sample_pair(A, B, p), sample_pair(A, B, q), sample_pair(A, B, f),
                                sample_pair(A, B, g));
}

double chebyshev_difference_single(const FunctionalSpec& A, const ScalarFunction& p, const ScalarFunction& f,
                                   const ScalarFunction& g) {
    const std::vector<double> ps = sample_at_nodes(A, p);
    const std::vector<double> fs = sample_at_nodes(A, f);
    const std::vector<double> gs = sample_at_nodes(A, g);
    return weighted_product(A, {ps}) * weighted_product(A, {ps, fs, gs}) -
           weighted_product(A, {ps, fs}) * weighted_product(A, {ps, gs});
}

std::array<double, 8> triple_expansion_terms(const FunctionalSpec& A, const FunctionalSpec& B, const PairSamples& p,
                                             const PairSamples& q, const PairSamples& f, const PairSamples& g,
                                             const PairSamples& h) {
    auto a = [&](std::initializer_list<Span> s) { return weighted_product(A, s); };
    auto b = [&](std::initializer_list<Span> s) { return weighted_product(B, s); };
    return {
        a({sa(p), sa(f), sa(g), sa(h)}) * b({sb(q)}),
        a({sa(p), sa(f)}) * b({sb(q), sb(g), sb(h)}),
        a({sa(p), sa(g)}) * b({sb(q), sb(f), sb(h)}),
        a({sa(p), sa(h)}) * b({sb(q), sb(f), sb(g)}),
        -a({sa(p), sa(g), sa(h)}) * b({sb(q), sb(f)}),
        -a({sa(p), sa(f), sa(h)}) * b({sb(q), sb(g)}),
        -a({sa(p), sa(f), sa(g)}) * b({sb(q), sb(h)}),
        -a({sa(p)}) * b({sb(q), sb(f), sb(g), sb(h)}),
    };
}

double triple_expansion(const FunctionalSpec& A, const FunctionalSpec& B, const PairSamples& p, const PairSamples& q,
                        const PairSamples& f, const PairSamples& g, const PairSamples& h) {
    const auto terms = triple_expansion_terms(A, B, p, q, f, g, h);
    return pairwise_sum(terms);
}

double triple_expansion(const FunctionalSpec& A, const FunctionalSpec& B, const ScalarFunction& p,
                        const ScalarFunction& q, const ScalarFunction& f, const ScalarFunction& g,
                        const ScalarFunction& h) {
    return triple_expansion(A, B, sample_pair(A, B, p), sample_pair(A, B, q), sample_pair(A, B, f),
                            sample_pair(A, B, g), sample_pair(A, B, h));
}

double triple_tensor(const FunctionalSpec& A, const FunctionalSpec& B, const PairSamples& p, const PairSamples& q,
                     const PairSamples& f, const PairSamples& g, const PairSamples& h) {
    return tensor_sum(A, B, [&](std::size_t i, std::size_t j) {
        return p.a[i] * q.b[j] * (f.a[i] - f.b[j]) * (g.a[i] - g.b[j]) * (h.a[i] - h.b[j]);
    });
}

double triple_tensor(const FunctionalSpec& A, const FunctionalSpec& B, const ScalarFunction& p,
                     const ScalarFunction& q, const ScalarFunction& f, const ScalarFunction& g,
                     const ScalarFunction& h) {
    return triple_tensor(A, B, sample_pair(A, B, p), sample_pair(A, B, q), sample_pair(A, B, f),
                         sample_pair(A, B, g), sample_pair(A, B, h));
}

} // namespace lfi
