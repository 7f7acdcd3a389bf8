#pragma once

#include "qyang/element.hpp"
#include "qyang/report.hpp"

namespace qyang {

/// Splitting of q_{N+M} into the inner block (indices up to N) and the outer
/// block (indices above N), with the algebra contexts the projection needs.
struct CentralizerContext {
    int N = 0, M = 0;
    AlgebraPtr u_lex;    // U(q_{N+M}), lex order
    AlgebraPtr u_hc;     // U(q_{N+M}), boundary-first order
    AlgebraPtr u_inner;  // U(q_{N+M-1}), lex order

    static CentralizerContext make(int N, int M);
    int algebra_size() const { return N + M; }

    /// Canonical generators of the outer block: i > N and |j| > N.
    std::vector<GeneratorRef> outer_generators() const;
};

/// True iff a supercommutes with every generator of the outer block.
bool centralizer_check(const Element& a, const CentralizerContext& ctx);

/// Projection onto the inner direct summand: re-expresses a in the
/// boundary-first order, drops every monomial containing a generator of
/// level N+M, and reinterprets the rest in U(q_{N+M-1}). Only defined on the
/// centralizer; enforced.
Element alpha_projection(const Element& a, const CentralizerContext& ctx);

/// alpha maps the level-(N+M) family elements to their level-(N+M-1)
/// counterparts, for inner indices and for the central traces.
Report verify_prop14(int N, int M, int nmax, int jobs = 1);

/// alpha is an algebra homomorphism on seeded samples of products of inner
/// family elements and central traces.
Report verify_alpha_homomorphism(int N, int M, int samples, uint64_t seed, int jobs = 1);

}  // namespace qyang
