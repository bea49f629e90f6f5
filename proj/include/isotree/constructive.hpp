#pragma once

#include <vector>

#include "isotree/predicates.hpp"
#include "isotree/tree.hpp"

namespace isotree {

enum class ProofCase { BaseSmall, Case1a, Case1b, Case2a, Case2b };

const char* proof_case_name(ProofCase c);

/// One recursion step: which case fired, the chosen independent set J (in
/// original vertex ids), t_J = |N[J] v S_k(J)| within the processed
/// component, and psi (Case 2b only, -1 otherwise).
struct StepTrace {
    ProofCase proof_case = ProofCase::BaseSmall;
    VertexSet chosen;
    int t_j = 0;
    int psi = -1;
};

struct ConstructiveResult {
    VertexSet set;
    std::vector<StepTrace> trace;
    int bound = 0;  // floor(n / (k+1))
};

/// Vertices of T - N[J] lying in components of order < k.
VertexSet small_components(const Tree& t, const VertexSet& j, int k);

/// Independent all-k-isolating set of size <= floor(n/(k+1)) for n != k,
/// k >= 2, produced by the inductive construction. Throws TheoremException
/// when n == k and InternalCheckError on any divergence from the proof's
/// guarantees.
ConstructiveResult independent_allk_set(const Tree& t, int k);

}  // namespace isotree
