#pragma once

#include <map>
#include <optional>
#include <string>

#include "isotree/predicates.hpp"
#include "isotree/tree.hpp"

namespace isotree {

enum class ColoringException { None, P3, Order4, O7, Order5, StarK1K1 };

const char* coloring_exception_name(ColoringException e);

struct ColoringResult {
    ColoringException exception = ColoringException::None;
    std::optional<Coloring> coloring;  // present iff no exception
};

/// Lemma: repeated color interchanges turn a coloring whose classes are all
/// isolating into a dynamic one with the same property. `interchanges`
/// receives the number of swaps performed.
Coloring make_dynamic(const Tree& t, Coloring c, const IsolationSpec& spec,
                      int* interchanges = nullptr);

/// Renumber the side colorings across the split edge (x -> 1 with its side
/// neighbors ascending from 2; y -> ell with its side neighbors descending)
/// and concatenate. Side colorings are full-size vectors meaningful on their
/// own side.
Coloring align_merge(const Tree& t, const EdgeSplit& split, const Coloring& cx,
                     const Coloring& cy, int ell);

/// (k+1)*-coloring with every class K_{1,k-1}-isolating; exception iff
/// T = K_{1,k-1} itself.
ColoringResult color_star_isolating(const Tree& t, int k);

/// 4*-coloring with every class all-3-isolating; exception iff T = P_3.
ColoringResult color4_all3(const Tree& t);

/// 5*-coloring with every class all-4-isolating; exception iff |T| = 4.
ColoringResult color5_all4(const Tree& t);

/// 6*-coloring with every class all-5-isolating; exception iff T = O_7 or
/// |T| = 5.
ColoringResult color6_all5(const Tree& t);

struct BadPieceEntry {
    Tree shape;
    int anchor = 0;
    Coloring coloring;
};

/// Anchored colorings of the split-off "bad" pieces (order-4 trees for the
/// 5*-theorem; order-5 trees and O_7 for the 6*-theorem), one entry per
/// rooted-isomorphism class, each found by constrained exhaustive search.
struct BadPieceTable {
    std::map<std::string, BadPieceEntry> entries;
};

BadPieceTable build_bad_piece_table();

/// Anchored coloring of a bad side piece for the split construction:
/// anchor gets 1, its in-side neighbors 2.., colors 1..ell-1 isolating, the
/// ell-remnant is exactly the anchor's component of order ell-1. Exhaustive,
/// deterministic; throws InternalCheckError if no such coloring exists.
Coloring bad_piece_coloring(const Tree& side, int anchor, int ell);

/// K_{1,3} with every edge subdivided once.
const Tree& o7_tree();
bool is_o7(const Tree& t);

/// Some ell*-coloring of T with every class isolating, or proof by
/// exhaustion that none exists. Backtracking over canonical colorings.
std::optional<Coloring> search_coloring(const Tree& t, int ell, const IsolationSpec& spec);

}  // namespace isotree
