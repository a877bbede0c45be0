#pragma once

// Syntactic transformations: the knowledge/belief expansion into the
// evidence language, rewriting of announcement modalities via reduction
// axioms, and the closure set used for filtration-style size bounds.

#include <set>
#include <vector>

#include "topoevid/formula.hpp"

namespace topoevid {

enum class Language {
    EvFull,   // Box / Forall, arbitrary groups
    EvIA,     // Box / Forall, singleton groups and the universe only
    KBIA,     // K / B, single agents and the universe only
    KBFull,   // K / B, arbitrary groups
    EvDyn,    // EvFull plus [share]
    KBDyn,    // KBIA plus [share{A}]
};

// Membership test. nAgents > 0 lets a concrete group equal to the whole
// universe count as the universe; nAgents == 0 treats only the symbolic
// {A} as the universe.
bool in_language(const FormulaPtr& f, Language lang, int nAgents = 0);

// Rewrites K and B into Box/Forall:
//   B_I f  ~>  Forall_I Dia_I Box_I f
//   K_I f  ~>  Box_I f  &  Forall_I Dia_I Box_I f
// Rejects announcement modalities (reduce those first).
FormulaPtr expand_kb(const FormulaPtr& f);

enum class DynSystem { EvDyn, KBDyn };

// Eliminates [share] modalities, innermost first:
//   [share_I] p        ~> p
//   [share_I] ~f       ~> ~[share_I] f
//   [share_I](f & g)   ~> [share_I]f & [share_I]g
//   [share_I] Box_J f  ~> Box_{J+I} [share_I] f   (J+I = J u I if they meet, else J)
//   [share_I] Forall_J f  likewise
// and under KBDyn (only [share{A}] allowed):
//   [share_A] K_a f    ~> K_A [share_A] f
//   [share_A] B_a f    ~> B_A [share_A] f
// EvDyn rejects K/B nodes; KBDyn rejects Box/Forall and non-universe shares.
FormulaPtr reduce_dynamic(const FormulaPtr& f, DynSystem sys);

using FormulaSet = std::set<FormulaPtr, FormulaLess>;

// Least set containing f0 that is closed under subformulas, single
// negations, lifting Forall/Box along group inclusion, and prefixing
// Box_I to (possibly negated) Forall_I members. f0 must be a static
// evidence formula with concrete groups inside the given universe.
FormulaSet closure_set(const FormulaPtr& f0, int nAgents);

// ~f, except that a leading negation is stripped instead of doubled.
FormulaPtr single_negation(const FormulaPtr& f);

}  // namespace topoevid
