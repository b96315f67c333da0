#pragma once

// Built-in instances used across the tests and the CLI, plus the seeded
// generator of minor-induced perspectives from small random digraphs.

#include <cstdint>
#include <string>
#include <vector>

#include "omact/oriented.hpp"

namespace omact::corpus {

// Single arc between two vertices: no circuits, cocircuits ±{e+}.
Digraph coloop1_digraph();
// Single self-loop: circuits ±{e+}, no cocircuits.
Digraph loop1_digraph();
// Directed triangle on arcs a, b, c.
Digraph cyc3_digraph();
// The quotient of the triangle identifying the two endpoints of c: a 2-cycle
// {a, b} plus the loop c.
Digraph n1_digraph();
// Acyclic orientation of the complete graph on four vertices, arcs directed
// from smaller to larger vertex, labels in lexicographic order.
Digraph k4_digraph();

OrientedMatroid coloop1();
OrientedMatroid loop1();
OrientedMatroid cyc3();
OrientedMatroid n1();
OrientedMatroid k4();

// Underlying matroid of the triangle: bases are the 2-subsets of {a,b,c}.
Matroid triangle();

// (CYC3, N1): the triangle mapping onto its quotient.
OMPerspective persp1();

struct NamedPerspective {
    std::string name;
    Digraph m_digraph;  // source of the M side
    Digraph n_digraph;  // source of the N side
    OMPerspective perspective;
};

// COLOOP1, LOOP1, CYC3, K4 as (M, M) pairs, plus PERSP1.
std::vector<NamedPerspective> named();

// Deterministic minor-generated perspectives: random digraphs with at most 5
// vertices and 8 arcs, a random arc subset deleted on one side and
// contracted on the other.
std::vector<NamedPerspective> random_minors(std::uint32_t seed, int count);

// named() followed by random_minors(seed, count).
std::vector<NamedPerspective> full(std::uint32_t seed, int count);

}  // namespace omact::corpus
