#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "qgase/graph.hpp"
#include "qgase/rng.hpp"

namespace qgase {

// Builders for the studied chain families. All graphs are unit-equilateral
// and declare the entrance lead as channel 0.

enum class Letter : std::uint8_t { alpha, beta };

/// Non-empty sequence over {alpha, beta}. CLI encoding: "a"/"b".
using Word = std::vector<Letter>;

Word word_from_string(std::string_view text);
std::string word_to_string(const Word& word);
Word uniform_word(Letter letter, int length);

/// Chain c_1..c_n with unit edges; every alpha vertex gains one pendant
/// dead end, every beta vertex two. Leads at c_1 (channel 0) and c_n
/// (channel 1); for n = 1 both attach to c_1. Alpha chain vertices end
/// up with degree 3, beta with degree 4.
MetricGraph build_line(const Word& word);

/// Ring c_1..c_n with pendants as on the line; leads directly on the
/// ring at c_1 and its neighbor c_2 (their degrees grow by one).
/// Needs length >= 3 to stay a simple graph.
MetricGraph build_circle(const Word& word);

/// Ring as in build_circle, but each lead attaches to the first-created
/// pendant of c_1 / c_2, which become transparent degree-2 vertices;
/// ring degrees are unchanged.
MetricGraph build_circle2(const Word& word);

/// w_1 = alpha; substitution alpha -> alpha beta, beta -> alpha.
/// Lengths follow the Fibonacci numbers 1, 2, 3, 5, 8, ...
Word fibonacci_word(int generation);

/// Independent fair draws from the stream.
Word random_word(int length, RandomStream& stream);

/// Chain of n planar units, each two triangles sharing an edge
/// (4 vertices, 5 edges); consecutive units joined by one edge, one lead
/// at each end. Every vertex has degree 3.
MetricGraph build_gamma_chain(int n);

/// Chain of n spatial units, each two tetrahedra sharing a triangle
/// (5 vertices, 9 edges); joined and terminated as in the gamma chain.
/// Every vertex has degree 4.
MetricGraph build_delta_chain(int n);

/// Ladder of n squares sharing vertical edges, capped on both ends by a
/// triangle apex carrying the lead. Every vertex has degree 3.
/// Counts: 2n + 4 vertices, 3n + 5 edges.
MetricGraph build_square_stripe(int n);

/// Tube of n triangular prisms (n + 1 triangle layers), capped by a
/// tetrahedron apex carrying the lead on each end. Every vertex has
/// degree 4. Counts: 3n + 5 vertices, 6n + 9 edges.
MetricGraph build_prism_tube(int n);

enum class Family { line, circle, circle2, gamma, delta, squares, prisms };

bool family_uses_word(Family f);
Family family_from_string(std::string_view name);
const char* to_string(Family f);

struct FamilySpec {
  Family family = Family::line;
  Word word;      // word families
  int units = 0;  // unit-count families
};

MetricGraph build_family(const FamilySpec& spec);

}  // namespace qgase
