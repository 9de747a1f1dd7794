#pragma once

#include <vector>

#include "lycov/matrix.hpp"

namespace lycov {

// Finite chain complex of GF(p) vector spaces at positions 0..m.
// diffs[p] maps position p to position p-1 (p = 1..m), so diffs has m
// entries and diffs[p] is a dims[p-1] x dims[p] matrix. The outermost
// differentials (into position -1, out of position m) are zero maps.
struct VSChainComplex {
    std::vector<int> dims;
    std::vector<ScalarMatrix> diffs;
};

// Checks shapes and d∘d = 0.
bool is_valid_complex(const VSChainComplex& c, const FieldSpec& F);

// dim H_p = dim ker d_p - rank d_{p+1}, for p = 0..m.
// Throws if the complex is malformed or d∘d != 0.
std::vector<int> homology_dims(const VSChainComplex& c, const FieldSpec& F);

// Simplicial complex given by an explicit face list (small scale).
// Vertices are 0..nverts-1; each face is a strictly increasing vertex list.
// The empty face {} must be listed for the complex to be nonvoid; a void
// complex (no faces at all) has zero homology everywhere.
struct SimplicialComplex {
    int nverts = 0;
    std::vector<std::vector<int>> faces;
};

// Reduced homology dimensions. Entry [t] is dim H~_{t-1}, i.e. the vector
// starts at degree -1 (spanned by the empty face) and runs up to the top
// dimension present.
std::vector<int> reduced_homology(const SimplicialComplex& sc, const FieldSpec& F);

// Convenience: dim H~_deg, 0 if deg is out of range.
int reduced_homology_dim(const SimplicialComplex& sc, int deg, const FieldSpec& F);

}  // namespace lycov
