#pragma once

// Brute-force verification engines.
//
// Everything here works on the finite grid of N-torsion points and carries
// its own description of the real structures (as lattice matrix plus shift),
// so it never calls the analytic code it is used to check. Connectivity on
// the grid stands in for topological connectivity: every fixed locus of an
// involution in this library is a finite union of parallel affine circles in
// lattice coordinates, and once N is even each of those circles meets the
// grid in N points linked by a single minimal step.

#include <cstdint>
#include <string>
#include <vector>

#include "rebc/kernels/grid_kernels.hpp"
#include "rebc/torus.hpp"

namespace rebc::oracle {

struct GridSpec {
    std::int64_t resolution = 60;  ///< N, even and >= 2
    unsigned threads = 1;          ///< enumeration workers; output does not depend on it

    /// Throws InputError for odd or too-small N.
    void validate() const;
};

enum class InvolutionKind { SigmaPoint, SigmaPic, EtaLine, SigmaModuli, EtaModuli };

struct NamedInvolution {
    InvolutionKind kind = InvolutionKind::SigmaPoint;
    std::int64_t rank = 1;
    std::int64_t degree = 0;

    static NamedInvolution sigma_point() { return {InvolutionKind::SigmaPoint, 1, 1}; }
    static NamedInvolution sigma_pic(std::int64_t d) { return {InvolutionKind::SigmaPic, 1, d}; }
    static NamedInvolution eta_line() { return {InvolutionKind::EtaLine, 1, 0}; }
    static NamedInvolution sigma_moduli(std::int64_t r, std::int64_t d) {
        return {InvolutionKind::SigmaModuli, r, d};
    }
    static NamedInvolution eta_moduli(std::int64_t r) { return {InvolutionKind::EtaModuli, r, 0}; }

    /// Size of the multisets the involution acts on (1, or h for Sym^h).
    [[nodiscard]] std::int64_t multiset_size() const;
    [[nodiscard]] std::string name() const;
};

/// The involution restricted to one factor, as an affine map on grid indices.
kernels::AffineIndexMap index_map(const CurveSpec& c, const NamedInvolution& inv, std::int64_t n);

/// A fixed element: one point, or a sorted multiset for symmetric products.
using GridElement = std::vector<TorusPoint>;

/// Sorted list of fixed grid elements. Throws InputError if the symmetric
/// product is too large to enumerate.
std::vector<GridElement> fixed_points_on_grid(const CurveSpec& c, const NamedInvolution& inv,
                                              const GridSpec& grid);

/// fixed_points_on_grid for multiset size 1, flattened.
std::vector<TorusPoint> fixed_grid_points(const CurveSpec& c, const NamedInvolution& inv,
                                          const GridSpec& grid);

struct GridComponent {
    std::vector<TorusPoint> points;  ///< sorted
    bool is_circle = false;          ///< N points forming one orbit of a minimal step
};

/// Connected components under minimal-step adjacency, sorted by first point.
std::vector<GridComponent> grid_components(const std::vector<TorusPoint>& fixed, const GridSpec& grid);

std::int64_t grid_component_count(const std::vector<TorusPoint>& fixed, const GridSpec& grid);

/// All multisets of size k drawn from `points`, each sorted, in lexicographic
/// order of index tuples.
std::vector<GridElement> enumerate_multisets(const std::vector<TorusPoint>& points, std::int64_t k);

}  // namespace rebc::oracle
