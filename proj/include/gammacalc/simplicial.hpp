#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gammacalc/polynomial.hpp"
#include "gammacalc/rational.hpp"

namespace gammacalc {

/// Simplicial complex stored by its facets. Vertices carry string labels;
/// internally faces are bitmasks over the label table (at most 64 vertices,
/// far beyond the desk scale this library targets).
class SimplicialComplex {
public:
    /// Builds from facet label lists; dominated facets are dropped so the
    /// stored facet set is an antichain. An empty list denotes the complex
    /// whose only face is the empty set.
    explicit SimplicialComplex(const std::vector<std::vector<std::string>>& facet_labels);

    /// Boundary of the d-simplex: all d-subsets of d+1 vertices.
    static SimplicialComplex simplex_boundary(int d);
    /// Boundary of the d-dimensional cross-polytope: 2^d facets picking one
    /// vertex from each antipodal pair.
    static SimplicialComplex cross_polytope_boundary(int d);

    int dimension() const { return dimension_; }
    /// d = dimension + 1 (number of h-vector steps).
    int d() const { return dimension_ + 1; }

    const std::vector<std::string>& labels() const { return labels_; }
    const std::vector<uint64_t>& facet_masks() const { return facets_; }

    bool is_face(uint64_t mask) const;
    /// Every face, the empty face included.
    std::vector<uint64_t> faces() const;
    std::vector<uint64_t> faces_of_size(int k) const;
    /// Vertex masks, one bit each.
    std::vector<uint64_t> vertices() const;

    /// lk(F) = { G : F union G a face, F and G disjoint }. F must be a face.
    SimplicialComplex link(uint64_t face_mask) const;

    uint64_t mask_of(const std::vector<std::string>& face_labels) const;
    std::vector<std::string> labels_of(uint64_t mask) const;

private:
    SimplicialComplex() = default;
    std::vector<std::string> labels_;
    std::vector<uint64_t> facets_;
    int dimension_ = -1;
};

/// f-vector (f_{-1},...,f_{d-1}) and h-vector (h_0,...,h_d) with the
/// triangular transform between them. formal = true permits f_{-1} != 1
/// and rational entries.
struct FHVectors {
    std::vector<Rat> f;  // f[i] holds f_{i-1}
    std::vector<Rat> h;
    int d = 0;
    bool formal = false;
};

/// h_j = sum_{i<=j} (-1)^{j-i} binom(d-i, j-i) f_{i-1}; slots beyond the
/// stored f are treated as zero, which is what the formal bookkeeping needs.
Rat h_transform_at(const std::vector<Rat>& f, int d, int j);
std::vector<Rat> h_from_f_vector(const std::vector<Rat>& f, int d);
/// Inverse transform, f_{i-1} = sum_{j<=i} binom(d-j, i-j) h_j.
std::vector<Rat> f_from_h_vector(const std::vector<Rat>& h, int d);

FHVectors make_fh_from_f(std::vector<Rat> f, int d, bool formal);
FHVectors make_fh_from_h(std::vector<Rat> h, int d, bool formal);

/// Face counts of K plus the transform.
FHVectors f_vector(const SimplicialComplex& k);

/// f-polynomial sum f_{i-1} t^i with formal degree d.
Polynomial f_polynomial(const SimplicialComplex& k);
/// h-polynomial at transform parameter param_d (pads the face counts), the
/// form the link identities need for links inside a d-complex.
Polynomial h_polynomial(const SimplicialComplex& k, int param_d);

struct IdentityReport {
    bool holds = true;
    std::string first_mismatch;  // empty when holds
};

/// For every k, compares the sum of link f-polynomials over k-vertex faces
/// with the k-th derivative of the f-polynomial over k!.
IdentityReport verify_link_f_identity(const SimplicialComplex& k);

/// Checks (1-w) h'(w) = sum_p h_{lk(p)}(w) - d h(w) and the cleared form
/// (1-w)[(1+w)h' - d h] = (1+w) sum_p h_{lk(p)} - 2d h, exactly.
IdentityReport verify_h_link_identity(const SimplicialComplex& k);

/// f_i >= binom(d, i+1) for 0 <= i <= d-1 (simplicial poset realizability).
/// Requires formal = false and integer entries.
bool fhex_realizable(const FHVectors& fh);

enum class AuxVariant { part1, part2 };

/// r*gamma_r written through the h/f-vectors of two auxiliary formal
/// (d-r-2)-dimensional vectors. The correction term carries the constant
/// completion and the k = r contribution r*b_r.
struct AuxDecomposition {
    AuxVariant variant;
    int d = 0;
    int r = 0;
    int aux_d = 0;            // transform parameter d - r - 1
    std::vector<Rat> fP;      // slots f_{-1}..f_{r-1} of P (part1) or R (part2)
    std::vector<Rat> fQ;      // slots f_{-1}..f_{r-2} of Q (part1) or S (part2)
    Rat correction;
    Rat recombined;           // equals r*gamma_r(B) exactly
    bool fhex_P = false;      // fhex bounds on the stored non-negative slots
    bool fhex_Q = false;

    Rat h_P_at(int j) const { return h_transform_at(fP, aux_d, j); }
    Rat h_Q_at(int j) const { return h_transform_at(fQ, aux_d, j); }
};

/// Builds the decomposition for b (length d+1), checking the recombination
/// against the two-sum expansion internally; a mismatch is a defect and
/// throws. part2 requires (r-k) | k*b_k for 1 <= k <= r-1.
AuxDecomposition gamauxpo_decompose(const std::vector<Rat>& b, int d, int r, AuxVariant variant);

}  // namespace gammacalc
