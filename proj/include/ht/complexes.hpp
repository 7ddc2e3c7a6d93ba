// Finite complexes over F2: the Tits building B_g, the complex of lax
// isotropic bases IB_g and its augmentation, with exact homology, plus the
// simplex-level reduction and matching maps from Z to F2.
#pragma once

#include "ht/exact_linalg.hpp"
#include "ht/sparse_reduce.hpp"
#include "ht/symplectic.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ht {

enum class SimplexKind { standard, intersection, additive, flag };

std::string to_string(SimplexKind k);

/// Sorted vertex indices into ArithmeticComplex::labels.
using Simplex = std::vector<std::uint32_t>;

/// A simplicial complex with simplices graded by dimension. Within each
/// dimension the simplices are sorted, which fixes the boundary matrices.
class ArithmeticComplex {
public:
    ArithmeticComplex(std::string name, int genus, std::vector<std::uint64_t> labels);

    const std::string& name() const { return name_; }
    int genus() const { return genus_; }
    /// Vertex labels: F2 vectors for IB, subspace element masks for B.
    const std::vector<std::uint64_t>& labels() const { return labels_; }
    int dimension() const { return static_cast<int>(cells_.size()) - 1; }
    std::size_t count(int d) const;
    const std::vector<Simplex>& simplices(int d) const { return cells_.at(d); }
    const std::vector<SimplexKind>& kinds(int d) const { return kinds_.at(d); }
    std::size_t total() const;

    /// Index of a sorted simplex in its dimension, if present.
    std::optional<std::size_t> find(const Simplex& s) const;
    std::optional<std::uint32_t> vertex_of(std::uint64_t label) const;

    /// Adds a simplex given by vertex indices (any order); duplicates are
    /// ignored. Call finalize() before queries.
    void add(Simplex s, SimplexKind kind);
    void finalize();

    /// Every codimension-1 face of every simplex is present.
    bool is_closed() const;
    long euler_characteristic() const;
    /// Boundary from dimension d to d-1 with signs (-1)^i.
    SparseMatrix boundary(int d) const;

private:
    std::string name_;
    int genus_;
    std::vector<std::uint64_t> labels_;
    std::vector<std::vector<Simplex>> cells_;
    std::vector<std::vector<SimplexKind>> kinds_;
    bool final_ = false;
};

/// Order complex of the nonzero isotropic subspaces of F2^{2g}, g <= 3.
ArithmeticComplex build_tits_f2(int g);
/// Standard simplices only, g <= 3.
ArithmeticComplex build_ib_f2(int g);
/// Standard, intersection and additive simplices, g <= 3.
ArithmeticComplex build_ibhat_f2(int g);

/// Kind of a set of distinct nonzero vectors in the augmented complex over
/// F2, decided from the definitions; nullopt if it is not a simplex.
std::optional<SimplexKind> classify_f2(const F2Form& form, const std::vector<F2Vec>& vertices);

enum class Coefficients { f2, z };

struct HomologyProfile {
    Coefficients coefficients = Coefficients::f2;
    std::vector<std::size_t> cells;          // simplices per dimension
    std::vector<std::size_t> boundary_rank;  // rank of d -> d-1; entry 0 is 0
    std::vector<long> betti;                 // unreduced
    std::vector<std::vector<Int>> torsion;   // invariant factors != 1 of H_d
    long reduced_betti(int d) const { return d == 0 ? betti.at(0) - 1 : betti.at(d); }
    nlohmann::json to_json() const;
};

/// Exact homology from sparse column reduction, top degree first so that
/// pivots clear the next degree (over Z only when the pivots were units).
HomologyProfile homology_profile(const ArithmeticComplex& X, Coefficients c);

/// The (g-1)-cycle on a symplectic basis (a_1..a_g, b_1..b_g): the 2^g sets
/// choosing one of a_i, b_i for each i.
std::vector<std::vector<F2Vec>> sphere_cycle(const F2Form& form, const std::vector<F2Vec>& basis);

struct FillingCertificate {
    bool ok = false;
    std::string reason;
    std::vector<std::vector<F2Vec>> tetrahedra;
};

/// Genus 3: checks that the four intersection-type simplices
/// {a1,b1,x2,x3}, x_i in {a_i, b_i}, lie in the augmented complex and that
/// their F2 boundary is sphere_cycle(basis).
FillingCertificate verify_sphere_filling(const F2Form& form, const std::vector<F2Vec>& basis);

struct SetsOfVecReport {
    bool ok = true;
    std::size_t subsets = 0;
    std::vector<std::size_t> per_shape;  // 8 shapes in the order listed
};

/// Every subset of at most 4 nonzero vectors of F2^n has one of the eight
/// shapes {}, {v1}, {v1,v2}, {v1,v2,v3}, {v1,v2,v1+v2}, {v1,..,v4},
/// {v1,v2,v3,v1+v2}, {v1,v2,v3,v1+v2+v3} with the v_i independent. n <= 5.
SetsOfVecReport verify_setsofvec(int n);

/// A simplex of the augmented complex over Z, with its structure made
/// explicit: v = sum of a_1..a_h for the additive kind, b pairs with a_1.
struct ZSimplex {
    SimplexKind kind = SimplexKind::standard;
    std::vector<IntVector> a;
    std::optional<IntVector> b;
    std::optional<IntVector> v;
    int h = 0;
    std::vector<IntVector> vertices() const;
};

/// Recognizes a set of lax vectors as a simplex over Z. Throws
/// std::invalid_argument if it is not one.
ZSimplex analyze_z_simplex(const SymplecticForm& form, const std::vector<IntVector>& vertices);

struct ReducedSimplex {
    SimplexKind kind;
    std::vector<F2Vec> vertices;  // sorted
};

/// Entrywise reduction of a simplex over Z; the kind and dimension are
/// checked to agree with classify_f2.
ReducedSimplex reduce_simplex(const SymplecticForm& form, const std::vector<IntVector>& vertices);

/// M in Sp_2g(Z)[2] with M(S1) = S2 as sets of lax vectors, for simplices
/// with equal reductions. Throws std::invalid_argument otherwise.
IntMatrix match_simplices(const SymplecticForm& form, const std::vector<IntVector>& s1,
                          const std::vector<IntVector>& s2);

/// True if M maps the lax vectors of s1 onto those of s2.
bool maps_lax_set(const IntMatrix& M, const std::vector<IntVector>& s1, const std::vector<IntVector>& s2);

}  // namespace ht
