#pragma once

#include <Eigen/Dense>

#include <string>
#include <vector>

namespace sharpgpt {

// Default relative tolerance for every check that does not take an explicit one.
inline constexpr double kDefaultTol = 1e-9;

// Relative gap below which eigenvalues are treated as one degenerate cluster
// when building frames.
inline constexpr double kClusterGap = 1e-8;

enum class Family {
    Classical,              // R^d, componentwise product
    RealSymmetric,          // Sym_n(R)
    ComplexHermitian,       // Herm_n(C)
    QuaternionicHermitian,  // Herm_n(H), handled through its complex 2n x 2n embedding
    SpinFactor,             // R + R^m, elements written (t, x)
};

// Catalog entry: one of the five families plus its size parameter
// (d for Classical, n for the matrix families, m for SpinFactor).
struct AlgebraKind {
    Family family = Family::Classical;
    int param = 1;

    static AlgebraKind classical(int d);
    static AlgebraKind real_symmetric(int n);
    static AlgebraKind complex_hermitian(int n);
    static AlgebraKind quaternionic_hermitian(int n);
    static AlgebraKind spin_factor(int m);

    // Number of elements in a Jordan frame.
    int rank() const;
    // Ambient real dimension N of the coordinate space.
    int dim() const;
    std::string name() const;

    bool operator==(const AlgebraKind&) const = default;
};

// Element of a catalogued algebra, held as a real coordinate vector.
//
// Coordinate conventions (documented once, used everywhere):
//   Classical(d)      coords are the d entries.
//   RealSymmetric(n)  n diagonal entries X(i,i), then sqrt(2)*X(i,j) for
//                     i<j in row-major order.
//   ComplexHermitian  n diagonal entries, then per pair i<j the two values
//                     sqrt(2)*Re X(i,j), sqrt(2)*Im X(i,j).
//   Quaternionic      n diagonal entries, then per pair i<j the four values
//                     sqrt(2)*(w,x,y,z) of the quaternion entry X(i,j).
//   SpinFactor(m)     the natural (t, x_1..x_m); note the trace form is
//                     2*(coordinate dot product) for this kind only.
//
// Under these bases trace_inner_product(x,y) equals the coordinate dot
// product (times 2 for spin factors), so adjoints of linear maps are plain
// coordinate transposes.
struct JordanElement {
    AlgebraKind kind;
    Eigen::VectorXd coords;
};

JordanElement make_element(const AlgebraKind& kind, Eigen::VectorXd coords);
JordanElement zero_element(const AlgebraKind& kind);
JordanElement unit(const AlgebraKind& kind);
JordanElement basis_element(const AlgebraKind& kind, int index);

JordanElement add(const JordanElement& x, const JordanElement& y);
JordanElement sub(const JordanElement& x, const JordanElement& y);
JordanElement scale(double s, const JordanElement& x);

// Commutative bilinear Jordan product of the kind.
JordanElement jordan_product(const JordanElement& x, const JordanElement& y);

// Associative trace form <x,y> = trace(x o y); positive definite.
double trace_inner_product(const JordanElement& x, const JordanElement& y);

// trace(x) = <unit, x>.
double trace_of(const JordanElement& x);

// Quadratic representation U_a(x) = 2 a o (a o x) - (a o a) o x.
// Equals a x a for the matrix families.
JordanElement quadratic_rep(const JordanElement& a, const JordanElement& x);

// Eigenvalues of x, descending, length rank().
Eigen::VectorXd eigenvalues_of(const JordanElement& x);

// Eigenvalues plus a Jordan frame: pairwise orthogonal primitive idempotents
// that sum to the unit and reconstruct x.
struct SpectralDecomposition {
    Eigen::VectorXd eigenvalues;        // descending
    std::vector<JordanElement> frame;   // frame[i] carries eigenvalues[i]
};

// Throws std::runtime_error if the frame fails to reconstruct x within
// tol * max(1, ||x||_2) after the solver's sweep budget.
// Degenerate eigenvalues (relative gap below kClusterGap) share a cluster;
// cluster members are ordered by descending lexicographic coordinates.
SpectralDecomposition spectral_decompose(const JordanElement& x, double tol = kDefaultTol);

// True iff min eigenvalue >= -tol * max(1, spectral radius).
bool cone_contains(const JordanElement& x, double tol = kDefaultTol);

}  // namespace sharpgpt
