#pragma once

#include "csc/errors.hpp"
#include "csc/rat.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace csc {

/// Symmetric matrix over the exact rationals. set() writes both mirror
/// entries, so symmetry holds by construction.
class QSymMatrix {
public:
    QSymMatrix() = default;
    explicit QSymMatrix(int dim) : dim_(dim), e_(static_cast<std::size_t>(dim) * dim) {
        if (dim < 0) throw DomainError("QSymMatrix: negative dimension");
    }

    int dim() const { return dim_; }

    const Rat& at(int i, int j) const { return e_[idx(i, j)]; }

    void set(int i, int j, const Rat& v) {
        e_[idx(i, j)] = v;
        e_[idx(j, i)] = v;
    }

    bool operator==(const QSymMatrix&) const = default;

private:
    std::size_t idx(int i, int j) const {
        if (i < 0 || j < 0 || i >= dim_ || j >= dim_)
            throw DomainError("QSymMatrix: index out of range");
        return static_cast<std::size_t>(i) * dim_ + j;
    }

    int dim_ = 0;
    std::vector<Rat> e_;
};

/// Symmetric matrix with integer entries (linking / intersection forms).
class IntSymMatrix {
public:
    IntSymMatrix() = default;
    explicit IntSymMatrix(int dim) : dim_(dim), e_(static_cast<std::size_t>(dim) * dim, 0) {
        if (dim < 0) throw DomainError("IntSymMatrix: negative dimension");
    }

    int dim() const { return dim_; }
    std::int64_t at(int i, int j) const { return e_[idx(i, j)]; }
    void set(int i, int j, std::int64_t v) {
        e_[idx(i, j)] = v;
        e_[idx(j, i)] = v;
    }
    void add(int i, int j, std::int64_t v) { set(i, j, at(i, j) + v); }

    QSymMatrix to_rational() const {
        QSymMatrix q(dim_);
        for (int i = 0; i < dim_; ++i)
            for (int j = i; j < dim_; ++j) q.set(i, j, Rat(at(i, j)));
        return q;
    }

    bool operator==(const IntSymMatrix&) const = default;

private:
    std::size_t idx(int i, int j) const {
        if (i < 0 || j < 0 || i >= dim_ || j >= dim_)
            throw DomainError("IntSymMatrix: index out of range");
        return static_cast<std::size_t>(i) * dim_ + j;
    }

    int dim_ = 0;
    std::vector<std::int64_t> e_;
};

/// Sylvester inertia (n+, n-, n0) of a symmetric form.
struct Inertia {
    int n_plus = 0;
    int n_minus = 0;
    int n_zero = 0;

    int signature() const { return n_plus - n_minus; }
    bool operator==(const Inertia&) const = default;
};

/// Inertia by exact symmetric congruence diagonalization (Sylvester's law);
/// no eigenvalues, no rounding.
Inertia inertia(const QSymMatrix& q);
Inertia inertia(const IntSymMatrix& q);

/// One exact solution x of Qx = r, or nullopt when r is outside the column
/// space. Singular Q is a normal input; which solution is returned is
/// unspecified, but r.x is the same for all of them.
std::optional<std::vector<Rat>> solve_linear(const QSymMatrix& q, const std::vector<Rat>& r);

/// Exact determinant (used for Kirby-move invariance checks).
Rat determinant(const QSymMatrix& q);
Int determinant(const IntSymMatrix& q);

} // namespace csc
