#include "csc/qmatrix.hpp"

namespace csc {

namespace {

// row/col i += s * row/col j, applied symmetrically.
void congruence_add(std::vector<std::vector<Rat>>& a, int i, int j, const Rat& s) {
    const int n = static_cast<int>(a.size());
    for (int k = 0; k < n; ++k) a[i][k] += s * a[j][k];
    for (int k = 0; k < n; ++k) a[k][i] += s * a[k][j];
}

std::vector<std::vector<Rat>> to_rows(const QSymMatrix& q) {
    const int n = q.dim();
    std::vector<std::vector<Rat>> a(n, std::vector<Rat>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[i][j] = q.at(i, j);
    return a;
}

} // namespace

Inertia inertia(const QSymMatrix& q) {
    auto a = to_rows(q);
    const int n = q.dim();
    for (int k = 0; k < n; ++k) {
        if (a[k][k] == 0) {
            // Bring a nonzero pivot onto the diagonal. Adding row i works
            // unless a[i][i] happens to cancel 2*a[i][k]; subtracting then
            // cannot cancel as well.
            for (int i = k + 1; i < n; ++i) {
                if (a[i][k] != 0) {
                    congruence_add(a, k, i, Rat(1));
                    if (a[k][k] == 0) congruence_add(a, k, i, Rat(-2));
                    break;
                }
            }
        }
        if (a[k][k] == 0) continue; // row k is zero on the remaining block
        for (int i = k + 1; i < n; ++i) {
            if (a[i][k] != 0) congruence_add(a, i, k, -a[i][k] / a[k][k]);
        }
    }
    Inertia res;
    for (int i = 0; i < n; ++i) {
        if (a[i][i] > 0)
            ++res.n_plus;
        else if (a[i][i] < 0)
            ++res.n_minus;
        else
            ++res.n_zero;
    }
    return res;
}

Inertia inertia(const IntSymMatrix& q) { return inertia(q.to_rational()); }

std::optional<std::vector<Rat>> solve_linear(const QSymMatrix& q, const std::vector<Rat>& r) {
    const int n = q.dim();
    if (static_cast<int>(r.size()) != n)
        throw DomainError("solve_linear: right-hand side length mismatch");
    // Gauss-Jordan on the augmented matrix [Q | r].
    std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n + 1));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) m[i][j] = q.at(i, j);
        m[i][n] = r[i];
    }
    std::vector<int> pivot_col;
    int row = 0;
    for (int col = 0; col < n && row < n; ++col) {
        int p = -1;
        for (int i = row; i < n; ++i) {
            if (m[i][col] != 0) {
                p = i;
                break;
            }
        }
        if (p < 0) continue;
        std::swap(m[row], m[p]);
        const Rat inv = Rat(1) / m[row][col];
        for (auto& v : m[row]) v *= inv;
        for (int i = 0; i < n; ++i) {
            if (i != row && m[i][col] != 0) {
                const Rat f = m[i][col];
                for (int j = col; j <= n; ++j) m[i][j] -= f * m[row][j];
            }
        }
        pivot_col.push_back(col);
        ++row;
    }
    for (int i = row; i < n; ++i) {
        if (m[i][n] != 0) return std::nullopt;
    }
    std::vector<Rat> x(n, Rat(0));
    for (int i = 0; i < static_cast<int>(pivot_col.size()); ++i) x[pivot_col[i]] = m[i][n];
    return x;
}

Rat determinant(const QSymMatrix& q) {
    auto a = to_rows(q);
    const int n = q.dim();
    Rat d(1);
    for (int c = 0; c < n; ++c) {
        int p = -1;
        for (int i = c; i < n; ++i) {
            if (a[i][c] != 0) {
                p = i;
                break;
            }
        }
        if (p < 0) return Rat(0);
        if (p != c) {
            std::swap(a[p], a[c]);
            d = -d;
        }
        d *= a[c][c];
        for (int i = c + 1; i < n; ++i) {
            if (a[i][c] != 0) {
                const Rat f = a[i][c] / a[c][c];
                for (int j = c; j < n; ++j) a[i][j] -= f * a[c][j];
            }
        }
    }
    return d;
}

Int determinant(const IntSymMatrix& q) {
    Rat d = determinant(q.to_rational());
    return num(d); // exact integer for integer input
}

} // namespace csc
