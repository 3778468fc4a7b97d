#include "csc/kirby.hpp"

#include "csc/errors.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <set>
#include <sstream>

namespace csc {

namespace {

using i64 = std::int64_t;

i64 fdiv(i64 a, i64 b) { // floor division
    i64 q = a / b;
    if (a % b != 0 && ((a < 0) != (b < 0))) --q;
    return q;
}

void check_index(const MarkedForm& m, int i, const char* op) {
    if (i < 0 || i >= m.dim()) throw DomainError(std::string(op) + ": index out of range");
}

/// In-place reducer: applies slides to a working form while recording the
/// script. Mirrors the congruence formulas of the public move functions.
class Reducer {
public:
    explicit Reducer(const MarkedForm& m) : f_(m), n_(m.dim()) {}

    const MarkedForm& form() const { return f_; }
    MoveScript& script() { return script_; }

    void slide(int i, int j, int s) {
        // Snapshot rows i and j; entry (i,i) mixes both.
        std::vector<i64> ri(n_), rj(n_);
        for (int k = 0; k < n_; ++k) {
            ri[k] = f_.Q.at(i, k);
            rj[k] = f_.Q.at(j, k);
        }
        for (int k = 0; k < n_; ++k) {
            if (k != i) f_.Q.set(i, k, ri[k] + s * rj[k]);
        }
        f_.Q.set(i, i, ri[i] + 2 * s * ri[j] + rj[j]);
        f_.c1[i] += s * f_.c1[j];
        script_.moves.push_back({Move::Kind::Slide, i, j, s, 0});
    }

    void mult(int i, int j, i64 t) {
        if (t == 0) return;
        const int s = t > 0 ? 1 : -1;
        for (i64 k = 0; k < std::llabs(t); ++k) slide(i, j, s);
    }

    // Basis rotation (v_i, v_j) -> (v_j, -v_i), expressed through slides.
    void rotate(int i, int j) {
        mult(i, j, 1);
        mult(j, i, -1);
        mult(i, j, 1);
    }

    bool isolated(int i) const {
        for (int j = 0; j < n_; ++j)
            if (j != i && f_.Q.at(i, j) != 0) return false;
        return true;
    }

    // Partner of i in a hyperbolic pair (0 diagonal, one +-1 cross term,
    // both rows otherwise empty), or -1.
    int h_partner(int i) const {
        const auto& Q = f_.Q;
        if (Q.at(i, i) != 0) return -1;
        int j = -1;
        for (int k = 0; k < n_; ++k) {
            if (k != i && Q.at(i, k) != 0) {
                if (j >= 0) return -1;
                j = k;
            }
        }
        if (j < 0 || std::llabs(Q.at(i, j)) != 1 || Q.at(j, j) != 0) return -1;
        for (int k = 0; k < n_; ++k)
            if (k != j && k != i && Q.at(j, k) != 0) return -1;
        return j;
    }

    // Negates v_k (preserving Q) by rotating twice through a c1-free
    // hyperbolic pair or isolated class. Best effort.
    bool flip(int k) {
        for (int i = 0; i < n_; ++i) {
            const int j = h_partner(i);
            if (j >= 0 && i != k && j != k && f_.c1[i] == 0 && f_.c1[j] == 0) {
                rotate(k, i);
                rotate(k, i); // v_k and v_i both negated
                rotate(i, j); // restore the pair's sign
                return true;
            }
        }
        for (int a = 0; a < n_; ++a) {
            if (a != k && f_.c1[a] == 0 && f_.Q.at(a, k) == 0 && isolated(a)) {
                rotate(k, a);
                rotate(k, a);
                return true;
            }
        }
        return false;
    }

    bool unit_vector_split(const std::vector<int>& indices);
    bool greedy();
    void normalize();

private:
    std::vector<i64> state_key() const {
        std::vector<i64> s;
        s.reserve(static_cast<std::size_t>(n_) * (n_ + 3) / 2);
        for (int i = 0; i < n_; ++i)
            for (int j = i; j < n_; ++j) s.push_back(f_.Q.at(i, j));
        s.insert(s.end(), f_.c1.begin(), f_.c1.end());
        return s;
    }

    MarkedForm f_;
    MoveScript script_;
    int n_;
};

// Searches the sublattice spanned by `indices` for a primitive vector v
// with Q(v) = -1 (preferred) or +1 and small coordinates, preferring
// |c1(v)| = 1, then concentrates v into a single basis slot by slides.
bool Reducer::unit_vector_split(const std::vector<int>& indices) {
    const int r = static_cast<int>(indices.size());
    if (r < 2 || r > 8) return false;
    const int box = (r <= 5) ? 4 : 2;

    struct Key {
        int not_neg_one, not_unit_c1;
        i64 abs_sum;
        std::vector<i64> abs_coords;
        bool operator<(const Key& o) const {
            return std::tie(not_neg_one, not_unit_c1, abs_sum, abs_coords) <
                   std::tie(o.not_neg_one, o.not_unit_c1, o.abs_sum, o.abs_coords);
        }
    };
    std::vector<i64> best;
    Key best_key{};

    std::vector<i64> v(r, -box);
    for (;;) {
        int support = 0;
        i64 g = 0;
        for (i64 x : v) {
            if (x != 0) ++support;
            g = std::gcd(g, std::llabs(x));
        }
        if (support >= 2 && g == 1) {
            i64 val = 0;
            for (int a = 0; a < r; ++a) {
                if (v[a] == 0) continue;
                for (int b = 0; b < r; ++b)
                    if (v[b] != 0) val += v[a] * v[b] * f_.Q.at(indices[a], indices[b]);
            }
            if (std::llabs(val) == 1) {
                i64 cv = 0, abs_sum = 0;
                std::vector<i64> abs_coords(r);
                for (int a = 0; a < r; ++a) {
                    cv += v[a] * f_.c1[indices[a]];
                    abs_sum += std::llabs(v[a]);
                    abs_coords[a] = std::llabs(v[a]);
                }
                Key key{val == -1 ? 0 : 1, std::llabs(cv) == 1 ? 0 : 1, abs_sum,
                        std::move(abs_coords)};
                if (best.empty() || key < best_key) {
                    best = v;
                    best_key = std::move(key);
                }
            }
        }
        int pos = r - 1;
        while (pos >= 0 && v[pos] == box) v[pos--] = -box;
        if (pos < 0) break;
        ++v[pos];
    }
    if (best.empty()) return false;

    // Euclidean concentration: repeatedly reduce larger coordinates by the
    // smallest one until a single slot remains.
    std::vector<i64> x = best;
    int guard = 0;
    while (std::count_if(x.begin(), x.end(), [](i64 t) { return t != 0; }) > 1) {
        if (++guard > 200) return false;
        std::vector<int> js;
        for (int a = 0; a < r; ++a)
            if (x[a] != 0) js.push_back(a);
        std::sort(js.begin(), js.end(),
                  [&](int a, int b) { return std::llabs(x[a]) < std::llabs(x[b]); });
        const int jj = js[0];
        bool prog = false;
        for (std::size_t t = 1; t < js.size(); ++t) {
            const int a = js[t];
            const i64 q = fdiv(x[a], x[jj]);
            if (q != 0) {
                const int s = q > 0 ? 1 : -1;
                for (i64 k = 0; k < std::llabs(q); ++k) {
                    slide(indices[jj], indices[a], s);
                    x[a] -= s * x[jj];
                }
                prog = true;
            }
        }
        if (!prog) return false;
    }
    return true;
}

bool Reducer::greedy() {
    const int n = n_;
    auto& Q = f_.Q;
    std::set<std::vector<i64>> seen;
    const int maxiter = 3000;
    for (int it = 0; it < maxiter; ++it) {
        // 1. Clear the row of a non-isolated unit-diagonal class.
        bool acted = false;
        for (int i = 0; i < n && !acted; ++i) {
            if (std::llabs(Q.at(i, i)) == 1 && !isolated(i)) {
                for (int j = 0; j < n; ++j)
                    if (j != i && Q.at(j, i) != 0) mult(j, i, -Q.at(j, i) * Q.at(i, i));
                acted = true;
            }
        }
        if (acted) continue;

        // 2. Extract a hyperbolic pair from a zero-diagonal class with a
        //    unimodular cross term.
        int pi = -1, pj = -1;
        for (int i = 0; i < n && pi < 0; ++i) {
            if (Q.at(i, i) == 0 && !isolated(i) && h_partner(i) < 0) {
                for (int j = 0; j < n; ++j) {
                    if (j != i && std::llabs(Q.at(i, j)) == 1) {
                        pi = i;
                        pj = j;
                        break;
                    }
                }
            }
        }
        if (pi >= 0) {
            const int i = pi, j = pj;
            const i64 qjj = Q.at(j, j);
            const i64 tgt = (qjj % 2 == 0) ? 0 : (qjj > 0 ? 1 : -1);
            mult(j, i, fdiv(tgt - qjj, 2 * Q.at(i, j)));
            if (std::llabs(Q.at(j, j)) == 1) continue;
            for (int k = 0; k < n; ++k)
                if (k != i && k != j && Q.at(k, j) != 0) mult(k, i, -Q.at(k, j) * Q.at(i, j));
            for (int k = 0; k < n; ++k)
                if (k != i && k != j && Q.at(k, i) != 0) mult(k, j, -Q.at(k, i) * Q.at(i, j));
            continue;
        }

        // 3. Lagrange step on the smallest non-isolated diagonal entry,
        //    with balanced residues.
        int best = -1;
        for (int i = 0; i < n; ++i) {
            if (Q.at(i, i) != 0 && !isolated(i)) {
                if (best < 0 || std::llabs(Q.at(i, i)) < std::llabs(Q.at(best, best))) best = i;
            }
        }
        if (best >= 0) {
            const int p = best;
            bool prog = false;
            for (int j = 0; j < n; ++j) {
                if (j != p && Q.at(j, p) != 0) {
                    const i64 d = std::llabs(Q.at(p, p));
                    i64 q = fdiv(Q.at(j, p), d);
                    const i64 r2 = Q.at(j, p) - q * d;
                    if (r2 > d / 2) ++q;
                    if (q != 0) {
                        mult(j, p, -q * (Q.at(p, p) > 0 ? 1 : -1));
                        prog = true;
                    }
                }
            }
            if (prog) continue;
        }

        // Done check: residual classes (outside hyperbolic pairs) must be
        // mutually orthogonal with at most one non-unit diagonal entry, all
        // unit classes framed -1 with |c1| = 1.
        std::set<int> in_h;
        for (int i = 0; i < n; ++i) {
            const int j = h_partner(i);
            if (j >= 0) {
                in_h.insert(i);
                in_h.insert(j);
            }
        }
        std::vector<int> resid;
        for (int i = 0; i < n; ++i)
            if (!in_h.count(i)) resid.push_back(i);
        bool diag_ok = true;
        for (int i : resid)
            for (int j : resid)
                if (j != i && Q.at(i, j) != 0) diag_ok = false;
        int nonunit = 0;
        for (int i : resid)
            if (std::llabs(Q.at(i, i)) != 1) ++nonunit;
        const bool shape_ok = diag_ok && nonunit <= 1;
        if (shape_ok) {
            bool bad = false;
            for (int i : resid) {
                if (std::llabs(Q.at(i, i)) == 1 && std::llabs(f_.c1[i]) != 1) bad = true;
                if (Q.at(i, i) == 1) bad = true;
            }
            if (!bad) return true;
        }
        auto state = state_key();
        if (seen.count(state)) return shape_ok;
        seen.insert(std::move(state));

        // 4. Finisher: re-split a unit vector out of the residual lattice,
        //    widening by one hyperbolic pair if needed.
        if (unit_vector_split(resid)) continue;
        bool did = false;
        for (int i = 0; i < n && !did; ++i) {
            const int j = h_partner(i);
            if (j >= 0 && i < j) {
                auto ext = resid;
                ext.push_back(i);
                ext.push_back(j);
                if (unit_vector_split(ext)) did = true;
            }
        }
        if (!did) return shape_ok;
    }
    return false;
}

// Reorders classes to [non-unit][hyperbolic pairs][units], turns pair
// cross terms to +1, and fixes the c1 sign gauge: the non-unit class gets
// c1 >= 0 and unit classes follow its sign.
void Reducer::normalize() {
    const int n = n_;
    auto& Q = f_.Q;
    auto layout = [&](std::vector<int>& nonunit, std::vector<int>& hfirst,
                      std::vector<int>& partner, std::vector<int>& units) {
        nonunit.clear();
        hfirst.clear();
        units.clear();
        partner.assign(n, -1);
        for (int i = 0; i < n; ++i) partner[i] = h_partner(i);
        for (int i = 0; i < n; ++i) {
            if (partner[i] >= 0) {
                if (i < partner[i]) hfirst.push_back(i);
            } else if (std::llabs(Q.at(i, i)) != 1) {
                nonunit.push_back(i);
            } else {
                units.push_back(i);
            }
        }
    };
    std::vector<int> nonunit, hfirst, partner, units;
    layout(nonunit, hfirst, partner, units);
    std::vector<int> order = nonunit;
    for (int i : hfirst) {
        order.push_back(i);
        order.push_back(partner[i]);
    }
    std::stable_sort(units.begin(), units.end(),
                     [&](int a, int b) { return Q.at(a, a) > Q.at(b, b); });
    order.insert(order.end(), units.begin(), units.end());
    if (static_cast<int>(order.size()) != n) return;

    // Selection sort via rotations, flipping the displaced class back.
    std::vector<int> where(n);
    std::iota(where.begin(), where.end(), 0);
    for (int s = 0; s < n; ++s) {
        const int want = order[s];
        const int t = static_cast<int>(std::find(where.begin(), where.end(), want) -
                                       where.begin());
        if (t == s) continue;
        rotate(s, t);
        flip(t);
        std::swap(where[s], where[t]);
    }

    for (int i = 0; i < n; ++i) {
        const int j = h_partner(i);
        if (j >= 0 && i < j && Q.at(i, j) == -1) rotate(i, j);
    }

    layout(nonunit, hfirst, partner, units);
    if (!nonunit.empty() && f_.c1[nonunit[0]] < 0) flip(nonunit[0]);
    int sref = 0;
    if (!nonunit.empty() && f_.c1[nonunit[0]] != 0) sref = f_.c1[nonunit[0]] > 0 ? 1 : -1;
    if (sref == 0) sref = 1;
    for (int u : units) {
        if (f_.c1[u] != 0 && (f_.c1[u] > 0 ? 1 : -1) != sref) flip(u);
    }
}

// Predicate for the early exit: already in the normalized block layout.
bool is_block_form(const MarkedForm& m) {
    Reducer probe(m);
    const int n = m.dim();
    std::vector<int> partner(n, -1);
    for (int i = 0; i < n; ++i) partner[i] = probe.h_partner(i);
    int seen_pairs = 0, seen_units = 0, nonunit = 0;
    for (int i = 0; i < n; ++i) {
        if (partner[i] >= 0) {
            if (seen_units > 0) return false;
            if (partner[i] != ((i - nonunit - 2 * seen_pairs) % 2 == 0 ? i + 1 : i - 1))
                return false;
            if (i < partner[i]) {
                if (m.Q.at(i, partner[i]) != 1) return false;
                ++seen_pairs;
            }
        } else if (std::llabs(m.Q.at(i, i)) != 1) {
            if (seen_pairs > 0 || seen_units > 0) return false;
            if (++nonunit > 1) return false;
            if (!probe.isolated(i)) return false;
        } else {
            if (m.Q.at(i, i) != -1) return false;
            if (!probe.isolated(i)) return false;
            if (std::llabs(m.c1[i]) > 1) return false;
            ++seen_units;
        }
    }
    return true;
}

} // namespace

MarkedForm make_marked_form(const IntSymMatrix& q, const std::vector<std::int64_t>& c1,
                            std::vector<std::string> labels) {
    if (static_cast<int>(c1.size()) != q.dim())
        throw DomainError("make_marked_form: c1 length mismatch");
    if (labels.empty()) {
        for (int i = 0; i < q.dim(); ++i) labels.push_back("h" + std::to_string(i));
    }
    if (static_cast<int>(labels.size()) != q.dim())
        throw DomainError("make_marked_form: label count mismatch");
    return MarkedForm{q, c1, std::move(labels)};
}

MarkedForm handleslide(const MarkedForm& m, int i, int j, int sign) {
    check_index(m, i, "handleslide");
    check_index(m, j, "handleslide");
    if (i == j) throw DomainError("handleslide: i and j must differ");
    if (sign != 1 && sign != -1) throw DomainError("handleslide: sign must be +-1");
    Reducer r(m);
    r.slide(i, j, sign);
    return r.form();
}

MarkedForm blowup(const MarkedForm& m, int sign, std::int64_t c1_entry) {
    if (sign != 1 && sign != -1) throw DomainError("blowup: sign must be +-1");
    if (c1_entry != 1 && c1_entry != -1) throw DomainError("blowup: c1 entry must be +-1");
    const int n = m.dim();
    MarkedForm out;
    out.Q = IntSymMatrix(n + 1);
    for (int a = 0; a < n; ++a)
        for (int b = a; b < n; ++b) out.Q.set(a, b, m.Q.at(a, b));
    out.Q.set(n, n, sign);
    out.c1 = m.c1;
    out.c1.push_back(c1_entry);
    out.labels = m.labels;
    out.labels.push_back("e" + std::to_string(n));
    return out;
}

MarkedForm blowdown(const MarkedForm& m, int i) {
    check_index(m, i, "blowdown");
    if (std::llabs(m.Q.at(i, i)) != 1)
        throw PreconditionError("blowdown: diagonal entry is not +-1");
    for (int k = 0; k < m.dim(); ++k)
        if (k != i && m.Q.at(i, k) != 0)
            throw PreconditionError("blowdown: row is not cleared");
    if (m.Q.at(i, i) == -1 && std::llabs(m.c1[i]) != 1)
        throw PreconditionError("blowdown: (-1)-class requires |c1| = 1");
    const int n = m.dim();
    MarkedForm out;
    out.Q = IntSymMatrix(n - 1);
    for (int a = 0, ra = 0; a < n; ++a) {
        if (a == i) continue;
        for (int b = a, rb = ra; b < n; ++b) {
            if (b == i) continue;
            out.Q.set(ra, rb, m.Q.at(a, b));
            ++rb;
        }
        out.c1.push_back(m.c1[a]);
        out.labels.push_back(m.labels[a]);
        ++ra;
    }
    return out;
}

MarkedForm apply_move(const MarkedForm& m, const Move& mv) {
    switch (mv.kind) {
    case Move::Kind::Slide:
        return handleslide(m, mv.i, mv.j, mv.sign);
    case Move::Kind::Blowup:
        return blowup(m, mv.sign, mv.c);
    case Move::Kind::Blowdown:
        return blowdown(m, mv.i);
    }
    throw DomainError("apply_move: unknown move kind");
}

MarkedForm apply_script(const MarkedForm& m, const MoveScript& script) {
    MarkedForm cur = m;
    for (const auto& mv : script.moves) cur = apply_move(cur, mv);
    return cur;
}

std::string MoveScript::to_text() const {
    std::ostringstream os;
    for (const auto& mv : moves) {
        switch (mv.kind) {
        case Move::Kind::Slide:
            os << "slide " << mv.i << ' ' << mv.j << ' ' << (mv.sign > 0 ? '+' : '-') << '\n';
            break;
        case Move::Kind::Blowup:
            os << "blowup " << (mv.sign > 0 ? '+' : '-') << ' ' << mv.c << '\n';
            break;
        case Move::Kind::Blowdown:
            os << "blowdown " << mv.i << '\n';
            break;
        }
    }
    return os.str();
}

MoveScript MoveScript::from_text(const std::string& text) {
    MoveScript script;
    std::istringstream is(text);
    std::string line;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string word;
        if (!(ls >> word)) continue; // blank line
        auto fail = [&](const std::string& why) {
            throw ParseError("move script line " + std::to_string(lineno) + ": " + why);
        };
        auto read_sign = [&]() {
            std::string s;
            if (!(ls >> s) || (s != "+" && s != "-")) fail("expected '+' or '-'");
            return s == "+" ? 1 : -1;
        };
        Move mv;
        if (word == "slide") {
            mv.kind = Move::Kind::Slide;
            if (!(ls >> mv.i >> mv.j)) fail("expected two indices");
            mv.sign = read_sign();
        } else if (word == "blowup") {
            mv.kind = Move::Kind::Blowup;
            mv.sign = read_sign();
            if (!(ls >> mv.c)) fail("expected c1 entry");
        } else if (word == "blowdown") {
            mv.kind = Move::Kind::Blowdown;
            if (!(ls >> mv.i)) fail("expected an index");
        } else {
            fail("unknown move '" + word + "'");
        }
        std::string extra;
        if (ls >> extra) fail("trailing input '" + extra + "'");
        script.moves.push_back(mv);
    }
    return script;
}

ReductionResult reduce_to_blocks(const MarkedForm& m) {
    if (m.dim() == 0 || is_block_form(m)) return {m, {}, true};
    Reducer r(m);
    const bool ok = r.greedy();
    if (ok) r.normalize();
    return {r.form(), std::move(r.script()), ok};
}

} // namespace csc
