#pragma once

#include "csc/qmatrix.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace csc {

/// Intersection form with a marked characteristic vector c1 and basis
/// labels. All Kirby moves below act on this data homologically.
struct MarkedForm {
    IntSymMatrix Q;
    std::vector<std::int64_t> c1;
    std::vector<std::string> labels;

    int dim() const { return Q.dim(); }
    bool operator==(const MarkedForm&) const = default;
};

/// Convenience constructor; labels default to "h0", "h1", ...
MarkedForm make_marked_form(const IntSymMatrix& q, const std::vector<std::int64_t>& c1,
                            std::vector<std::string> labels = {});

struct Move {
    enum class Kind { Slide, Blowup, Blowdown };
    Kind kind = Kind::Slide;
    int i = 0;           // Slide: slid handle; Blowdown: removed handle
    int j = 0;           // Slide only: handle slid over
    int sign = 0;        // Slide: +-1 coefficient; Blowup: framing +-1
    std::int64_t c = 0;  // Blowup only: c1 entry of the new class (+-1)
};

/// Replayable, text-serializable sequence of moves. Lines are
///   slide i j +    slide i j -    blowup + c    blowup - c    blowdown i
/// with 0-based indices.
struct MoveScript {
    std::vector<Move> moves;

    std::string to_text() const;
    static MoveScript from_text(const std::string& text);
};

/// Slides handle i over handle j: Q' = E^T Q E, c1' = E^T c1 with
/// E = I + sign * e_{ji}. Labels unchanged. Throws DomainError on bad
/// indices or sign not in {-1, +1}.
MarkedForm handleslide(const MarkedForm& m, int i, int j, int sign);

/// Appends a new (+-1)-framed class, orthogonal to everything, with the
/// given c1 entry (must be +-1).
MarkedForm blowup(const MarkedForm& m, int sign, std::int64_t c1_entry);

/// Removes class i. Requires |Q[i][i]| = 1, a fully cleared row i, and
/// |c1[i]| = 1 when Q[i][i] = -1; throws PreconditionError otherwise.
MarkedForm blowdown(const MarkedForm& m, int i);

MarkedForm apply_move(const MarkedForm& m, const Move& mv);
MarkedForm apply_script(const MarkedForm& m, const MoveScript& script);

/// Outcome of reduce_to_blocks. When complete is false the form is the
/// best partial reduction reached; the script always replays to `form`.
struct ReductionResult {
    MarkedForm form;
    MoveScript script;
    bool complete = false;
};

/// Greedy handleslide reduction toward the block shape
///   [d] (+) [[0,1],[1,0]] (+) k * <-1>
/// (at most one non-unit diagonal class, hyperbolic pairs, unit classes),
/// with c1 normalized so the non-unit class carries a non-negative entry.
/// Already-block inputs are returned unchanged with an empty script.
ReductionResult reduce_to_blocks(const MarkedForm& m);

} // namespace csc
