#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "strippaths/path.hpp"

namespace strippaths {

/// Which subset of A_{n,k} or B_{n,k} a path falls in, and therefore which
/// construction maps it.
///
/// Even widths recurse on the half-width: a path that never touches the outer
/// lines is handled by the bijection of width k - 2, and `depth` counts those
/// descents. `base_case` marks the width-2 (and width-1) constructions.
/// Odd widths do not descend; their index 1 is the narrower-strip residual that
/// is handed to the even-width map as a whole.
/// Index 0 is reserved for the empty path, which every construction fixes.
struct SubsetLabel {
    Family family = Family::A;
    int length_parity = 0;  // n mod 2
    int width_parity = 0;   // k mod 2
    int index = 0;
    int depth = 0;
    bool base_case = false;
    std::size_t length = 0;
    int width = 0;  // width of the strip at the level that handles the path

    /// Same subset up to family, i.e. the labels the bijection should pair.
    bool corresponds_to(const SubsetLabel& other) const noexcept;
    /// e.g. "A^3_{26,6}" or "B^2_{14,4}" (width after descending).
    std::string name() const;

    friend bool operator==(const SubsetLabel&, const SubsetLabel&) = default;
};

/// A path cut at its marked steps. Parts appear in path order, so concatenating
/// them gives back the path. Segment letters name the pieces of the A-side cut;
/// on the B side a part keeps the letter of the A-side piece it came from even
/// when it is stored flipped.
struct Decomposition {
    struct Part {
        char name;            // 'a'..'c' for marked steps, 'A'..'D' for sub-paths
        std::size_t begin;    // index of the first step of this part
        LatticePath path;     // a single step for marked steps
        bool is_step() const noexcept { return name >= 'a' && name <= 'z'; }
    };

    SubsetLabel label;
    std::vector<Part> parts;
    std::optional<std::size_t> a, b, c;

    /// The named sub-path, or the empty path if this decomposition has none.
    LatticePath segment(char name) const;
    Step step(char name) const;
    LatticePath reassemble() const;
};

SubsetLabel classify_A(const LatticePath& p, int k);
SubsetLabel classify_B(const LatticePath& p, int k);

/// Throws DomainError if label is not the classification of p.
Decomposition decompose(const LatticePath& p, const SubsetLabel& label, int k);

/// The bijection A_{n,k} -> B_{n,k}. Throws DomainError for non-members.
LatticePath a_to_b(const LatticePath& p, int k);
/// Its inverse B_{n,k} -> A_{n,k}.
LatticePath b_to_a(const LatticePath& p, int k);

}  // namespace strippaths
