#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace strippaths {

/// Longest path any operation accepts. Heights stay far inside `int`.
inline constexpr std::size_t kMaxPathLength = 1024;

enum class Step : std::uint8_t { Down = 0, Up = 1 };

constexpr int delta(Step s) noexcept { return s == Step::Up ? 1 : -1; }
constexpr Step flipped(Step s) noexcept { return s == Step::Up ? Step::Down : Step::Up; }
constexpr char to_char(Step s) noexcept { return s == Step::Up ? 'U' : 'D'; }

/// Raised by parse_path; carries the offending character index.
class PathParseError : public std::invalid_argument {
public:
    PathParseError(std::size_t position, const std::string& what)
        : std::invalid_argument(what), position_(position) {}
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// Raised when an argument is not a member of the family an operation needs.
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A finite word over {U, D} starting at height 0.
class LatticePath {
public:
    LatticePath() = default;
    explicit LatticePath(std::vector<Step> steps);
    LatticePath(std::initializer_list<Step> steps) : LatticePath(std::vector<Step>(steps)) {}

    std::size_t size() const noexcept { return steps_.size(); }
    bool empty() const noexcept { return steps_.empty(); }
    Step operator[](std::size_t i) const { return steps_[i]; }
    std::span<const Step> steps() const noexcept { return steps_; }
    auto begin() const noexcept { return steps_.begin(); }
    auto end() const noexcept { return steps_.end(); }

    /// Steps [first, last).
    LatticePath slice(std::size_t first, std::size_t last) const;
    LatticePath& append(const LatticePath& tail);
    LatticePath& push_back(Step s);

    int final_height() const noexcept;

    friend LatticePath operator+(LatticePath lhs, const LatticePath& rhs) { return lhs.append(rhs); }
    friend LatticePath operator+(LatticePath lhs, Step s) { return lhs.push_back(s); }
    friend LatticePath operator+(Step s, const LatticePath& rhs) { return LatticePath{s}.append(rhs); }

    friend bool operator==(const LatticePath&, const LatticePath&) = default;
    /// Lexicographic with Down < Up.
    friend std::strong_ordering operator<=>(const LatticePath& a, const LatticePath& b) {
        return a.steps_ <=> b.steps_;
    }

private:
    std::vector<Step> steps_;
};

LatticePath parse_path(std::string_view text);
std::string format_path(const LatticePath& p);

/// h[0] = 0 and h[i+1] = h[i] + delta(p[i]); length |p| + 1.
std::vector<int> heights(const LatticePath& p);

/// Reflection across the x-axis.
LatticePath flip(const LatticePath& p);

enum class Family { A, B };

/// A strip family of width k. A: -floor((k+1)/2) <= y <= floor(k/2), ends on 0 or -1.
/// B: 0 <= y <= k, any end.
struct FamilySpec {
    Family family;
    int width;

    static FamilySpec a(int k) { return make(Family::A, k); }
    static FamilySpec b(int k) { return make(Family::B, k); }
    static FamilySpec make(Family f, int k);

    int lower() const noexcept { return family == Family::A ? -((width + 1) / 2) : 0; }
    int upper() const noexcept { return family == Family::A ? width / 2 : width; }
    bool admits_end(int h) const noexcept { return family == Family::B || h == 0 || h == -1; }
};

char family_letter(Family f) noexcept;

/// Human-readable reason why p is not in the family, or nullopt if it is.
std::optional<std::string> membership_violation(const LatticePath& p, const FamilySpec& spec);

bool is_member(const LatticePath& p, const FamilySpec& spec);
bool within_strip(const LatticePath& p, int lower, int upper);

/// All members of length n, ascending, by backtracking inside the strip.
std::vector<LatticePath> enumerate(const FamilySpec& spec, std::size_t n);

/// Strip-confined walks of length n ending exactly at height h. For Family::A the
/// {0,-1} endpoint restriction is dropped; only the strip bounds apply.
std::vector<LatticePath> enumerate_by_end(Family strip, std::size_t n, int k, int h);

}  // namespace strippaths
