#include "strippaths/path.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>

namespace strippaths {

namespace {

void check_length(std::size_t n) {
    if (n > kMaxPathLength) {
        throw std::invalid_argument("path length " + std::to_string(n) + " exceeds the limit of " +
                                    std::to_string(kMaxPathLength));
    }
}

// Depth-first over the strip, Down before Up, so output is lexicographic.
// `accept` sees the final height; `reachable` prunes prefixes that can no longer end well.
template <typename Accept>
std::vector<LatticePath> backtrack(std::size_t n, int lower, int upper, Accept accept,
                                   std::function<bool(int, std::size_t)> reachable) {
    check_length(n);
    std::vector<LatticePath> out;
    if (lower > 0 || upper < 0) return out;
    std::vector<Step> word(n);
    std::function<void(std::size_t, int)> go = [&](std::size_t i, int h) {
        if (!reachable(h, n - i)) return;
        if (i == n) {
            if (accept(h)) out.emplace_back(word);
            return;
        }
        for (Step s : {Step::Down, Step::Up}) {
            const int next = h + delta(s);
            if (next < lower || next > upper) continue;
            word[i] = s;
            go(i + 1, next);
        }
    };
    go(0, 0);
    return out;
}

}  // namespace

LatticePath::LatticePath(std::vector<Step> steps) : steps_(std::move(steps)) { check_length(steps_.size()); }

LatticePath LatticePath::slice(std::size_t first, std::size_t last) const {
    if (first > last || last > steps_.size()) throw std::out_of_range("LatticePath::slice");
    return LatticePath(std::vector<Step>(steps_.begin() + static_cast<std::ptrdiff_t>(first),
                                         steps_.begin() + static_cast<std::ptrdiff_t>(last)));
}

LatticePath& LatticePath::append(const LatticePath& tail) {
    check_length(steps_.size() + tail.size());
    steps_.insert(steps_.end(), tail.steps_.begin(), tail.steps_.end());
    return *this;
}

LatticePath& LatticePath::push_back(Step s) {
    check_length(steps_.size() + 1);
    steps_.push_back(s);
    return *this;
}

int LatticePath::final_height() const noexcept {
    int h = 0;
    for (Step s : steps_) h += delta(s);
    return h;
}

LatticePath parse_path(std::string_view text) {
    check_length(text.size());
    std::vector<Step> steps;
    steps.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        switch (text[i]) {
            case 'U': steps.push_back(Step::Up); break;
            case 'D': steps.push_back(Step::Down); break;
            default:
                throw PathParseError(i, "invalid step character '" + std::string(1, text[i]) +
                                            "' at index " + std::to_string(i) + " (expected U or D)");
        }
    }
    return LatticePath(std::move(steps));
}

std::string format_path(const LatticePath& p) {
    std::string s;
    s.reserve(p.size());
    for (Step step : p) s.push_back(to_char(step));
    return s;
}

std::vector<int> heights(const LatticePath& p) {
    std::vector<int> h;
    h.reserve(p.size() + 1);
    h.push_back(0);
    for (Step s : p) h.push_back(h.back() + delta(s));
    return h;
}

LatticePath flip(const LatticePath& p) {
    std::vector<Step> out;
    out.reserve(p.size());
    for (Step s : p) out.push_back(flipped(s));
    return LatticePath(std::move(out));
}

FamilySpec FamilySpec::make(Family f, int k) {
    if (k < 1) throw std::invalid_argument("strip width must be >= 1, got " + std::to_string(k));
    return FamilySpec{f, k};
}

char family_letter(Family f) noexcept { return f == Family::A ? 'A' : 'B'; }

std::optional<std::string> membership_violation(const LatticePath& p, const FamilySpec& spec) {
    const std::string family =
        std::string(1, family_letter(spec.family)) + "_{" + std::to_string(p.size()) + "," +
        std::to_string(spec.width) + "}";
    int h = 0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        h += delta(p[i]);
        if (h > spec.upper() || h < spec.lower()) {
            return "not in " + family + ": height " + std::to_string(h) + " after step " +
                   std::to_string(i) + " leaves the strip [" + std::to_string(spec.lower()) + ", " +
                   std::to_string(spec.upper()) + "]";
        }
    }
    if (!spec.admits_end(h)) {
        return "not in " + family + ": final height " + std::to_string(h) + " is not 0 or -1";
    }
    return std::nullopt;
}

bool is_member(const LatticePath& p, const FamilySpec& spec) {
    int h = 0;
    for (Step s : p) {
        h += delta(s);
        if (h > spec.upper() || h < spec.lower()) return false;
    }
    return spec.admits_end(h);
}

bool within_strip(const LatticePath& p, int lower, int upper) {
    if (lower > 0 || upper < 0) return false;
    int h = 0;
    for (Step s : p) {
        h += delta(s);
        if (h > upper || h < lower) return false;
    }
    return true;
}

std::vector<LatticePath> enumerate(const FamilySpec& spec, std::size_t n) {
    const bool is_a = spec.family == Family::A;
    return backtrack(
        n, spec.lower(), spec.upper(), [&](int h) { return spec.admits_end(h); },
        [is_a](int h, std::size_t left) {
            // A paths must still be able to reach 0 or -1.
            return !is_a || std::min(std::abs(h), std::abs(h + 1)) <= static_cast<int>(left);
        });
}

std::vector<LatticePath> enumerate_by_end(Family strip, std::size_t n, int k, int h) {
    const FamilySpec spec = FamilySpec::make(strip, k);
    return backtrack(
        n, spec.lower(), spec.upper(), [h](int end) { return end == h; },
        [h](int cur, std::size_t left) { return std::abs(cur - h) <= static_cast<int>(left); });
}

}  // namespace strippaths
