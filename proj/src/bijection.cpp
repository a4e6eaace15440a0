#include "strippaths/bijection.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace strippaths {

namespace {

// Step i runs from h[i] to h[i+1]. "First" is the minimal index, "last" the maximal.
class Profile {
public:
    explicit Profile(const LatticePath& p) : p_(p), h_(heights(p)) {}

    std::size_t n() const noexcept { return p_.size(); }
    int at(std::size_t i) const { return h_[i]; }
    int end() const { return h_.back(); }
    bool up(std::size_t i) const { return p_[i] == Step::Up; }

    template <typename Pred>
    std::size_t first(Pred pred, std::size_t begin = 0, std::size_t end = SIZE_MAX) const {
        end = std::min(end, n());
        for (std::size_t i = begin; i < end; ++i)
            if (pred(i)) return i;
        throw std::logic_error("bijection: marked step not found");
    }

    template <typename Pred>
    std::size_t last(Pred pred, std::size_t begin = 0, std::size_t end = SIZE_MAX) const {
        end = std::min(end, n());
        for (std::size_t i = end; i > begin; --i)
            if (pred(i - 1)) return i - 1;
        throw std::logic_error("bijection: marked step not found");
    }

    /// max / min of h over points [begin, end].
    int max_between(std::size_t begin, std::size_t end) const {
        return *std::max_element(h_.begin() + static_cast<std::ptrdiff_t>(begin),
                                 h_.begin() + static_cast<std::ptrdiff_t>(end) + 1);
    }
    int min_between(std::size_t begin, std::size_t end) const {
        return *std::min_element(h_.begin() + static_cast<std::ptrdiff_t>(begin),
                                 h_.begin() + static_cast<std::ptrdiff_t>(end) + 1);
    }
    int max() const { return max_between(0, n()); }
    int min() const { return min_between(0, n()); }

    // Common step searches.
    std::size_t first_ending_at(int level, std::size_t begin = 0, std::size_t end = SIZE_MAX) const {
        return first([&](std::size_t i) { return h_[i + 1] == level; }, begin, end);
    }
    std::size_t first_up_ending_at(int level, std::size_t begin = 0, std::size_t end = SIZE_MAX) const {
        return first([&](std::size_t i) { return up(i) && h_[i + 1] == level; }, begin, end);
    }
    std::size_t last_up_from(int level, std::size_t begin = 0, std::size_t end = SIZE_MAX) const {
        return last([&](std::size_t i) { return up(i) && h_[i] == level; }, begin, end);
    }
    std::size_t last_up_ending_at(int level, std::size_t begin = 0, std::size_t end = SIZE_MAX) const {
        return last([&](std::size_t i) { return up(i) && h_[i + 1] == level; }, begin, end);
    }
    std::size_t last_down_ending_at(int level, std::size_t begin = 0, std::size_t end = SIZE_MAX) const {
        return last([&](std::size_t i) { return !up(i) && h_[i + 1] == level; }, begin, end);
    }
    std::size_t last_down_from(int level, std::size_t begin = 0, std::size_t end = SIZE_MAX) const {
        return last([&](std::size_t i) { return !up(i) && h_[i] == level; }, begin, end);
    }
    /// The step leaving the last point at `level` before step `end`: the back-scan
    /// "from step `end`, go right to left until first arriving at `level`".
    std::size_t back_scan_to(int level, std::size_t end) const {
        return last([&](std::size_t i) { return h_[i] == level; }, 0, end);
    }

private:
    const LatticePath& p_;
    std::vector<int> h_;
};

SubsetLabel make_label(Family f, std::size_t n, int width, int index, int depth, bool base) {
    SubsetLabel l;
    l.family = f;
    l.length_parity = static_cast<int>(n % 2);
    l.width_parity = width % 2;
    l.index = index;
    l.depth = depth;
    l.base_case = base;
    l.length = n;
    l.width = width;
    return l;
}

SubsetLabel classify_a_unchecked(const LatticePath& p, int width) {
    const std::size_t n = p.size();
    if (n == 0) return make_label(Family::A, n, width, 0, 0, false);
    if (width == 1) return make_label(Family::A, n, width, 1, 0, true);
    const Profile prof(p);
    const bool odd_length = n % 2 == 1;
    if (width % 2 == 1) {
        const int k = width / 2;
        if (prof.min() >= -k) return make_label(Family::A, n, width, 1, 0, false);
        if (!odd_length) return make_label(Family::A, n, width, 2, 0, false);
        const std::size_t ia = prof.first_ending_at(-k - 1);
        return make_label(Family::A, n, width, prof.max_between(0, ia) <= 0 ? 2 : 3, 0, false);
    }
    int k = width / 2;
    int depth = 0;
    const int reach = std::max(prof.max(), -prof.min());
    while (k > 1 && reach < k) {
        --k;
        ++depth;
    }
    if (k == 1) return make_label(Family::A, n, 2, p[0] == Step::Up ? 1 : 2, depth, true);
    const std::size_t ia = prof.first([&](std::size_t i) { return std::abs(prof.at(i + 1)) == k; });
    int index;
    if (prof.at(ia + 1) == k) {
        index = prof.min_between(0, ia) >= 0 ? 1 : 2;
    } else if (!odd_length) {
        index = 3;
    } else {
        index = prof.max_between(0, ia) <= 0 ? 3 : 4;
    }
    return make_label(Family::A, n, 2 * k, index, depth, false);
}

SubsetLabel classify_b_unchecked(const LatticePath& p, int width) {
    const std::size_t n = p.size();
    if (n == 0) return make_label(Family::B, n, width, 0, 0, false);
    if (width == 1) return make_label(Family::B, n, width, 1, 0, true);
    const Profile prof(p);
    const bool odd_length = n % 2 == 1;
    if (width % 2 == 1) {
        const int k = width / 2;
        int index = 1;
        if (prof.max() > 2 * k) index = (!odd_length || prof.end() == 2 * k + 1) ? 2 : 3;
        return make_label(Family::B, n, width, index, 0, false);
    }
    int k = width / 2;
    int depth = 0;
    const int top = prof.max();
    while (k > 1 && top <= 2 * k - 2) {
        --k;
        ++depth;
    }
    if (k == 1) {
        const int index = odd_length ? (p[n - 1] == Step::Down ? 1 : 2) : (prof.end() == 2 ? 1 : 2);
        return make_label(Family::B, n, 2, index, depth, true);
    }
    int index;
    if (!odd_length) {
        if (prof.end() == 2 * k) {
            index = 1;
        } else {
            const std::size_t ic = prof.last_down_ending_at(2 * k - 2);
            const std::size_t ia = prof.back_scan_to(k, ic);
            index = prof.max_between(ia + 1, ic) == 2 * k ? 2 : 3;
        }
    } else if (prof.end() == 2 * k - 1) {
        const std::size_t ia = prof.last_up_from(k - 1);
        index = prof.max_between(ia + 1, n) == 2 * k ? 1 : 3;
    } else {
        const std::size_t ib = prof.last_down_ending_at(2 * k - 2);
        const std::size_t ia = prof.back_scan_to(k - 1, ib);
        index = prof.max_between(ia + 1, ib) == 2 * k ? 2 : 4;
    }
    return make_label(Family::B, n, 2 * k, index, depth, false);
}

// Builds a Decomposition from cut points given in path order.
class PartBuilder {
public:
    PartBuilder(const LatticePath& p, Decomposition& d) : p_(p), d_(d) {}

    PartBuilder& segment(char name, std::size_t end) {
        d_.parts.push_back({name, pos_, p_.slice(pos_, end)});
        pos_ = end;
        return *this;
    }
    PartBuilder& step(char name) {
        d_.parts.push_back({name, pos_, p_.slice(pos_, pos_ + 1)});
        std::optional<std::size_t>& slot = name == 'a' ? d_.a : name == 'b' ? d_.b : d_.c;
        slot = pos_;
        ++pos_;
        return *this;
    }
    PartBuilder& rest(char name) { return segment(name, p_.size()); }

private:
    const LatticePath& p_;
    Decomposition& d_;
    std::size_t pos_ = 0;
};

Decomposition decompose_a(const LatticePath& p, const SubsetLabel& label) {
    Decomposition d;
    d.label = label;
    if (label.index == 0) return d;
    PartBuilder parts(p, d);
    if (label.width == 1) {
        parts.rest('A');
        return d;
    }
    if (label.base_case) {
        parts.step('a').rest('A');
        return d;
    }
    const Profile prof(p);
    const int k = label.width / 2;
    const bool odd_length = label.length_parity == 1;
    if (label.width_parity == 1) {
        if (label.index == 1) {
            parts.rest('A');
            return d;
        }
        const std::size_t ia = prof.first_ending_at(-k - 1);
        if (odd_length && label.index == 2) {
            parts.segment('B', ia).step('a').rest('A');
            return d;
        }
        const std::size_t ib = odd_length ? prof.last_down_ending_at(0, 0, ia) : prof.back_scan_to(0, ia);
        parts.segment('C', ib).step('b').segment('B', ia).step('a').rest('A');
        return d;
    }
    if (label.index <= 2) {
        const std::size_t ia = prof.first_ending_at(k);
        if (!odd_length) {
            if (label.index == 1) {
                parts.segment('B', ia).step('a').rest('A');
            } else {
                const std::size_t ib = prof.last_up_ending_at(0, 0, ia);
                const std::size_t ic = prof.back_scan_to(0, ib);
                parts.segment('D', ic).step('c').segment('C', ib).step('b').segment('B', ia).step('a').rest('A');
            }
            return d;
        }
        const std::size_t ib = prof.last_down_ending_at(0);
        if (label.index == 1) {
            parts.segment('B', ia).step('a').segment('A', ib).step('b').rest('C');
        } else {
            const std::size_t ic = prof.last_up_from(-1, 0, ia);
            parts.segment('D', ic).step('c').segment('B', ia).step('a').segment('A', ib).step('b').rest('C');
        }
        return d;
    }
    const std::size_t ia = prof.first_ending_at(-k);
    if (!odd_length) {
        const std::size_t ib = prof.back_scan_to(0, ia);
        parts.segment('C', ib).step('b').segment('B', ia).step('a').rest('A');
    } else if (label.index == 3) {
        parts.segment('B', ia).step('a').rest('A');
    } else {
        const std::size_t ib = prof.last_down_ending_at(0, 0, ia);
        parts.segment('C', ib).step('b').segment('B', ia).step('a').rest('A');
    }
    return d;
}

Decomposition decompose_b(const LatticePath& p, const SubsetLabel& label) {
    Decomposition d;
    d.label = label;
    if (label.index == 0) return d;
    PartBuilder parts(p, d);
    if (label.width == 1) {
        parts.rest('A');
        return d;
    }
    const std::size_t n = p.size();
    if (label.base_case) {
        parts.segment('A', n - 1).step('a');
        return d;
    }
    const Profile prof(p);
    const int k = label.width / 2;
    const bool odd_length = label.length_parity == 1;
    if (label.width_parity == 1) {
        if (label.index == 1) {
            parts.rest('A');
        } else if (odd_length && label.index == 2) {
            parts.segment('A', prof.last_up_from(k)).step('a').rest('B');
        } else {
            const std::size_t ib = prof.last_down_ending_at(2 * k);
            const std::size_t ia = prof.back_scan_to(odd_length ? k : k + 1, ib);
            parts.segment('A', ia).step('a').segment('B', ib).step('b').rest('C');
        }
        return d;
    }
    if (!odd_length) {
        if (label.index == 1) {
            parts.segment('A', prof.last_up_from(k)).step('a').rest('B');
            return d;
        }
        const std::size_t ic = prof.last_down_ending_at(2 * k - 2);
        const std::size_t ia = prof.back_scan_to(k, ic);
        if (label.index == 2) {
            const std::size_t ib = prof.last_down_from(2 * k, ia + 1, ic);
            parts.segment('A', ia).step('a').segment('B', ib).step('b').segment('C', ic).step('c').rest('D');
        } else {
            parts.segment('A', ia).step('a').segment('B', ic).step('b').rest('C');
        }
        return d;
    }
    if (label.index == 1 || label.index == 3) {
        const std::size_t ia = prof.last_up_from(k - 1);
        if (label.index == 1) {
            const std::size_t ib = prof.first_up_ending_at(2 * k, ia + 1);
            parts.segment('A', ia).step('a').segment('B', ib).step('b').rest('C');
        } else {
            parts.segment('A', ia).step('a').rest('B');
        }
        return d;
    }
    const std::size_t ib = prof.last_down_ending_at(2 * k - 2);
    const std::size_t ia = prof.back_scan_to(k - 1, ib);
    if (label.index == 2) {
        const std::size_t ic = prof.first_up_ending_at(2 * k, ia + 1, ib);
        parts.segment('A', ia).step('a').segment('B', ic).step('c').segment('C', ib).step('b').rest('D');
    } else {
        parts.segment('A', ia).step('a').segment('B', ib).step('b').rest('C');
    }
    return d;
}

LatticePath map_a(const LatticePath& p, int width);
LatticePath map_b(const LatticePath& p, int width);

// The recursive calls land on members of narrower families by construction.
LatticePath recurse_a(const LatticePath& p, int width) {
    assert(is_member(p, FamilySpec::a(width)));
    return map_a(p, width);
}

LatticePath recurse_b(const LatticePath& p, int width) {
    assert(is_member(p, FamilySpec::b(width)));
    return map_b(p, width);
}

LatticePath map_a(const LatticePath& p, int width) {
    const SubsetLabel label = classify_a_unchecked(p, width);
    const Decomposition d = decompose_a(p, label);
    if (label.index == 0) return {};
    const int w = label.width;
    const LatticePath A = d.segment('A'), B = d.segment('B'), C = d.segment('C'), D = d.segment('D');
    if (w == 1) return flip(A);
    const bool odd_length = label.length_parity == 1;
    const Step a = d.a ? d.step('a') : Step::Up;
    if (label.base_case) return (label.index == 1 ? flip(A) : A) + (odd_length ? flipped(a) : a);
    const Step b = d.b ? d.step('b') : Step::Up;
    const Step c = d.c ? d.step('c') : Step::Up;
    if (label.width_parity == 1) {
        if (label.index == 1) return recurse_a(A, w - 1);
        const LatticePath head = A + flipped(a) + flip(B);
        if (odd_length && label.index == 2) return head;
        return head + b + flip(recurse_a(odd_length ? flip(C) : C, w - 1));
    }
    if (!odd_length) {
        switch (label.index) {
            case 1: return flip(A) + a + B;
            case 2: return flip(A) + a + B + flipped(b) + C + c + flip(recurse_a(D, w - 2));
            default: return A + flipped(a) + flip(B) + b + flip(recurse_a(C, w - 2));
        }
    }
    switch (label.index) {
        case 1: return flip(A) + a + B + flipped(b) + C;
        case 2: return flip(A) + a + B + c + C + b + flip(recurse_a(D, w - 2));
        case 3: return A + flipped(a) + flip(B);
        default: return A + flipped(a) + flip(B) + b + flip(recurse_a(flip(C), w - 2));
    }
}

LatticePath map_b(const LatticePath& p, int width) {
    const SubsetLabel label = classify_b_unchecked(p, width);
    const Decomposition d = decompose_b(p, label);
    if (label.index == 0) return {};
    const int w = label.width;
    const LatticePath A = d.segment('A'), B = d.segment('B'), C = d.segment('C'), D = d.segment('D');
    if (w == 1) return flip(A);
    const bool odd_length = label.length_parity == 1;
    const Step a = d.a ? d.step('a') : Step::Up;
    if (label.base_case) return (odd_length ? flipped(a) : a) + (label.index == 1 ? flip(A) : A);
    const Step b = d.b ? d.step('b') : Step::Up;
    const Step c = d.c ? d.step('c') : Step::Up;
    if (label.width_parity == 1) {
        if (label.index == 1) return recurse_b(A, w - 1);
        const LatticePath tail = flip(B) + flipped(a) + A;
        if (odd_length && label.index == 2) return tail;
        LatticePath head = recurse_b(flip(C), w - 1);
        if (odd_length) head = flip(head);
        return head + b + tail;
    }
    if (!odd_length) {
        switch (label.index) {
            case 1: return B + a + flip(A);
            case 2: return recurse_b(flip(D), w - 2) + c + C + flipped(b) + B + a + flip(A);
            default: return recurse_b(flip(C), w - 2) + b + flip(B) + flipped(a) + A;
        }
    }
    switch (label.index) {
        case 1: return B + a + flip(A) + flipped(b) + C;
        case 2: return recurse_b(flip(D), w - 2) + c + B + a + flip(A) + b + C;
        case 3: return flip(B) + flipped(a) + A;
        default: return flip(recurse_b(flip(C), w - 2)) + b + flip(B) + flipped(a) + A;
    }
}

void require_member(const LatticePath& p, const FamilySpec& spec) {
    if (auto why = membership_violation(p, spec)) throw DomainError(*why);
}

}  // namespace

bool SubsetLabel::corresponds_to(const SubsetLabel& o) const noexcept {
    return length_parity == o.length_parity && width_parity == o.width_parity && index == o.index &&
           depth == o.depth && base_case == o.base_case && length == o.length && width == o.width;
}

std::string SubsetLabel::name() const {
    std::string s(1, family_letter(family));
    if (index > 0) s += "^" + std::to_string(index);
    s += "_{" + std::to_string(length) + "," + std::to_string(width) + "}";
    return s;
}

LatticePath Decomposition::segment(char name) const {
    for (const auto& part : parts)
        if (part.name == name) return part.path;
    return {};
}

Step Decomposition::step(char name) const {
    for (const auto& part : parts)
        if (part.name == name) return part.path[0];
    throw std::out_of_range(std::string("decomposition has no marked step ") + name);
}

LatticePath Decomposition::reassemble() const {
    LatticePath out;
    for (const auto& part : parts) out.append(part.path);
    return out;
}

SubsetLabel classify_A(const LatticePath& p, int k) {
    require_member(p, FamilySpec::a(k));
    return classify_a_unchecked(p, k);
}

SubsetLabel classify_B(const LatticePath& p, int k) {
    require_member(p, FamilySpec::b(k));
    return classify_b_unchecked(p, k);
}

Decomposition decompose(const LatticePath& p, const SubsetLabel& label, int k) {
    const SubsetLabel actual = label.family == Family::A ? classify_A(p, k) : classify_B(p, k);
    if (!(actual == label)) {
        throw DomainError("label " + label.name() + " does not match the path's subset " + actual.name());
    }
    return label.family == Family::A ? decompose_a(p, label) : decompose_b(p, label);
}

LatticePath a_to_b(const LatticePath& p, int k) {
    require_member(p, FamilySpec::a(k));
    return map_a(p, k);
}

LatticePath b_to_a(const LatticePath& p, int k) {
    require_member(p, FamilySpec::b(k));
    return map_b(p, k);
}

}  // namespace strippaths
