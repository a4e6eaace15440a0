#include "strippaths/trees.hpp"

#include <algorithm>
#include <functional>

#include "json.hpp"

namespace strippaths {

namespace {

using nlohmann::json;

constexpr std::size_t kMaxJsonDepth = 512;

void require_even_strip(const LatticePath& p, int lower, int upper, int end, const char* what) {
    if (p.size() > kMaxPathLength) throw DomainError(std::string(what) + ": path too long");
    if (p.size() % 2 != 0) throw DomainError(std::string(what) + ": path length must be even");
    if (!within_strip(p, lower, upper)) {
        throw DomainError(std::string(what) + ": path leaves the strip " + std::to_string(lower) + ".." +
                          std::to_string(upper));
    }
    if (p.final_height() != end) {
        throw DomainError(std::string(what) + ": path must end at height " + std::to_string(end));
    }
}

void validate(const ElenaTree& t) {
    if (t.groups.empty()) throw TreeFormatError("Elena tree needs at least two spine nodes");
    for (const auto& g : t.groups)
        for (int m : g)
            if (m < 1) throw TreeFormatError("pendant path lengths must be positive");
}

void append_pendant(LatticePath& out, int m) {
    if (m == 1) {
        out.push_back(Step::Down).push_back(Step::Up);
        return;
    }
    out.push_back(Step::Down).push_back(Step::Down);
    for (int i = 2; i < m; ++i) out.push_back(Step::Up).push_back(Step::Down);
    out.push_back(Step::Up).push_back(Step::Up);
}

void glove_walk(const PlaneTree& t, LatticePath& out) {
    for (const auto& child : t.children) {
        out.push_back(Step::Up);
        glove_walk(child, out);
        out.push_back(Step::Down);
    }
}

json plane_to_json(const PlaneTree& t) {
    json children = json::array();
    for (const auto& c : t.children) children.push_back(plane_to_json(c));
    return json{{"children", std::move(children)}};
}

PlaneTree plane_from_json(const json& j, std::size_t depth) {
    if (depth > kMaxJsonDepth) throw TreeFormatError("tree JSON nested too deeply");
    if (!j.is_object() || j.size() != 1 || !j.contains("children") || !j["children"].is_array()) {
        throw TreeFormatError(R"(plane tree node must be {"children":[...]})");
    }
    PlaneTree t;
    for (const auto& c : j["children"]) t.children.push_back(plane_from_json(c, depth + 1));
    return t;
}

json parse_json(std::string_view text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw TreeFormatError(std::string("invalid JSON: ") + e.what());
    }
}

std::string dump(const json& j, bool pretty) { return pretty ? j.dump(2) : j.dump(); }

// Every forest with `nodes` nodes whose trees have height <= max_height.
std::vector<std::vector<PlaneTree>> forests(std::size_t nodes, std::size_t max_height);

std::vector<PlaneTree> trees(std::size_t nodes, std::size_t max_height) {
    std::vector<PlaneTree> out;
    if (nodes == 0) return out;
    if (nodes == 1) return {PlaneTree{}};
    if (max_height == 0) return out;
    for (auto& f : forests(nodes - 1, max_height - 1)) out.push_back(PlaneTree{std::move(f)});
    return out;
}

std::vector<std::vector<PlaneTree>> forests(std::size_t nodes, std::size_t max_height) {
    if (nodes == 0) return {{}};
    std::vector<std::vector<PlaneTree>> out;
    for (std::size_t first = 1; first <= nodes; ++first) {
        const auto heads = trees(first, max_height);
        if (heads.empty()) continue;
        const auto tails = forests(nodes - first, max_height);
        for (const auto& h : heads) {
            for (const auto& tail : tails) {
                std::vector<PlaneTree> f{h};
                f.insert(f.end(), tail.begin(), tail.end());
                out.push_back(std::move(f));
            }
        }
    }
    return out;
}

// Sequences of positive integers summing to total.
std::vector<std::vector<int>> compositions(int total) {
    if (total == 0) return {{}};
    std::vector<std::vector<int>> out;
    for (int first = 1; first <= total; ++first) {
        for (auto& rest : compositions(total - first)) {
            std::vector<int> c{first};
            c.insert(c.end(), rest.begin(), rest.end());
            out.push_back(std::move(c));
        }
    }
    return out;
}

}  // namespace

std::size_t PlaneTree::size() const noexcept {
    std::size_t n = 1;
    for (const auto& c : children) n += c.size();
    return n;
}

std::size_t PlaneTree::height() const noexcept {
    std::size_t h = 0;
    for (const auto& c : children) h = std::max(h, c.height() + 1);
    return h;
}

std::size_t ElenaTree::size() const noexcept {
    std::size_t n = groups.size() + 1;
    for (const auto& g : groups)
        for (int m : g) n += static_cast<std::size_t>(m);
    return n;
}

PlaneTree glove_encode(const LatticePath& p) {
    require_even_strip(p, 0, static_cast<int>(kMaxTreeHeight), 0, "glove");
    PlaneTree root;
    std::vector<PlaneTree*> stack{&root};
    for (Step s : p) {
        if (s == Step::Up) {
            stack.back()->children.emplace_back();
            stack.push_back(&stack.back()->children.back());
        } else {
            stack.pop_back();
        }
    }
    return root;
}

LatticePath glove_decode(const PlaneTree& t) {
    if (t.height() > kMaxTreeHeight) throw TreeFormatError("tree height exceeds 3");
    LatticePath out;
    glove_walk(t, out);
    return out;
}

ElenaTree path_to_elena(const LatticePath& p) {
    require_even_strip(p, -2, 1, 0, "Elena encoding");
    ElenaTree t;
    t.groups.emplace_back();
    const auto h = heights(p);
    std::size_t i = 0;
    while (i < p.size()) {
        if (p[i] == Step::Up) {
            t.groups.emplace_back();
            i += 2;
            continue;
        }
        std::size_t j = i + 1;
        while (h[j] != 0) ++j;
        t.groups.back().push_back(static_cast<int>((j - i) / 2));
        i = j;
    }
    return t;
}

LatticePath elena_to_path(const ElenaTree& t) {
    validate(t);
    LatticePath out;
    for (std::size_t g = 0; g < t.groups.size(); ++g) {
        if (g > 0) out.push_back(Step::Up).push_back(Step::Down);
        for (int m : t.groups[g]) append_pendant(out, m);
    }
    return out;
}

PlaneTree elena_to_plane(const ElenaTree& t) {
    validate(t);
    PlaneTree root;
    for (const auto& g : t.groups) {
        PlaneTree spine;
        for (int m : g) {
            PlaneTree pendant;
            pendant.children.resize(static_cast<std::size_t>(m - 1));
            spine.children.push_back(std::move(pendant));
        }
        root.children.push_back(std::move(spine));
    }
    return root;
}

ElenaTree plane_to_elena(const PlaneTree& t) {
    if (t.children.empty()) throw TreeFormatError("the single-node tree has no Elena preimage");
    if (t.height() > kMaxTreeHeight) throw TreeFormatError("tree height exceeds 3");
    ElenaTree out;
    for (const auto& spine : t.children) {
        auto& g = out.groups.emplace_back();
        for (const auto& pendant : spine.children) g.push_back(static_cast<int>(pendant.children.size()) + 1);
    }
    return out;
}

LatticePath a3_to_b3(const LatticePath& p) {
    const LatticePath glove = glove_decode(elena_to_plane(path_to_elena(p)));
    return glove.slice(0, glove.size() - 2);
}

LatticePath b3_to_a3(const LatticePath& p) {
    require_even_strip(p, 0, 3, p.final_height() == 2 ? 2 : 0, "B(2n,3|0) u B(2n,3|2)");
    const Step penultimate = p.final_height() == 2 ? Step::Down : Step::Up;
    const LatticePath glove = p + penultimate + Step::Down;
    return elena_to_path(plane_to_elena(glove_encode(glove)));
}

LatticePath a3_odd_to_b3(const LatticePath& p) {
    if (p.size() % 2 != 1 || p.size() > kMaxPathLength) throw DomainError("odd map: path length must be odd");
    if (!within_strip(p, -2, 1) || p.final_height() != -1) {
        throw DomainError("odd map: path must stay in -2..1 and end at -1");
    }
    return a3_to_b3(p + Step::Up);
}

LatticePath b3_to_a3_odd(const LatticePath& p) {
    require_even_strip(p, 0, 3, 2, "odd inverse");
    const LatticePath a = b3_to_a3(p);
    return a.slice(0, a.size() - 1);
}

bool has_nonempty_last_group(const ElenaTree& t) noexcept {
    return !t.groups.empty() && !t.groups.back().empty();
}

bool rightmost_leaf_depth_at_least_two(const PlaneTree& t) noexcept {
    std::size_t depth = 0;
    const PlaneTree* node = &t;
    while (!node->children.empty()) {
        node = &node->children.back();
        ++depth;
    }
    return depth >= 2;
}

std::vector<ElenaTree> enumerate_elena_trees(std::size_t size) {
    std::vector<ElenaTree> out;
    if (size < 2) return out;
    // groups.size() = g, g + 1 spine nodes, the rest spread over the groups.
    std::function<void(std::size_t, int, ElenaTree&)> fill = [&](std::size_t left, int budget, ElenaTree& t) {
        if (left == 0) {
            if (budget == 0) out.push_back(t);
            return;
        }
        for (int used = 0; used <= budget; ++used) {
            for (auto& c : compositions(used)) {
                t.groups.push_back(std::move(c));
                fill(left - 1, budget - used, t);
                t.groups.pop_back();
            }
        }
    };
    for (std::size_t g = 1; g + 1 <= size; ++g) {
        ElenaTree t;
        fill(g, static_cast<int>(size - g - 1), t);
    }
    return out;
}

std::vector<PlaneTree> enumerate_plane_trees(std::size_t size, std::size_t max_height) {
    return trees(size, max_height);
}

std::string to_json(const PlaneTree& t, bool pretty) { return dump(plane_to_json(t), pretty); }

std::string to_json(const ElenaTree& t, bool pretty) { return dump(json{{"groups", t.groups}}, pretty); }

PlaneTree plane_tree_from_json(std::string_view text) { return plane_from_json(parse_json(text), 0); }

ElenaTree elena_tree_from_json(std::string_view text) {
    const json j = parse_json(text);
    if (!j.is_object() || j.size() != 1 || !j.contains("groups") || !j["groups"].is_array()) {
        throw TreeFormatError(R"(Elena tree must be {"groups":[[...],...]})");
    }
    ElenaTree t;
    for (const auto& g : j["groups"]) {
        if (!g.is_array()) throw TreeFormatError("each Elena group must be an array");
        auto& group = t.groups.emplace_back();
        for (const auto& m : g) {
            if (!m.is_number_integer()) throw TreeFormatError("pendant lengths must be integers");
            const auto v = m.get<long long>();
            if (v < 1 || v > static_cast<long long>(kMaxPathLength)) {
                throw TreeFormatError("pendant length out of range: " + std::to_string(v));
            }
            group.push_back(static_cast<int>(v));
        }
    }
    validate(t);
    return t;
}

}  // namespace strippaths
