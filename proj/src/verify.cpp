#include "strippaths/verify.hpp"

#include <algorithm>
#include <array>
#include <future>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "strippaths/bijection.hpp"
#include "strippaths/counting.hpp"
#include "strippaths/genfunc.hpp"
#include "strippaths/trees.hpp"

namespace strippaths {

namespace {

// Fixed sweeps for the suites that do not scale with n_max / k_max.
constexpr std::size_t kFibonacciMax = 30;
constexpr std::size_t kSubfamilyMax = 20;
constexpr std::size_t kSeriesOrder = 20;
constexpr int kSeriesHalfWidthMax = 3;
constexpr int kIdentityIndexMax = 12;
constexpr std::size_t kGloveLengthMax = 20;
constexpr std::size_t kElenaLengthMax = 16;
constexpr std::size_t kElenaCountMax = 10;
constexpr std::size_t kElenaPlaneSizeMax = 12;
constexpr std::size_t kA3LengthMax = 16;

const char* const kWorkedSource = "DUUDDUUUDUDDDUDDUDDUDUUUUD";
const char* const kWorkedImage = "UDUUUUDUUDUDDUDDDUDDUUUUDD";

// Running tally for one suite; keeps only the first failure.
struct Tally {
    bool ok = true;
    std::size_t checks = 0;
    std::string counterexample;

    bool expect(bool condition, const std::string& what) {
        ++checks;
        if (!condition && ok) {
            ok = false;
            counterexample = what;
        }
        return condition;
    }

    void merge(const Tally& other) {
        checks += other.checks;
        if (!other.ok && ok) {
            ok = false;
            counterexample = other.counterexample;
        }
    }

    SuiteResult result(std::string name) const { return {std::move(name), ok, checks, counterexample}; }
};

std::string describe(const LatticePath& p, std::size_t n, int k, const std::string& why) {
    return format_path(p) + " (n=" + std::to_string(n) + ", k=" + std::to_string(k) + "): " + why;
}

std::string str(const BigCount& c) { return c.str(); }

// Strip suites evaluated per (n, k) cell.
enum StripSuite { kCardinality, kPartition, kBijectivity, kRoundTrip, kLabels, kStripSuiteCount };

using CellTallies = std::array<Tally, kStripSuiteCount>;

std::string label_key(const SubsetLabel& l) {
    return std::to_string(l.index) + "/" + std::to_string(l.depth) + "/" + std::to_string(l.width) +
           (l.base_case ? "b" : "");
}

// Exceptions from a faulty map become failures attributed to the input path.
LatticePath apply(const PathMap& f, const LatticePath& p, int k, std::string& error) {
    try {
        return f(p, k);
    } catch (const std::exception& e) {
        error = e.what();
        return {};
    }
}

CellTallies run_cell(std::size_t n, int k, const PathMap& forward, const PathMap& backward) {
    CellTallies t;
    const auto as = enumerate(FamilySpec::a(k), n);
    const auto bs = enumerate(FamilySpec::b(k), n);
    const BigCount expected = strip_count(n, k);
    const std::string cell = " (n=" + std::to_string(n) + ", k=" + std::to_string(k) + ")";
    t[kCardinality].expect(BigCount(as.size()) == expected,
                           "|A| = " + std::to_string(as.size()) + " but formula gives " + str(expected) + cell);
    t[kCardinality].expect(BigCount(bs.size()) == expected,
                           "|B| = " + std::to_string(bs.size()) + " but formula gives " + str(expected) + cell);

    std::map<std::string, std::size_t> a_labels, b_labels;
    for (const auto& p : as) {
        const SubsetLabel l = classify_A(p, k);
        ++a_labels[label_key(l)];
        t[kPartition].expect((l.index > 0) == (n > 0), describe(p, n, k, "bad label " + l.name()));
        t[kPartition].expect(decompose(p, l, k).reassemble() == p, describe(p, n, k, "parts do not reassemble"));
    }
    for (const auto& q : bs) {
        const SubsetLabel l = classify_B(q, k);
        ++b_labels[label_key(l)];
        t[kPartition].expect((l.index > 0) == (n > 0), describe(q, n, k, "bad label " + l.name()));
        t[kPartition].expect(decompose(q, l, k).reassemble() == q, describe(q, n, k, "parts do not reassemble"));
    }
    t[kLabels].expect(a_labels == b_labels, "subset sizes differ between A and B" + cell);

    const FamilySpec b_spec = FamilySpec::b(k);
    std::set<LatticePath> image;
    for (const auto& p : as) {
        std::string error;
        const LatticePath q = apply(forward, p, k, error);
        if (!t[kBijectivity].expect(error.empty(), describe(p, n, k, "a_to_b threw: " + error))) continue;
        if (!t[kBijectivity].expect(is_member(q, b_spec) && q.size() == n,
                                    describe(p, n, k, "image " + format_path(q) + " is not in B"))) {
            continue;
        }
        t[kBijectivity].expect(image.insert(q).second, describe(p, n, k, "image " + format_path(q) + " repeats"));
        const LatticePath back = apply(backward, q, k, error);
        t[kRoundTrip].expect(error.empty() && back == p,
                             describe(p, n, k, "b_to_a(a_to_b) gives " + format_path(back) + error));
        t[kLabels].expect(classify_A(p, k).corresponds_to(classify_B(q, k)),
                          describe(p, n, k, classify_A(p, k).name() + " maps into " + classify_B(q, k).name()));
    }
    t[kBijectivity].expect(image.size() == bs.size(), "image misses part of B" + cell);
    const FamilySpec a_spec = FamilySpec::a(k);
    for (const auto& q : bs) {
        std::string error;
        const LatticePath p = apply(backward, q, k, error);
        if (!t[kRoundTrip].expect(error.empty(), describe(q, n, k, "b_to_a threw: " + error))) continue;
        if (!t[kRoundTrip].expect(is_member(p, a_spec), describe(q, n, k, "b_to_a leaves A"))) continue;
        const LatticePath again = apply(forward, p, k, error);
        t[kRoundTrip].expect(error.empty() && again == q,
                             describe(q, n, k, "a_to_b(b_to_a) gives " + format_path(again) + error));
    }
    return t;
}

std::vector<CellTallies> run_cells(const VerifyOptions& o, const PathMap& forward, const PathMap& backward) {
    std::vector<std::pair<std::size_t, int>> cells;
    for (int k = 1; k <= o.k_max; ++k)
        for (std::size_t n = 0; n <= o.n_max; ++n) cells.emplace_back(n, k);
    std::vector<CellTallies> out(cells.size());
    if (!o.parallel) {
        for (std::size_t i = 0; i < cells.size(); ++i)
            out[i] = run_cell(cells[i].first, cells[i].second, forward, backward);
        return out;
    }
    const std::size_t workers = std::max(1u, std::thread::hardware_concurrency());
    for (std::size_t start = 0; start < cells.size(); start += workers) {
        std::vector<std::future<CellTallies>> batch;
        for (std::size_t i = start; i < std::min(cells.size(), start + workers); ++i) {
            batch.push_back(std::async(std::launch::async, run_cell, cells[i].first, cells[i].second,
                                       std::cref(forward), std::cref(backward)));
        }
        for (std::size_t i = 0; i < batch.size(); ++i) out[start + i] = batch[i].get();
    }
    return out;
}

Tally small_families_suite() {
    Tally t;
    const std::vector<std::string> a43 = {"DDUU", "DUDU", "DUUD", "UDDU", "UDUD"};
    const std::vector<std::string> b43 = {"UDUD", "UDUU", "UUDD", "UUDU", "UUUD"};
    auto strings = [](const std::vector<LatticePath>& ps) {
        std::vector<std::string> out;
        for (const auto& p : ps) out.push_back(format_path(p));
        return out;
    };
    t.expect(strings(enumerate(FamilySpec::a(3), 4)) == a43, "A_{4,3} differs from the five listed paths");
    t.expect(strings(enumerate(FamilySpec::b(3), 4)) == b43, "B_{4,3} differs from the five listed paths");
    return t;
}

Tally worked_example_suite(const PathMap& forward, const PathMap& backward) {
    Tally t;
    const LatticePath p = parse_path(kWorkedSource);
    std::string error;
    const LatticePath q = apply(forward, p, 6, error);
    t.expect(error.empty() && format_path(q) == kWorkedImage, describe(p, p.size(), 6, "maps to " + format_path(q)));
    const LatticePath back = apply(backward, q, 6, error);
    t.expect(error.empty() && back == p, describe(q, q.size(), 6, "maps back to " + format_path(back)));
    return t;
}

Tally fibonacci_suite() {
    Tally t;
    for (std::size_t n = 0; n <= kFibonacciMax; ++n) {
        const BigCount f = fibonacci(static_cast<long long>(n) + 1);
        t.expect(strip_count(n, 3) == f, "count(" + std::to_string(n) + ", 3) != F_" + std::to_string(n + 1));
        t.expect(a3_binomial_sum(n) == f, "binomial sum(" + std::to_string(n) + ") != F_" + std::to_string(n + 1));
    }
    return t;
}

Tally subfamily_suite() {
    Tally t;
    for (std::size_t n = 0; n <= kSubfamilyMax; ++n) {
        const int parity = static_cast<int>(n % 2);
        for (int h = 0; h <= 3; ++h) {
            if (h % 2 != parity) continue;
            const auto got = enumerate_by_end(Family::B, n, 3, h).size();
            t.expect(BigCount(got) == expected_subfamily_count(Family::B, n, h),
                     "|B(" + std::to_string(n) + ",3|" + std::to_string(h) + ")| = " + std::to_string(got));
        }
        for (int h = -2; h <= 1; ++h) {
            if ((h + 2) % 2 != parity) continue;
            const auto got = enumerate_by_end(Family::A, n, 3, h).size();
            t.expect(BigCount(got) == expected_subfamily_count(Family::A, n, h),
                     "|A(" + std::to_string(n) + ",3|" + std::to_string(h) + ")| = " + std::to_string(got));
        }
    }
    return t;
}

Tally union_suite() {
    Tally t;
    for (std::size_t n = 0; n <= kSubfamilyMax; ++n) {
        std::size_t b_total = 0;
        for (int h = 0; h <= 3; ++h) b_total += enumerate_by_end(Family::B, n, 3, h).size();
        const std::size_t a_total =
            enumerate_by_end(Family::A, n, 3, 0).size() + enumerate_by_end(Family::A, n, 3, -1).size();
        t.expect(b_total == a_total, "union identity fails at n=" + std::to_string(n));
    }
    return t;
}

Tally genfunc_series_suite() {
    Tally t;
    for (int k = 1; k <= kSeriesHalfWidthMax; ++k) {
        const auto phi = phi0_series(k, kSeriesOrder);
        TruncatedSeries psi_total(kSeriesOrder);
        for (int j = 0; j <= 2 * k; ++j) psi_total += psi_series(k, j, kSeriesOrder);
        for (std::size_t m = 0; m <= kSeriesOrder; ++m) {
            const std::string at = " at z^" + std::to_string(m) + ", k=" + std::to_string(k);
            const BigCount walks = m % 2 == 0 ? BigCount(enumerate(FamilySpec::a(2 * k), m).size()) : BigCount(0);
            t.expect(phi[m] == walks, "phi0 coefficient " + phi[m].str() + " != " + str(walks) + at);
            const BigCount total(enumerate(FamilySpec::b(2 * k), m).size());
            t.expect(psi_total[m] == total, "psi sum coefficient " + psi_total[m].str() + " != " + str(total) + at);
        }
    }
    return t;
}

Tally genfunc_identity_suite() {
    Tally t;
    for (int i = 1; i <= kIdentityIndexMax; ++i) {
        t.expect(verify_dsum_identity(i), "determinant sum identity fails at k=" + std::to_string(i));
        t.expect(verify_v_identity(i), "v identity fails at k=" + std::to_string(i));
    }
    for (int j = 0; j <= kIdentityIndexMax; ++j)
        t.expect(verify_d_closed_form(static_cast<std::size_t>(j)), "closed form fails at j=" + std::to_string(j));
    return t;
}

Tally glove_suite() {
    Tally t;
    for (std::size_t len = 0; len <= kGloveLengthMax; len += 2) {
        for (const auto& p : enumerate_by_end(Family::B, len, 3, 0)) {
            const PlaneTree tree = glove_encode(p);
            t.expect(tree.size() == len / 2 + 1 && tree.height() <= 3, format_path(p) + ": wrong tree shape");
            t.expect(glove_decode(tree) == p, format_path(p) + ": glove round trip fails");
        }
    }
    return t;
}

Tally elena_suite() {
    Tally t;
    for (std::size_t len = 0; len <= kElenaLengthMax; len += 2) {
        for (const auto& p : enumerate_by_end(Family::A, len, 3, 0)) {
            const ElenaTree e = path_to_elena(p);
            t.expect(e.size() == len / 2 + 2, format_path(p) + ": Elena tree has wrong size");
            t.expect(elena_to_path(e) == p, format_path(p) + ": Elena round trip fails");
        }
    }
    for (std::size_t m = 0; m <= kElenaCountMax; ++m) {
        const auto count = enumerate_elena_trees(m + 2).size();
        t.expect(BigCount(count) == fibonacci(2 * static_cast<long long>(m) + 1),
                 "Elena trees of size " + std::to_string(m + 2) + ": " + std::to_string(count));
    }
    return t;
}

Tally elena_plane_suite() {
    Tally t;
    for (std::size_t size = 2; size <= kElenaPlaneSizeMax; ++size) {
        std::set<std::string> image;
        for (const auto& e : enumerate_elena_trees(size)) {
            const PlaneTree tree = elena_to_plane(e);
            const std::string json = to_json(e);
            t.expect(tree.size() == size && tree.height() <= 3, json + ": plane tree has wrong shape");
            t.expect(plane_to_elena(tree) == e, json + ": plane round trip fails");
            image.insert(to_json(tree));
        }
        const auto targets = enumerate_plane_trees(size, 3).size();
        t.expect(image.size() == targets, "size " + std::to_string(size) + ": image misses plane trees");
    }
    return t;
}

std::set<LatticePath> as_set(std::vector<LatticePath> v) { return {v.begin(), v.end()}; }

Tally a3_suite() {
    Tally t;
    for (std::size_t len = 0; len <= kA3LengthMax; len += 2) {
        std::set<LatticePath> target = as_set(enumerate_by_end(Family::B, len, 3, 0));
        target.merge(as_set(enumerate_by_end(Family::B, len, 3, 2)));
        const auto source = enumerate_by_end(Family::A, len, 3, 0);
        std::set<LatticePath> image;
        for (const auto& p : source) {
            const LatticePath q = a3_to_b3(p);
            image.insert(q);
            t.expect(b3_to_a3(q) == p, format_path(p) + ": a3 round trip fails");
        }
        const BigCount f = fibonacci(static_cast<long long>(len) + 1);
        t.expect(image == target, "length " + std::to_string(len) + ": image differs from B(|0) u B(|2)");
        t.expect(BigCount(source.size()) == f && BigCount(target.size()) == f,
                 "length " + std::to_string(len) + ": sizes differ from F_" + std::to_string(len + 1));
    }
    return t;
}

Tally odd_suite() {
    Tally t;
    for (std::size_t size = 3; size <= kElenaPlaneSizeMax; ++size) {
        const long long n = static_cast<long long>(size) - 2;
        std::size_t elena = 0;
        std::set<std::string> image;
        for (const auto& e : enumerate_elena_trees(size)) {
            if (!has_nonempty_last_group(e)) continue;
            ++elena;
            const PlaneTree tree = elena_to_plane(e);
            t.expect(rightmost_leaf_depth_at_least_two(tree), to_json(e) + ": rightmost leaf too shallow");
            image.insert(to_json(tree));
        }
        std::size_t plane = 0;
        for (const auto& tree : enumerate_plane_trees(size, 3)) plane += rightmost_leaf_depth_at_least_two(tree);
        const BigCount f = fibonacci(2 * n);
        t.expect(BigCount(elena) == f && BigCount(plane) == f && image.size() == plane,
                 "size " + std::to_string(size) + ": odd subclass counts " + std::to_string(elena) + ", " +
                     std::to_string(plane));
    }
    for (std::size_t len = 2; len <= kA3LengthMax; len += 2) {
        const auto target = as_set(enumerate_by_end(Family::B, len, 3, 2));
        std::set<LatticePath> image;
        for (const auto& p : enumerate_by_end(Family::A, len - 1, 3, -1)) {
            const LatticePath q = a3_odd_to_b3(p);
            image.insert(q);
            t.expect(b3_to_a3_odd(q) == p, format_path(p) + ": odd round trip fails");
        }
        t.expect(image == target, "length " + std::to_string(len) + ": odd image differs from B(|2)");
    }
    return t;
}

}  // namespace

bool VerifyReport::passed() const noexcept { return first_failure() == nullptr; }

const SuiteResult* VerifyReport::first_failure() const noexcept {
    for (const auto& s : suites)
        if (!s.passed) return &s;
    return nullptr;
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {
        "cardinality", "small-families", "partition", "bijectivity", "round-trip", "label-correspondence",
        "worked-example", "fibonacci", "subfamily-counts", "union-identity", "genfunc-series",
        "genfunc-identities", "glove", "elena", "elena-plane", "a3-to-b3", "odd-subclass",
    };
    return names;
}

VerifyReport run_verification(const VerifyOptions& options) {
    if (options.k_max < 1) throw std::invalid_argument("k-max must be >= 1");
    if (options.n_max > kMaxPathLength) throw std::invalid_argument("n-max exceeds the path length limit");
    const PathMap forward = options.a_to_b ? options.a_to_b : PathMap(a_to_b);
    const PathMap backward = options.b_to_a ? options.b_to_a : PathMap(b_to_a);

    std::array<Tally, kStripSuiteCount> strip;
    for (const auto& cell : run_cells(options, forward, backward))
        for (int s = 0; s < kStripSuiteCount; ++s) strip[s].merge(cell[s]);

    std::map<std::string, Tally> by_name = {
        {"cardinality", strip[kCardinality]},
        {"small-families", small_families_suite()},
        {"partition", strip[kPartition]},
        {"bijectivity", strip[kBijectivity]},
        {"round-trip", strip[kRoundTrip]},
        {"label-correspondence", strip[kLabels]},
        {"worked-example", worked_example_suite(forward, backward)},
        {"fibonacci", fibonacci_suite()},
        {"subfamily-counts", subfamily_suite()},
        {"union-identity", union_suite()},
        {"genfunc-series", genfunc_series_suite()},
        {"genfunc-identities", genfunc_identity_suite()},
        {"glove", glove_suite()},
        {"elena", elena_suite()},
        {"elena-plane", elena_plane_suite()},
        {"a3-to-b3", a3_suite()},
        {"odd-subclass", odd_suite()},
    };
    VerifyReport report;
    for (const auto& name : suite_names()) report.suites.push_back(by_name.at(name).result(name));
    return report;
}

std::string format_report(const VerifyReport& report) {
    std::ostringstream out;
    for (const auto& s : report.suites) {
        if (s.passed) {
            out << "PASS " << s.name << " (" << s.checks << " checks)\n";
        } else {
            out << "FAIL " << s.name << ": " << s.counterexample << "\n";
        }
    }
    return out.str();
}

}  // namespace strippaths
