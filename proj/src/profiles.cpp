#include "tmdd/profiles.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace tmdd {

bool ColoredDegree::dominated_by(const ColoredDegree& other) const {
    for (std::size_t i = 0; i < counts.size(); ++i)
        if (counts[i] > other.counts[i]) return false;
    return true;
}

bool ColoredDegree::is_zero() const {
    return std::all_of(counts.begin(), counts.end(), [](std::uint8_t d) { return d == 0; });
}

void DegreeConstraint::validate() const {
    if (c < 1) throw std::invalid_argument("constraint: need at least one color");
    for (const auto& [d, mult] : s) {
        if (static_cast<int>(d.counts.size()) != c)
            throw std::invalid_argument("constraint: tuple length mismatch in s");
        if (mult < 1) throw std::invalid_argument("constraint: nonpositive multiplicity");
        if (d.is_zero()) throw std::invalid_argument("constraint: all-zero degree in s");
    }
    for (const auto& d : t) {
        if (static_cast<int>(d.counts.size()) != c)
            throw std::invalid_argument("constraint: tuple length mismatch in t");
        if (d.is_zero()) throw std::invalid_argument("constraint: all-zero degree in t");
    }
}

std::vector<ColoredDegree> delta_set(int c) {
    std::vector<ColoredDegree> t;
    for (int i = 0; i < c; ++i) {
        ColoredDegree d{std::vector<std::uint8_t>(c, 0)};
        d.counts[i] = 2;
        t.push_back(std::move(d));
    }
    return t;
}

namespace {

std::vector<std::pair<ColoredDegree, int>> to_multiset(std::vector<ColoredDegree> degrees) {
    std::map<ColoredDegree, int> counts;
    for (auto& d : degrees) ++counts[d];
    std::vector<std::pair<ColoredDegree, int>> s(counts.begin(), counts.end());
    return s;
}

void require_no_isolated(const Graph& h) {
    if (h.edge_count() == 0) throw std::invalid_argument("query graph has no edges");
    for (int d : h.degrees())
        if (d == 0) throw std::invalid_argument("query graph has an isolated vertex");
}

/// Colored degree multiset from an edge coloring (colors 1..c per edge).
std::vector<ColoredDegree> colored_degrees(const Graph& h, const std::vector<int>& color, int c) {
    std::vector<ColoredDegree> deg(h.vertex_count(),
                                   ColoredDegree{std::vector<std::uint8_t>(c, 0)});
    for (int i = 0; i < h.edge_count(); ++i) {
        ++deg[h.edge(i).u].counts[color[i] - 1];
        ++deg[h.edge(i).v].counts[color[i] - 1];
    }
    return deg;
}

bool covers(const Graph& h, const std::vector<int>& set) {
    for (const Edge& e : h.edges())
        if (!std::binary_search(set.begin(), set.end(), e.u) &&
            !std::binary_search(set.begin(), set.end(), e.v))
            return false;
    return true;
}

bool next_combination(std::vector<int>& comb, int n) {
    int k = static_cast<int>(comb.size());
    for (int i = k - 1; i >= 0; --i) {
        if (comb[i] < n - (k - i)) {
            ++comb[i];
            for (int j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
            return true;
        }
    }
    return false;
}

}  // namespace

std::vector<int> min_vertex_cover(const Graph& h) {
    if (h.edge_count() == 0) throw std::invalid_argument("min_vertex_cover: no edges");
    const int n = h.vertex_count();
    for (int k = 1; k <= n; ++k) {
        std::vector<int> comb(k);
        for (int i = 0; i < k; ++i) comb[i] = i;
        do {
            if (covers(h, comb)) return comb;  // lexicographically first by construction
        } while (next_combination(comb, n));
    }
    throw std::logic_error("min_vertex_cover: unreachable");
}

ExtendedProfile edge_profile(const Graph& h) {
    require_no_isolated(h);
    const int c = h.edge_count();
    std::vector<int> color(c);
    for (int i = 0; i < c; ++i) color[i] = i + 1;
    DegreeConstraint con{c, to_multiset(colored_degrees(h, color, c)), delta_set(c)};
    con.validate();
    return {std::move(con), "edge"};
}

ExtendedProfile vertex_cover_profile(const Graph& h) {
    require_no_isolated(h);
    std::vector<int> cover = min_vertex_cover(h);
    // each edge goes to its incident cover vertex of smallest cover index
    std::vector<int> color(h.edge_count(), 0);
    std::vector<bool> used(cover.size(), false);
    for (int i = 0; i < h.edge_count(); ++i) {
        for (std::size_t k = 0; k < cover.size(); ++k) {
            if (h.edge(i).u == cover[k] || h.edge(i).v == cover[k]) {
                color[i] = static_cast<int>(k) + 1;
                used[k] = true;
                break;
            }
        }
    }
    // drop cover vertices that received no edge and renumber colors
    std::vector<int> renumber(cover.size() + 1, 0);
    int c = 0;
    for (std::size_t k = 0; k < cover.size(); ++k)
        if (used[k]) renumber[k + 1] = ++c;
    for (int& col : color) col = renumber[col];
    DegreeConstraint con{c, to_multiset(colored_degrees(h, color, c)), delta_set(c)};
    con.validate();
    return {std::move(con), "vertex-cover"};
}

ExtendedProfile complete_profile(int a) {
    if (a < 3) throw std::invalid_argument("complete_profile: a must be at least 3");
    const int c = a - 2;
    std::vector<ColoredDegree> degrees;
    // three vertices on the color-1 triangle, degree 1 in every later color
    for (int k = 0; k < 3; ++k) {
        ColoredDegree d{std::vector<std::uint8_t>(c, 1)};
        d.counts[0] = 2;
        degrees.push_back(std::move(d));
    }
    // star centers: color i has degree i+1, zeros before, ones after (1-based i)
    for (int i = 2; i <= a - 2; ++i) {
        ColoredDegree d{std::vector<std::uint8_t>(c, 0)};
        d.counts[i - 1] = static_cast<std::uint8_t>(i + 1);
        for (int j = i + 1; j <= c; ++j) d.counts[j - 1] = 1;
        degrees.push_back(std::move(d));
    }
    DegreeConstraint con{c, to_multiset(std::move(degrees)), delta_set(c)};
    con.validate();
    return {std::move(con), "K" + std::to_string(a)};
}

ExtendedProfile complete_bipartite_profile(int a, int b) {
    if (a < 1 || b < a)
        throw std::invalid_argument("complete_bipartite_profile: need 1 <= a <= b");
    const int c = a;
    std::vector<ColoredDegree> degrees;
    for (int i = 0; i < a; ++i) {
        ColoredDegree d{std::vector<std::uint8_t>(c, 0)};
        d.counts[i] = static_cast<std::uint8_t>(b);
        degrees.push_back(std::move(d));
    }
    for (int k = 0; k < b; ++k)
        degrees.push_back(ColoredDegree{std::vector<std::uint8_t>(c, 1)});
    DegreeConstraint con{c, to_multiset(std::move(degrees)), delta_set(c)};
    con.validate();
    return {std::move(con), "K" + std::to_string(a) + "," + std::to_string(b)};
}

ExtendedProfile diamond_profile() {
    std::vector<ColoredDegree> degrees = {
        ColoredDegree{{3, 0}},
        ColoredDegree{{1, 2}},
        ColoredDegree{{1, 1}},
        ColoredDegree{{1, 1}},
    };
    DegreeConstraint con{2, to_multiset(std::move(degrees)), delta_set(2)};
    con.validate();
    return {std::move(con), "K4-e"};
}

}  // namespace tmdd
