#include "qtoric/polytope.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>

#include "qtoric/errors.hpp"

namespace qtoric {

namespace {

using FacetKey = std::vector<int>;

std::string format_set(const std::vector<int>& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(s[i]);
    }
    return out + "}";
}

// Sign of the permutation that sorts `seq` (entries distinct).
int sort_sign(std::vector<int> seq) {
    int sign = 1;
    for (std::size_t i = 0; i < seq.size(); ++i) {
        for (std::size_t j = i + 1; j < seq.size(); ++j) {
            if (seq[i] > seq[j]) sign = -sign;
        }
    }
    return sign;
}

FacetKey without_position(const std::vector<int>& v, std::size_t k) {
    FacetKey key;
    key.reserve(v.size() - 1);
    for (std::size_t i = 0; i < v.size(); ++i)
        if (i != k) key.push_back(v[i]);
    return key;
}

struct Analysis {
    ValidationReport report;
    std::vector<Edge> edges;
    std::vector<std::vector<int>> neighbors;
    std::vector<TwoFace> two_faces;
    std::vector<int> orientation;
};

void add(ValidationReport& r, std::string check, bool passed, std::string detail = {}) {
    r.items.push_back({std::move(check), passed, std::move(detail)});
}

Analysis analyze(const PolytopeData& data) {
    if (data.dim == 0) throw ValidationError("polytope: dim must be >= 1");
    if (data.facet_count == 0) throw ValidationError("polytope: facet_count must be >= 1");
    if (!data.facet_names.empty() && data.facet_names.size() != data.facet_count) {
        throw ValidationError("polytope: " + std::to_string(data.facet_names.size()) +
                              " facet names for " + std::to_string(data.facet_count) + " facets");
    }
    const int m = static_cast<int>(data.facet_count);
    const std::size_t n = data.dim;
    std::vector<std::vector<int>> sorted;
    sorted.reserve(data.vertices.size());
    for (std::size_t v = 0; v < data.vertices.size(); ++v) {
        const auto& facets = data.vertices[v];
        for (std::size_t j = 0; j < facets.size(); ++j) {
            if (facets[j] < 0 || facets[j] >= m) {
                throw ValidationError("polytope: vertex " + std::to_string(v) + " entry " + std::to_string(j) +
                                      ": facet index " + std::to_string(facets[j]) + " out of range [0," +
                                      std::to_string(m) + ")");
            }
        }
        auto s = facets;
        std::sort(s.begin(), s.end());
        sorted.push_back(std::move(s));
    }
    {
        std::map<std::vector<int>, std::size_t> seen;
        for (std::size_t v = 0; v < sorted.size(); ++v) {
            auto [it, inserted] = seen.emplace(sorted[v], v);
            if (!inserted) {
                throw ValidationError("polytope: vertex " + std::to_string(v) + " duplicates vertex " +
                                      std::to_string(it->second) + " " + format_set(sorted[v]));
            }
        }
    }

    Analysis out;
    auto& report = out.report;
    const std::size_t vcount = sorted.size();

    if (vcount == 0) {
        add(report, "simplicity", false, "no vertices");
        return out;
    }

    std::string simplicity_failure;
    for (std::size_t v = 0; v < vcount && simplicity_failure.empty(); ++v) {
        const auto& s = sorted[v];
        const bool distinct = std::adjacent_find(s.begin(), s.end()) == s.end();
        if (s.size() != n || !distinct) {
            simplicity_failure = "vertex " + std::to_string(v) + " " + format_set(s) + " lists " +
                                 std::to_string(s.size()) + " facets" + (distinct ? "" : " with repeats") +
                                 ", expected " + std::to_string(n) + " distinct";
        }
    }
    add(report, "simplicity", simplicity_failure.empty(), simplicity_failure);
    if (!simplicity_failure.empty()) {
        for (const char* c : {"edge_regularity", "connected", "facet_coverage", "two_faces", "orientation"})
            add(report, c, false, "not checked: simplicity violated");
        return out;
    }

    // Edges: every (n-1)-subset of a vertex's facets is shared with exactly one other vertex.
    std::map<FacetKey, std::vector<std::pair<int, int>>> ridge;  // key -> (vertex, dropped position)
    for (std::size_t v = 0; v < vcount; ++v) {
        for (std::size_t k = 0; k < n; ++k) {
            ridge[without_position(sorted[v], k)].emplace_back(static_cast<int>(v), static_cast<int>(k));
        }
    }
    std::string edge_failure;
    out.neighbors.assign(vcount, {});
    for (const auto& [key, members] : ridge) {
        if (members.size() != 2) {
            if (edge_failure.empty()) {
                edge_failure = "facets " + format_set(key) + " are shared by " + std::to_string(members.size()) +
                               " vertices, expected 2";
            }
            continue;
        }
        const auto [a, ka] = members[0];
        const auto [b, kb] = members[1];
        out.edges.push_back({a, b, sorted[a][ka], sorted[b][kb]});
        out.neighbors[a].push_back(b);
        out.neighbors[b].push_back(a);
    }
    for (auto& nb : out.neighbors) std::sort(nb.begin(), nb.end());
    add(report, "edge_regularity", edge_failure.empty(), edge_failure);

    std::vector<int> component(vcount, -1);
    {
        std::queue<int> q;
        q.push(0);
        component[0] = 0;
        while (!q.empty()) {
            const int v = q.front();
            q.pop();
            for (int w : out.neighbors[v]) {
                if (component[w] < 0) {
                    component[w] = 0;
                    q.push(w);
                }
            }
        }
        const auto unreached = std::find(component.begin(), component.end(), -1);
        add(report, "connected", unreached == component.end(),
            unreached == component.end()
                ? ""
                : "vertex " + std::to_string(unreached - component.begin()) + " not reachable from vertex 0");
    }

    {
        std::vector<bool> used(m, false);
        for (const auto& s : sorted)
            for (int f : s) used[f] = true;
        const auto missing = std::find(used.begin(), used.end(), false);
        add(report, "facet_coverage", missing == used.end(),
            missing == used.end() ? "" : "facet " + std::to_string(missing - used.begin()) + " meets no vertex");
    }

    // Two-faces: vertices sharing an (n-2)-subset must span a single cycle of edges.
    std::string two_face_failure;
    if (n >= 2 && edge_failure.empty()) {
        std::map<FacetKey, std::vector<int>> groups;
        for (std::size_t v = 0; v < vcount; ++v) {
            for (std::size_t i = 0; i < n; ++i) {
                for (std::size_t j = i + 1; j < n; ++j) {
                    FacetKey key;
                    for (std::size_t k = 0; k < n; ++k)
                        if (k != i && k != j) key.push_back(sorted[v][k]);
                    groups[key].push_back(static_cast<int>(v));
                }
            }
        }
        for (const auto& [key, members] : groups) {
            std::set<int> in_group(members.begin(), members.end());
            std::map<int, std::vector<int>> local;
            for (int v : members) {
                for (int w : out.neighbors[v]) {
                    if (!in_group.count(w)) continue;
                    // the edge lies in this 2-face iff its ridge contains the key
                    std::vector<int> common;
                    std::set_intersection(sorted[v].begin(), sorted[v].end(), sorted[w].begin(), sorted[w].end(),
                                          std::back_inserter(common));
                    if (std::includes(common.begin(), common.end(), key.begin(), key.end())) local[v].push_back(w);
                }
            }
            bool regular = members.size() >= 3;
            for (int v : members) regular = regular && local[v].size() == 2;
            std::vector<int> cycle;
            if (regular) {
                int prev = -1;
                int cur = members.front();
                do {
                    cycle.push_back(cur);
                    const auto& nb = local[cur];
                    const int next = nb[0] != prev ? nb[0] : nb[1];
                    prev = cur;
                    cur = next;
                } while (cur != members.front() && cycle.size() <= members.size());
            }
            if (!regular || cycle.size() != members.size()) {
                if (two_face_failure.empty()) {
                    two_face_failure = "vertices on facets " + format_set(key) + " do not form a single cycle";
                }
                continue;
            }
            out.two_faces.push_back({key, std::move(cycle)});
        }
    }
    add(report, "two_faces", two_face_failure.empty() && edge_failure.empty(),
        !edge_failure.empty() ? "not checked: edge regularity violated" : two_face_failure);

    // Orientation: crossing an edge in place of one facet reverses the order's sign.
    std::string orientation_failure;
    if (edge_failure.empty() && std::find(component.begin(), component.end(), -1) == component.end()) {
        std::vector<int> sign(vcount, 0);
        std::vector<std::vector<std::pair<int, int>>> signed_adj(vcount);
        for (const auto& e : out.edges) {
            std::vector<int> replaced = sorted[e.a];
            *std::find(replaced.begin(), replaced.end(), e.dropped_facet) = e.added_facet;
            // sign(b sorted) = -sign(a sorted) * sort_sign(replaced)
            const int rel = -sort_sign(replaced);
            signed_adj[e.a].emplace_back(e.b, rel);
            signed_adj[e.b].emplace_back(e.a, rel);
        }
        sign[0] = 1;
        std::queue<int> q;
        q.push(0);
        while (!q.empty() && orientation_failure.empty()) {
            const int v = q.front();
            q.pop();
            for (auto [w, rel] : signed_adj[v]) {
                const int expected = sign[v] * rel;
                if (sign[w] == 0) {
                    sign[w] = expected;
                    q.push(w);
                } else if (sign[w] != expected) {
                    orientation_failure = "inconsistent orientation along edge " + std::to_string(v) + "-" +
                                          std::to_string(w);
                    break;
                }
            }
        }
        out.orientation = std::move(sign);
    } else {
        orientation_failure = "not checked: edge graph invalid";
    }
    add(report, "orientation", orientation_failure.empty(), orientation_failure);
    return out;
}

}  // namespace

bool ValidationReport::ok() const {
    return !items.empty() && std::all_of(items.begin(), items.end(), [](const auto& i) { return i.passed; });
}

std::string ValidationReport::summary() const {
    for (const auto& i : items) {
        if (!i.passed) return i.check + ": " + i.detail;
    }
    return items.empty() ? "empty report" : "ok";
}

ValidationReport validate_polytope(const PolytopeData& data) { return analyze(data).report; }

SimplePolytope::SimplePolytope(PolytopeData data) : data_(std::move(data)) {
    auto analysis = analyze(data_);
    if (!analysis.report.ok()) {
        throw ValidationError("polytope '" + data_.name + "' invalid: " + analysis.report.summary());
    }
    for (auto& v : data_.vertices) std::sort(v.begin(), v.end());
    if (data_.facet_names.empty()) {
        for (std::size_t i = 0; i < data_.facet_count; ++i) data_.facet_names.push_back("F" + std::to_string(i));
    }
    derived_ = std::make_shared<const Derived>(Derived{std::move(analysis.edges), std::move(analysis.neighbors),
                                                       std::move(analysis.two_faces),
                                                       std::move(analysis.orientation)});
}

bool SimplePolytope::is_face(const std::vector<int>& facets) const {
    auto sorted = facets;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    return std::any_of(data_.vertices.begin(), data_.vertices.end(), [&](const auto& v) {
        return std::includes(v.begin(), v.end(), sorted.begin(), sorted.end());
    });
}

std::optional<std::size_t> SimplePolytope::find_vertex(std::vector<int> facets) const {
    std::sort(facets.begin(), facets.end());
    auto it = std::find(data_.vertices.begin(), data_.vertices.end(), facets);
    if (it == data_.vertices.end()) return std::nullopt;
    return static_cast<std::size_t>(it - data_.vertices.begin());
}

bool FacetGraph::adjacent(int i, int j) const {
    const auto& nb = neighbors.at(i);
    return std::binary_search(nb.begin(), nb.end(), j);
}

std::size_t FacetGraph::edge_count() const {
    std::size_t total = 0;
    for (const auto& nb : neighbors) total += nb.size();
    return total / 2;
}

FacetGraph adjacency(const SimplePolytope& p) {
    FacetGraph g;
    g.node_count = p.facet_count();
    std::vector<std::set<int>> nb(g.node_count);
    for (const auto& v : p.vertices()) {
        for (int a : v)
            for (int b : v)
                if (a != b) nb[a].insert(b);
    }
    for (auto& s : nb) g.neighbors.emplace_back(s.begin(), s.end());
    return g;
}

bool is_even(const SimplePolytope& p) {
    return std::all_of(p.two_faces().begin(), p.two_faces().end(),
                       [](const TwoFace& f) { return f.cycle.size() % 2 == 0; });
}

bool is_vertex_graph_bipartite(const SimplePolytope& p) {
    const auto& nb = p.vertex_neighbors();
    std::vector<int> side(nb.size(), -1);
    for (std::size_t start = 0; start < nb.size(); ++start) {
        if (side[start] >= 0) continue;
        side[start] = 0;
        std::queue<int> q;
        q.push(static_cast<int>(start));
        while (!q.empty()) {
            const int v = q.front();
            q.pop();
            for (int w : nb[v]) {
                if (side[w] < 0) {
                    side[w] = 1 - side[v];
                    q.push(w);
                } else if (side[w] == side[v]) {
                    return false;
                }
            }
        }
    }
    return true;
}

namespace {

class ColoringSearch {
public:
    ColoringSearch(const FacetGraph& g, std::vector<int> order, std::uint64_t budget)
        : g_(g), order_(std::move(order)), budget_(budget), colors_(g.node_count, -1) {}

    bool try_colors(int d) {
        std::fill(colors_.begin(), colors_.end(), -1);
        return assign(0, d, 0);
    }

    const std::vector<int>& colors() const { return colors_; }
    std::uint64_t nodes() const { return nodes_; }

private:
    bool assign(std::size_t pos, int d, int used) {
        if (pos == order_.size()) return true;
        if (++nodes_ > budget_) {
            throw ColoringInconclusive("facet coloring: node budget of " + std::to_string(budget_) + " exhausted");
        }
        const int f = order_[pos];
        // colors beyond used are interchangeable; only the first fresh one is tried
        const int limit = std::min(d, used + 1);
        for (int c = 0; c < limit; ++c) {
            bool free = true;
            for (int nb : g_.neighbors[f]) {
                if (colors_[nb] == c) {
                    free = false;
                    break;
                }
            }
            if (!free) continue;
            colors_[f] = c;
            if (assign(pos + 1, d, std::max(used, c + 1))) return true;
            colors_[f] = -1;
        }
        return false;
    }

    const FacetGraph& g_;
    std::vector<int> order_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    std::vector<int> colors_;
};

}  // namespace

std::optional<FacetColoring> facet_chromatic(const SimplePolytope& p, int max_colors, const ColoringOptions& options) {
    if (max_colors < static_cast<int>(p.dim())) {
        throw std::invalid_argument("facet_chromatic: max_colors must be at least the dimension");
    }
    const FacetGraph g = adjacency(p);
    std::vector<int> order(g.node_count);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return g.neighbors[a].size() > g.neighbors[b].size(); });

    // greedy upper bound in the same order
    FacetColoring greedy;
    greedy.colors.assign(g.node_count, -1);
    for (int f : order) {
        int c = 0;
        while (std::any_of(g.neighbors[f].begin(), g.neighbors[f].end(),
                           [&](int nb) { return greedy.colors[nb] == c; }))
            ++c;
        greedy.colors[f] = c;
        greedy.color_count = std::max(greedy.color_count, c + 1);
    }

    const int lower = static_cast<int>(p.dim());
    ColoringSearch search(g, order, options.node_budget);
    for (int d = lower; d < greedy.color_count && d <= max_colors; ++d) {
        if (search.try_colors(d)) return FacetColoring{search.colors(), d};
    }
    if (greedy.color_count <= max_colors) return greedy;
    return std::nullopt;
}

bool is_proper_coloring(const FacetGraph& g, const FacetColoring& coloring) {
    if (coloring.colors.size() != g.node_count) return false;
    for (std::size_t i = 0; i < g.node_count; ++i) {
        const int c = coloring.colors[i];
        if (c < 0 || c >= coloring.color_count) return false;
        for (int j : g.neighbors[i])
            if (coloring.colors[j] == c) return false;
    }
    return true;
}

SimplePolytope product(const SimplePolytope& a, const SimplePolytope& b) {
    PolytopeData d;
    d.dim = a.dim() + b.dim();
    d.facet_count = a.facet_count() + b.facet_count();
    d.name = a.name() + "*" + b.name();
    d.facet_names = a.facet_names();
    for (const auto& f : b.facet_names()) d.facet_names.push_back(f + "'");
    const int shift = static_cast<int>(a.facet_count());
    for (const auto& va : a.vertices()) {
        for (const auto& vb : b.vertices()) {
            auto v = va;
            for (int f : vb) v.push_back(f + shift);
            d.vertices.push_back(std::move(v));
        }
    }
    return SimplePolytope(std::move(d));
}

std::vector<std::int64_t> h_vector(const SimplePolytope& p) {
    const std::size_t n = p.dim();
    // f[i] = number of faces of the dual simplicial complex with i vertices
    std::vector<std::set<std::vector<int>>> faces(n + 1);
    for (const auto& v : p.vertices()) {
        for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
            std::vector<int> s;
            for (std::size_t k = 0; k < n; ++k)
                if (mask & (1u << k)) s.push_back(v[k]);
            faces[s.size()].insert(std::move(s));
        }
    }
    // sum_i h_i t^{n-i} = sum_i f_{i} (t-1)^{n-i}
    std::vector<std::int64_t> h(n + 1, 0);
    for (std::size_t i = 0; i <= n; ++i) {
        const auto fi = static_cast<std::int64_t>(faces[i].size());
        // expand (t-1)^{n-i}: coefficient of t^j is C(n-i, j) (-1)^{n-i-j}
        const std::size_t e = n - i;
        std::int64_t binom = 1;
        for (std::size_t j = 0; j <= e; ++j) {
            const std::int64_t term = ((e - j) % 2 ? -1 : 1) * binom * fi;
            h[n - j] += term;  // t^j pairs with h_{n-j}
            binom = binom * static_cast<std::int64_t>(e - j) / static_cast<std::int64_t>(j + 1);
        }
    }
    return h;
}

SimplePolytope cube(std::size_t n) {
    PolytopeData d;
    d.dim = n;
    d.facet_count = 2 * n;
    d.name = "cube:" + std::to_string(n);
    for (std::size_t j = 0; j < n; ++j) d.facet_names.push_back("x" + std::to_string(j) + "=0");
    for (std::size_t j = 0; j < n; ++j) d.facet_names.push_back("x" + std::to_string(j) + "=1");
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        std::vector<int> v;
        for (std::size_t j = 0; j < n; ++j) v.push_back(static_cast<int>(j + ((mask >> j) & 1u ? n : 0)));
        d.vertices.push_back(std::move(v));
    }
    return SimplePolytope(std::move(d));
}

SimplePolytope simplex(std::size_t n) {
    PolytopeData d;
    d.dim = n;
    d.facet_count = n + 1;
    d.name = "simplex:" + std::to_string(n);
    for (std::size_t missing = n + 1; missing-- > 0;) {
        std::vector<int> v;
        for (std::size_t f = 0; f <= n; ++f)
            if (f != missing) v.push_back(static_cast<int>(f));
        d.vertices.push_back(std::move(v));
    }
    return SimplePolytope(std::move(d));
}

SimplePolytope polygon(std::size_t k) {
    if (k < 3) throw ValidationError("polygon: need at least 3 sides");
    PolytopeData d;
    d.dim = 2;
    d.facet_count = k;
    d.name = "polygon:" + std::to_string(k);
    for (std::size_t i = 0; i < k; ++i)
        d.vertices.push_back({static_cast<int>(i), static_cast<int>((i + 1) % k)});
    return SimplePolytope(std::move(d));
}

}  // namespace qtoric
