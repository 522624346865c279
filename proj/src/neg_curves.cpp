#include "delpezzo/neg_curves.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <string>

#include "delpezzo/errors.hpp"

namespace delpezzo {

namespace {

// c.c = -1 and c.K = -1 amount to
//     sum_i c_i   = 1 - 3 c0        (i = 1..r)
//     sum_i c_i^2 = c0^2 + 1.
// Cauchy-Schwarz gives (1 - 3c0)^2 <= r (c0^2 + 1); with r <= 6 (degree >= 3)
// that forces 0 <= c0 <= 2, and each |c_i| <= sqrt(c0^2 + 1) <= 2.
void enumerate_tail(const Int& c0, int r, int pos, Int sum_left, Int sumsq_left, const Int& bound,
                    DivisorClass& current, std::vector<DivisorClass>& out) {
    if (pos > r) {
        if (sum_left == 0 && sumsq_left == 0)
            out.push_back(current);
        return;
    }
    const int slots = r - pos + 1;
    // remaining sum must be reachable within |c_i| <= bound
    if (sum_left > bound * slots || sum_left < -bound * slots)
        return;
    if (sumsq_left < 0 || sumsq_left > bound * bound * slots)
        return;
    for (Int v = -bound; v <= bound; ++v) {
        current[static_cast<std::size_t>(pos)] = v;
        enumerate_tail(c0, r, pos + 1, sum_left - v, sumsq_left - v * v, bound, current, out);
    }
    current[static_cast<std::size_t>(pos)] = 0;
}

std::vector<std::vector<std::size_t>> adjacency_lists(const IncidenceGraph& g) {
    std::vector<std::vector<std::size_t>> adj(g.vertex_count);
    for (auto [a, b] : g.edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    return adj;
}

} // namespace

CurveSet minus_one_classes(const Surface& s) {
    if (s.degree < 3)
        throw UnsupportedDegree("minus_one_classes: degree must be at least 3, got " +
                                std::to_string(s.degree));
    std::vector<DivisorClass> found;
    DivisorClass current(static_cast<std::size_t>(s.rank), Int(0));
    for (Int c0 = 0; c0 <= 2; ++c0) {
        Int bound = c0 * c0 + 1 >= 4 ? 2 : 1; // floor(sqrt(c0^2 + 1))
        current[0] = c0;
        enumerate_tail(c0, s.r, 1, 1 - 3 * c0, c0 * c0 + 1, bound, current, found);
    }
    sort_dedupe_rows(found);
    return CurveSet{s, std::move(found)};
}

IncidenceGraph incidence_graph(const CurveSet& cs) {
    IncidenceGraph g;
    g.vertex_count = cs.classes.size();
    for (std::size_t i = 0; i < cs.classes.size(); ++i)
        for (std::size_t j = i + 1; j < cs.classes.size(); ++j) {
            Int p = pairing(cs.classes[i], cs.classes[j], cs.surface);
            if (p == 1)
                g.edges.emplace_back(i, j);
            else if (p != 0)
                throw InvariantViolation(
                    "incidence_graph: pairwise pairing outside {0,1}; degree outside validated scope");
        }
    return g;
}

std::vector<Blowdown> blowdowns(const CurveSet& cs) {
    const Surface& s = cs.surface;
    if (s.degree != 4 && s.degree != 5)
        throw UnsupportedDegree("blowdowns: degree must be 4 or 5");
    const std::size_t r = static_cast<std::size_t>(s.r);
    const std::size_t n = cs.classes.size();

    auto disjoint = [&](const std::vector<std::size_t>& idx) {
        for (std::size_t a = 0; a < idx.size(); ++a)
            for (std::size_t b = a + 1; b < idx.size(); ++b)
                if (pairing(cs.classes[idx[a]], cs.classes[idx[b]], s) != 0)
                    return false;
        return true;
    };

    std::vector<Blowdown> out;
    std::vector<std::size_t> idx(r);
    for (std::size_t i = 0; i < r; ++i)
        idx[i] = i;
    while (true) {
        if (disjoint(idx)) {
            std::vector<DivisorClass> contracted;
            contracted.reserve(r);
            for (std::size_t i : idx)
                contracted.push_back(cs.classes[i]);
            DivisorClass line = blowdown_line_class(contracted, s);
            out.push_back(Blowdown{std::move(contracted), std::move(line)});
        }
        std::size_t i = r;
        while (i > 0 && idx[i - 1] == n - r + (i - 1))
            --i;
        if (i == 0)
            break;
        ++idx[i - 1];
        for (std::size_t j = i; j < r; ++j)
            idx[j] = idx[j - 1] + 1;
    }
    // classes are sorted, so combination order is already lexicographic on
    // the sorted contracted lists
    return out;
}

DivisorClass blowdown_line_class(const std::vector<DivisorClass>& contracted, const Surface& s) {
    if (contracted.size() != static_cast<std::size_t>(s.r))
        throw InvariantViolation("blowdown_line_class: expected " + std::to_string(s.r) +
                                 " contracted classes");
    for (std::size_t a = 0; a < contracted.size(); ++a) {
        if (pairing(contracted[a], contracted[a], s) != -1)
            throw InvariantViolation("blowdown_line_class: contracted class is not a (-1)-class");
        for (std::size_t b = a + 1; b < contracted.size(); ++b)
            if (pairing(contracted[a], contracted[b], s) != 0)
                throw InvariantViolation("blowdown_line_class: contracted classes meet");
    }
    DivisorClass sum = anticanonical_class(s);
    for (const DivisorClass& f : contracted) {
        if (f.size() != sum.size())
            throw DimensionError("blowdown_line_class: class length differs from surface rank");
        for (std::size_t i = 0; i < sum.size(); ++i)
            sum[i] += f[i];
    }
    for (Int& x : sum) {
        if (x % 3 != 0)
            throw InvariantViolation("blowdown_line_class: -K + sum is not divisible by 3");
        mpz_divexact_ui(x.get_mpz_t(), x.get_mpz_t(), 3);
    }
    if (pairing(sum, sum, s) != 1)
        throw InvariantViolation("blowdown_line_class: line class self-pairing is not 1");
    return sum;
}

std::vector<DivisorClass> neighbors(const CurveSet& cs, const DivisorClass& c) {
    if (std::find(cs.classes.begin(), cs.classes.end(), c) == cs.classes.end())
        throw NotFound("neighbors: class " + format_vector(c) + " is not in the curve set");
    std::vector<DivisorClass> out;
    for (const DivisorClass& other : cs.classes)
        if (pairing(c, other, cs.surface) == 1)
            out.push_back(other);
    sort_rows(out);
    return out;
}

std::vector<std::size_t> vertex_degrees(const IncidenceGraph& g) {
    std::vector<std::size_t> deg(g.vertex_count, 0);
    for (auto [a, b] : g.edges) {
        ++deg[a];
        ++deg[b];
    }
    return deg;
}

bool is_regular(const IncidenceGraph& g, std::size_t k) {
    auto deg = vertex_degrees(g);
    return std::all_of(deg.begin(), deg.end(), [k](std::size_t d) { return d == k; });
}

bool triangle_free(const IncidenceGraph& g) {
    auto adj = adjacency_lists(g);
    std::vector<bool> mark(g.vertex_count, false);
    for (auto [a, b] : g.edges) {
        for (std::size_t x : adj[a])
            mark[x] = true;
        for (std::size_t x : adj[b])
            if (mark[x])
                return false;
        for (std::size_t x : adj[a])
            mark[x] = false;
    }
    return true;
}

std::size_t girth(const IncidenceGraph& g) {
    auto adj = adjacency_lists(g);
    std::size_t best = std::numeric_limits<std::size_t>::max();
    for (std::size_t start = 0; start < g.vertex_count; ++start) {
        std::vector<std::size_t> dist(g.vertex_count, std::numeric_limits<std::size_t>::max());
        std::vector<std::size_t> parent(g.vertex_count, std::numeric_limits<std::size_t>::max());
        std::deque<std::size_t> queue{start};
        dist[start] = 0;
        while (!queue.empty()) {
            std::size_t u = queue.front();
            queue.pop_front();
            for (std::size_t w : adj[u]) {
                if (dist[w] == std::numeric_limits<std::size_t>::max()) {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if (w != parent[u]) {
                    best = std::min(best, dist[u] + dist[w] + 1);
                }
            }
        }
    }
    return best == std::numeric_limits<std::size_t>::max() ? 0 : best;
}

} // namespace delpezzo
