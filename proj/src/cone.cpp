#include "delpezzo/cone.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>
#include <utility>

#include "delpezzo/errors.hpp"
#include "delpezzo/linalg.hpp"

namespace delpezzo {

namespace {

// Working ray of the double description loop. `tight` records, as a bitset
// over the already-inserted constraints, which of them vanish on the ray.
struct WorkRay {
    IntVec v;
    std::vector<std::uint64_t> tight;
};

void set_bit(std::vector<std::uint64_t>& bits, std::size_t i) {
    bits[i >> 6] |= std::uint64_t(1) << (i & 63);
}

std::vector<std::uint64_t> and_bits(const std::vector<std::uint64_t>& a,
                                    const std::vector<std::uint64_t>& b) {
    std::vector<std::uint64_t> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] = a[i] & b[i];
    return out;
}

bool subset_of(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] & ~b[i])
            return false;
    return true;
}

std::size_t popcount(const std::vector<std::uint64_t>& bits) {
    std::size_t n = 0;
    for (std::uint64_t w : bits)
        n += static_cast<std::size_t>(std::popcount(w));
    return n;
}

// Combinatorial adjacency test: p and q span a 2-face iff no third ray is
// tight on every constraint tight at both. Valid because the working list is
// kept minimal (every member extremal) throughout the insertion loop.
bool adjacent(const std::vector<WorkRay>& rays, std::size_t pi, std::size_t mi,
              const std::vector<std::uint64_t>& common, std::size_t min_tight) {
    if (popcount(common) < min_tight)
        return false;
    for (std::size_t j = 0; j < rays.size(); ++j) {
        if (j == pi || j == mi)
            continue;
        if (subset_of(common, rays[j].tight))
            return false;
    }
    return true;
}

std::vector<IntVec> unit_basis(std::size_t dim) {
    std::vector<IntVec> basis;
    basis.reserve(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        IntVec e(dim, Int(0));
        e[i] = 1;
        basis.push_back(std::move(e));
    }
    return basis;
}

std::vector<IntVec> with_plus_minus(const std::vector<IntVec>& lines) {
    std::vector<IntVec> out;
    out.reserve(2 * lines.size());
    for (const IntVec& l : lines) {
        out.push_back(l);
        out.push_back(negated(l));
    }
    return out;
}

Cone assemble(GeneratorDescription primal, GeneratorDescription dual_side, std::size_t dim) {
    Cone c;
    c.ambient = dim;
    c.rays = std::move(primal.rays);
    c.lineality = std::move(primal.lineality);
    c.facets = std::move(dual_side.rays);
    c.equations = std::move(dual_side.lineality);
    c.dim = dim - c.equations.size();
    c.pointed = c.lineality.empty();
    c.certify();
    return c;
}

void check_lengths(const std::vector<IntVec>& vecs, std::size_t dim, const char* what) {
    for (const IntVec& v : vecs)
        if (v.size() != dim)
            throw DimensionError(std::string(what) + ": vector length differs from dim");
}

} // namespace

const char* to_string(Membership m) {
    switch (m) {
    case Membership::Interior:
        return "INTERIOR";
    case Membership::Boundary:
        return "BOUNDARY";
    case Membership::Outside:
        return "OUTSIDE";
    }
    return "?";
}

GeneratorDescription extremal_rays(std::vector<IntVec> normals, std::size_t dim) {
    if (dim == 0)
        throw DimensionError("extremal_rays: ambient dimension must be positive");
    std::vector<IntVec> ns;
    ns.reserve(normals.size());
    for (IntVec& n : normals) {
        if (n.size() != dim)
            throw DimensionError("extremal_rays: normal length differs from dim");
        if (!is_zero(n))
            ns.push_back(primitive(std::move(n)));
    }
    sort_dedupe_rows(ns);

    const std::size_t nblocks = (ns.size() + 63) / 64;
    std::vector<IntVec> lineality = unit_basis(dim);
    std::vector<WorkRay> rays;

    for (std::size_t k = 0; k < ns.size(); ++k) {
        const IntVec& n = ns[k];

        std::size_t pivot = lineality.size();
        Int pivot_val;
        for (std::size_t j = 0; j < lineality.size(); ++j) {
            Int val = dot(n, lineality[j]);
            if (val != 0) {
                pivot = j;
                pivot_val = val;
                break;
            }
        }

        if (pivot != lineality.size()) {
            // The constraint is nontrivial on the lineality space: split one
            // basis vector off as a new extremal ray and project everything
            // else into the hyperplane. No adjacency filtering is needed.
            IntVec axis = lineality[pivot];
            if (pivot_val < 0) {
                axis = negated(std::move(axis));
                pivot_val = -pivot_val;
            }
            std::vector<IntVec> next_lin;
            next_lin.reserve(lineality.size() - 1);
            for (std::size_t j = 0; j < lineality.size(); ++j) {
                if (j == pivot)
                    continue;
                Int vj = dot(n, lineality[j]);
                next_lin.push_back(primitive(combine(lineality[j], pivot_val, axis, -vj)));
            }
            for (WorkRay& r : rays) {
                Int vr = dot(n, r.v);
                if (vr != 0)
                    r.v = primitive(combine(r.v, pivot_val, axis, -vr));
                set_bit(r.tight, k); // projected value is zero
            }
            WorkRay born;
            born.v = primitive(std::move(axis));
            born.tight.assign(nblocks, 0);
            for (std::size_t i = 0; i < k; ++i)
                set_bit(born.tight, i); // previous constraints vanish on the old lineality
            rays.push_back(std::move(born));
            lineality = std::move(next_lin);
            continue;
        }

        // The constraint vanishes on the lineality space: standard double
        // description step on the ray list.
        std::vector<Int> vals(rays.size());
        std::vector<std::size_t> pos, neg;
        for (std::size_t i = 0; i < rays.size(); ++i) {
            vals[i] = dot(n, rays[i].v);
            if (vals[i] > 0)
                pos.push_back(i);
            else if (vals[i] < 0)
                neg.push_back(i);
        }
        if (neg.empty()) {
            for (std::size_t i = 0; i < rays.size(); ++i)
                if (vals[i] == 0)
                    set_bit(rays[i].tight, k);
            continue;
        }

        // Adjacency of a pair needs at least dim - |lineality| - 2 common
        // tight constraints; popcount below that is a cheap rejection.
        const std::size_t span_dim = dim - lineality.size();
        const std::size_t min_tight = span_dim >= 2 ? span_dim - 2 : 0;

        std::vector<WorkRay> next;
        for (std::size_t i = 0; i < rays.size(); ++i) {
            if (vals[i] < 0)
                continue;
            WorkRay keep = rays[i]; // plain copy; adjacency below still reads the originals
            if (vals[i] == 0)
                set_bit(keep.tight, k);
            next.push_back(std::move(keep));
        }
        for (std::size_t p : pos) {
            for (std::size_t m : neg) {
                auto common = and_bits(rays[p].tight, rays[m].tight);
                if (!adjacent(rays, p, m, common, min_tight))
                    continue;
                WorkRay w;
                w.v = primitive(combine(rays[m].v, vals[p], rays[p].v, -vals[m]));
                w.tight = std::move(common);
                set_bit(w.tight, k);
                next.push_back(std::move(w));
            }
        }
        rays = std::move(next);
    }

    GeneratorDescription out;
    out.rays.reserve(rays.size());
    for (WorkRay& r : rays)
        out.rays.push_back(std::move(r.v));
    sort_dedupe_rows(out.rays);
    out.lineality = std::move(lineality);
    sort_rows(out.lineality);
    return out;
}

Cone cone_from_generators(const std::vector<IntVec>& gens, std::size_t dim) {
    check_lengths(gens, dim, "cone_from_generators");
    std::vector<IntVec> nonzero;
    nonzero.reserve(gens.size());
    for (const IntVec& g : gens)
        if (!is_zero(g))
            nonzero.push_back(g);
    if (nonzero.empty())
        throw DegenerateInput("cone_from_generators: no nonzero generator");

    GeneratorDescription dual_side = extremal_rays(nonzero, dim);
    std::vector<IntVec> constraints = dual_side.rays;
    for (IntVec& pm : with_plus_minus(dual_side.lineality))
        constraints.push_back(std::move(pm));
    GeneratorDescription primal = extremal_rays(constraints, dim);
    return assemble(std::move(primal), std::move(dual_side), dim);
}

Cone cone_from_inequalities(const std::vector<IntVec>& normals, std::size_t dim) {
    check_lengths(normals, dim, "cone_from_inequalities");
    GeneratorDescription primal = extremal_rays(normals, dim);
    std::vector<IntVec> constraints = primal.rays;
    for (IntVec& pm : with_plus_minus(primal.lineality))
        constraints.push_back(std::move(pm));
    GeneratorDescription dual_side = extremal_rays(constraints, dim);
    return assemble(std::move(primal), std::move(dual_side), dim);
}

Cone dual(const Cone& c) {
    Cone d;
    d.ambient = c.ambient;
    d.rays = c.facets;
    d.facets = c.rays;
    d.lineality = c.equations;
    d.equations = c.lineality;
    d.dim = c.ambient - d.equations.size();
    d.pointed = d.lineality.empty();
    d.certify();
    return d;
}

Cone intersect(const std::vector<Cone>& cones) {
    if (cones.empty())
        throw DegenerateInput("intersect: empty cone list");
    const std::size_t dim = cones.front().ambient;
    std::vector<IntVec> normals;
    for (const Cone& c : cones) {
        if (c.ambient != dim)
            throw DimensionError("intersect: ambient dimensions differ");
        normals.insert(normals.end(), c.facets.begin(), c.facets.end());
        for (IntVec& pm : with_plus_minus(c.equations))
            normals.push_back(std::move(pm));
    }
    sort_dedupe_rows(normals);
    return cone_from_inequalities(normals, dim);
}

Membership membership(const IntVec& v, const Cone& c) {
    if (v.size() != c.ambient)
        throw DimensionError("membership: vector length differs from ambient dimension");
    for (const IntVec& e : c.equations)
        if (dot(e, v) != 0)
            return Membership::Outside;
    bool boundary = false;
    for (const IntVec& f : c.facets) {
        Int t = dot(f, v);
        if (t < 0)
            return Membership::Outside;
        if (t == 0)
            boundary = true;
    }
    return boundary ? Membership::Boundary : Membership::Interior;
}

bool contains(const Cone& outer, const std::vector<IntVec>& inner_gens) {
    for (const IntVec& g : inner_gens)
        if (membership(g, outer) == Membership::Outside)
            return false;
    return true;
}

std::vector<IntVec> brute_force_rays(const std::vector<IntVec>& normals, std::size_t dim) {
    if (dim == 0 || dim > 7 || normals.size() > 40)
        throw OracleScope("brute_force_rays: guard is dim in 1..7 and at most 40 normals");
    check_lengths(normals, dim, "brute_force_rays");
    std::vector<IntVec> ns;
    for (const IntVec& n : normals)
        if (!is_zero(n))
            ns.push_back(primitive(n));
    sort_dedupe_rows(ns);

    auto satisfies_all = [&](const IntVec& v) {
        for (const IntVec& n : ns)
            if (dot(n, v) < 0)
                return false;
        return true;
    };

    std::vector<IntVec> found;
    const std::size_t want = dim - 1;
    if (ns.size() < want)
        return found;

    std::vector<std::size_t> idx(want);
    for (std::size_t i = 0; i < want; ++i)
        idx[i] = i;
    while (true) {
        std::vector<IntVec> sub;
        sub.reserve(want);
        for (std::size_t i : idx)
            sub.push_back(ns[i]);
        std::vector<IntVec> ker = kernel_basis(sub, dim);
        if (ker.size() == 1) {
            IntVec cand = std::move(ker.front());
            if (satisfies_all(cand))
                found.push_back(std::move(cand));
            else {
                cand = negated(std::move(cand));
                if (satisfies_all(cand))
                    found.push_back(std::move(cand));
            }
        }
        // next combination
        std::size_t i = want;
        while (i > 0 && idx[i - 1] == ns.size() - want + (i - 1))
            --i;
        if (i == 0)
            break;
        ++idx[i - 1];
        for (std::size_t j = i; j < want; ++j)
            idx[j] = idx[j - 1] + 1;
    }
    sort_dedupe_rows(found);
    return found;
}

void Cone::certify() const {
    auto fail = [](const std::string& msg) { throw InvariantViolation("cone certificate: " + msg); };

    auto check_rows = [&](const std::vector<IntVec>& rows, const char* what, bool strictly_sorted) {
        for (const IntVec& v : rows) {
            if (v.size() != ambient)
                fail(std::string(what) + " has wrong length");
            if (is_zero(v))
                fail(std::string(what) + " is zero");
            if (v != primitive(v))
                fail(std::string(what) + " is not primitive");
        }
        for (std::size_t i = 1; i < rows.size(); ++i) {
            bool ok = strictly_sorted ? lex_less(rows[i - 1], rows[i]) : !lex_less(rows[i], rows[i - 1]);
            if (!ok)
                fail(std::string(what) + " list is not sorted");
        }
    };
    check_rows(rays, "ray", true);
    check_rows(facets, "facet", true);
    check_rows(lineality, "lineality vector", true);
    check_rows(equations, "equation", true);

    if (dim != ambient - equations.size())
        fail("span dimension inconsistent with equation count");
    if (pointed != lineality.empty())
        fail("pointed flag inconsistent with lineality");
    if (rank(equations) != equations.size())
        fail("equations are not independent");
    if (rank(lineality) != lineality.size())
        fail("lineality basis is not independent");

    for (const IntVec& f : facets) {
        for (const IntVec& r : rays)
            if (dot(f, r) < 0)
                fail("negative facet value on a ray");
        for (const IntVec& l : lineality)
            if (dot(f, l) != 0)
                fail("facet does not vanish on the lineality space");
    }
    for (const IntVec& e : equations) {
        for (const IntVec& r : rays)
            if (dot(e, r) != 0)
                fail("equation does not vanish on a ray");
        for (const IntVec& l : lineality)
            if (dot(e, l) != 0)
                fail("equation does not vanish on the lineality space");
    }

    // span check: rays plus lineality must span a dim-dimensional space
    {
        std::vector<IntVec> span = rays;
        span.insert(span.end(), lineality.begin(), lineality.end());
        if (rank(span) != dim)
            fail("rays and lineality do not span the stated dimension");
    }

    // every ray extremal: tight constraints have corank 1 modulo lineality
    const std::size_t need_ray = ambient - lineality.size() - 1;
    for (const IntVec& r : rays) {
        std::vector<IntVec> tightset = equations;
        for (const IntVec& f : facets)
            if (dot(f, r) == 0)
                tightset.push_back(f);
        if (rank(tightset) != need_ray)
            fail("ray is not extremal");
    }

    // every facet irredundant: the rays on it span a (dim-1)-dimensional face
    if (dim >= 1) {
        const std::size_t need_facet = dim - 1;
        for (const IntVec& f : facets) {
            std::vector<IntVec> onface = lineality;
            for (const IntVec& r : rays)
                if (dot(f, r) == 0)
                    onface.push_back(r);
            if (rank(onface) != need_facet)
                fail("facet is redundant");
        }
    }
}

} // namespace delpezzo
