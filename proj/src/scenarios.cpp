#include "delpezzo/scenarios.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "delpezzo/errors.hpp"
#include "delpezzo/plane.hpp"

namespace delpezzo {

namespace {

DivisorClass line_minus(const Surface& s, int i, int j) {
    DivisorClass c = basis_class(s, 0);
    c[static_cast<std::size_t>(i)] = -1;
    c[static_cast<std::size_t>(j)] = -1;
    return c;
}

bool contains_class(const std::vector<DivisorClass>& set, const DivisorClass& c) {
    return std::binary_search(set.begin(), set.end(), c, lex_less);
}

Json divisor_list_json(const std::vector<DivisorClass>& list) {
    Json out = Json::array();
    for (const DivisorClass& c : list)
        out.push_back(format_vector(c));
    return out;
}

// wraps an index into 1..5
int wrap5(int i) {
    return (i - 1) % 5 + 1;
}

std::vector<DivisorClass> orbit_base_curves(const Surface& s, Deg4Orbit orbit) {
    std::vector<DivisorClass> out;
    out.reserve(5);
    for (int i = 1; i <= 5; ++i) {
        switch (orbit) {
        case Deg4Orbit::Exceptional:
            out.push_back(basis_class(s, i));
            break;
        case Deg4Orbit::AdjacentLines:
            out.push_back(line_minus(s, i, wrap5(i + 1)));
            break;
        case Deg4Orbit::SkipLines:
            out.push_back(line_minus(s, i, wrap5(i + 2)));
            break;
        }
    }
    return out;
}

void require_degree(const Surface& s, int degree, const char* what) {
    if (s.degree != degree)
        throw UnsupportedDegree(std::string(what) + ": requires a degree-" + std::to_string(degree) +
                                " surface");
}

} // namespace

const char* to_string(Deg4Orbit o) {
    switch (o) {
    case Deg4Orbit::Exceptional:
        return "exceptional";
    case Deg4Orbit::AdjacentLines:
        return "adjacent-lines";
    case Deg4Orbit::SkipLines:
        return "skip-lines";
    }
    return "?";
}

Deg4Orbit parse_orbit(const std::string& name) {
    if (name == "exceptional")
        return Deg4Orbit::Exceptional;
    if (name == "adjacent-lines")
        return Deg4Orbit::AdjacentLines;
    if (name == "skip-lines")
        return Deg4Orbit::SkipLines;
    throw DegenerateInput("unknown orbit \"" + name +
                          "\" (expected exceptional, adjacent-lines or skip-lines)");
}

std::vector<DivisorClass> CylinderFamily::polarity_generators() const {
    std::vector<DivisorClass> gens = contracted;
    gens.push_back(base_curve);
    gens.push_back(line_class);
    sort_rows(gens);
    return gens;
}

Cone effective_cone(const Surface& s) {
    if (s.degree != 4 && s.degree != 5)
        throw UnsupportedDegree("effective_cone: degree must be 4 or 5");
    CurveSet cs = minus_one_classes(s);
    return cone_from_generators(cs.classes, static_cast<std::size_t>(s.rank));
}

Cone nef_cone(const Surface& s) {
    if (s.degree != 4 && s.degree != 5)
        throw UnsupportedDegree("nef_cone: degree must be 4 or 5");
    CurveSet cs = minus_one_classes(s);
    std::vector<IntVec> normals;
    normals.reserve(cs.classes.size());
    for (const DivisorClass& c : cs.classes)
        normals.push_back(gram_adjusted(c));
    return cone_from_inequalities(normals, static_cast<std::size_t>(s.rank));
}

std::vector<IntVec> reference_nef_rays(const Surface& s) {
    std::vector<IntVec> rays;
    rays.push_back(basis_class(s, 0)); // e0
    if (s.degree == 5) {
        for (int j = 1; j <= 4; ++j) { // e0 - e_j
            DivisorClass c = basis_class(s, 0);
            c[static_cast<std::size_t>(j)] = -1;
            rays.push_back(std::move(c));
        }
        for (int j = 0; j <= 4; ++j) { // 2e0 - sum of all but e_j (j=0: full sum)
            DivisorClass c(5, Int(-1));
            c[0] = 2;
            if (j > 0)
                c[static_cast<std::size_t>(j)] = 0;
            rays.push_back(std::move(c));
        }
    } else if (s.degree == 4) {
        for (int j = 1; j <= 5; ++j) { // e0 - e_j
            DivisorClass c = basis_class(s, 0);
            c[static_cast<std::size_t>(j)] = -1;
            rays.push_back(std::move(c));
        }
        for (int i = 1; i <= 5; ++i) { // 2e0 - sum_{k != 0, i} e_k
            DivisorClass c(6, Int(-1));
            c[0] = 2;
            c[static_cast<std::size_t>(i)] = 0;
            rays.push_back(std::move(c));
        }
        for (int i = 1; i <= 5; ++i) // 2e0 - sum_{k != 0, i, j} e_k
            for (int j = i + 1; j <= 5; ++j) {
                DivisorClass c(6, Int(-1));
                c[0] = 2;
                c[static_cast<std::size_t>(i)] = 0;
                c[static_cast<std::size_t>(j)] = 0;
                rays.push_back(std::move(c));
            }
        for (int i = 1; i <= 5; ++i) { // 3e0 - sum_{k != 0} e_k - e_i
            DivisorClass c(6, Int(-1));
            c[0] = 3;
            c[static_cast<std::size_t>(i)] = -2;
            rays.push_back(std::move(c));
        }
    } else {
        throw UnsupportedDegree("reference_nef_rays: degree must be 4 or 5");
    }
    sort_dedupe_rows(rays);
    return rays;
}

std::vector<Cylinder> cylinders_deg5(const Surface& s) {
    require_degree(s, 5, "cylinders_deg5");
    CurveSet cs = minus_one_classes(s);
    std::vector<Blowdown> downs = blowdowns(cs);

    static constexpr int kPairings[3][4] = {{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}};

    std::vector<Cylinder> out;
    int id = 1;
    for (const Blowdown& bd : downs) {
        for (const auto& p : kPairings) {
            Cylinder cyl;
            cyl.id = id++;
            cyl.blowdown = bd;
            const auto& f = bd.contracted;
            cyl.pair_partition = {{{f[static_cast<std::size_t>(p[0])], f[static_cast<std::size_t>(p[1])]},
                                   {f[static_cast<std::size_t>(p[2])], f[static_cast<std::size_t>(p[3])]}}};
            std::array<DivisorClass, 2> lines;
            for (std::size_t half = 0; half < 2; ++half) {
                DivisorClass line = bd.line_class;
                const auto& pair = cyl.pair_partition[half];
                for (std::size_t i = 0; i < line.size(); ++i)
                    line[i] -= pair[0][i] + pair[1][i];
                lines[half] = std::move(line);
            }
            // the two removed lines meet at the base point of the pencil
            if (pairing(lines[0], lines[1], s) != 1)
                throw InvariantViolation("cylinders_deg5: line classes do not pair to 1");

            cyl.complement = f;
            cyl.complement.push_back(lines[0]);
            cyl.complement.push_back(lines[1]);
            sort_rows(cyl.complement);
            if (cyl.complement.size() != 6 ||
                std::adjacent_find(cyl.complement.begin(), cyl.complement.end()) != cyl.complement.end())
                throw InvariantViolation("cylinders_deg5: complement is not six distinct classes");
            for (const DivisorClass& c : cyl.complement)
                if (pairing(c, c, s) != -1 || pairing(c, canonical_class(s), s) != -1)
                    throw InvariantViolation("cylinders_deg5: complement class is not a (-1)-class");
            out.push_back(std::move(cyl));
        }
    }
    if (out.size() != 15)
        throw InvariantViolation("cylinders_deg5: expected 15 cylinders");
    return out;
}

Cone polarity_cone(const std::vector<DivisorClass>& complement) {
    if (complement.empty())
        throw DegenerateInput("polarity_cone: empty complement");
    return cone_from_generators(complement, complement.front().size());
}

CheckReport polarity_report(const std::vector<Cylinder>& cylinders, const Cone& nef) {
    CheckReport report;
    report.name = "polarity-deg5";
    report.passed = true;
    Json per = Json::array();
    for (const Cylinder& cyl : cylinders) {
        Cone cone = polarity_cone(cyl.complement);
        bool full = cone.dim == cone.ambient;
        Json entry{{"id", cyl.id}, {"full_dimensional", full}};
        if (!full) {
            report.passed = false;
            entry["witness"] = {{"issue", "polarity cone is not full-dimensional"},
                                {"dim", cone.dim}};
        }
        bool rays_in = true;
        for (const IntVec& ray : nef.rays) {
            if (membership(ray, cone) == Membership::Outside) {
                rays_in = false;
                report.passed = false;
                entry["witness"] = {{"issue", "nef ray outside polarity cone"},
                                    {"ray", format_vector(ray)}};
                break;
            }
        }
        entry["contains_nef_rays"] = rays_in;
        per.push_back(std::move(entry));
    }
    report.details = Json{{"cylinder_count", cylinders.size()},
                          {"nef_ray_count", nef.rays.size()},
                          {"cylinders", std::move(per)}};
    return report;
}

CheckReport check_polarity_deg5() {
    Surface s(5);
    return polarity_report(cylinders_deg5(s), nef_cone(s));
}

std::vector<CylinderFamily> families_deg4(const Surface& s, Deg4Orbit orbit) {
    require_degree(s, 4, "families_deg4");
    CurveSet cs = minus_one_classes(s);
    std::vector<CylinderFamily> out;
    int id = 1;
    for (DivisorClass& base : orbit_base_curves(s, orbit)) {
        CylinderFamily fam;
        fam.id = id++;
        fam.base_curve = std::move(base);
        fam.contracted = neighbors(cs, fam.base_curve);
        if (fam.contracted.size() != 5)
            throw InvariantViolation("families_deg4: base curve does not have five neighbors");
        for (std::size_t a = 0; a < fam.contracted.size(); ++a)
            for (std::size_t b = a + 1; b < fam.contracted.size(); ++b)
                if (pairing(fam.contracted[a], fam.contracted[b], s) != 0)
                    throw InvariantViolation("families_deg4: neighborhood is not pairwise disjoint");
        fam.line_class = blowdown_line_class(fam.contracted, s);
        if (pairing(fam.base_curve, fam.line_class, s) != 2)
            throw InvariantViolation("families_deg4: base curve is not a conic for its blowdown");
        fam.residual = fam.contracted;
        fam.residual.push_back(fam.base_curve);
        sort_rows(fam.residual);
        out.push_back(std::move(fam));
    }
    return out;
}

Cone flexibility_cone_deg4(Deg4Orbit orbit) {
    Surface s(4);
    std::vector<Cone> cones;
    cones.reserve(5);
    for (const CylinderFamily& fam : families_deg4(s, orbit))
        cones.push_back(cone_from_generators(fam.polarity_generators(), 6));
    return intersect(cones);
}

Deg4Orbit selected_orbit() {
    static const Deg4Orbit selected = [] {
        const std::vector<IntVec> expected = reference_flex_rays_deg4();
        std::vector<Deg4Orbit> matches;
        for (Deg4Orbit o :
             {Deg4Orbit::Exceptional, Deg4Orbit::AdjacentLines, Deg4Orbit::SkipLines})
            if (flexibility_cone_deg4(o).rays == expected)
                matches.push_back(o);
        if (matches.size() != 1)
            throw InvariantViolation("selected_orbit: expected exactly one orbit to match the "
                                     "reference ray list, found " +
                                     std::to_string(matches.size()));
        return matches.front();
    }();
    return selected;
}

std::vector<IntVec> reference_flex_rays_deg4() {
    // 16 coefficient patterns; 14 of orbit size five plus the two cyclically
    // invariant rays e0 and 5e0 - 2 sum e_k.
    static constexpr int kPatterns[16][6] = {
        {1, 0, 0, 0, 0, 0},  {4, 2, 2, 1, 1, 1},  {5, 2, 2, 1, 3, 1},  {5, 2, 2, 2, 2, 0},
        {5, 2, 2, 2, 2, 2},  {6, 2, 2, 3, 1, 3},  {7, 4, 2, 2, 2, 2},  {9, 5, 3, 4, 2, 1},
        {9, 5, 1, 2, 4, 3},  {9, 4, 4, 4, 2, 2},  {11, 6, 2, 2, 4, 4}, {11, 6, 4, 4, 2, 2},
        {11, 6, 2, 4, 4, 4}, {11, 6, 4, 4, 4, 2}, {15, 8, 2, 4, 6, 6}, {15, 8, 6, 6, 4, 2}};

    std::vector<IntVec> rays;
    for (const auto& pat : kPatterns) {
        for (int rot = 0; rot < 5; ++rot) {
            IntVec v(6, Int(0));
            v[0] = pat[0];
            for (int j = 0; j < 5; ++j)
                v[static_cast<std::size_t>((j + rot) % 5 + 1)] = -pat[j + 1];
            rays.push_back(std::move(v));
        }
    }
    sort_dedupe_rows(rays);
    if (rays.size() != 72)
        throw InvariantViolation("reference_flex_rays_deg4: pattern table does not expand to 72 rays");
    return rays;
}

CheckReport check_memberships_deg4(Deg4Orbit orbit) {
    Surface s(4);
    Cone flex = flexibility_cone_deg4(orbit);
    Cone nef = nef_cone(s);
    DivisorClass anti = anticanonical_class(s);
    DivisorClass counterexample = parse_vector("8,-2,-4,-1,-1,-3");

    Membership anti_flex = membership(anti, flex);
    Membership cx_nef = membership(counterexample, nef);
    Membership cx_flex = membership(counterexample, flex);

    CheckReport report;
    report.name = "memberships-deg4";
    report.passed = anti_flex == Membership::Interior && cx_nef == Membership::Interior &&
                    cx_flex == Membership::Outside;
    report.details = Json{{"orbit", to_string(orbit)},
                          {"anticanonical", format_vector(anti)},
                          {"anticanonical_flex_membership", to_string(anti_flex)},
                          {"counterexample", format_vector(counterexample)},
                          {"counterexample_nef_membership", to_string(cx_nef)},
                          {"counterexample_flex_membership", to_string(cx_flex)}};
    return report;
}

CheckReport cover_report_deg5(const std::vector<Cylinder>& cylinders, const CurveSet& cs,
                              const IncidenceGraph& graph) {
    // edge coverage is only sound when no three curves pass through a point
    if (!triangle_free(graph))
        throw InvariantViolation("cover_report_deg5: incidence graph is not triangle-free");

    CheckReport report;
    report.name = "cover-deg5";
    report.passed = true;
    Json details;

    std::size_t edges_covered = 0;
    for (auto [a, b] : graph.edges) {
        bool covered = false;
        for (const Cylinder& cyl : cylinders)
            if (!contains_class(cyl.complement, cs.classes[a]) &&
                !contains_class(cyl.complement, cs.classes[b])) {
                covered = true;
                break;
            }
        if (covered) {
            ++edges_covered;
        } else {
            report.passed = false;
            if (!details.contains("witness"))
                details["witness"] = {{"uncovered_edge", Json::array({format_vector(cs.classes[a]),
                                                                      format_vector(cs.classes[b])})}};
        }
    }

    std::size_t vertices_excluded = 0;
    for (const DivisorClass& v : cs.classes) {
        bool excluded = false;
        for (const Cylinder& cyl : cylinders)
            if (!contains_class(cyl.complement, v)) {
                excluded = true;
                break;
            }
        if (excluded) {
            ++vertices_excluded;
        } else {
            report.passed = false;
            if (!details.contains("witness"))
                details["witness"] = {{"never_excluded_vertex", format_vector(v)}};
        }
    }

    details["edge_count"] = graph.edges.size();
    details["edges_covered"] = edges_covered;
    details["vertex_count"] = graph.vertex_count;
    details["vertices_excluded"] = vertices_excluded;
    report.details = std::move(details);
    return report;
}

CheckReport check_cover_deg5() {
    Surface s(5);
    CurveSet cs = minus_one_classes(s);
    IncidenceGraph graph = incidence_graph(cs);
    CheckReport report = cover_report_deg5(cylinders_deg5(s), cs, graph);

    // geometric witness in standard coordinates: the three base points of the
    // reference blowdown are pairwise distinct and not collinear
    std::vector<ProjPoint> pts = standard_base_points(4);
    auto base_point = [&](int i, int j, int k, int l) {
        return meet(line_through(pts[static_cast<std::size_t>(i)], pts[static_cast<std::size_t>(j)]),
                    line_through(pts[static_cast<std::size_t>(k)], pts[static_cast<std::size_t>(l)]));
    };
    ProjPoint bs1 = base_point(0, 1, 2, 3);
    ProjPoint bs2 = base_point(0, 2, 1, 3);
    ProjPoint bs3 = base_point(0, 3, 1, 2);
    Int det = triple_det(bs1, bs2, bs3);
    bool distinct = !(bs1 == bs2) && !(bs1 == bs3) && !(bs2 == bs3);
    if (!distinct || det == 0)
        report.passed = false;
    report.details["base_points"] =
        Json::array({format_point(bs1), format_point(bs2), format_point(bs3)});
    report.details["base_points_distinct"] = distinct;
    report.details["collinearity_det"] = det.get_str();
    return report;
}

CheckReport cover_report_deg4(const std::vector<CylinderFamily>& families, const CurveSet& cs,
                              const IncidenceGraph& graph) {
    if (!triangle_free(graph))
        throw InvariantViolation("cover_report_deg4: incidence graph is not triangle-free");

    CheckReport report;
    report.name = "cover-deg4";
    report.passed = true;
    Json details;

    // (a) no class lies in every residual set
    std::vector<DivisorClass> common = cs.classes;
    for (const CylinderFamily& fam : families) {
        std::vector<DivisorClass> next;
        for (const DivisorClass& c : common)
            if (contains_class(fam.residual, c))
                next.push_back(c);
        common = std::move(next);
    }
    if (!common.empty()) {
        report.passed = false;
        details["witness"] = {{"class_in_every_residual", format_vector(common.front())}};
    }
    details["residual_intersection"] = divisor_list_json(common);

    // (b) every vertex avoids some residual set
    std::size_t vertices_avoiding = 0;
    for (const DivisorClass& v : cs.classes) {
        bool avoids = false;
        for (const CylinderFamily& fam : families)
            if (!contains_class(fam.residual, v)) {
                avoids = true;
                break;
            }
        if (avoids) {
            ++vertices_avoiding;
        } else {
            report.passed = false;
            if (!details.contains("witness"))
                details["witness"] = {{"vertex_in_every_residual", format_vector(v)}};
        }
    }

    // (c) every edge avoids some residual set entirely
    std::size_t edges_covered = 0;
    for (auto [a, b] : graph.edges) {
        bool covered = false;
        for (const CylinderFamily& fam : families)
            if (!contains_class(fam.residual, cs.classes[a]) &&
                !contains_class(fam.residual, cs.classes[b])) {
                covered = true;
                break;
            }
        if (covered) {
            ++edges_covered;
        } else {
            report.passed = false;
            if (!details.contains("witness"))
                details["witness"] = {{"uncovered_edge", Json::array({format_vector(cs.classes[a]),
                                                                      format_vector(cs.classes[b])})}};
        }
    }

    details["family_count"] = families.size();
    details["vertex_count"] = graph.vertex_count;
    details["vertices_avoiding_some_residual"] = vertices_avoiding;
    details["edge_count"] = graph.edges.size();
    details["edges_covered"] = edges_covered;
    report.details = std::move(details);
    return report;
}

CheckReport check_cover_deg4(Deg4Orbit orbit) {
    Surface s(4);
    CurveSet cs = minus_one_classes(s);
    CheckReport report = cover_report_deg4(families_deg4(s, orbit), cs, incidence_graph(cs));
    report.details["orbit"] = to_string(orbit);
    return report;
}

namespace {

CheckReport curve_report(int degree, const std::vector<DivisorClass>* expected,
                         std::size_t expected_count) {
    Surface s(degree);
    CurveSet cs = minus_one_classes(s);
    CheckReport report;
    report.name = "curves-deg" + std::to_string(degree);
    bool count_ok = cs.classes.size() == expected_count;
    bool list_ok = expected == nullptr || cs.classes == *expected;
    report.passed = count_ok && list_ok;
    report.details = Json{{"count", cs.classes.size()}, {"expected_count", expected_count}};
    if (expected != nullptr)
        report.details["matches_reference_list"] = list_ok;
    return report;
}

std::vector<DivisorClass> reference_minus_one_classes(const Surface& s) {
    std::vector<DivisorClass> expected;
    for (int i = 1; i <= s.r; ++i)
        expected.push_back(basis_class(s, i));
    for (int i = 1; i <= s.r; ++i)
        for (int j = i + 1; j <= s.r; ++j)
            expected.push_back(line_minus(s, i, j));
    if (s.degree == 4) {
        DivisorClass conic(6, Int(-1));
        conic[0] = 2;
        expected.push_back(std::move(conic));
    }
    sort_dedupe_rows(expected);
    return expected;
}

CheckReport graph_report(int degree, std::size_t vertices, std::size_t edges, std::size_t regularity,
                         std::size_t expected_girth) {
    Surface s(degree);
    IncidenceGraph g = incidence_graph(minus_one_classes(s));
    bool tf = triangle_free(g);
    std::size_t gi = girth(g);
    CheckReport report;
    report.name = "graph-deg" + std::to_string(degree);
    report.passed = g.vertex_count == vertices && g.edges.size() == edges &&
                    is_regular(g, regularity) && tf && (expected_girth == 0 || gi == expected_girth);
    report.details = Json{{"vertices", g.vertex_count}, {"edges", g.edges.size()},
                          {"regular", is_regular(g, regularity)}, {"regularity", regularity},
                          {"triangle_free", tf}, {"girth", gi}};
    return report;
}

CheckReport nef_report(int degree) {
    Surface s(degree);
    Cone nef = nef_cone(s);
    std::vector<IntVec> expected = reference_nef_rays(s);
    CheckReport report;
    report.name = "nef-rays-deg" + std::to_string(degree);
    report.passed = nef.rays == expected && nef.dim == nef.ambient && nef.pointed;
    report.details = Json{{"ray_count", nef.rays.size()}, {"expected_count", expected.size()},
                          {"matches_reference_list", nef.rays == expected}};
    return report;
}

CheckReport flex_report() {
    Deg4Orbit orbit = selected_orbit();
    Cone flex = flexibility_cone_deg4(orbit);
    std::vector<IntVec> expected = reference_flex_rays_deg4();
    CheckReport report;
    report.name = "flex-rays-deg4";
    report.passed = flex.rays == expected && flex.dim == flex.ambient && flex.pointed;
    report.details = Json{{"orbit", to_string(orbit)}, {"ray_count", flex.rays.size()},
                          {"matches_reference_list", flex.rays == expected},
                          {"full_dimensional", flex.dim == flex.ambient}, {"pointed", flex.pointed}};
    return report;
}

} // namespace

std::vector<CheckReport> reproduction_suite() {
    Surface deg5(5);
    Surface deg4(4);
    std::vector<DivisorClass> exp5 = reference_minus_one_classes(deg5);
    std::vector<DivisorClass> exp4 = reference_minus_one_classes(deg4);

    std::vector<CheckReport> reports;
    reports.push_back(curve_report(5, &exp5, 10));
    reports.push_back(curve_report(4, &exp4, 16));
    reports.push_back(curve_report(3, nullptr, 27));
    reports.push_back(graph_report(5, 10, 15, 3, 5));
    reports.push_back(graph_report(4, 16, 40, 5, 0));
    reports.push_back(nef_report(5));
    reports.push_back(nef_report(4));
    reports.push_back(check_polarity_deg5());
    reports.push_back(flex_report());
    reports.push_back(check_memberships_deg4(selected_orbit()));
    reports.push_back(check_cover_deg5());
    reports.push_back(check_cover_deg4(selected_orbit()));
    return reports;
}

} // namespace delpezzo
