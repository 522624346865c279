#include "delpezzo/cli.hpp"

#include <algorithm>
#include <ostream>
#include <string>

#include <CLI11.hpp>

#include "delpezzo/errors.hpp"
#include "delpezzo/json_io.hpp"
#include "delpezzo/scenarios.hpp"

namespace delpezzo {

namespace {

struct Options {
    int degree = 0;
    std::string format = "text";
    std::string selector;
    std::string divisor;
    std::string cone_name;
    std::string orbit;
};

Deg4Orbit orbit_or_selected(const Options& opt) {
    return opt.orbit.empty() ? selected_orbit() : parse_orbit(opt.orbit);
}

void require_degree_flag(const Options& opt, std::initializer_list<int> allowed, const char* what) {
    if (std::find(allowed.begin(), allowed.end(), opt.degree) == allowed.end())
        throw DegenerateInput(std::string(what) + ": --degree must be " +
                              (allowed.size() == 1 ? std::to_string(*allowed.begin()) : "4 or 5"));
}

void emit(const Options& opt, const std::string& command, const Json& result, std::ostream& out,
          const std::string& text) {
    if (opt.format == "json") {
        Json top{{"command", command}, {"degree", opt.degree}, {"result", result}};
        out << top.dump(2) << "\n";
    } else {
        out << text;
    }
}

std::string rows_text(const std::vector<IntVec>& rows) {
    std::string s;
    for (const IntVec& r : rows)
        s += format_vector(r) + "\n";
    return s;
}

std::string cone_text(const Cone& c) {
    std::string s;
    s += "ambient " + std::to_string(c.ambient) + "\n";
    s += "dim " + std::to_string(c.dim) + "\n";
    s += std::string("pointed ") + (c.pointed ? "true" : "false") + "\n";
    s += "rays " + std::to_string(c.rays.size()) + "\n" + rows_text(c.rays);
    s += "facets " + std::to_string(c.facets.size()) + "\n" + rows_text(c.facets);
    if (!c.lineality.empty())
        s += "lineality " + std::to_string(c.lineality.size()) + "\n" + rows_text(c.lineality);
    if (!c.equations.empty())
        s += "equations " + std::to_string(c.equations.size()) + "\n" + rows_text(c.equations);
    return s;
}

// "ample" (= nef), "effective", "flex", "polar:<cylinder-id>", "family:<i>"
Cone resolve_cone(const Options& opt) {
    const std::string& sel = opt.selector.empty() ? opt.cone_name : opt.selector;
    if (sel == "ample") {
        require_degree_flag(opt, {4, 5}, "cone ample");
        return nef_cone(Surface(opt.degree));
    }
    if (sel == "effective") {
        require_degree_flag(opt, {4, 5}, "cone effective");
        return effective_cone(Surface(opt.degree));
    }
    if (sel == "flex") {
        require_degree_flag(opt, {4}, "cone flex");
        return flexibility_cone_deg4(orbit_or_selected(opt));
    }
    if (sel.rfind("polar:", 0) == 0) {
        require_degree_flag(opt, {5}, "cone polar:<id>");
        int id = 0;
        try {
            id = std::stoi(sel.substr(6));
        } catch (const std::exception&) {
            throw DegenerateInput("bad cylinder id in \"" + sel + "\"");
        }
        auto cyls = cylinders_deg5(Surface(5));
        if (id < 1 || static_cast<std::size_t>(id) > cyls.size())
            throw DegenerateInput("cylinder id must be 1..15");
        return polarity_cone(cyls[static_cast<std::size_t>(id - 1)].complement);
    }
    if (sel.rfind("family:", 0) == 0) {
        require_degree_flag(opt, {4}, "cone family:<i>");
        int id = 0;
        try {
            id = std::stoi(sel.substr(7));
        } catch (const std::exception&) {
            throw DegenerateInput("bad family id in \"" + sel + "\"");
        }
        auto fams = families_deg4(Surface(4), orbit_or_selected(opt));
        if (id < 1 || static_cast<std::size_t>(id) > fams.size())
            throw DegenerateInput("family id must be 1..5");
        return cone_from_generators(fams[static_cast<std::size_t>(id - 1)].polarity_generators(), 6);
    }
    throw DegenerateInput("unknown cone selector \"" + sel +
                          "\" (expected ample, effective, flex, polar:<id> or family:<i>)");
}

int run_checks(const Options& opt, std::ostream& out) {
    std::vector<CheckReport> reports;
    int effective_degree = opt.degree;
    if (opt.selector == "polarity") {
        if (opt.degree != 0 && opt.degree != 5)
            throw DegenerateInput("check polarity: only degree 5 is supported");
        effective_degree = 5;
        reports.push_back(check_polarity_deg5());
    } else if (opt.selector == "memberships") {
        if (opt.degree != 0 && opt.degree != 4)
            throw DegenerateInput("check memberships: only degree 4 is supported");
        effective_degree = 4;
        reports.push_back(check_memberships_deg4(orbit_or_selected(opt)));
    } else if (opt.selector == "cover") {
        if (opt.degree == 5)
            reports.push_back(check_cover_deg5());
        else if (opt.degree == 4)
            reports.push_back(check_cover_deg4(orbit_or_selected(opt)));
        else
            throw DegenerateInput("check cover: --degree must be 4 or 5");
    } else if (opt.selector == "paper") {
        effective_degree = 0; // suite spans both degrees
        reports = reproduction_suite();
    } else {
        throw DegenerateInput("unknown check selector \"" + opt.selector +
                              "\" (expected polarity, cover, memberships or paper)");
    }

    bool all_passed = std::all_of(reports.begin(), reports.end(),
                                  [](const CheckReport& r) { return r.passed; });
    if (opt.format == "json") {
        Json arr = Json::array();
        for (const CheckReport& r : reports)
            arr.push_back(report_to_json(r));
        Json top{{"command", "check"},
                 {"degree", effective_degree},
                 {"result", Json{{"passed", all_passed}, {"reports", std::move(arr)}}}};
        out << top.dump(2) << "\n";
    } else {
        std::size_t passed = 0;
        for (const CheckReport& r : reports) {
            out << (r.passed ? "[PASS] " : "[FAIL] ") << r.name << "\n";
            if (!r.passed)
                out << "       " << r.details.dump() << "\n";
            passed += r.passed ? 1 : 0;
        }
        out << "summary: " << passed << "/" << reports.size() << " passed\n";
    }
    return all_passed ? 0 : 1;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact divisor-class geometry of del Pezzo surfaces of degree 4 and 5"};
    app.name("delpezzo");
    app.require_subcommand(1);

    Options opt;
    auto add_common = [&](CLI::App* sub, std::initializer_list<int> degrees) {
        sub->add_option("--degree", opt.degree, "surface degree")
            ->required()
            ->check(CLI::IsMember(std::vector<int>(degrees)));
        sub->add_option("--format", opt.format, "output format")
            ->check(CLI::IsMember({"text", "json"}));
    };

    CLI::App* curves = app.add_subcommand("curves", "list the (-1)-curve classes");
    add_common(curves, {3, 4, 5, 6, 7, 8, 9});

    CLI::App* graph = app.add_subcommand("graph", "incidence graph of the (-1)-curves");
    add_common(graph, {3, 4, 5, 6, 7, 8, 9});

    CLI::App* downs = app.add_subcommand("blowdowns", "maximal disjoint curve sets and line classes");
    add_common(downs, {4, 5});

    CLI::App* cone = app.add_subcommand("cone", "compute a named cone as a certified dual pair");
    add_common(cone, {4, 5});
    cone->add_option("selector", opt.selector,
                     "ample | effective | flex | polar:<cylinder-id> | family:<i>")
        ->required();
    cone->add_option("--orbit", opt.orbit, "degree-4 base-curve orbit (default: selected)");

    CLI::App* cyls = app.add_subcommand("cylinders", "the 15 degree-5 cylinders");
    add_common(cyls, {5});

    CLI::App* fams = app.add_subcommand("families", "the 5 degree-4 cylinder families");
    add_common(fams, {4});
    fams->add_option("--orbit", opt.orbit, "base-curve orbit (default: selected)");

    CLI::App* member = app.add_subcommand("member", "membership of a divisor class in a cone");
    add_common(member, {4, 5});
    member->add_option("--cone", opt.cone_name, "cone selector")->required();
    member->add_option("--divisor", opt.divisor, "comma-separated coefficients, e0 first")->required();
    member->add_option("--orbit", opt.orbit, "degree-4 base-curve orbit (default: selected)");

    CLI::App* check = app.add_subcommand("check", "run verification suites");
    check->add_option("selector", opt.selector, "polarity | cover | memberships | paper")->required();
    check->add_option("--degree", opt.degree, "surface degree (required for cover)");
    check->add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    check->add_option("--orbit", opt.orbit, "degree-4 base-curve orbit (default: selected)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 2;
    }

    try {
        if (app.got_subcommand(curves)) {
            CurveSet cs = minus_one_classes(Surface(opt.degree));
            Json result{{"count", cs.classes.size()}, {"classes", Json::array()}};
            std::string text;
            for (const DivisorClass& c : cs.classes) {
                result["classes"].push_back(format_vector(c));
                text += format_vector(c) + "\n";
            }
            emit(opt, "curves", result, out, text);
        } else if (app.got_subcommand(graph)) {
            CurveSet cs = minus_one_classes(Surface(opt.degree));
            IncidenceGraph g = incidence_graph(cs);
            std::string text = "vertices " + std::to_string(g.vertex_count) + "\n";
            for (std::size_t i = 0; i < cs.classes.size(); ++i)
                text += std::to_string(i) + " " + format_vector(cs.classes[i]) + "\n";
            text += "edges " + std::to_string(g.edges.size()) + "\n";
            for (auto [a, b] : g.edges)
                text += std::to_string(a) + " " + std::to_string(b) + "\n";
            emit(opt, "graph", graph_to_json(cs, g), out, text);
        } else if (app.got_subcommand(downs)) {
            auto list = blowdowns(minus_one_classes(Surface(opt.degree)));
            Json result = Json::array();
            std::string text;
            for (std::size_t i = 0; i < list.size(); ++i) {
                result.push_back(blowdown_to_json(list[i]));
                text += "blowdown " + std::to_string(i + 1) + "\n";
                for (const DivisorClass& c : list[i].contracted)
                    text += "  contracted " + format_vector(c) + "\n";
                text += "  line_class " + format_vector(list[i].line_class) + "\n";
            }
            emit(opt, "blowdowns", result, out, text);
        } else if (app.got_subcommand(cone)) {
            Cone c = resolve_cone(opt);
            emit(opt, "cone", cone_to_json(c), out, cone_text(c));
        } else if (app.got_subcommand(cyls)) {
            auto list = cylinders_deg5(Surface(5));
            Json result = Json::array();
            std::string text;
            for (const Cylinder& c : list) {
                result.push_back(cylinder_to_json(c));
                text += "cylinder " + std::to_string(c.id) + "\n";
                text += "  pairs {" + format_vector(c.pair_partition[0][0]) + " | " +
                        format_vector(c.pair_partition[0][1]) + "} {" +
                        format_vector(c.pair_partition[1][0]) + " | " +
                        format_vector(c.pair_partition[1][1]) + "}\n";
                for (const DivisorClass& d : c.complement)
                    text += "  complement " + format_vector(d) + "\n";
            }
            emit(opt, "cylinders", result, out, text);
        } else if (app.got_subcommand(fams)) {
            Deg4Orbit orbit = orbit_or_selected(opt);
            auto list = families_deg4(Surface(4), orbit);
            Json result{{"orbit", to_string(orbit)}, {"families", Json::array()}};
            std::string text = std::string("orbit ") + to_string(orbit) + "\n";
            for (const CylinderFamily& f : list) {
                result["families"].push_back(family_to_json(f));
                text += "family " + std::to_string(f.id) + "\n";
                text += "  base_curve " + format_vector(f.base_curve) + "\n";
                for (const DivisorClass& d : f.contracted)
                    text += "  contracted " + format_vector(d) + "\n";
                text += "  line_class " + format_vector(f.line_class) + "\n";
            }
            emit(opt, "families", result, out, text);
        } else if (app.got_subcommand(member)) {
            IntVec v = parse_vector(opt.divisor);
            if (v.size() != static_cast<std::size_t>(Surface(opt.degree).rank))
                throw DegenerateInput("member: divisor length differs from surface rank");
            Cone c = resolve_cone(opt);
            Membership m = membership(v, c);
            Json result{{"cone", opt.cone_name},
                        {"divisor", format_vector(v)},
                        {"membership", to_string(m)}};
            emit(opt, "member", result, out, std::string(to_string(m)) + "\n");
        } else if (app.got_subcommand(check)) {
            return run_checks(opt, out);
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}

} // namespace delpezzo
