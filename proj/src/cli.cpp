#include "connspace/cli.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "connspace/analysis.hpp"
#include "connspace/catalog.hpp"
#include "connspace/constructions.hpp"
#include "connspace/document.hpp"
#include "connspace/generation.hpp"
#include "connspace/pointed.hpp"

namespace connspace {

namespace {

struct Loaded {
    ConnSpace space;
    std::string name;
};

Loaded load_space(const std::string& path, const Limits& limits) {
    std::ifstream in(path);
    if (!in) raise(Errc::bad_argument, "cannot read '" + path + "'");
    std::ostringstream text;
    text << in.rdbuf();
    SpaceDocument doc = parse_document(text.str());
    return Loaded{document_to_space(doc, limits), doc.name};
}

std::vector<std::string> labels_of(const ConnSpace& s) {
    return s.ground().labels.empty() ? synthesize_labels(s.size()) : s.ground().labels;
}

bool usable_label(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '{' || c == '}' || c == '#')
            return false;
    return true;
}

// Composed labels can collide or pick up reserved characters; fall back to
// synthesized ones rather than fail.
ConnSpace relabeled_or_synthesized(const ConnSpace& s, std::vector<std::string> want) {
    bool ok = want.size() == s.size();
    for (const auto& l : want)
        if (!usable_label(l)) ok = false;
    if (ok) {
        try {
            return s.relabeled(std::move(want));
        } catch (const Error&) {
        }
    }
    return s.relabeled(synthesize_labels(s.size()));
}

std::vector<std::string> pair_labels(const std::vector<std::string>& a,
                                     const std::vector<std::string>& b) {
    std::vector<std::string> out;
    out.reserve(a.size() * b.size());
    for (const auto& la : a)
        for (const auto& lb : b) out.push_back(la + "." + lb);
    return out;
}

std::vector<std::string> side_by_side_labels(const std::vector<std::string>& a,
                                             const std::vector<std::string>& b) {
    bool collision = false;
    for (const auto& la : a)
        for (const auto& lb : b)
            if (la == lb) collision = true;
    std::vector<std::string> out;
    for (const auto& la : a) out.push_back(collision ? "l." + la : la);
    for (const auto& lb : b) out.push_back(collision ? "r." + lb : lb);
    return out;
}

std::vector<std::string> class_labels(const Partition& part,
                                      const std::vector<std::string>& inner) {
    std::vector<std::string> out;
    for (Subset block : part.blocks) {
        std::string joined;
        block.for_each_point([&](std::size_t p) {
            if (!joined.empty()) joined += "+";
            joined += inner[p];
        });
        out.push_back(std::move(joined));
    }
    return out;
}

std::string joined_name(const std::string& a, const std::string& op, const std::string& b) {
    if (a.empty() || b.empty()) return "";
    return a + "_" + op + "_" + b;
}

std::size_t point_of(const ConnSpace& s, const std::string& label) {
    for (std::size_t i = 0; i < s.size(); ++i)
        if (s.ground().label(i) == label) return i;
    raise(Errc::unknown_label, "unknown label '" + label + "'");
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

// "a=p,b=q": every source point needs exactly one image.
PointMap parse_map(const std::string& text, const ConnSpace& x, const ConnSpace& y) {
    std::vector<std::size_t> table(x.size(), SIZE_MAX);
    for (const std::string& entry : split(text, ',')) {
        auto eq = entry.find('=');
        if (eq == std::string::npos || eq == 0 || eq + 1 == entry.size())
            raise(Errc::bad_argument, "map entry '" + entry + "' is not label=label");
        std::size_t from = point_of(x, entry.substr(0, eq));
        std::size_t to = point_of(y, entry.substr(eq + 1));
        if (table[from] != SIZE_MAX)
            raise(Errc::bad_argument, "point '" + entry.substr(0, eq) + "' mapped twice");
        table[from] = to;
    }
    for (std::size_t p = 0; p < x.size(); ++p)
        if (table[p] == SIZE_MAX)
            raise(Errc::bad_argument, "no image for point '" + x.ground().label(p) + "'");
    return PointMap::of(x.size(), y.size(), std::move(table));
}

std::string format_map(const PointMap& f, const ConnSpace& x, const ConnSpace& y) {
    std::string out;
    for (std::size_t p = 0; p < x.size(); ++p) {
        if (p) out += ",";
        out += x.ground().label(p) + "=" + y.ground().label(f(p));
    }
    return out;
}

void print_space(std::ostream& out, const ConnSpace& space, const std::string& name,
                 bool nontrivial) {
    SpaceDocument doc = space_to_document(space, name);
    if (nontrivial) {
        doc.generated = true;
        std::vector<std::vector<std::string>> kept;
        for (auto& set : doc.connected)
            if (set.size() >= 2) kept.push_back(std::move(set));
        doc.connected = std::move(kept);
    }
    out << serialize(doc);
}

const char* yesno(bool b) { return b ? "yes" : "no"; }

void cmd_info(std::ostream& out, const Loaded& loaded, const Limits& limits) {
    const ConnSpace& s = loaded.space;
    if (!loaded.name.empty()) out << "name: " << loaded.name << '\n';
    out << "points: " << s.size() << '\n';
    out << "integral: " << yesno(s.integral()) << '\n';
    out << "connected: " << yesno(s.size() > 0 && s.is_connected(s.carrier())) << '\n';
    if (s.integral())
        out << "components: " << connected_components(s).size() << '\n';
    else
        out << "components: n/a\n";
    out << "irreducible: " << yesno(is_irreducible_space(s)) << '\n';
    out << "distinguished: " << yesno(is_distinguished(s)) << '\n';
    if (s.integral() && s.size() > 0)
        out << "index: " << connectivity_index(s, limits).space_index << '\n';
    else
        out << "index: n/a\n";
}

void cmd_graph(std::ostream& out, const ConnSpace& s, bool dot, const Limits& limits) {
    GenericGraph g = generic_graph(s, limits);
    std::vector<bool> has_out(g.vertices.size(), false);
    for (auto [from, to] : g.edges) has_out[from] = true;

    if (!dot) {
        for (std::size_t i = 0; i < g.vertices.size(); ++i)
            out << 'v' << i << ' ' << s.ground().describe(g.vertices[i]) << '\n';
        for (auto [from, to] : g.edges) out << 'v' << from << " -> v" << to << '\n';
        return;
    }
    out << "digraph connectivity {\n";
    for (std::size_t i = 0; i < g.vertices.size(); ++i) {
        out << "  n" << i << " [label=\"" << s.ground().describe(g.vertices[i]) << '"';
        if (!has_out[i]) out << ", shape=box";
        out << "];\n";
    }
    for (auto [from, to] : g.edges) out << "  n" << from << " -> n" << to << ";\n";
    out << "}\n";
}

} // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"finite connectivity space toolkit"};
    app.require_subcommand(1);

    Limits limits;
    app.add_option("--max-carrier", limits.max_carrier, "carrier size guard")
        ->envname("CONNSPACE_MAX_CARRIER");
    app.add_option("--max-family", limits.max_family, "structure size guard")
        ->envname("CONNSPACE_MAX_FAMILY");

    // Shared option storage; each subcommand binds what it needs.
    std::string file_a, file_b, file_time;
    std::string map_text, map_f, map_g;
    std::string at_label, t0_label, t1_label;
    std::vector<std::string> bases, merges, keeps;
    bool nontrivial = false, dot = false, all_mode = false;

    auto add_nontrivial = [&](CLI::App* sub) {
        sub->add_flag("--nontrivial", nontrivial, "omit the empty set and singletons");
    };

    auto* validate_cmd = app.add_subcommand("validate", "check a structure file");
    validate_cmd->add_option("file", file_a, "space file")->required();
    validate_cmd->callback([&] {
        Loaded l = load_space(file_a, limits);
        out << "valid: " << l.space.size() << " points, " << l.space.structure().size()
            << " connected sets\n";
    });

    auto* generate_cmd = app.add_subcommand("generate", "close generators into a structure");
    generate_cmd->add_option("file", file_a, "space file")->required();
    add_nontrivial(generate_cmd);
    generate_cmd->callback([&] {
        Loaded l = load_space(file_a, limits);
        print_space(out, l.space, l.name, nontrivial);
    });

    auto* info_cmd = app.add_subcommand("info", "summary of a space");
    info_cmd->add_option("file", file_a, "space file")->required();
    info_cmd->callback([&] { cmd_info(out, load_space(file_a, limits), limits); });

    auto* irr_cmd = app.add_subcommand("irreducibles", "minimal generating sets");
    irr_cmd->add_option("file", file_a, "space file")->required();
    irr_cmd->callback([&] {
        Loaded l = load_space(file_a, limits);
        SpaceDocument doc;
        doc.name = l.name;
        doc.integral = l.space.integral();
        doc.generated = true;
        doc.points = labels_of(l.space);
        SubsetFamily irr = irreducibles(l.space);
        for (Subset k : irr.members()) {
            std::vector<std::string> set;
            k.for_each_point([&](std::size_t i) { set.push_back(doc.points[i]); });
            doc.connected.push_back(std::move(set));
        }
        out << serialize(doc);
    });

    auto* graph_cmd = app.add_subcommand("graph", "generic graph of a space");
    graph_cmd->add_option("file", file_a, "space file")->required();
    graph_cmd->add_flag("--dot", dot, "emit DOT");
    graph_cmd->callback([&] { cmd_graph(out, load_space(file_a, limits).space, dot, limits); });

    auto add_binary = [&](const char* name, const char* help, auto compute) {
        auto* sub = app.add_subcommand(name, help);
        sub->add_option("a", file_a, "left space file")->required();
        sub->add_option("b", file_b, "right space file")->required();
        add_nontrivial(sub);
        sub->callback([&, compute, name] {
            Loaded a = load_space(file_a, limits);
            Loaded b = load_space(file_b, limits);
            ConnSpace r = compute(a.space, b.space);
            print_space(out, r, joined_name(a.name, name, b.name), nontrivial);
        });
        return sub;
    };

    add_binary("product", "categorical product", [&](const ConnSpace& a, const ConnSpace& b) {
        return relabeled_or_synthesized(product(a, b, limits),
                                        pair_labels(labels_of(a), labels_of(b)));
    });
    add_binary("coproduct", "disjoint union", [&](const ConnSpace& a, const ConnSpace& b) {
        return relabeled_or_synthesized(coproduct(a, b, limits),
                                        side_by_side_labels(labels_of(a), labels_of(b)));
    });
    add_binary("tensor", "tensor product", [&](const ConnSpace& a, const ConnSpace& b) {
        return relabeled_or_synthesized(tensor(a, b, limits),
                                        pair_labels(labels_of(a), labels_of(b)));
    });

    auto add_pointed = [&](const char* name, const char* help, auto compute) {
        auto* sub = app.add_subcommand(name, help);
        sub->add_option("a", file_a, "left space file")->required();
        sub->add_option("b", file_b, "right space file")->required();
        sub->add_option("--base", bases, "basepoint label, once per input")
            ->required()
            ->expected(2);
        add_nontrivial(sub);
        sub->callback([&, compute, name] {
            Loaded a = load_space(file_a, limits);
            Loaded b = load_space(file_b, limits);
            PointedConnSpace pa = PointedConnSpace::of(a.space, point_of(a.space, bases[0]));
            PointedConnSpace pb = PointedConnSpace::of(b.space, point_of(b.space, bases[1]));
            ConnSpace r = compute(pa, pb);
            print_space(out, r, joined_name(a.name, name, b.name), nontrivial);
        });
        return sub;
    };

    add_pointed("wedge", "one-point union",
                [&](const PointedConnSpace& pa, const PointedConnSpace& pb) {
                    Partition part = Partition::merging(
                        pa.size() + pb.size(), {{pa.base, pa.size() + pb.base}});
                    std::vector<std::string> inner =
                        side_by_side_labels(labels_of(pa.space), labels_of(pb.space));
                    return relabeled_or_synthesized(wedge(pa, pb, limits).space,
                                                    class_labels(part, inner));
                });
    add_pointed("smash", "tensor with the wedge collapsed",
                [&](const PointedConnSpace& pa, const PointedConnSpace& pb) {
                    Subset w = wedge_pair_carrier(pa, pb);
                    Partition part = Partition::merging(pa.size() * pb.size(), {w.points()});
                    std::vector<std::string> inner =
                        pair_labels(labels_of(pa.space), labels_of(pb.space));
                    return relabeled_or_synthesized(smash(pa, pb, limits).space.space,
                                                    class_labels(part, inner));
                });

    auto* quot_cmd = app.add_subcommand("quotient", "identify points");
    quot_cmd->add_option("file", file_a, "space file")->required();
    quot_cmd->add_option("--merge", merges, "comma-joined labels to identify")->required();
    add_nontrivial(quot_cmd);
    quot_cmd->callback([&] {
        Loaded l = load_space(file_a, limits);
        std::vector<std::vector<std::size_t>> groups;
        for (const std::string& m : merges) {
            std::vector<std::size_t> group;
            for (const std::string& label : split(m, ','))
                group.push_back(point_of(l.space, label));
            groups.push_back(std::move(group));
        }
        Partition part = Partition::merging(l.space.size(), groups);
        ConnSpace q = relabeled_or_synthesized(quotient(l.space, part, limits),
                                               class_labels(part, labels_of(l.space)));
        print_space(out, q, l.name, nontrivial);
    });

    auto* sub_cmd = app.add_subcommand("subspace", "restrict to chosen points");
    sub_cmd->add_option("file", file_a, "space file")->required();
    sub_cmd->add_option("--keep", keeps, "comma-joined labels to keep")->required();
    add_nontrivial(sub_cmd);
    sub_cmd->callback([&] {
        Loaded l = load_space(file_a, limits);
        Subset keep;
        std::vector<std::string> inner = labels_of(l.space);
        for (const std::string& k : keeps)
            for (const std::string& label : split(k, ','))
                keep = keep.with(point_of(l.space, label));
        std::vector<std::string> kept_labels;
        keep.for_each_point([&](std::size_t p) { kept_labels.push_back(inner[p]); });
        ConnSpace r = relabeled_or_synthesized(subspace(l.space, keep), std::move(kept_labels));
        print_space(out, r, l.name, nontrivial);
    });

    auto* compose_cmd = app.add_subcommand("compose", "graft one space into another");
    compose_cmd->add_option("a", file_a, "outer space file")->required();
    compose_cmd->add_option("b", file_b, "grafted space file")->required();
    auto* mode = compose_cmd->add_option_group("mode");
    mode->add_option("--at", at_label, "replace this point only");
    mode->add_flag("--all", all_mode, "replace every point");
    mode->require_option(1);
    add_nontrivial(compose_cmd);
    compose_cmd->callback([&] {
        Loaded a = load_space(file_a, limits);
        Loaded b = load_space(file_b, limits);
        ConnSpace r = a.space;
        if (all_mode) {
            r = relabeled_or_synthesized(compose_all(a.space, b.space, limits),
                                         pair_labels(labels_of(a.space), labels_of(b.space)));
        } else {
            std::size_t p = point_of(a.space, at_label);
            std::vector<std::string> la = labels_of(a.space);
            la.erase(la.begin() + static_cast<std::ptrdiff_t>(p));
            r = relabeled_or_synthesized(compose_at(a.space, p, b.space, limits),
                                         side_by_side_labels(la, labels_of(b.space)));
        }
        print_space(out, r, joined_name(a.name, "compose", b.name), nontrivial);
    });

    auto* morph_cmd = app.add_subcommand("check-morphism", "test a map between spaces");
    morph_cmd->add_option("a", file_a, "source space file")->required();
    morph_cmd->add_option("b", file_b, "target space file")->required();
    morph_cmd->add_option("--map", map_text, "a=p,b=q,...")->required();
    morph_cmd->callback([&] {
        Loaded a = load_space(file_a, limits);
        Loaded b = load_space(file_b, limits);
        PointMap f = parse_map(map_text, a.space, b.space);
        out << (is_morphism(f, a.space, b.space) ? "morphism\n" : "not a morphism\n");
    });

    auto* iso_cmd = app.add_subcommand("iso", "find an isomorphism");
    iso_cmd->add_option("a", file_a, "left space file")->required();
    iso_cmd->add_option("b", file_b, "right space file")->required();
    iso_cmd->callback([&] {
        Loaded a = load_space(file_a, limits);
        Loaded b = load_space(file_b, limits);
        auto g = is_isomorphic(a.space, b.space, limits);
        if (!g) {
            out << "not isomorphic\n";
            return;
        }
        for (std::size_t p = 0; p < a.space.size(); ++p)
            out << a.space.ground().label(p) << " -> " << b.space.ground().label((*g)[p])
                << '\n';
    });

    auto* hom_cmd = app.add_subcommand("homotopy", "search for a homotopy between two maps");
    hom_cmd->add_option("a", file_a, "source space file")->required();
    hom_cmd->add_option("b", file_b, "target space file")->required();
    hom_cmd->add_option("--f", map_f, "first map, a=p,...")->required();
    hom_cmd->add_option("--g", map_g, "second map, a=p,...")->required();
    hom_cmd->add_option("--time", file_time, "time space file")->required();
    hom_cmd->add_option("--t0", t0_label, "start point label (default: first point)");
    hom_cmd->add_option("--t1", t1_label, "end point label (default: last point)");
    hom_cmd->callback([&] {
        Loaded x = load_space(file_a, limits);
        Loaded y = load_space(file_b, limits);
        Loaded t = load_space(file_time, limits);
        if (t.space.size() == 0) raise(Errc::bad_argument, "time space is empty");
        std::size_t p0 = t0_label.empty() ? 0 : point_of(t.space, t0_label);
        std::size_t p1 = t1_label.empty() ? t.space.size() - 1 : point_of(t.space, t1_label);
        Interval interval = Interval::of(t.space, p0, p1);
        PointMap f = parse_map(map_f, x.space, y.space);
        PointMap g = parse_map(map_g, x.space, y.space);
        auto h = homotopic(f, g, interval, x.space, y.space, limits);
        if (!h) {
            out << "not homotopic\n";
            return;
        }
        out << "homotopic\n";
        for (std::size_t tt = 0; tt < t.space.size(); ++tt) {
            std::vector<std::size_t> row(x.space.size());
            for (std::size_t p = 0; p < x.space.size(); ++p)
                row[p] = (*h)(pair_point(tt, p, x.space.size()));
            PointMap slice{x.space.size(), y.space.size(), std::move(row)};
            out << t.space.ground().label(tt) << ": " << format_map(slice, x.space, y.space)
                << '\n';
        }
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    } catch (const Error& e) {
        err << "error: " << errc_name(e.code()) << ": " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

} // namespace connspace
