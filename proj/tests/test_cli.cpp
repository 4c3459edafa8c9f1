#include "doctest.h"

#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include "connspace/catalog.hpp"
#include "connspace/cli.hpp"
#include "connspace/constructions.hpp"
#include "connspace/document.hpp"

using namespace connspace;

namespace {

struct CliRun {
    int code;
    std::string out;
    std::string err;
};

CliRun run(const std::vector<std::string>& args) {
    std::vector<const char*> argv;
    argv.push_back("connspace");
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string data(const std::string& name) {
    return std::string(CONNSPACE_TEST_DIR) + "/data/" + name;
}

ConnSpace space_of(const std::string& output) {
    return document_to_space(parse_document(output));
}

} // namespace

TEST_SUITE("cli") {

TEST_CASE("validate reports size or the first defect") {
    CliRun ok = run({"validate", data("b3.space")});
    CHECK(ok.code == 0);
    CHECK(ok.out == "valid: 3 points, 5 connected sets\n");
    CHECK(ok.err.empty());

    CliRun raw = run({"validate", data("raw_missing_empty.space")});
    CHECK(raw.code == 1);
    CHECK(raw.out.empty());
    CHECK(raw.err == "error: MissingEmptySet: the empty set is not a member\n");

    CliRun missing = run({"validate", data("no_such_file.space")});
    CHECK(missing.code == 1);
    CHECK(missing.err.find("error: BadArgument: cannot read") == 0);
}

TEST_CASE("generate prints the closure as a raw document") {
    CliRun r = run({"generate", data("b3.space")});
    CHECK(r.code == 0);
    CHECK(r.out == "space B3\n"
                   "points a b c\n"
                   "raw\n"
                   "connected {}\n"
                   "connected {a}\n"
                   "connected {b}\n"
                   "connected {c}\n"
                   "connected {a b c}\n");

    CliRun nt = run({"generate", "--nontrivial", data("b3.space")});
    CHECK(nt.code == 0);
    CHECK(nt.out == "space B3\npoints a b c\nconnected {a b c}\n");
}

TEST_CASE("info summarizes connectivity facts") {
    CliRun b3 = run({"info", data("b3.space")});
    CHECK(b3.code == 0);
    CHECK(b3.out == "name: B3\n"
                    "points: 3\n"
                    "integral: yes\n"
                    "connected: yes\n"
                    "components: 1\n"
                    "irreducible: yes\n"
                    "distinguished: yes\n"
                    "index: 1\n");

    CliRun v9 = run({"info", data("v9.space")});
    CHECK(v9.code == 0);
    CHECK(v9.out.find("points: 9\n") != std::string::npos);
    CHECK(v9.out.find("index: 8\n") != std::string::npos);

    CliRun two = run({"info", data("two.space")});
    CHECK(two.out == "name: Two\n"
                     "points: 4\n"
                     "integral: yes\n"
                     "connected: no\n"
                     "components: 2\n"
                     "irreducible: no\n"
                     "distinguished: yes\n"
                     "index: 1\n");

    CliRun plain = run({"info", data("plain.space")});
    CHECK(plain.out == "points: 2\n"
                       "integral: no\n"
                       "connected: yes\n"
                       "components: n/a\n"
                       "irreducible: yes\n"
                       "distinguished: yes\n"
                       "index: n/a\n");
}

TEST_CASE("irreducibles prints a generating document") {
    CliRun r = run({"irreducibles", data("v9.space")});
    CHECK(r.code == 0);
    SpaceDocument doc = parse_document(r.out);
    CHECK(doc.generated);
    CHECK(doc.connected.size() == 17); // 9 singletons and 8 longer segments
    CHECK(space_of(r.out) == v_space(9));
}

TEST_CASE("graph prints vertices and covering edges") {
    CliRun text = run({"graph", data("b3.space")});
    CHECK(text.code == 0);
    CHECK(text.out == "v0 {a}\n"
                      "v1 {b}\n"
                      "v2 {c}\n"
                      "v3 {a b c}\n"
                      "v3 -> v0\n"
                      "v3 -> v1\n"
                      "v3 -> v2\n");

    CliRun dot = run({"graph", "--dot", data("b3.space")});
    CHECK(dot.code == 0);
    CHECK(dot.out == "digraph connectivity {\n"
                     "  n0 [label=\"{a}\", shape=box];\n"
                     "  n1 [label=\"{b}\", shape=box];\n"
                     "  n2 [label=\"{c}\", shape=box];\n"
                     "  n3 [label=\"{a b c}\"];\n"
                     "  n3 -> n0;\n"
                     "  n3 -> n1;\n"
                     "  n3 -> n2;\n"
                     "}\n");

    CliRun plain = run({"graph", data("plain.space")});
    CHECK(plain.code == 1);
    CHECK(plain.err.find("error: NotIntegral") == 0);
}

TEST_CASE("binary constructions label the pair carrier") {
    CliRun prod = run({"product", data("b2.space"), data("b2.space")});
    CHECK(prod.code == 0);
    SpaceDocument doc = parse_document(prod.out);
    CHECK(doc.name == "B2_product_B2");
    CHECK(doc.points == std::vector<std::string>{"a.a", "a.b", "b.a", "b.b"});
    CHECK(space_of(prod.out) == indiscrete(4));

    CliRun co = run({"coproduct", data("b2.space"), data("b2.space")});
    SpaceDocument codoc = parse_document(co.out);
    CHECK(codoc.points == std::vector<std::string>{"l.a", "l.b", "r.a", "r.b"});
    CHECK(space_of(co.out) == coproduct(brunnian(2), brunnian(2)));

    CliRun mixed = run({"coproduct", data("b2.space"), data("path3.space")});
    CHECK(parse_document(mixed.out).points ==
          std::vector<std::string>{"a", "b", "x", "y", "z"});

    CliRun ten = run({"tensor", data("b2.space"), data("b2.space")});
    CHECK(space_of(ten.out).structure().size() == 14);
    CHECK(space_of(prod.out).structure().size() == 16);
}

TEST_CASE("pointed constructions take one base per input") {
    CliRun w = run({"wedge", data("b2.space"), data("b2.space"), "--base", "a", "a"});
    CHECK(w.code == 0);
    SpaceDocument wdoc = parse_document(w.out);
    CHECK(wdoc.points == std::vector<std::string>{"l.a+r.a", "l.b", "r.b"});
    CHECK(space_of(w.out).structure().size() == 7);

    CliRun s = run({"smash", data("b2.space"), data("b2.space"), "--base", "a", "a"});
    CHECK(s.code == 0);
    SpaceDocument sdoc = parse_document(s.out);
    CHECK(sdoc.points == std::vector<std::string>{"a.a+a.b+b.a", "b.b"});
    CHECK(space_of(s.out) == indiscrete(2));

    CliRun one_base = run({"wedge", data("b2.space"), data("b2.space"), "--base", "a"});
    CHECK(one_base.code == 2);
    CliRun bad_base = run({"wedge", data("b2.space"), data("b2.space"), "--base", "q", "a"});
    CHECK(bad_base.code == 1);
    CHECK(bad_base.err.find("error: UnknownLabel") == 0);
}

TEST_CASE("quotient and subspace work on labeled points") {
    CliRun q = run({"quotient", data("b3.space"), "--merge", "a,b"});
    CHECK(q.code == 0);
    SpaceDocument qdoc = parse_document(q.out);
    CHECK(qdoc.points == std::vector<std::string>{"a+b", "c"});
    CHECK(space_of(q.out) == indiscrete(2));

    CliRun s = run({"subspace", data("v9.space"), "--keep", "a,b,c"});
    CHECK(s.code == 0);
    CHECK(parse_document(s.out).points == std::vector<std::string>{"a", "b", "c"});
    CHECK(space_of(s.out) == v_space(3));

    CliRun bad = run({"subspace", data("v9.space"), "--keep", "a,q"});
    CHECK(bad.code == 1);
    CHECK(bad.err.find("error: UnknownLabel") == 0);
}

TEST_CASE("compose grafts at one point or at every point") {
    CliRun at = run({"compose", data("b3.space"), data("b3.space"), "--at", "a"});
    CHECK(at.code == 0);
    SpaceDocument atdoc = parse_document(at.out);
    CHECK(atdoc.name == "B3_compose_B3");
    CHECK(atdoc.points == std::vector<std::string>{"l.b", "l.c", "r.a", "r.b", "r.c"});
    CHECK(space_of(at.out).structure().size() == 8);

    CliRun all = run({"compose", data("b2.space"), data("b2.space"), "--all"});
    CHECK(all.code == 0);
    CHECK(parse_document(all.out).points ==
          std::vector<std::string>{"a.a", "a.b", "b.a", "b.b"});
    CHECK(space_of(all.out) == compose_all(brunnian(2), brunnian(2)));

    CHECK(run({"compose", data("b2.space"), data("b2.space")}).code == 2);
    CHECK(run({"compose", data("b2.space"), data("b2.space"), "--at", "a", "--all"}).code == 2);

    CliRun not_irr = run({"compose", data("b2.space"), data("two.space"), "--all"});
    CHECK(not_irr.code == 1);
    CHECK(not_irr.err.find("error: NotIrreducible") == 0);
}

TEST_CASE("check-morphism evaluates a labeled map") {
    CliRun yes = run({"check-morphism", data("b3.space"), data("path3.space"), "--map",
                      "a=x,b=y,c=z"});
    CHECK(yes.code == 0);
    CHECK(yes.out == "morphism\n");

    CliRun no = run({"check-morphism", data("path3.space"), data("b3.space"), "--map",
                     "x=a,y=b,z=c"});
    CHECK(no.code == 0);
    CHECK(no.out == "not a morphism\n");

    CliRun unknown = run({"check-morphism", data("b2.space"), data("b2.space"), "--map",
                          "a=a,b=q"});
    CHECK(unknown.code == 1);
    CHECK(unknown.err.find("error: UnknownLabel") == 0);

    CliRun partial = run({"check-morphism", data("b2.space"), data("b2.space"), "--map",
                          "a=a"});
    CHECK(partial.code == 1);
    CHECK(partial.err.find("error: BadArgument: no image for point 'b'") == 0);
}

TEST_CASE("iso prints a bijection or says there is none") {
    CliRun yes = run({"iso", data("b3.space"), data("b3_xyz.space")});
    CHECK(yes.code == 0);
    CHECK(yes.out == "a -> x\nb -> y\nc -> z\n");

    CliRun no = run({"iso", data("b3.space"), data("path3.space")});
    CHECK(no.code == 0);
    CHECK(no.out == "not isomorphic\n");
}

TEST_CASE("homotopy searches over a marked time space") {
    CliRun yes = run({"homotopy", data("point.space"), data("v3.space"), "--f", "p=a", "--g",
                      "p=b", "--time", data("path3.space")});
    CHECK(yes.code == 0);
    CHECK(yes.out == "homotopic\n"
                     "x: p=a\n"
                     "y: p=a\n"
                     "z: p=b\n");

    CliRun no = run({"homotopy", data("point.space"), data("v3.space"), "--f", "p=b", "--g",
                     "p=c", "--time", data("path3.space")});
    CHECK(no.code == 0);
    CHECK(no.out == "not homotopic\n");

    CliRun pinned = run({"homotopy", data("point.space"), data("v3.space"), "--f", "p=b",
                         "--g", "p=b", "--time", data("path3.space"), "--t0", "z", "--t1",
                         "z"});
    CHECK(pinned.code == 0);
    CHECK(pinned.out.substr(0, 10) == "homotopic\n");

    CHECK(run({"homotopy", data("point.space"), data("v3.space"), "--f", "p=a", "--g",
               "p=b"})
              .code == 2);
}

TEST_CASE("limits come from flags or the environment") {
    CliRun flag = run({"--max-carrier", "2", "info", data("b3.space")});
    CHECK(flag.code == 1);
    CHECK(flag.err.find("error: SizeLimitExceeded") == 0);

    setenv("CONNSPACE_MAX_CARRIER", "2", 1);
    CliRun env = run({"validate", data("b3.space")});
    unsetenv("CONNSPACE_MAX_CARRIER");
    CHECK(env.code == 1);
    CHECK(env.err.find("error: SizeLimitExceeded") == 0);

    CliRun still_ok = run({"validate", data("b3.space")});
    CHECK(still_ok.code == 0);
}

TEST_CASE("usage problems exit with code two") {
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"validate"}).code == 2);

    CliRun help = run({"--help"});
    CHECK(help.code == 0);
    CHECK(help.out.find("validate") != std::string::npos);
}

} // TEST_SUITE
