#include "connspace/document.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "connspace/generation.hpp"

namespace connspace {

namespace {

[[noreturn]] void parse_fail(std::size_t line, std::size_t col, const std::string& what) {
    raise(Errc::parse_error,
          "line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + what);
}

struct Token {
    std::string text;
    std::size_t col; // 1-based
};

// Braces are single-character tokens; '#' cuts the rest of the line.
std::vector<Token> tokenize(const std::string& line) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        char c = line[i];
        if (c == '#') break;
        if (c == ' ' || c == '\t' || c == '\r') {
            ++i;
            continue;
        }
        if (c == '{' || c == '}') {
            out.push_back({std::string(1, c), i + 1});
            ++i;
            continue;
        }
        std::size_t start = i;
        while (i < line.size()) {
            char d = line[i];
            if (d == ' ' || d == '\t' || d == '\r' || d == '{' || d == '}' || d == '#') break;
            ++i;
        }
        out.push_back({line.substr(start, i - start), start + 1});
    }
    return out;
}

bool plain_word(const std::string& s) {
    return s != "{" && s != "}";
}

std::map<std::string, std::size_t> label_index(const std::vector<std::string>& points) {
    std::map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (points[i].empty()) raise(Errc::bad_argument, "empty point label");
        if (!index.emplace(points[i], i).second)
            raise(Errc::bad_argument, "duplicate point label: " + points[i]);
    }
    return index;
}

// Labels and names must survive tokenization to round trip.
void check_serializable(const std::string& s, const char* what) {
    if (s.empty()) raise(Errc::bad_argument, std::string("empty ") + what);
    for (char c : s)
        if (c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '{' || c == '}' || c == '#')
            raise(Errc::bad_argument,
                  std::string(what) + " '" + s + "' contains reserved characters");
}

} // namespace

SpaceDocument parse_document(const std::string& text) {
    SpaceDocument doc;
    bool saw_points = false;
    bool saw_name = false;
    bool saw_nonintegral = false;
    bool saw_raw = false;

    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::vector<Token> tokens = tokenize(line);
        if (tokens.empty()) continue;
        const std::string& head = tokens[0].text;

        if (head == "space") {
            if (saw_name) parse_fail(lineno, tokens[0].col, "duplicate space line");
            if (saw_points) parse_fail(lineno, tokens[0].col, "space line must precede points");
            if (tokens.size() != 2 || !plain_word(tokens[1].text))
                parse_fail(lineno, tokens.size() > 1 ? tokens[1].col : tokens[0].col,
                           "expected exactly one name");
            doc.name = tokens[1].text;
            saw_name = true;
        } else if (head == "points") {
            if (saw_points) parse_fail(lineno, tokens[0].col, "duplicate points line");
            for (std::size_t t = 1; t < tokens.size(); ++t) {
                if (!plain_word(tokens[t].text))
                    parse_fail(lineno, tokens[t].col, "unexpected brace in points line");
                for (const auto& prev : doc.points)
                    if (prev == tokens[t].text)
                        parse_fail(lineno, tokens[t].col,
                                   "duplicate point label '" + tokens[t].text + "'");
                doc.points.push_back(tokens[t].text);
            }
            saw_points = true;
        } else if (head == "connected") {
            if (!saw_points)
                parse_fail(lineno, tokens[0].col, "points line must precede connected sets");
            if (tokens.size() < 2 || tokens[1].text != "{")
                parse_fail(lineno, tokens.size() > 1 ? tokens[1].col : tokens[0].col,
                           "expected '{'");
            std::vector<std::string> set;
            std::size_t t = 2;
            while (t < tokens.size() && tokens[t].text != "}") {
                if (!plain_word(tokens[t].text))
                    parse_fail(lineno, tokens[t].col, "unexpected brace inside a set");
                if (std::find(doc.points.begin(), doc.points.end(), tokens[t].text) ==
                    doc.points.end())
                    raise(Errc::unknown_label, "line " + std::to_string(lineno) + ", column " +
                                                   std::to_string(tokens[t].col) +
                                                   ": unknown label '" + tokens[t].text + "'");
                set.push_back(tokens[t].text);
                ++t;
            }
            if (t == tokens.size())
                parse_fail(lineno, line.size() + 1, "expected '}'");
            if (t + 1 != tokens.size())
                parse_fail(lineno, tokens[t + 1].col, "unexpected text after '}'");
            doc.connected.push_back(std::move(set));
        } else if (head == "nonintegral") {
            if (tokens.size() != 1) parse_fail(lineno, tokens[1].col, "unexpected text");
            if (saw_nonintegral) parse_fail(lineno, tokens[0].col, "duplicate nonintegral line");
            doc.integral = false;
            saw_nonintegral = true;
        } else if (head == "raw") {
            if (tokens.size() != 1) parse_fail(lineno, tokens[1].col, "unexpected text");
            if (saw_raw) parse_fail(lineno, tokens[0].col, "duplicate raw line");
            doc.generated = false;
            saw_raw = true;
        } else {
            parse_fail(lineno, tokens[0].col, "unknown directive '" + head + "'");
        }
    }
    if (!saw_points) parse_fail(lineno + 1, 1, "missing points line");
    return doc;
}

SpaceDocument canonicalize(const SpaceDocument& doc) {
    if (!doc.name.empty()) check_serializable(doc.name, "name");
    for (const auto& p : doc.points) check_serializable(p, "label");
    auto index = label_index(doc.points);

    SpaceDocument out;
    out.name = doc.name;
    out.integral = doc.integral;
    out.generated = doc.generated;
    out.points = doc.points;
    std::sort(out.points.begin(), out.points.end());

    std::vector<std::size_t> new_index(doc.points.size());
    for (std::size_t i = 0; i < out.points.size(); ++i)
        new_index[index.at(out.points[i])] = i;

    std::vector<Subset> masks;
    for (const auto& set : doc.connected) {
        Subset s;
        for (const auto& label : set) {
            auto it = index.find(label);
            if (it == index.end()) raise(Errc::unknown_label, "unknown label '" + label + "'");
            s = s.with(new_index[it->second]);
        }
        masks.push_back(s);
    }
    SubsetFamily family(std::move(masks));

    for (Subset s : family.members()) {
        std::vector<std::string> set;
        s.for_each_point([&](std::size_t i) { set.push_back(out.points[i]); });
        out.connected.push_back(std::move(set));
    }
    return out;
}

std::string serialize(const SpaceDocument& doc) {
    SpaceDocument c = canonicalize(doc);
    std::ostringstream out;
    if (!c.name.empty()) out << "space " << c.name << '\n';
    out << "points";
    for (const auto& p : c.points) out << ' ' << p;
    out << '\n';
    if (!c.integral) out << "nonintegral\n";
    if (!c.generated) out << "raw\n";
    for (const auto& set : c.connected) {
        out << "connected {";
        for (std::size_t i = 0; i < set.size(); ++i) {
            if (i) out << ' ';
            out << set[i];
        }
        out << "}\n";
    }
    return out.str();
}

ConnSpace document_to_space(const SpaceDocument& doc, const Limits& limits) {
    auto index = label_index(doc.points);
    GroundSet ground = GroundSet::of(doc.points.size(), doc.points);
    check_carrier(ground.n, limits);

    std::vector<Subset> masks;
    for (const auto& set : doc.connected) {
        Subset s;
        for (const auto& label : set) {
            auto it = index.find(label);
            if (it == index.end()) raise(Errc::unknown_label, "unknown label '" + label + "'");
            s = s.with(it->second);
        }
        masks.push_back(s);
    }
    SubsetFamily family(std::move(masks));

    if (doc.generated) return generate(ground, family, doc.integral, limits);
    return make_space(std::move(ground), std::move(family), doc.integral, limits);
}

SpaceDocument space_to_document(const ConnSpace& space, const std::string& name) {
    SpaceDocument doc;
    doc.name = name;
    doc.integral = space.integral();
    doc.generated = false;
    doc.points = space.ground().labels.empty() ? synthesize_labels(space.size())
                                               : space.ground().labels;
    for (Subset s : space.structure().members()) {
        std::vector<std::string> set;
        s.for_each_point([&](std::size_t i) { set.push_back(doc.points[i]); });
        doc.connected.push_back(std::move(set));
    }
    return doc;
}

std::vector<std::string> synthesize_labels(std::size_t n) {
    std::vector<std::string> out;
    out.reserve(n);
    if (n <= 26) {
        for (std::size_t i = 0; i < n; ++i) out.push_back(std::string(1, char('a' + i)));
        return out;
    }
    std::size_t width = std::to_string(n - 1).size();
    for (std::size_t i = 0; i < n; ++i) {
        std::string digits = std::to_string(i);
        out.push_back("p" + std::string(width - digits.size(), '0') + digits);
    }
    return out;
}

} // namespace connspace
