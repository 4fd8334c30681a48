#include "crooked/io/scene.hpp"

#include <charconv>
#include <cmath>
#include <set>
#include <sstream>

#include <json.hpp>

namespace crooked::io {

using json = nlohmann::ordered_json;

std::string format_double(double x) {
    if (x == 0.0) x = 0.0;
    char buf[32];
    auto res = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, res.ptr);
}

Triple Triple::of(double x, double y, double z) {
    Triple t;
    t.value = {x, y, z};
    for (int i = 0; i < 3; ++i) t.exact[i] = rational_from_double(t.value[i]);
    return t;
}

namespace {

void read_number(const json& j, double& value, Rational& exact, bool& textual,
                 const std::string& what) {
    if (j.is_string()) {
        exact = parse_rational(j.get<std::string>());
        value = to_double(exact);
        textual = true;
    } else if (j.is_number_integer() || j.is_number_unsigned()) {
        exact = j.is_number_unsigned() ? Rational(j.get<std::uint64_t>()) : Rational(j.get<std::int64_t>());
        value = to_double(exact);
    } else if (j.is_number_float()) {
        value = j.get<double>();
        exact = rational_from_double(value);
    } else {
        throw ParseError(what + ": expected a number");
    }
}

Triple read_triple(const json& j, const std::string& what) {
    if (!j.is_array() || j.size() != 3) throw ParseError(what + ": expected an array of 3 numbers");
    Triple t;
    for (int i = 0; i < 3; ++i) read_number(j[i], t.value[i], t.exact[i], t.textual, what);
    return t;
}

double read_double(const json& j, const std::string& what) {
    double v;
    Rational r;
    bool textual = false;
    read_number(j, v, r, textual, what);
    return v;
}

json write_triple(const Triple& t) {
    json a = json::array();
    for (int i = 0; i < 3; ++i) {
        if (t.textual)
            a.push_back(to_string(t.exact[i]));
        else
            a.push_back(t.value[i] == 0.0 ? 0.0 : t.value[i]);
    }
    return a;
}

void check_fields(const json& j, const std::set<std::string>& required,
                  const std::set<std::string>& optional) {
    for (auto it = j.begin(); it != j.end(); ++it) {
        if (!required.count(it.key()) && !optional.count(it.key()))
            throw ParseError("unknown field '" + it.key() + "'");
    }
    for (const auto& k : required)
        if (!j.contains(k)) throw ParseError("missing field '" + k + "'");
}

void check_chart(const json& j) {
    if (j.contains("chart") && j["chart"] != "std")
        throw ParseError("only the \"std\" chart is supported in records");
}

std::string read_expr(const json& j, const std::string& what) {
    std::string text;
    if (j.is_string())
        text = j.get<std::string>();
    else if (j.is_number())
        text = format_double(j.get<double>());
    else
        throw ParseError(what + ": expected an expression string or a number");
    Expr::parse(text);  // validate early
    return text;
}

}  // namespace

CrookedFoliation FoliationRecord::build() const {
    if (director_family != "orthogonal")
        throw ParseError("unknown director_family '" + director_family + "'");
    const DirectorPath dp = DirectorPath::orthogonal(t0, t1);
    const CoefficientPath cp{Expr::parse(a), Expr::parse(b), std::sqrt(2.0)};
    return vertex_path(dp, cp, p0.point(), steps, anchor);
}

Record parse_record(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("malformed record: ") + e.what());
    }
    if (!j.is_object() || !j.contains("type") || !j["type"].is_string())
        throw ParseError("record must be an object with a string \"type\"");
    const std::string type = j["type"];
    check_chart(j);
    if (type == "halfspace") {
        check_fields(j, {"type", "vertex", "director"}, {"chart"});
        HalfspaceRecord r{read_triple(j["vertex"], "vertex"), read_triple(j["director"], "director")};
        return r;
    }
    if (type == "line") {
        check_fields(j, {"type", "base", "dir"}, {"chart"});
        LineRecord r{read_triple(j["base"], "base"), read_triple(j["dir"], "dir")};
        return r;
    }
    if (type == "plane") {
        check_fields(j, {"type", "point", "span"}, {"chart"});
        const json& sp = j["span"];
        if (!sp.is_array() || sp.size() != 2) throw ParseError("span: expected two vectors");
        PlaneRecord r{read_triple(j["point"], "point"),
                      {read_triple(sp[0], "span"), read_triple(sp[1], "span")}};
        return r;
    }
    if (type == "foliation") {
        check_fields(j, {"type", "director_family", "t_range", "coeffs", "p0", "steps"},
                     {"chart", "anchor"});
        FoliationRecord r;
        if (!j["director_family"].is_string()) throw ParseError("director_family: expected a string");
        r.director_family = j["director_family"];
        if (r.director_family != "orthogonal")
            throw ParseError("unknown director_family '" + r.director_family + "'");
        const json& tr = j["t_range"];
        if (!tr.is_array() || tr.size() != 2) throw ParseError("t_range: expected [t0, t1]");
        r.t0 = read_double(tr[0], "t_range");
        r.t1 = read_double(tr[1], "t_range");
        if (!(r.t0 < r.t1)) throw ParseError("t_range: need t0 < t1");
        const json& co = j["coeffs"];
        if (!co.is_object()) throw ParseError("coeffs: expected an object");
        check_fields(co, {"a", "b"}, {});
        r.a = read_expr(co["a"], "coeffs.a");
        r.b = read_expr(co["b"], "coeffs.b");
        r.p0 = read_triple(j["p0"], "p0");
        if (!j["steps"].is_number_integer()) throw ParseError("steps: expected an integer");
        r.steps = j["steps"].get<int>();
        if (r.steps < 2) throw ParseError("steps: need at least 2");
        if (j.contains("anchor")) r.anchor = read_double(j["anchor"], "anchor");
        return r;
    }
    throw ParseError("unknown record type '" + type + "'");
}

std::string format_record(const Record& rec) {
    json j;
    std::visit(
        [&](const auto& r) {
            using R = std::decay_t<decltype(r)>;
            if constexpr (std::is_same_v<R, HalfspaceRecord>) {
                j["type"] = "halfspace";
                j["vertex"] = write_triple(r.vertex);
                j["director"] = write_triple(r.director);
                j["chart"] = "std";
            } else if constexpr (std::is_same_v<R, LineRecord>) {
                j["type"] = "line";
                j["base"] = write_triple(r.base);
                j["dir"] = write_triple(r.dir);
                j["chart"] = "std";
            } else if constexpr (std::is_same_v<R, PlaneRecord>) {
                j["type"] = "plane";
                j["point"] = write_triple(r.point);
                j["span"] = json::array({write_triple(r.span[0]), write_triple(r.span[1])});
                j["chart"] = "std";
            } else {
                j["type"] = "foliation";
                j["director_family"] = r.director_family;
                j["t_range"] = json::array({r.t0, r.t1});
                j["coeffs"] = json{{"a", r.a}, {"b", r.b}};
                j["p0"] = write_triple(r.p0);
                j["steps"] = r.steps;
                if (r.anchor) j["anchor"] = *r.anchor;
            }
        },
        rec);
    return j.dump();
}

std::vector<Record> parse_scene(std::istream& in) {
    std::vector<Record> out;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        try {
            out.push_back(parse_record(line));
        } catch (const ParseError& e) {
            throw ParseError("line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    return out;
}

Triple parse_triple(const std::string& text) {
    Triple t;
    std::stringstream ss(text);
    std::string part;
    int i = 0;
    while (std::getline(ss, part, ',')) {
        if (i == 3) throw ParseError("expected three comma-separated numbers: '" + text + "'");
        t.exact[i] = parse_rational(part);
        t.value[i] = to_double(t.exact[i]);
        ++i;
    }
    if (i != 3) throw ParseError("expected three comma-separated numbers: '" + text + "'");
    return t;
}

}  // namespace crooked::io
