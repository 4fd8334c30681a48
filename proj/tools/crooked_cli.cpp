// crooked: command-line front end for the crooked plane kernel.
//
// Every command prints one JSON record per line on stdout. Exit codes:
// 0 success, 2 invalid input, 3 method disagreement or failed certification.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "crooked/disjointness.hpp"
#include "crooked/foliation.hpp"
#include "crooked/io/emit.hpp"
#include "crooked/io/scene.hpp"
#include "crooked/minkowski.hpp"

using namespace crooked;
using json = nlohmann::ordered_json;

namespace {

constexpr int kExitInvalid = 2;
constexpr int kExitDisagree = 3;

struct Globals {
    double eps = 1e-9;
    bool rational = false;
    std::uint64_t seed = 0;

    Tolerance tol() const { return Tolerance{eps}; }
};

json vec_json(const Vec3<double>& v) {
    return json::array({v.x == 0 ? 0.0 : v.x, v.y == 0 ? 0.0 : v.y, v.z == 0 ? 0.0 : v.z});
}
json point_json(const Point<double>& p) {
    return vec_json(p.as_vector());
}
json vec_json(const Vec3<Rational>& v) {
    return json::array({to_string(v.x), to_string(v.y), to_string(v.z)});
}

void print(const json& j) {
    std::cout << j.dump() << "\n";
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

/// Inline JSON record, or the path of a scene file whose records are scanned
/// for the first of type R.
template <class R>
R record_arg(const std::string& arg, const char* what) {
    const auto first = arg.find_first_not_of(" \t");
    std::vector<io::Record> recs;
    if (first != std::string::npos && arg[first] == '{') {
        recs.push_back(io::parse_record(arg));
    } else {
        std::istringstream in(slurp(arg));
        recs = io::parse_scene(in);
    }
    for (auto& r : recs)
        if (auto* p = std::get_if<R>(&r)) return *p;
    throw ParseError(std::string("no ") + what + " record in '" + arg + "'");
}

io::HalfspaceRecord halfspace_arg(const std::string& arg) {
    if (arg.empty()) {
        return io::HalfspaceRecord{io::Triple::of(0, 0, 0), io::Triple::of(1, 0, 0)};
    }
    return record_arg<io::HalfspaceRecord>(arg, "halfspace");
}

io::Box box_arg(const std::string& text) {
    std::stringstream ss(text);
    std::string part;
    std::vector<double> v;
    while (std::getline(ss, part, ',')) v.push_back(to_double(parse_rational(part)));
    if (v.size() != 6) throw ParseError("--clip expects xmin,ymin,zmin,xmax,ymax,zmax");
    io::Box b;
    for (int i = 0; i < 3; ++i) {
        b.lo[i] = v[i];
        b.hi[i] = v[i + 3];
    }
    return b;
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot write '" + path + "'");
    out << content;
}

int cmd_classify(const Globals& g, const std::string& vec) {
    const io::Triple t = io::parse_triple(vec);
    const CausalClass c = g.rational ? classify(t.exact_vec(), g.tol()) : classify(t.vec(), g.tol());
    print(json{{"class", to_string(c)}});
    return 0;
}

int cmd_frame(const Globals& g, const std::string& dir) {
    const io::Triple t = io::parse_triple(dir);
    if (g.rational) {
        const auto f = null_frame(t.exact_vec(), g.tol());
        print(json{{"s", vec_json(f.s())}, {"s_minus", vec_json(f.s_minus())}, {"s_plus", vec_json(f.s_plus())}});
    } else {
        const auto f = null_frame(t.vec(), g.tol());
        print(json{{"s", vec_json(f.s())}, {"s_minus", vec_json(f.s_minus())}, {"s_plus", vec_json(f.s_plus())}});
    }
    return 0;
}

int cmd_contains(const Globals& g, const std::string& hs, const std::string& point, bool closed) {
    const io::HalfspaceRecord r = halfspace_arg(hs);
    const io::Triple q = io::parse_triple(point);
    json j;
    if (g.rational) {
        const auto h = r.exact_halfspace(g.tol());
        j["contains"] = contains(h, q.exact_point(), closed, g.tol());
        j["closed"] = closed;
        j["stratum"] = to_string(stratum(h, q.exact_point(), g.tol()));
        j["coords"] = vec_json(h.coords(q.exact_point()));
    } else {
        const auto h = r.halfspace(g.tol());
        j["contains"] = contains(h, q.point(), closed, g.tol());
        j["closed"] = closed;
        j["stratum"] = to_string(stratum(h, q.point(), g.tol()));
        j["coords"] = vec_json(h.coords(q.point()));
    }
    print(j);
    return 0;
}

int cmd_linearize(const Globals& g, const std::string& hs) {
    const io::HalfspaceRecord r = halfspace_arg(hs);
    if (g.rational)
        print(json{{"halfplane", vec_json(linearize(r.exact_halfspace(g.tol())).s)}});
    else
        print(json{{"halfplane", vec_json(linearize(r.halfspace(g.tol())).s)}});
    return 0;
}

int cmd_disjoint(const Globals& g, const std::string& h1s, const std::string& h2s,
                 const std::string& scene, std::size_t oracle) {
    io::HalfspaceRecord r1, r2;
    if (!scene.empty()) {
        std::istringstream in(slurp(scene));
        std::vector<io::HalfspaceRecord> hs;
        for (auto& rec : io::parse_scene(in))
            if (auto* p = std::get_if<io::HalfspaceRecord>(&rec)) hs.push_back(*p);
        if (hs.size() < 2) throw ParseError("scene needs two halfspace records");
        r1 = hs[0];
        r2 = hs[1];
    } else {
        if (h1s.empty() || h2s.empty()) throw ParseError("disjoint needs --h1 and --h2, or --scene");
        r1 = halfspace_arg(h1s);
        r2 = halfspace_arg(h2s);
    }
    const auto h1 = r1.halfspace(g.tol());
    const auto h2 = r2.halfspace(g.tol());
    DisjointnessReport rep = disjointness_report(h1, h2, oracle, g.seed, g.tol());

    json j;
    j["relation"] = to_string(rep.relation);
    j["consistent"] = rep.consistent;
    j["closed_disjoint"] = rep.closed_disjoint;
    j["open_disjoint"] = rep.open_disjoint;
    j["planes_disjoint"] = rep.closed_disjoint;
    j["dg"] = rep.dg ? json(*rep.dg) : json(nullptr);
    if (g.rational) {
        const auto e1 = r1.exact_halfspace(g.tol());
        const auto e2 = r2.exact_halfspace(g.tol());
        const bool ec = halfspaces_disjoint(e1, e2, true, g.tol());
        const bool eo = halfspaces_disjoint(e1, e2, false, g.tol());
        j["exact_closed_disjoint"] = ec;
        j["exact_open_disjoint"] = eo;
        if (ec != rep.closed_disjoint || eo != rep.open_disjoint) {
            rep.disagreement = true;
            rep.note += std::string(rep.note.empty() ? "" : "; ") + "floating point vs exact";
        }
    }
    if (rep.oracle) {
        j["oracle"] = json{{"samples", rep.oracle->samples},
                           {"intersect", rep.oracle->intersect},
                           {"method", rep.oracle->method}};
    } else {
        j["oracle"] = nullptr;
    }
    j["witness"] = rep.witness ? point_json(*rep.witness) : json(nullptr);
    j["agree"] = !rep.disagreement;
    if (!rep.note.empty()) j["note"] = rep.note;
    print(j);
    return rep.disagreement ? kExitDisagree : 0;
}

int cmd_zigzag(const Globals& g, const std::string& hs, const std::string& plane,
               const std::string& format, double ray_length, const std::string& out) {
    const auto h = halfspace_arg(hs).halfspace(g.tol());
    const auto pr = record_arg<io::PlaneRecord>(plane, "plane");
    const io::Zigzag z = io::zigzag(h, io::Plane::from_record(pr), g.tol());
    const auto rows = io::zigzag_vertices(h, z, ray_length, g.tol());
    write_output(out, format == "svg" ? io::zigzag_svg(z, rows) : io::zigzag_csv(rows));
    return 0;
}

json report_json(const CertificationReport& r) {
    json j;
    j["certified"] = r.passed;
    j["velocities_ok"] = r.velocities_ok;
    j["pairs_ok"] = r.pairs_ok;
    j["order"] = r.order;
    j["pairs_checked"] = r.pairs_checked;
    j["bad_velocity"] = r.bad_velocity ? json(*r.bad_velocity) : json(nullptr);
    j["bad_pair"] = r.bad_pair ? json::array({r.bad_pair->first, r.bad_pair->second}) : json(nullptr);
    j["witness"] = r.witness ? point_json(*r.witness) : json(nullptr);
    j["message"] = r.message;
    return j;
}

int cmd_foliate(const Globals& g, const std::string& spec, const std::string& emit,
                const std::string& out, int leaves, const std::string& clip, int resolution) {
    const auto rec = record_arg<io::FoliationRecord>(spec, "foliation");
    const CrookedFoliation f = rec.build();
    const CertificationReport rep = certify_foliation(f, 101, g.tol());

    std::string content;
    if (emit == "obj") {
        const io::Box box = box_arg(clip);
        io::Mesh all;
        const std::size_t n = f.samples.size();
        const std::size_t m = std::max<std::size_t>(1, std::min<std::size_t>(leaves, n));
        for (std::size_t k = 0; k < m; ++k) {
            const std::size_t i = m == 1 ? 0 : k * (n - 1) / (m - 1);
            io::append_mesh(all, io::crooked_plane_mesh(f.leaf(i), box, resolution));
        }
        content = io::mesh_obj(all);
    } else {
        content = io::vertex_path_csv(f);
    }
    json j = report_json(rep);
    j["samples"] = f.samples.size();
    if (out.empty() || out == "-") {
        std::cout << content;
        std::cerr << j.dump() << "\n";
    } else {
        write_output(out, content);
        print(j);
    }
    return rep.passed ? 0 : kExitDisagree;
}

int cmd_mesh(const Globals& g, const std::string& hs, const std::string& clip, int resolution,
             const std::string& out) {
    const auto h = halfspace_arg(hs).halfspace(g.tol());
    write_output(out, io::mesh_obj(io::crooked_plane_mesh(h, box_arg(clip), resolution)));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Crooked planes and halfspaces in 2+1 Minkowski space"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals g;
    app.add_option("--eps", g.eps, "Tolerance of sign predicates")->check(CLI::PositiveNumber);
    app.add_flag("--rational", g.rational, "Exact rational evaluation of predicates");
    app.add_option("--seed", g.seed, "Seed for randomized oracles");

    std::string vec, dir, hs, point, h1, h2, scene, plane, format = "csv", spec, emit = "csv", out,
                                                         clip = "-5,-5,-5,5,5,5";
    bool closed = false;
    std::size_t oracle = 0;
    double ray_length = 10;
    int leaves = 11, resolution = 1;

    auto* classify_cmd = app.add_subcommand("classify", "Causal type of a vector");
    classify_cmd->add_option("--vec", vec, "x,y,z")->required();

    auto* frame_cmd = app.add_subcommand("frame", "Null frame of a spacelike vector");
    frame_cmd->add_option("--dir", dir, "x,y,z")->required();

    auto* contains_cmd = app.add_subcommand("contains", "Membership of a point in a crooked halfspace");
    contains_cmd->add_option("--halfspace", hs, "Inline record or scene file (default: canonical)");
    contains_cmd->add_option("--point", point, "x,y,z")->required();
    contains_cmd->add_flag("--closed", closed, "Test the closed halfspace");

    auto* linearize_cmd = app.add_subcommand("linearize", "Halfplane of a crooked halfspace");
    linearize_cmd->add_option("--halfspace", hs, "Inline record or scene file (default: canonical)");

    auto* disjoint_cmd = app.add_subcommand("disjoint", "Disjointness report for two halfspaces");
    disjoint_cmd->add_option("--h1", h1, "First halfspace");
    disjoint_cmd->add_option("--h2", h2, "Second halfspace");
    disjoint_cmd->add_option("--scene", scene, "Scene file; its first two halfspaces are used");
    disjoint_cmd->add_option("--oracle", oracle, "Sampling oracle points per halfspace (0 = off)");

    auto* zigzag_cmd = app.add_subcommand("zigzag", "Intersection of a crooked plane with a definite plane");
    zigzag_cmd->add_option("--halfspace", hs, "Inline record or scene file (default: canonical)");
    zigzag_cmd->add_option("--plane", plane, "Plane record or scene file")->required();
    zigzag_cmd->add_option("--out", format, "csv or svg")->check(CLI::IsMember({"csv", "svg"}));
    zigzag_cmd->add_option("--ray-length", ray_length, "Length of the two wing rays")
        ->check(CLI::PositiveNumber);
    zigzag_cmd->add_option("--file", out, "Write to a file instead of stdout");

    auto* foliate_cmd = app.add_subcommand("foliate", "Integrate and certify a crooked foliation");
    foliate_cmd->add_option("--spec", spec, "Foliation record or scene file")->required();
    foliate_cmd->add_option("--emit", emit, "csv (vertex path) or obj (leaf meshes)")
        ->check(CLI::IsMember({"csv", "obj"}));
    foliate_cmd->add_option("--out", out, "Output file; the report then goes to stdout");
    foliate_cmd->add_option("--leaves", leaves, "Leaves meshed for obj output")->check(CLI::PositiveNumber);
    foliate_cmd->add_option("--clip", clip, "xmin,ymin,zmin,xmax,ymax,zmax");
    foliate_cmd->add_option("--resolution", resolution, "Cells per mesh piece side")->check(CLI::PositiveNumber);

    auto* mesh_cmd = app.add_subcommand("mesh", "OBJ mesh of a crooked plane clipped to a box");
    mesh_cmd->add_option("--halfspace", hs, "Inline record or scene file (default: canonical)");
    mesh_cmd->add_option("--clip", clip, "xmin,ymin,zmin,xmax,ymax,zmax");
    mesh_cmd->add_option("--resolution", resolution, "Cells per mesh piece side")->check(CLI::PositiveNumber);
    mesh_cmd->add_option("--out", out, "Output file (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    }

    try {
        if (*classify_cmd) return cmd_classify(g, vec);
        if (*frame_cmd) return cmd_frame(g, dir);
        if (*contains_cmd) return cmd_contains(g, hs, point, closed);
        if (*linearize_cmd) return cmd_linearize(g, hs);
        if (*disjoint_cmd) return cmd_disjoint(g, h1, h2, scene, oracle);
        if (*zigzag_cmd) return cmd_zigzag(g, hs, plane, format, ray_length, out);
        if (*foliate_cmd) return cmd_foliate(g, spec, emit, out, leaves, clip, resolution);
        if (*mesh_cmd) return cmd_mesh(g, hs, clip, resolution, out);
    } catch (const crooked::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    }
    return kExitInvalid;
}
