#include "srdef/cli.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "srdef/cotangent.hpp"
#include "srdef/error.hpp"
#include "srdef/io.hpp"
#include "srdef/oracle.hpp"
#include "srdef/topology.hpp"
#include "srdef/versal.hpp"

namespace srdef {

namespace {

using json = nlohmann::ordered_json;

struct Options {
    std::string format = "text";
    int parallel = 0;
    std::string source;
    std::string a, b;
    bool degree0 = false;
    bool oracle = false;
    int i = 0;
    std::string c;
    int m = 0;
    int n = 0;
    int order = 4;
    int index_cap = 4;
    bool mutate = false;
    bool groebner = false;
};

/// What a command produced: JSON result, human-readable text and exit status.
struct Report {
    json result = json::object();
    std::ostringstream text;
    int status = exit_ok;
};

json set_json(const VertexSet& s) { return s.to_vector(); }

std::string set_text(const VertexSet& s) {
    std::string out = "{";
    bool first = true;
    s.for_each([&](int v) {
        if (!first) out += ",";
        out += std::to_string(v);
        first = false;
    });
    return out + "}";
}

json terms_json(const Polynomial& p) {
    json out = json::array();
    const PolyRing& R = *p.ring();
    for (const auto& [m, c] : p.terms()) {
        json params = json::object(), ys = json::object();
        for (int v = 0; v < m.nvars(); ++v)
            if (m.exponent(v)) (R.is_parameter(v) ? params : ys)[R.name(v)] = m.exponent(v);
        out.push_back({{"coeff", c.get_str()}, {"params", params}, {"ys", ys}});
    }
    return out;
}

VertexSet parse_set(const std::string& spec, const char* flag) {
    VertexSet s;
    std::stringstream in(spec);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item.empty()) continue;
        int v = 0;
        const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
        if (ec != std::errc() || ptr != item.data() + item.size() || v < 0)
            fail(ErrorCode::usage, std::string(flag) + ": not a vertex: '" + item + "'");
        s.insert(v);
    }
    return s;
}

/// "1:-1,2:-1" -> c indexed by vertex.
std::vector<int> parse_vector(const std::string& spec) {
    std::vector<int> c;
    std::stringstream in(spec);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item.empty()) continue;
        const auto colon = item.find(':');
        if (colon == std::string::npos) fail(ErrorCode::usage, "--c: expected vertex:exponent, got '" + item + "'");
        int v = 0, e = 0;
        try {
            v = std::stoi(item.substr(0, colon));
            e = std::stoi(item.substr(colon + 1));
        } catch (const std::exception&) {
            fail(ErrorCode::usage, "--c: malformed entry '" + item + "'");
        }
        if (v < 0 || v >= kMaxVertices) fail(ErrorCode::usage, "--c: vertex out of range");
        if (static_cast<int>(c.size()) <= v) c.resize(static_cast<std::size_t>(v + 1), 0);
        c[static_cast<std::size_t>(v)] += e;
    }
    return c;
}

std::string face_word(int dim) {
    static const char* words[] = {"vertices", "edges", "triangles", "tetrahedra"};
    return dim >= 0 && dim < 4 ? words[dim] : std::to_string(dim) + "-faces";
}

json info(const SimplicialComplex& K, Report& r) {
    const FaceCounts fc = f_vector_and_counts(K);
    json j;
    j["n_vertices"] = K.n_vertices();
    j["dimension"] = K.dimension();
    j["f_vector"] = fc.f;
    j["euler_characteristic"] = fc.euler;
    j["ghost_vertices"] = K.ghost_vertices();
    j["pure"] = K.is_pure();
    json val = json::object();
    for (const auto& v : K.faces(0)) val[std::to_string(v.min())] = fc.valency.at(v);
    j["valencies"] = val;
    const GradedDims h = homology_dims(K, true);
    json hj = json::array();
    for (int d = 0; d <= std::max(0, K.dimension()); ++d) hj.push_back(h.at(d));
    j["reduced_betti"] = hj;

    r.text << "dimension " << K.dimension() << ", " << K.n_vertices() << " vertices\n";
    r.text << "f-vector (";
    for (std::size_t i = 0; i < fc.f.size(); ++i) r.text << (i ? ", " : "") << fc.f[i];
    r.text << "), euler characteristic " << fc.euler << "\n";
    r.text << "reduced betti numbers";
    for (const auto& x : hj) r.text << " " << x.get<std::size_t>();
    r.text << "\n";

    if (K.dimension() >= 0 && K.dimension() <= 3) {
        const ManifoldCheck mc = is_closed_manifold(K);
        j["manifold"] = mc.manifold;
        if (mc.manifold) {
            const bool o = is_orientable(K);
            j["orientable"] = o;
            r.text << "closed " << K.dimension() << "-manifold, " << (o ? "orientable" : "non-orientable") << "\n";
        } else {
            j["orientable"] = nullptr;
            j["manifold_failure"] = mc.reason;
            r.text << "not a closed manifold: " << mc.reason << "\n";
        }
    } else {
        j["manifold"] = nullptr;
        j["orientable"] = nullptr;
        r.text << "manifold test not available in dimension " << K.dimension() << "\n";
    }
    r.text << "valencies:";
    for (const auto& [v, k] : val.items()) r.text << " " << v << ":" << k.get<int>();
    r.text << "\n";
    return j;
}

json cotangent_piece(const SimplicialComplex& K, int i, const Options& o, Report& r) {
    const Multidegree c = Multidegree::parse(o.a, o.b);
    GradedPieceReport rep;
    if (K.dimension() >= 1 && K.dimension() <= 3 && is_closed_manifold(K).manifold) {
        const ManifoldCotangent M(K);
        rep = i == 1 ? M.t1_report(c) : M.t2_report(c);
    } else {
        rep.i = i;
        rep.degree = c;
        rep.dim = t_graded_dim(K, i, c.a_support(), c.b);
        rep.method = Method::general_topological;
        if (i == 1 && rep.dim > 0) rep.basis = basis_rule(c);
    }
    json j;
    j["i"] = i;
    j["degree"] = c.str();
    j["total_degree"] = c.total_degree();
    j["dim"] = rep.dim;
    j["method"] = to_string(rep.method);
    if (rep.basis) j["basis"] = *rep.basis;
    r.text << "dim T" << i << "_" << c.str() << " = " << rep.dim << "  (" << to_string(rep.method) << ")\n";
    if (rep.basis) r.text << "basis: " << *rep.basis << "\n";
    if (o.oracle) {
        const OracleDetail d = i == 1 ? t1_oracle(K, c) : t2_oracle(K, c);
        j["oracle_dim"] = d.dim;
        j["oracle_agrees"] = d.dim == rep.dim;
        r.text << "oracle: " << d.dim << (d.dim == rep.dim ? " (agrees)" : " (DISAGREES)") << "\n";
        if (d.dim != rep.dim) r.status = exit_verification_failed;
    }
    return j;
}

json cotangent_degree0(const SimplicialComplex& K, int i, const Options& o, Report& r) {
    const DegreeZeroSummary s = degree_zero_totals(K, o.parallel, i == 2);
    const auto& total = i == 1 ? s.t1_total : s.t2_total;
    const auto& by_dim = i == 1 ? s.t1_by_face_dim : s.t2_by_face_dim;
    const auto& contribs = i == 1 ? s.t1 : s.t2;
    json j;
    j["i"] = i;
    j["dim"] = total;
    json bd = json::object();
    for (const auto& [d, v] : by_dim) bd[face_word(d)] = v;
    j["by_face_dimension"] = bd;
    json list = json::array();
    for (const auto& c : contribs)
        list.push_back({{"a", set_json(c.a)}, {"b", set_json(c.b)}, {"piece_dim", c.piece_dim}, {"multiplicity", c.multiplicity}});
    j["contributions"] = list;
    r.text << "dim T" << i << "_A,0 = " << total << "\n";
    for (const auto& [d, v] : by_dim) r.text << "  from " << face_word(d) << ": " << v << "\n";
    return j;
}

json oracle_piece(const SimplicialComplex& K, int i, const Options& o, Report& r) {
    const Multidegree c = Multidegree::parse(o.a, o.b);
    const OracleDetail d = i == 1 ? t1_oracle(K, c) : t2_oracle(K, c);
    r.text << "dim T" << i << "_" << c.str() << " = " << d.dim << "  (oracle: " << d.unknowns << " unknowns, constraint rank "
           << d.constraint_rank << ", image rank " << d.image_rank << ")\n";
    return {{"i", i}, {"degree", c.str()}, {"dim", d.dim}, {"unknowns", d.unknowns},
            {"constraint_rank", d.constraint_rank}, {"image_rank", d.image_rank}, {"method", "oracle"}};
}

json normal_form_json(const NormalForm& nf, Report& r) {
    json eqs = json::array();
    for (const auto& e : nf.equations) {
        eqs.push_back({{"lifts", e.lifts}, {"poly", e.poly.str()}, {"terms", terms_json(e.poly)}});
        r.text << "F_{";
        for (int v : e.lifts) r.text << v;
        r.text << "} = " << e.poly.str() << "\n";
    }
    json j{{"n", nf.n}, {"order", nf.order}, {"index_cap", nf.index_cap}, {"equations", eqs}};
    if (!nf.base_relations.empty()) {
        json rel = json::array();
        r.text << "modulo\n";
        for (const auto& p : nf.base_relations) {
            rel.push_back(p.str());
            r.text << "  " << p.str() << "\n";
        }
        j["base_relations"] = rel;
    }
    return j;
}

json versal_json(const SimplicialComplex& K, Report& r) {
    const VersalIdeal V = versal_ideal(K);
    json mats = json::array();
    for (const auto& M : V.matrices)
        mats.push_back({{"vertex", M.vertex}, {"cycle", M.cycle}, {"entries", M.entries}});
    json minors = json::array();
    for (const auto& g : V.generators) minors.push_back(g.str());
    const KrullResult kr = krull_dimension(V);
    json j;
    j["variables"] = V.variables.names;
    j["n_variables"] = V.variables.names.size();
    j["counts"] = {{"edges", V.variables.edges}, {"valency3", V.variables.valency3}, {"valency4", V.variables.valency4}};
    j["matrices"] = mats;
    j["minors"] = minors;
    j["exactness"] = to_string(V.exactness);
    j["exact"] = V.exactness != Exactness::first_order_only;
    j["krull_dimension"] = kr.dimension;
    j["krull_method"] = kr.method;

    r.text << V.variables.names.size() << " variables, " << V.matrices.size() << " hexagon matrices, " << minors.size()
           << " minors\n";
    for (const auto& M : V.matrices) {
        r.text << "vertex " << M.vertex << ":\n";
        for (const auto& row : M.entries) r.text << "  [ " << row[0] << "  " << row[1] << "  " << row[2] << " ]\n";
    }
    r.text << to_string(V.exactness) << "\n";
    r.text << "Krull dimension " << kr.dimension << " (" << kr.method << ")\n";
    return j;
}

void add_source(CLI::App* sub, Options& o) { sub->add_option("source", o.source, "facet file or named complex")->required(); }

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Deformations of Stanley-Reisner schemes", "srdef"};
    app.fallthrough();
    app.require_subcommand(1);
    app.add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--parallel", o.parallel, "worker threads (0 = all cores)")->check(CLI::NonNegativeNumber);

    std::map<std::string, std::function<json(Report&)>> commands;
    SimplicialComplex K;
    auto with_complex = [&](const std::string& name, const std::string& help, std::function<json(Report&)> body) {
        CLI::App* sub = app.add_subcommand(name, help);
        add_source(sub, o);
        commands[name] = std::move(body);
        return sub;
    };

    with_complex("info", "f-vector, euler characteristic, valencies, manifold test", [&](Report& r) { return info(K, r); });
    with_complex("bset", "the set B(K)", [&](Report& r) {
        const auto B = b_set(K);
        json list = json::array();
        r.text << "|B(K)| = " << B.size() << "\n";
        for (const auto& b : B) {
            list.push_back(set_json(b));
            r.text << "  " << set_text(b) << "\n";
        }
        return json{{"count", B.size()}, {"b", list}};
    });
    for (int i : {1, 2}) {
        const std::string name = "t" + std::to_string(i);
        CLI::App* sub = with_complex(name, "graded piece or degree-0 total of T" + std::to_string(i), [&, i](Report& r) {
            if (o.degree0) return cotangent_degree0(K, i, o, r);
            if (o.b.empty()) fail(ErrorCode::usage, "give --b (and optionally --a), or --degree0");
            return cotangent_piece(K, i, o, r);
        });
        auto* fa = sub->add_option("--a", o.a, "exponents on a face, e.g. \"0:2,3:1\"");
        auto* fb = sub->add_option("--b", o.b, "squarefree part, e.g. \"1,4,7\"");
        auto* d0 = sub->add_flag("--degree0", o.degree0, "sum all pieces of degree 0");
        d0->excludes(fa)->excludes(fb);
        sub->add_flag("--oracle", o.oracle, "cross-check the piece with the algebraic oracle");

        CLI::App* osub = with_complex("oracle-" + name, "T" + std::to_string(i) + " piece by linear algebra over the presentation",
                                      [&, i](Report& r) { return oracle_piece(K, i, o, r); });
        osub->add_option("--a", o.a, "exponents on a face");
        osub->add_option("--b", o.b, "squarefree part")->required();
    }
    with_complex("surface", "closed-form T1/T2 counts for a surface", [&](Report& r) {
        const SurfaceFormulas s = surface_formulas(K);
        const DegreeZeroSummary z = degree_zero_totals(K, o.parallel, false);
        const bool agree = z.t1_total + s.h2 == s.t1_projective;
        r.text << "dim T1_P = " << s.t1_projective << " (alternative form " << s.t1_projective_alt << ")\n";
        r.text << "dim T2_A,0 = " << s.t2_degree0 << "\n";
        r.text << "h2 = " << s.h2 << ", enumerated T1_A,0 + h2 = " << z.t1_total + s.h2 << (agree ? "" : " (MISMATCH)") << "\n";
        return json{{"t1_projective", s.t1_projective}, {"t1_projective_alt", s.t1_projective_alt}, {"t2_degree0", s.t2_degree0},
                    {"h2", s.h2}, {"h2_theta", s.h2_theta}, {"enumerated_t1_projective", z.t1_total + s.h2}, {"agree", agree}};
    });
    with_complex("threefold", "closed-form dim T1_P for a 3-manifold", [&](Report& r) {
        const ThreefoldFormula f = threefold_formula(K);
        const DegreeZeroSummary z = degree_zero_totals(K, o.parallel, false);
        const bool agree = z.t1_total + f.h2 == f.value;
        r.text << "dim T1_P = " << f.value << "\n";
        r.text << "  links: " << f.d3 << " boundary tetrahedra, " << f.e3 << " ΣE3, " << f.e4 << " ΣE4, " << f.e5plus
               << " ΣEn (n>=5), " << f.c6plus << " cyclic\n";
        r.text << "  edges of valency 3: " << f.f1_3 << ", valency 4: " << f.f1_4 << ", h2 = " << f.h2 << "\n";
        r.text << "enumerated T1_A,0 + h2 = " << z.t1_total + f.h2 << (agree ? "" : " (MISMATCH)") << "\n";
        return json{{"value", f.value}, {"d3", f.d3}, {"e3", f.e3}, {"e4", f.e4}, {"e5plus", f.e5plus}, {"c6plus", f.c6plus},
                    {"f1_3", f.f1_3}, {"f1_4", f.f1_4}, {"h2", f.h2}, {"unclassified_vertices", f.unclassified_vertices},
                    {"enumerated", z.t1_total + f.h2}, {"agree", agree}};
    });
    with_complex("rigid", "rigidity of P(K) for a 3-manifold", [&](Report& r) {
        const RigidityReport rr = is_rigid(K);
        json edges = json::array();
        for (const auto& [e, nu] : rr.low_valency_edges) edges.push_back({{"edge", set_json(e)}, {"valency", nu}});
        r.text << (rr.rigid ? "rigid" : "not rigid") << " (h2 = " << rr.h2 << ", " << rr.low_valency_edges.size()
               << " edges of valency < 5)\n";
        return json{{"rigid", rr.rigid}, {"h2", rr.h2}, {"low_valency_edges", edges}};
    });
    {
        CLI::App* sub = with_complex("local-cohomology", "dim H^i_m(A_K)_c", [&](Report& r) {
            const std::vector<int> c = parse_vector(o.c);
            const std::size_t d = local_cohomology_dim(K, o.i, c);
            r.text << "dim H^" << o.i << "_m(A_K)_c = " << d << "\n";
            return json{{"i", o.i}, {"c", c}, {"dim", d}};
        });
        sub->add_option("--i", o.i, "cohomological degree")->required();
        sub->add_option("--c", o.c, "degree as vertex:exponent list, e.g. \"1:-1,2:-1\"");
    }
    {
        CLI::App* sub = with_complex("sheaf-cohomology", "H^p(P(K), O(m))", [&](Report& r) {
            const auto h = twisted_structure_sheaf_cohomology(K, o.m);
            json list = json::array();
            r.text << "h^p(O(" << o.m << ")):";
            for (const auto& x : h) {
                list.push_back(x.get_str());
                r.text << " " << x.get_str();
            }
            r.text << "\n";
            return json{{"m", o.m}, {"h", list}};
        });
        sub->add_option("--m", o.m, "twist")->required();
    }
    {
        CLI::App* sub = app.add_subcommand("normal-form", "deformation equations of the cone over E_n");
        commands["normal-form"] = [&](Report& r) { return normal_form_json(normal_form(o.n, o.order, o.index_cap), r); };
        sub->add_option("--n", o.n, "3..6")->required();
        sub->add_option("--order", o.order, "truncation order in the parameters");
        sub->add_option("--index-cap", o.index_cap, "largest series index k of t_i^(k)");
    }
    {
        CLI::App* sub = app.add_subcommand("verify-nf", "check the lifted relations of a normal form");
        commands["verify-nf"] = [&](Report& r) {
            const auto v = verify_normal_form_relations(o.n, o.order, {o.index_cap, o.mutate});
            json rels = json::array();
            for (const auto& rc : v.relations) {
                json e{{"name", rc.name}, {"passed", rc.passed}, {"residual_terms", rc.residual_terms}};
                if (!rc.passed) e["residual"] = rc.residual;
                rels.push_back(e);
                r.text << (rc.passed ? "ok   " : "FAIL ") << rc.name;
                if (!rc.passed) r.text << "  residual (" << rc.residual_terms << " terms): " << rc.residual;
                r.text << "\n";
            }
            json j{{"n", v.n}, {"order", v.order}, {"index_cap", v.index_cap}, {"relations", rels}, {"passed", v.passed}};
            if (v.n == 6) {
                j["equivariant"] = v.equivariant;
                j["orbit_images"] = v.orbit_images;
                j["orbit_rank"] = v.orbit_rank;
                r.text << "D6-equivariant: " << (v.equivariant ? "yes" : "NO") << ", " << v.orbit_images
                       << " orbit images of rank " << v.orbit_rank << "\n";
            }
            r.text << (v.passed ? "passed" : "FAILED") << "\n";
            if (!v.passed) r.status = exit_verification_failed;
            return j;
        };
        sub->add_option("--n", o.n, "3..6")->required();
        sub->add_option("--order", o.order, "truncation order in the parameters");
        sub->add_option("--index-cap", o.index_cap, "largest series index k of t_i^(k)");
        sub->add_flag("--mutate", o.mutate, "flip one coefficient of the first lifting (self-test)");
    }
    with_complex("versal-ideal", "versal base ideal of a surface with valencies <= 6", [&](Report& r) { return versal_json(K, r); });
    {
        CLI::App* sub = with_complex("krull-dim", "Krull dimension of the versal base", [&](Report& r) {
            const VersalIdeal V = versal_ideal(K);
            const KrullResult kr = krull_dimension(V, o.groebner);
            const std::size_t lb = krull_lower_bound(V);
            r.text << "Krull dimension " << kr.dimension << " (" << kr.method << "), stratum bound " << lb << "\n";
            return json{{"dimension", kr.dimension}, {"method", kr.method}, {"basis_size", kr.basis_size}, {"lower_bound", lb}};
        });
        sub->add_flag("--groebner", o.groebner, "skip the disjoint-matrices fast path");
    }
    with_complex("first-order-table", "local parameters in terms of versal variables", [&](Report& r) {
        json j = json::object();
        for (const auto& [v, rows] : first_order_table(K)) {
            json list = json::array();
            r.text << "vertex " << v << ":";
            for (const auto& e : rows) {
                list.push_back({{"local", e.local}, {"global", e.global}});
                r.text << "  " << e.local << " -> " << e.global;
            }
            r.text << "\n";
            j[std::to_string(v)] = list;
        }
        return j;
    });
    {
        CLI::App* sub = with_complex("flip", "bistellar flip", [&](Report& r) {
            const SimplicialComplex F = flip(K, parse_set(o.a, "--a"), parse_set(o.b, "--b"));
            json facets = json::array();
            for (const auto& f : F.facets()) facets.push_back(set_json(f));
            r.text << write_facets(F);
            return json{{"n_vertices", F.n_vertices()}, {"f_vector", F.f_vector()}, {"facets", facets}};
        });
        sub->add_option("--a", o.a, "face to remove")->required();
        sub->add_option("--b", o.b, "face to insert")->required();
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        const bool json_mode = std::find(args.begin(), args.end(), "json") != args.end();
        if (json_mode)
            out << json{{"ok", false}, {"error", {{"code", "usage"}, {"message", e.what()}}}}.dump(2) << "\n";
        else
            err << "error [usage]: " << e.what() << "\n";
        return exit_error;
    }

    const CLI::App* sub = app.get_subcommands().front();
    const std::string command = sub->get_name();
    json envelope;
    envelope["command"] = command;
    json warnings = json::array();
    Report r;
    try {
        if (!o.source.empty()) {
            NormalizationReport norm;
            K = load_complex(o.source, &norm);
            for (const auto& f : norm.duplicates) warnings.push_back("duplicate facet " + set_text(f) + " merged");
            for (const auto& f : norm.non_maximal) warnings.push_back("non-maximal facet " + set_text(f) + " dropped");
            envelope["source"] = o.source;
        }
        envelope["result"] = commands.at(command)(r);
    } catch (const Error& e) {
        if (o.format == "json") {
            envelope["ok"] = false;
            envelope["error"] = {{"code", std::string(to_string(e.code()))}, {"message", e.what()}};
            envelope["warnings"] = warnings;
            out << envelope.dump(2) << "\n";
        } else {
            for (const auto& w : warnings) err << "warning: " << w.get<std::string>() << "\n";
            err << "error [" << to_string(e.code()) << "]: " << e.what() << "\n";
        }
        return exit_error;
    }
    if (o.format == "json") {
        envelope["ok"] = r.status == exit_ok;
        envelope["warnings"] = warnings;
        out << envelope.dump(2) << "\n";
    } else {
        for (const auto& w : warnings) err << "warning: " << w.get<std::string>() << "\n";
        out << r.text.str();
    }
    return r.status;
}

}  // namespace srdef
