#pragma once

// Command-line front end. `run` is kept separate from main() so the test
// suite can drive it in-process and compare output bytes.
//
// Exit codes: 0 success, 2 usage/parse/domain error, 3 resource limit or
// arithmetic overflow, 4 verification mismatch or internal inconsistency.

#include <algorithm>
#include <cstddef>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "toric/core.hpp"
#include "toric/curve.hpp"
#include "toric/graver.hpp"
#include "toric/io.hpp"
#include "toric/lattice.hpp"
#include "toric/lawrence.hpp"
#include "toric/markov.hpp"

namespace toric::cli {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "toric-cli/1";

enum Exit : int { ok = 0, usage = 2, resource = 3, mismatch = 4 };

namespace detail {

inline IntVec parse_vector(const std::string& text) {
    std::string s = text;
    std::replace(s.begin(), s.end(), ',', ' ');
    std::istringstream in(s);
    IntVec v;
    for (const auto& tok : toric::detail::tokenize(in)) v.push_back(toric::detail::parse_int(tok));
    if (v.empty()) throw ParseError("empty vector '" + text + "'", 1);
    return v;
}

/// "curve:3,4,5" or a path to a 4ti2 matrix file.
inline Configuration load_input(const std::string& spec) {
    const std::string prefix = "curve:";
    if (spec.rfind(prefix, 0) == 0) {
        IntVec n = parse_vector(spec.substr(prefix.size()));
        if (n.size() != 3) throw DomainError("a curve has exactly three entries: '" + spec + "'");
        return Curve(n[0], n[1], n[2]).config();
    }
    return parse_matrix_file(spec);
}

inline Json vec_json(const IntVec& v) { return Json(v); }

inline Json vecs_json(const std::vector<IntVec>& vs) {
    Json a = Json::array();
    for (const auto& v : vs) a.push_back(vec_json(v));
    return a;
}

inline Json header(const std::string& command) {
    Json j;
    j["schema"] = kSchema;
    j["command"] = command;
    return j;
}

// One top-level key per line, values compact: diff-friendly without
// spreading every vector over a dozen lines.
inline void emit_json(std::ostream& out, const Json& j) {
    out << "{\n";
    std::size_t i = 0;
    for (const auto& [key, value] : j.items()) {
        out << "  " << Json(key).dump() << ": " << value.dump() << (++i < j.size() ? ",\n" : "\n");
    }
    out << "}\n";
}

inline std::size_t max_type(const std::vector<IntVec>& vs, std::size_t n) {
    std::size_t t = 0;
    for (const auto& v : vs) t = std::max(t, type_of(v, n));
    return t;
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Graver and Markov bases of integer configurations and monomial curves"};
    app.require_subcommand(1);

    std::string format = "text";
    GraverOptions opts;
    app.add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"text", "json", "4ti2"}))
        ->capture_default_str();
    app.add_option("--max-pairs", opts.max_pairs, "Cap on completion pairs")->capture_default_str();
    app.add_option("--max-elements", opts.max_elements, "Cap on stored completion elements")->capture_default_str();

    std::string input, kind, rhs, vector, coupling;
    std::size_t r = 0, max_r = 0;
    std::vector<Int> curve_n;
    std::size_t lawrence = 0;
    bool verify = false, exact = false;

    auto add_input = [&](CLI::App* sub) {
        sub->add_option("input", input, "4ti2 matrix file or curve:N1,N2,N3")->required();
    };
    // global options may also follow the verb
    auto inherit_globals = [&](CLI::App* sub) { sub->fallthrough(); };

    auto* kernel_cmd = app.add_subcommand("kernel", "Integer kernel basis");
    add_input(kernel_cmd);
    inherit_globals(kernel_cmd);

    auto* graver_cmd = app.add_subcommand("graver", "Graver basis");
    add_input(graver_cmd);
    inherit_globals(graver_cmd);

    auto* markov_cmd = app.add_subcommand("markov", "Markov bases");
    add_input(markov_cmd);
    inherit_globals(markov_cmd);
    kind = "universal";
    markov_cmd->add_option("--kind", kind, "minimal|universal|indispensable")
        ->check(CLI::IsMember({"minimal", "universal", "indispensable"}));

    auto* fiber_cmd = app.add_subcommand("fiber", "Fiber and fiber-graph components");
    add_input(fiber_cmd);
    inherit_globals(fiber_cmd);
    fiber_cmd->add_option("--rhs", rhs, "Degree b, e.g. \"4 6\"")->required();

    auto* decompose_cmd = app.add_subcommand("decompose", "Semiconformal / strongly semiconformal decompositions");
    add_input(decompose_cmd);
    inherit_globals(decompose_cmd);
    decompose_cmd->add_option("--vector", vector, "Kernel vector, e.g. \"2 1 0 -1 -1\"")->required();
    std::string dkind = "ssc";
    decompose_cmd->add_option("--kind", dkind, "sc|ssc")->check(CLI::IsMember({"sc", "ssc"}));

    auto* lift_cmd = app.add_subcommand("lift", "Lawrence lifting A^(r) or generalized lifting");
    add_input(lift_cmd);
    inherit_globals(lift_cmd);
    lift_cmd->add_option("-r", r, "Number of copies (>= 2)")->required();
    lift_cmd->add_option("--coupling", coupling, "Coupling matrix B replacing the identity block");

    auto* complexity_cmd = app.add_subcommand("complexity", "Type scans over Lawrence liftings");
    add_input(complexity_cmd);
    inherit_globals(complexity_cmd);
    std::string ckind = "markov";
    complexity_cmd->add_option("--kind", ckind, "markov|graver")->check(CLI::IsMember({"markov", "graver"}));
    complexity_cmd->add_option("--max-r", max_r, "Largest r to scan (>= 2)")->required();

    auto* curve_cmd = app.add_subcommand("curve", "Closed forms for a monomial curve {N1,N2,N3}");
    curve_cmd->add_option("n", curve_n, "N1 N2 N3")->required()->expected(3);
    inherit_globals(curve_cmd);
    curve_cmd->add_option("--lawrence", lawrence, "Also give the universal Markov basis of A^(R)");
    curve_cmd->add_flag("--verify", verify, "Cross-check the closed forms against the brute-force engines");

    auto* bounds_cmd = app.add_subcommand("bounds", "Graver-complexity and generalized-lifting bounds of a curve");
    bounds_cmd->add_option("n", curve_n, "N1 N2 N3")->required()->expected(3);
    inherit_globals(bounds_cmd);
    bounds_cmd->add_option("--coupling", coupling, "Coupling matrix B (d x 3)");
    bounds_cmd->add_flag("--exact", exact, "Also compute the Graver complexity itself");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? Exit::ok : Exit::usage;
    }

    const bool json = format == "json";
    const bool raw = format == "4ti2";

    try {
        if (kernel_cmd->parsed()) {
            Configuration a = detail::load_input(input);
            const auto& basis = a.kernel_basis();
            if (json) {
                Json j = detail::header("kernel");
                j["count"] = basis.size();
                j["elements"] = detail::vecs_json(basis);
                detail::emit_json(out, j);
            } else {
                write_vectors(out, basis, a.cols());
            }
        } else if (graver_cmd->parsed()) {
            Configuration a = detail::load_input(input);
            CompletionStats st;
            GraverBasis g = graver_basis(a, opts, &st);
            if (json) {
                Json j = detail::header("graver");
                j["count"] = g.size();
                j["elements"] = detail::vecs_json(g.elements);
                j["stats"] = {{"pairs", st.pairs}, {"skipped", st.skipped}, {"peak_elements", st.peak_elements}};
                detail::emit_json(out, j);
            } else {
                write_vectors(out, g.elements, a.cols());
            }
        } else if (markov_cmd->parsed()) {
            Configuration a = detail::load_input(input);
            MarkovBasis m = kind == "minimal"     ? minimal_markov_basis(a, opts)
                            : kind == "universal" ? universal_markov_basis(a, opts)
                                                  : indispensable_subset(a, opts);
            if (json) {
                Json j = detail::header("markov");
                j["kind"] = kind;
                j["count"] = m.size();
                j["elements"] = detail::vecs_json(m.elements);
                Json degrees = Json::array(), sizes = Json::array();
                for (const auto& e : m.elements) {
                    IntVec d = a_degree(a, e);
                    degrees.push_back(detail::vec_json(d));
                    sizes.push_back(fiber(a, d).points.size());
                }
                j["degrees"] = degrees;
                j["fiber_sizes"] = sizes;
                detail::emit_json(out, j);
            } else {
                write_vectors(out, m.elements, a.cols());
            }
        } else if (fiber_cmd->parsed()) {
            Configuration a = detail::load_input(input);
            FiberGraph g = fiber_graph(a, detail::parse_vector(rhs));
            if (json) {
                Json j = detail::header("fiber");
                j["degree"] = detail::vec_json(g.fiber.degree);
                j["count"] = g.size();
                j["points"] = detail::vecs_json(g.fiber.points);
                j["components"] = g.component;
                j["num_components"] = g.num_components;
                detail::emit_json(out, j);
            } else if (raw) {
                write_vectors(out, g.fiber.points, a.cols());
            } else {
                out << "degree: " << to_string(g.fiber.degree) << '\n';
                out << "points: " << g.size() << '\n';
                out << "components: " << g.num_components << '\n';
                for (std::size_t i = 0; i < g.size(); ++i)
                    out << "  " << to_string(g.fiber.points[i]) << "  component " << g.component[i] << '\n';
            }
        } else if (decompose_cmd->parsed()) {
            Configuration a = detail::load_input(input);
            IntVec u = detail::parse_vector(vector);
            Json j = detail::header("decompose");
            j["vector"] = detail::vec_json(u);
            j["kind"] = dkind;
            std::vector<IntVec> parts;
            std::string note;
            if (dkind == "sc") {
                auto w = find_semiconformal_witness(a, u);
                j["found"] = w.has_value();
                if (w) parts = {w->first, w->second};
                j["in_indispensable"] = !w.has_value();
                note = w ? "proper semiconformal split" : "no proper semiconformal split (indispensable)";
            } else {
                auto c = find_ssc_chain(a, u);
                j["found"] = c.has_value();
                if (c) {
                    parts = c->parts;
                    j["length"] = c->length();
                    j["path"] = detail::vecs_json(c->path);
                }
                j["in_universal_markov"] = !c.has_value();
                if (!c)
                    note = "no proper strongly semiconformal decomposition (in the universal Markov basis)";
                else if (c->length() > 2)
                    note = "shortest chain has length " + std::to_string(c->length()) + "; no 2-chain";
                else
                    note = "strongly semiconformal 2-chain";
            }
            j["parts"] = detail::vecs_json(parts);
            j["note"] = note;
            if (json) {
                detail::emit_json(out, j);
            } else if (raw) {
                write_vectors(out, parts, a.cols());
            } else {
                out << "vector: " << to_string(u) << '\n';
                out << "kind: " << dkind << '\n';
                out << "found: " << (parts.empty() ? "no" : "yes") << '\n';
                if (!parts.empty()) {
                    out << "length: " << parts.size() << '\n';
                    for (const auto& p : parts) out << "  " << to_string(p) << '\n';
                }
                out << "note: " << note << '\n';
            }
        } else if (lift_cmd->parsed()) {
            Configuration a = detail::load_input(input);
            Configuration l =
                coupling.empty() ? lift(a, r) : generalized_lift(a, parse_matrix_file(coupling), r);
            if (json) {
                Json j = detail::header("lift");
                j["r"] = r;
                j["rows"] = l.rows();
                j["cols"] = l.cols();
                Json rows = Json::array();
                for (std::size_t i = 0; i < l.rows(); ++i) rows.push_back(l.matrix().row(i));
                j["matrix"] = rows;
                detail::emit_json(out, j);
            } else {
                write_matrix(out, l.matrix());
            }
        } else if (complexity_cmd->parsed()) {
            Configuration a = detail::load_input(input);
            auto rows = ckind == "markov" ? markov_complexity_scan(a, max_r, opts) : graver_type_scan(a, max_r, opts);
            std::size_t best = 0;
            for (const auto& row : rows) best = std::max(best, row.max_type);
            if (json) {
                Json j = detail::header("complexity");
                j["kind"] = ckind;
                Json scan = Json::array();
                for (const auto& row : rows) scan.push_back({{"r", row.r}, {"max_type", row.max_type}, {"count", row.count}});
                j["scan"] = scan;
                j["max_type"] = best;
                detail::emit_json(out, j);
            } else {
                out << "kind: " << ckind << '\n';
                out << "r max_type count\n";
                for (const auto& row : rows) out << row.r << ' ' << row.max_type << ' ' << row.count << '\n';
                out << "max_type: " << best << '\n';
            }
        } else if (curve_cmd->parsed()) {
            Curve c(curve_n[0], curve_n[1], curve_n[2]);
            HerzogData h = herzog_data(c);
            CurveMarkov m = closed_form_markov(h);
            Json j = detail::header("curve");
            j["curve"] = c.entries();
            j["c"] = h.c;
            Json reps = Json::array();
            for (std::size_t i = 0; i < 3; ++i) reps.push_back(h.r[i]);
            j["r"] = reps;
            j["classification"] = h.classification();
            if (h.complete_intersection) j["critical_pair"] = {h.critical.first + 1, h.critical.second + 1};
            j["u"] = detail::vecs_json(h.u);
            j["elements"] = detail::vecs_json(m.universal);
            j["counts"] = {{"universal", m.universal.size()}, {"minimal_bases", m.minimal_count}};
            j["markov_complexity"] = markov_complexity(c);

            std::vector<IntVec> lifted;
            if (lawrence) {
                lifted = closed_form_lawrence_markov(c, lawrence, opts);
                Json t = Json::array();
                for (const auto& e : lifted) t.push_back(type_of(e, 3));
                j["lawrence"] = {{"r", lawrence},
                                 {"count", lifted.size()},
                                 {"max_type", detail::max_type(lifted, 3)},
                                 {"elements", detail::vecs_json(lifted)},
                                 {"types", t}};
            }
            std::vector<std::string> failures;
            if (verify) {
                MarkovBasis bf = universal_markov_basis(c.config(), opts);
                if (bf.elements != m.universal) failures.push_back("universal Markov basis of the curve");
                if (!h.complete_intersection && indispensable_subset(c.config(), opts).elements != m.universal)
                    failures.push_back("indispensable subset of the curve");
                if (lawrence) {
                    MarkovBasis bl = universal_markov_basis(lift(c.config(), lawrence), opts);
                    if (bl.elements != lifted) failures.push_back("universal Markov basis of the lifting");
                    std::size_t t = detail::max_type(bl.elements, 3);
                    std::size_t expect = std::min<std::size_t>(static_cast<std::size_t>(markov_complexity(c)), lawrence);
                    if (t != expect) failures.push_back("maximal type of the lifting");
                }
                j["verified"] = failures.empty();
                j["verify_failures"] = failures;
            }

            if (json) {
                detail::emit_json(out, j);
            } else if (raw) {
                if (lawrence)
                    write_vectors(out, lifted, 3 * lawrence);
                else
                    write_vectors(out, m.universal, 3);
            } else {
                out << "curve: " << c.to_string() << '\n';
                out << "c: " << h.c[0] << ' ' << h.c[1] << ' ' << h.c[2] << '\n';
                for (std::size_t i = 0; i < 3; ++i) {
                    auto [p, q] = toric::detail::others(i);
                    out << "c" << i + 1 << "*n" << i + 1 << " = " << h.r[i][p] << "*n" << p + 1 << " + " << h.r[i][q]
                        << "*n" << q + 1 << '\n';
                }
                out << "classification: " << h.classification() << '\n';
                out << "universal Markov basis: " << m.universal.size() << " elements\n";
                for (const auto& e : m.universal) out << "  " << to_string(e) << '\n';
                out << "minimal Markov bases: " << m.minimal_count << '\n';
                out << "Markov complexity: " << markov_complexity(c) << '\n';
                if (lawrence) {
                    out << "lifting r=" << lawrence << ": " << lifted.size() << " elements, max type "
                        << detail::max_type(lifted, 3) << '\n';
                }
                if (verify) out << "verified: " << (failures.empty() ? "yes" : "NO") << '\n';
                for (const auto& f : failures) out << "  mismatch: " << f << '\n';
            }
            if (!failures.empty()) return Exit::mismatch;
        } else if (bounds_cmd->parsed()) {
            Curve c(curve_n[0], curve_n[1], curve_n[2]);
            Configuration b = coupling.empty() ? Configuration(IntMatrix::identity(3)) : parse_matrix_file(coupling);
            HsBound hs = hs_lower_bound(c, b, opts);
            Curve red = reduce(c);
            Json j = detail::header("bounds");
            j["curve"] = c.entries();
            j["reduced"] = red.entries();
            Json bounds;
            bounds["graver_lower_bound"] = graver_lower_bound(c);
            bounds["hs_lower_bound"] = hs.value;
            bounds["hs_witness"] = detail::vec_json(hs.witness);
            std::optional<GraverComplexity> g;
            if (exact) {
                g = graver_complexity(c.config(), opts);
                bounds["graver_complexity"] = g->value;
                bounds["graver_witness"] = detail::vec_json(g->witness);
            }
            j["bounds"] = bounds;
            if (json) {
                detail::emit_json(out, j);
            } else {
                out << "curve: " << c.to_string() << '\n';
                out << "reduced: " << red.to_string() << '\n';
                out << "graver_lower_bound: " << graver_lower_bound(c) << '\n';
                out << "hs_lower_bound: " << hs.value << '\n';
                if (!hs.witness.empty()) out << "hs_witness: " << to_string(hs.witness) << '\n';
                if (g) {
                    out << "graver_complexity: " << g->value << '\n';
                    out << "graver_witness: " << to_string(g->witness) << '\n';
                }
            }
        }
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return Exit::usage;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return Exit::usage;
    } catch (const ResourceLimit& e) {
        err << "resource limit: " << e.what() << '\n';
        return Exit::resource;
    } catch (const ArithmeticOverflow& e) {
        err << "arithmetic overflow: " << e.what() << '\n';
        return Exit::resource;
    } catch (const std::bad_alloc&) {
        err << "resource limit: out of memory\n";
        return Exit::resource;
    } catch (const ConsistencyError& e) {
        err << "consistency error: " << e.what() << '\n';
        return Exit::mismatch;
    }
    return Exit::ok;
}

}  // namespace toric::cli
