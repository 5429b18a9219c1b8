#pragma once

// Command-line front end. run() is kept separate from main() so the test
// suites can drive it in-process.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "dreg/dreg.hpp"

namespace dreg::cli {

using nlohmann::json;

namespace detail {

inline json to_json(const Integer& v)
{
    if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max()) {
        return static_cast<std::int64_t>(v);
    }
    return v.str();
}

inline json to_json(const MonomialIdeal& I)
{
    json gens = json::array();
    for (const auto& g : I.generators()) {
        gens.push_back(to_string(g));
    }
    return {{"n", I.num_vars()}, {"generators", gens}};
}

inline json to_json(const std::vector<Integer>& v)
{
    json a = json::array();
    for (const auto& x : v) {
        a.push_back(to_json(x));
    }
    return a;
}

inline json to_json(const BettiDiagram& D)
{
    json entries = json::array();
    for (const auto& [key, v] : D.entries()) {
        entries.push_back({key.first, key.second, to_json(v)});
    }
    json out{{"n", D.num_vars()}, {"entries", entries}};
    if (!D.is_zero()) {
        out["regularity"] = D.regularity();
        out["projdim"] = D.projdim();
        out["totals"] = to_json(D.totals());
    }
    out["depth_quotient"] = D.depth_quotient();
    return out;
}

inline json to_json(const SimplicialComplex& G)
{
    json facets = json::array();
    for (auto f : G.facets()) {
        facets.push_back(face_vertices(f));
    }
    return {{"vertices", G.num_vertices()}, {"facets", facets}};
}

inline json cells_json(const std::vector<Cell>& cells)
{
    json a = json::array();
    for (auto [i, j] : cells) {
        a.push_back({i, j});
    }
    return a;
}

inline std::string cells_text(const std::vector<Cell>& cells)
{
    std::string out;
    for (auto [i, j] : cells) {
        if (!out.empty()) {
            out += ';';
        }
        out += '(' + std::to_string(i) + ',' + std::to_string(j) + ')';
    }
    return out.empty() ? "none" : out;
}

inline std::string join(const std::vector<Integer>& v)
{
    std::string out;
    for (const auto& x : v) {
        if (!out.empty()) {
            out += ' ';
        }
        out += x.str();
    }
    return out;
}

} // namespace detail

struct Options {
    std::string input;
    std::string gens;
    std::size_t n = 0;
    bool json = false;
    std::size_t cap = 0;
    int max_degree = 0;
    unsigned jobs = 1;
    std::string method = "auto";
    bool triples = false;
    std::int64_t degree = -1;
    bool exact = false;
    bool star = false;
    std::int64_t to = -1;
    std::string pts;
    std::string area;
    std::int64_t top = -1;
    std::string hilbert_file;
};

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    Options o;
    CLI::App app{"Lexsegment, Betti-number and extremal-area computations for monomial ideals", "dreg"};
    app.require_subcommand(1);
    app.fallthrough(); // global flags may follow the verb
    app.add_flag("--json", o.json, "Structured JSON output");
    app.add_option("--cap", o.cap, "Enumeration cap (monomials)");
    app.add_option("--max-degree", o.max_degree, "Degree cap for Lex(I)");
    app.add_option("--jobs", o.jobs, "Threads for the Koszul oracle")->check(CLI::Range(1u, 256u));

    auto ideal_input = [&](CLI::App* sub) {
        sub->add_option("input", o.input, "Ideal file (header n=<int>, one monomial per line)");
        sub->add_option("--gens", o.gens, "Inline generators, comma separated");
        sub->add_option("--n", o.n, "Number of variables for --gens");
    };

    auto* hilb = app.add_subcommand("hilb", "Hilbert function H(I,t) for t = 0..T");
    ideal_input(hilb);
    hilb->add_option("--to", o.to, "Last degree T (default: max generator degree + n)");
    bool quotient = false;
    hilb->add_flag("--quotient", quotient, "Report H(S/I,t) instead");

    auto* betti_cmd = app.add_subcommand("betti", "Graded Betti numbers of I");
    ideal_input(betti_cmd);
    betti_cmd->add_option("--method", o.method, "auto, ek, ahh or koszul")->check(CLI::IsMember({"auto", "ek", "ahh", "koszul"}));
    betti_cmd->add_flag("--triples", o.triples, "One (i, j, value) triple per line");
    bool summary = false;
    betti_cmd->add_flag("--summary", summary, "Also print regularity, projective dimension and depth");

    auto* lex = app.add_subcommand("lex", "Lex(I)");
    ideal_input(lex);
    auto* sqlex = app.add_subcommand("sqlex", "SqLex(I) of a squarefree ideal");
    ideal_input(sqlex);

    auto* dlex = app.add_subcommand("dlex", "Lex^(d)(I), or the d-lexsegment ideal of a Hilbert function");
    ideal_input(dlex);
    dlex->add_option("-d", o.degree, "d")->required();
    dlex->add_option("--hilbert", o.hilbert_file, "Hilbert function file instead of an ideal");

    auto* sqdlex = app.add_subcommand("sqdlex", "SqLex^(d)(I) of a squarefree ideal");
    ideal_input(sqdlex);
    sqdlex->add_option("-d", o.degree, "d")->required();

    auto* phi_cmd = app.add_subcommand("phi", "Squarefree operation on a strongly stable ideal generated in one degree");
    ideal_input(phi_cmd);
    auto* phi_inv_cmd = app.add_subcommand("phi-inv", "Inverse squarefree operation");
    ideal_input(phi_inv_cmd);
    auto* phi_tilde_cmd = app.add_subcommand("phi-tilde", "Squarefree operation inside the same ring");
    ideal_input(phi_tilde_cmd);

    auto* lseq = app.add_subcommand("lseq", "l-sequence (or l*-sequence with --star)");
    ideal_input(lseq);
    lseq->add_flag("--star", o.star, "Squarefree l*-sequence");

    auto* charz = app.add_subcommand("characterize", "Is H the Hilbert function of a d-regular ideal?");
    charz->add_option("input", o.input, "Hilbert function file, or an ideal file")->required();
    charz->add_option("-d", o.degree, "d")->required();
    charz->add_flag("--exact", o.exact, "Require regularity exactly d");

    auto* rr = app.add_subcommand("reg-range", "Regularity range {reg(I), ..., reg(Lex(I))} with witnesses");
    ideal_input(rr);
    auto* srr = app.add_subcommand("sq-reg-range", "Squarefree regularity range with witnesses");
    ideal_input(srr);

    auto* area = app.add_subcommand("area", "Extremal areas");
    area->require_subcommand(1);
    std::vector<CLI::App*> area_subs;
    for (const char* name : {"conv", "check", "rep"}) {
        auto* s = area->add_subcommand(name, std::string("area ") + name);
        s->add_option("points", o.pts, "Corner list \"(i,j);(i,j);...\"");
        s->add_option("--pts", o.pts, "Corner list");
        s->add_option("--n", o.n, "Column bound n (default: largest i + 1)");
        area_subs.push_back(s);
    }

    auto* lexarea = app.add_subcommand("lexarea", "Lex(I,A) for strongly stable I and semi-convex A");
    ideal_input(lexarea);
    lexarea->add_option("--area", o.area, "Corner list of A")->required();
    lexarea->add_option("--top", o.top, "Index of the top corner to build from (default: first)");

    auto* cx = app.add_subcommand("complex", "Simplicial complexes");
    cx->require_subcommand(1);
    for (const char* name : {"fvec", "hvec", "dual", "sr", "cm"}) {
        auto* s = cx->add_subcommand(name, std::string("complex ") + name);
        s->add_option("input", o.input, "Complex file (header vertices=<n>, one facet per line)")->required();
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error[usage]: " << e.what() << "\n";
        return 2;
    }

    Limits lim;
    if (o.cap > 0) {
        lim.enumeration_cap = o.cap;
    }
    if (o.max_degree > 0) {
        lim.max_lex_degree = o.max_degree;
    }

    auto load_ideal = [&]() -> MonomialIdeal {
        if (!o.gens.empty()) {
            if (!o.input.empty()) {
                throw FormatError("give either an input file or --gens, not both");
            }
            if (o.n == 0) {
                throw FormatError("--gens needs --n");
            }
            return parse_generator_list(o.gens, o.n);
        }
        if (o.input.empty()) {
            throw FormatError("no input: give an ideal file or --gens with --n");
        }
        return parse_ideal(read_file(o.input));
    };
    auto emit_ideal = [&](const MonomialIdeal& I) {
        if (o.json) {
            out << detail::to_json(I).dump() << "\n";
        } else {
            out << format_ideal(I);
        }
    };
    auto emit_betti = [&](const BettiDiagram& D) {
        if (o.json) {
            out << detail::to_json(D).dump() << "\n";
            return;
        }
        out << (o.triples ? format_triples(D) : format_table(D));
        if (summary && !D.is_zero()) {
            out << "regularity: " << D.regularity() << "\n"
                << "projdim: " << D.projdim() << "\n"
                << "depth(S/I): " << D.depth_quotient() << "\n";
        }
    };
    auto emit_range = [&](const RegularityRange& R) {
        if (o.json) {
            json w = json::array();
            for (const auto& [r, W] : R.witnesses) {
                w.push_back({{"r", r}, {"ideal", detail::to_json(W)}});
            }
            out << json{{"low", R.low}, {"high", R.high}, {"witnesses", w}}.dump() << "\n";
            return;
        }
        out << "{";
        for (int r = R.low; r <= R.high; ++r) {
            out << (r == R.low ? "" : ",") << r;
        }
        out << "}\n";
        for (const auto& [r, W] : R.witnesses) {
            out << r << ": " << format_ideal_inline(W) << "\n";
        }
    };

    try {
        if (*hilb) {
            auto I = load_ideal();
            std::uint64_t T = o.to >= 0 ? static_cast<std::uint64_t>(o.to)
                                        : (I.is_zero() ? 0 : I.max_degree()) + I.num_vars();
            HilbertSpec H = hilbert_spec(I, T, lim);
            if (quotient) {
                H = H.flipped();
            }
            if (o.json) {
                out << json{{"n", H.num_vars},
                            {"role", quotient ? "quotient" : "ideal"},
                            {"values", detail::to_json(H.values)}}
                           .dump()
                    << "\n";
            } else {
                out << format_hilbert_spec(H);
            }
        } else if (*betti_cmd) {
            emit_betti(betti(load_ideal(), parse_betti_method(o.method), o.jobs, lim));
        } else if (*lex) {
            emit_ideal(lexify(load_ideal(), lim));
        } else if (*sqlex) {
            emit_ideal(sq_lexify(load_ideal(), lim));
        } else if (*dlex) {
            if (o.degree < 1) {
                throw DomainError("d must be positive");
            }
            if (!o.hilbert_file.empty()) {
                emit_ideal(dlex_from_hilbert(parse_hilbert_spec(read_file(o.hilbert_file)),
                                             static_cast<std::uint64_t>(o.degree), lim));
            } else {
                emit_ideal(lexd(load_ideal(), static_cast<std::uint64_t>(o.degree), lim));
            }
        } else if (*sqdlex) {
            if (o.degree < 1) {
                throw DomainError("d must be positive");
            }
            emit_ideal(sq_lexd(load_ideal(), static_cast<std::uint64_t>(o.degree), lim));
        } else if (*phi_cmd) {
            emit_ideal(phi_ideal(load_ideal()));
        } else if (*phi_inv_cmd) {
            emit_ideal(phi_inv_ideal(load_ideal()));
        } else if (*phi_tilde_cmd) {
            emit_ideal(phi_tilde(load_ideal()));
        } else if (*lseq) {
            auto I = load_ideal();
            LSequence l = o.star ? l_star(I) : l_sequence(I);
            if (o.json) {
                out << json{{"degree", l.degree}, {"star", o.star}, {"entries", detail::to_json(l.entries)}}.dump()
                    << "\n";
            } else {
                out << to_string(l) << "\n";
            }
        } else if (*charz) {
            if (o.degree < 1) {
                throw DomainError("d must be positive");
            }
            auto d = static_cast<std::uint64_t>(o.degree);
            std::string text = read_file(o.input);
            HilbertSpec H;
            if (text.find("role=") != std::string::npos) {
                H = parse_hilbert_spec(text);
            } else {
                auto I = parse_ideal(text);
                H = hilbert_spec(I, d + I.num_vars() - 1, lim);
            }
            Verdict v = characterize(H, d, o.exact);
            if (o.json) {
                json j{{"admissible", v.admissible}};
                if (v.witness) {
                    j["l"] = detail::to_json(v.witness->entries);
                } else {
                    j["failed_condition"] = v.failed_condition;
                    j["detail"] = v.detail;
                }
                out << j.dump() << "\n";
            } else if (v.admissible) {
                out << "admissible\nl = " << to_string(*v.witness) << "\n";
            } else {
                out << "inadmissible\ncondition " << v.failed_condition << ": " << v.detail << "\n";
            }
        } else if (*rr) {
            emit_range(regularity_range(load_ideal(), lim));
        } else if (*srr) {
            emit_range(sq_regularity_range(load_ideal(), lim));
        } else if (*area) {
            if (o.pts.empty()) {
                throw FormatError("area needs a corner list");
            }
            std::size_t n = o.n;
            if (n == 0) {
                // smallest bound that holds every corner
                auto probe = parse_area(o.pts, 1 << 10);
                for (auto [i, j] : probe.corners()) {
                    n = std::max(n, static_cast<std::size_t>(i) + 1);
                }
            }
            ExtremalArea A = parse_area(o.pts, n);
            if (*area_subs[0]) {
                ExtremalArea C = conv_hull(A);
                out << (o.json ? json{{"corners", detail::cells_json(C.corners())}}.dump() : format_area(C)) << "\n";
            } else if (*area_subs[1]) {
                auto tops = top_points(A);
                bool sc = is_semi_convex(A);
                if (o.json) {
                    json j{{"semi_convex", sc}, {"top_points", detail::cells_json(tops)}};
                    if (sc) {
                        j["reducible_points"] = detail::cells_json(reducible_points(A));
                    }
                    out << j.dump() << "\n";
                } else {
                    out << "semi-convex: " << (sc ? "yes" : "no") << "\n"
                        << "top points: " << detail::cells_text(tops) << "\n";
                    if (sc) {
                        out << "reducible points: " << detail::cells_text(reducible_points(A)) << "\n";
                    }
                }
            } else {
                auto rep = standard_representation(A);
                out << (o.json ? json{{"corners", detail::cells_json(rep)}}.dump() : format_area(A)) << "\n";
            }
        } else if (*lexarea) {
            auto I = load_ideal();
            ExtremalArea A = parse_area(o.area, I.num_vars());
            std::optional<std::size_t> top;
            if (o.top >= 0) {
                top = static_cast<std::size_t>(o.top);
            }
            emit_ideal(lex_i_a(I, A, top, lim));
        } else if (*cx) {
            SimplicialComplex G = parse_complex(read_file(o.input));
            const std::string which = cx->get_subcommands().front()->get_name();
            if (which == "fvec" || which == "hvec") {
                auto v = which == "fvec" ? f_vector(G, lim) : h_vector(G);
                out << (o.json ? json{{which, detail::to_json(v)}}.dump() : "(" + detail::join(v) + ")") << "\n";
            } else if (which == "dual") {
                auto D = alexander_dual(G, lim);
                out << (o.json ? detail::to_json(D).dump() + "\n" : format_complex(D));
            } else if (which == "sr") {
                emit_ideal(stanley_reisner(G, lim));
            } else {
                bool cm = eagon_reiner_cm(G, lim);
                out << (o.json ? json{{"cohen_macaulay", cm}}.dump() : std::string(cm ? "true" : "false")) << "\n";
            }
        }
    } catch (const CapExceeded& e) {
        err << "error[cap]: " << e.what() << "\n";
        return 1;
    } catch (const DomainError& e) {
        err << "error[domain]: " << e.what() << "\n";
        return 1;
    } catch (const FormatError& e) {
        err << "error[format]: " << e.what() << "\n";
        return 2;
    }
    return 0;
}

} // namespace dreg::cli
