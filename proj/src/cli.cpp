#include "hg/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "hg/oracle.hpp"
#include "hg/reducer.hpp"
#include "hg/solver.hpp"

namespace hg {

namespace {

Hypergraph load_input(const std::string& path) {
    if (path == "-") return parse_hypergraph(std::cin);
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return parse_hypergraph(in);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

Mode parse_mode(const std::string& m) {
    if (m == "family") return Mode::Family;
    if (m == "tour") return Mode::Tour;
    throw CLI::ValidationError("--mode", "must be family or tour");
}

// Solvers require connected input; split and recombine here.
Decision decide_with_split(const Hypergraph& h, Mode mode, bool spanning, bool reduce,
                           std::vector<ReductionTrace>* traces) {
    if (!spanning) return decide_direct(h, mode, false);
    auto comps = connected_components(h);
    auto one = [&](const Hypergraph& part) {
        if (reduce) {
            auto rd = decide_reduced(part, mode);
            if (traces) traces->push_back(std::move(rd.trace));
            return rd.decision;
        }
        return decide_direct(part, mode, true);
    };
    if (comps.count() == 1) return one(h);
    if (mode == Mode::Tour)
        return {false, std::nullopt, "disconnected input has no spanning Euler tour"};
    std::vector<Flag> flags;
    for (int c = 0; c < comps.count(); ++c) {
        auto sub = induced_subhypergraph(h, comps.vertices[c]);
        Decision d = one(sub.hg);
        if (!d.yes)
            return {false, std::nullopt,
                    "component " + std::to_string(c + 1) + ": " + d.reason};
        for (const Flag& f : family_incidence_graph(d.witness->trails))
            flags.push_back({sub.parent_vertex(f.vertex), sub.parent_edge(f.edge)});
    }
    std::sort(flags.begin(), flags.end());
    return {true, family_from_even_subgraph(h, flags), ""};
}

Structure parse_structure(const std::string& s) {
    if (s == "uniform") return Structure::Uniform;
    if (s == "glued-1cut") return Structure::Glued1Cut;
    if (s == "glued-2cut") return Structure::Glued2Cut;
    if (s == "deg2-cut") return Structure::Deg2Cut;
    throw CLI::ValidationError("--structure", "unknown structure " + s);
}

int emit_decision(const Decision& d, const Hypergraph& h, Mode mode, bool spanning,
                  const std::string& witnessPath, std::ostream& out, std::ostream& err) {
    if (!d.yes) {
        out << "NO\n";
        if (!d.reason.empty()) out << "reason: " << d.reason << '\n';
        return 1;
    }
    if (!d.witness) {
        err << "internal violation: YES without witness\n";
        return 3;
    }
    auto check = verify_witness(h, *d.witness, mode, spanning);
    if (!check.ok) {
        err << "internal violation: witness failed self-verification: " << check.violation
            << '\n';
        return 3;
    }
    out << "YES\n";
    std::string text = serialize_witness(*d.witness);
    if (witnessPath.empty()) {
        out << text;
    } else {
        std::ofstream wf(witnessPath);
        if (!wf) {
            err << "cannot write " << witnessPath << '\n';
            return 2;
        }
        wf << text;
    }
    return 0;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"spanning Euler family and tour toolkit"};
    app.require_subcommand(1);

    std::string modeStr = "family", input, witnessPath, outputPath, structureStr = "uniform";
    bool spanning = false, direct = false, reduce = false, expect = false;
    GeneratorParams gp;

    auto* decide = app.add_subcommand("decide", "decide Euler family/tour existence");
    decide->add_option("--mode", modeStr)->check(CLI::IsMember({"family", "tour"}));
    decide->add_flag("--spanning", spanning);
    decide->add_flag("--direct", direct);
    decide->add_flag("--reduce", reduce);
    decide->add_option("--witness", witnessPath);
    decide->add_option("input", input)->required();

    auto* verify = app.add_subcommand("verify", "check a witness against a hypergraph");
    verify->add_option("--mode", modeStr)->check(CLI::IsMember({"family", "tour"}));
    verify->add_flag("--spanning", spanning);
    verify->add_option("--witness", witnessPath)->required();
    verify->add_option("input", input)->required();

    auto* cuts = app.add_subcommand("cuts", "list vertex cuts of size at most 2");
    cuts->add_option("input", input)->required();

    auto* reduceCmd = app.add_subcommand("reduce", "print the reduction trace");
    reduceCmd->add_option("--mode", modeStr)->check(CLI::IsMember({"family", "tour"}));
    reduceCmd->add_option("input", input)->required();

    auto* gen = app.add_subcommand("gen", "generate a random hypergraph");
    gen->add_option("--seed", gp.seed);
    gen->add_option("--structure", structureStr)
        ->check(CLI::IsMember({"uniform", "glued-1cut", "glued-2cut", "deg2-cut"}));
    gen->add_option("--n-min", gp.nMin);
    gen->add_option("--n-max", gp.nMax);
    gen->add_option("--m-min", gp.mMin);
    gen->add_option("--m-max", gp.mMax);
    gen->add_option("--size-min", gp.sizeMin);
    gen->add_option("--size-max", gp.sizeMax);
    gen->add_option("--cut-size", gp.cutSize);
    gen->add_flag("--expect", expect, "prepend expected spanning verdicts as a comment");
    gen->add_option("-o,--output", outputPath);

    auto* oracle = app.add_subcommand("oracle", "brute-force decision (flag budget 24)");
    oracle->add_option("--mode", modeStr)->check(CLI::IsMember({"family", "tour"}));
    oracle->add_flag("--spanning", spanning);
    oracle->add_option("input", input)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return 2;
    }

    try {
        if (decide->parsed()) {
            if (direct && reduce) {
                err << "--direct and --reduce are mutually exclusive\n";
                return 2;
            }
            if (reduce && !spanning) {
                err << "--reduce requires --spanning\n";
                return 2;
            }
            Mode mode = parse_mode(modeStr);
            Hypergraph h = load_input(input);
            Decision d = decide_with_split(h, mode, spanning, reduce, nullptr);
            return emit_decision(d, h, mode, spanning, witnessPath, out, err);
        }
        if (verify->parsed()) {
            Mode mode = parse_mode(modeStr);
            Hypergraph h = load_input(input);
            EulerFamily w = parse_witness(read_file(witnessPath));
            auto check = verify_witness(h, w, mode, spanning);
            if (check.ok) {
                out << "ok\n";
                return 0;
            }
            out << "violation: " << check.violation << '\n';
            return 1;
        }
        if (cuts->parsed()) {
            Hypergraph h = load_input(input);
            if (!is_connected(h)) {
                err << "cuts requires connected input\n";
                return 2;
            }
            for (const auto& cut : find_vertex_cuts(h, 2)) {
                out << "S={";
                for (size_t i = 0; i < cut.s.size(); ++i) out << (i ? "," : "") << cut.s[i];
                out << "} components=" << cut.components.size()
                    << (cut.minimal ? " minimal" : " non-minimal") << " degrees=[";
                for (size_t i = 0; i < cut.degreeProfile.size(); ++i)
                    out << (i ? "," : "") << cut.degreeProfile[i];
                out << "] E_S={";
                for (size_t i = 0; i < cut.eS.size(); ++i)
                    out << (i ? "," : "") << 'e' << cut.eS[i];
                out << "}\n";
            }
            return 0;
        }
        if (reduceCmd->parsed()) {
            Mode mode = parse_mode(modeStr);
            Hypergraph h = load_input(input);
            std::vector<ReductionTrace> traces;
            Decision d = decide_with_split(h, mode, true, true, &traces);
            for (size_t i = 0; i < traces.size(); ++i) {
                if (traces.size() > 1) out << "component " << i + 1 << ":\n";
                out << traces[i].serialize();
            }
            out << (d.yes ? "YES" : "NO") << '\n';
            return d.yes ? 0 : 1;
        }
        if (gen->parsed()) {
            gp.structure = parse_structure(structureStr);
            Hypergraph h = random_hypergraph(gp);
            std::string text = h.serialize();
            if (expect) {
                Decision f = decide_with_split(h, Mode::Family, true, false, nullptr);
                Decision t = decide_with_split(h, Mode::Tour, true, false, nullptr);
                text = "# expect family=" + std::string(f.yes ? "YES" : "NO") +
                       " tour=" + (t.yes ? "YES" : "NO") + "\n" + text;
            }
            if (outputPath.empty()) {
                out << text;
            } else {
                std::ofstream of(outputPath);
                if (!of) {
                    err << "cannot write " << outputPath << '\n';
                    return 2;
                }
                of << text;
            }
            return 0;
        }
        if (oracle->parsed()) {
            Mode mode = parse_mode(modeStr);
            Hypergraph h = load_input(input);
            Decision d = brute_force_decide(h, mode, spanning);
            return emit_decision(d, h, mode, spanning, "", out, err);
        }
    } catch (const ParseError& e) {
        err << "parse error at line " << e.line << ": " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::logic_error& e) {
        err << "internal violation: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}

}  // namespace hg
