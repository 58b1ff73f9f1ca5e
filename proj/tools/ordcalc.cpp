#include "ordcalc/calculus.hpp"
#include "ordcalc/cone.hpp"
#include "ordcalc/errors.hpp"
#include "ordcalc/hilbert.hpp"
#include "ordcalc/json_io.hpp"
#include "ordcalc/lgroup.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using nlohmann::json;
using namespace ordcalc;

struct Options {
    std::string input;      // path, "-" or empty for stdin
    std::string out;        // output path; empty for stdout
    bool quiet = false;
    long box = -1;          // oracle cross-check box; <0: use input field, 0: off
    std::size_t piece_cap = lgroup::kDefaultPieceCap;
    std::size_t node_cap = lgroup::kDefaultNodeCap;
    unsigned long completion_cap = hilbert::kDefaultCompletionCap;
};

json read_input(const Options& opt) {
    std::string text;
    if (opt.input.empty() || opt.input == "-") {
        std::stringstream ss;
        ss << std::cin.rdbuf();
        text = ss.str();
    } else {
        std::ifstream f(opt.input);
        if (!f) throw io::schema_error("cannot open input file: " + opt.input);
        std::stringstream ss;
        ss << f.rdbuf();
        text = ss.str();
    }
    return json::parse(text);
}

void emit(const Options& opt, const json& result, const std::string& summary) {
    std::string text = result.dump(2);
    text.push_back('\n');
    if (opt.out.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(opt.out, std::ios::binary);
        if (!f) throw io::schema_error("cannot open output file: " + opt.out);
        f << text;
    }
    if (!opt.quiet) std::cerr << summary << "\n";
}

std::string genset_summary(const GenSet& s) {
    std::ostringstream os;
    os << "generators: " << s.count() << " (" << (s.nonneg() ? "nonneg" : "signed")
       << ") over " << s.ring().name();
    return os.str();
}

std::string cone_summary(const cones::ConeRep& c) {
    std::ostringstream os;
    os << "dim " << c.dim << ": " << (c.vrep ? c.vrep->cols() : 0) << " rays, lineality "
       << (c.lineality ? c.lineality->cols() : 0) << ", " << (c.hrep ? c.hrep->rows() : 0)
       << " inequalities";
    return os.str();
}

const json& field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key))
        throw io::schema_error(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

int run_command(const std::string& name, const Options& opt) {
    json in = read_input(opt);

    if (name == "solve") {
        io::MixedSystemInput mi = io::mixed_from_json(in);
        GenSet g = calc::solve_mixed(mi.sys, opt.completion_cap);
        emit(opt, io::genset_to_json(g), genset_summary(g));
    } else if (name == "solve-eq") {
        calc::EquationSolution s =
            calc::solve_equation(io::mat_from_json(field(in, "U")), opt.completion_cap);
        json j{{"gens", io::genset_to_json(s.gens)}};
        if (s.basis) j["basis"] = io::mat_to_json(*s.basis);
        emit(opt, j, genset_summary(s.gens));
    } else if (name == "hilbert") {
        io::MixedSystemInput mi = io::mixed_from_json(in);
        hilbert::HilbertBasis hb = hilbert::hilbert_basis(mi.sys.m, opt.completion_cap);
        long box = opt.box >= 0 ? opt.box : mi.box.value_or(0);
        if (box > 0 && !hilbert::cross_check_box(mi.sys.m, hb, box))
            throw std::runtime_error("oracle cross-check failed");
        emit(opt, io::hbasis_to_json(hb), genset_summary(hb.basis));
    } else if (name == "dd") {
        cones::ConeRep c = cones::ensure_both(io::cone_from_json(in));
        emit(opt, io::cone_to_json(c), cone_summary(c));
    } else if (name == "intersect") {
        GenSet b = io::genset_from_json(field(in, "b"));
        GenSet c = io::genset_from_json(field(in, "c"));
        GenSet g = calc::semimodule_intersect(b, c, opt.completion_cap);
        emit(opt, io::genset_to_json(g), genset_summary(g));
    } else if (name == "quotient") {
        GenSet g = calc::quotient_solve(io::mat_from_json(field(in, "U")),
                                        io::mat_from_json(field(in, "V")), opt.completion_cap);
        emit(opt, io::genset_to_json(g), genset_summary(g));
    } else if (name == "matring") {
        const json& msj = field(in, "ms");
        if (!msj.is_array() || msj.empty())
            throw io::schema_error("matring needs a nonempty array field \"ms\"");
        std::vector<Mat> ms;
        for (const json& mj : msj) ms.push_back(io::mat_from_json(mj));
        GenSet g = calc::matrix_ring_solve(ms, opt.completion_cap);
        emit(opt, io::genset_to_json(g), genset_summary(g));
    } else if (name == "localize") {
        GenSet g = calc::localize_lift(io::mat_from_json(field(in, "U")), opt.completion_cap);
        emit(opt, io::genset_to_json(g), genset_summary(g));
    } else if (name == "field-eq") {
        if (in.contains("p")) {
            const json& pj = in.at("p");
            if (!pj.is_array()) throw io::schema_error("\"p\" must be an array of rationals");
            std::vector<Rat> p;
            for (const json& e : pj) {
                if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string())
                    throw io::schema_error("each coefficient must be a [\"num\",\"den\"] pair");
                try {
                    p.push_back(rat_from_strings(e[0].get<std::string>(), e[1].get<std::string>()));
                } catch (const precondition_error& err) {
                    throw io::schema_error(err.what());
                }
            }
            GenSet g = calc::field_equation_solve(p);
            emit(opt, io::genset_to_json(g), genset_summary(g));
        } else if (in.contains("M")) {
            Mat m = io::mat_from_json(in.at("M"));
            if (m.ring().kind() != RingKind::Rationals)
                throw io::schema_error("field-eq expects a matrix over Q");
            GenSet g = calc::multi_equation_solve_q(m);
            emit(opt, io::genset_to_json(g), genset_summary(g));
        } else {
            throw io::schema_error("field-eq needs field \"p\" (one equation) or \"M\" (several)");
        }
    } else if (name == "change-span") {
        GenSet g = calc::change_spanning(
            io::mat_from_json(field(in, "U")), io::mat_from_json(field(in, "V")),
            io::mat_from_json(field(in, "M")), io::mat_from_json(field(in, "N")),
            io::genset_from_json(field(in, "S")));
        emit(opt, io::genset_to_json(g), genset_summary(g));
    } else if (name == "lgroup-solve") {
        lgroup::LPresentation pres =
            io::presentation_from_json(field(in, "presentation"), opt.piece_cap, opt.node_cap);
        const json& fsj = field(in, "fs");
        if (!fsj.is_array() || fsj.empty())
            throw io::schema_error("\"fs\" must be a nonempty array of terms");
        std::vector<lgroup::LatticeTerm> fs;
        for (const json& t : fsj) fs.push_back(io::term_from_json(t, pres.n));
        hilbert::HilbertBasis hb =
            lgroup::lgroup_solve(pres, fs, opt.piece_cap, opt.node_cap, opt.completion_cap);
        emit(opt, io::hbasis_to_json(hb), genset_summary(hb.basis));
    } else if (name == "lgroup-eq") {
        lgroup::LPresentation pres =
            io::presentation_from_json(field(in, "presentation"), opt.piece_cap, opt.node_cap);
        bool eq = lgroup::pl_equal(pres, io::term_from_json(field(in, "f"), pres.n),
                                   io::term_from_json(field(in, "g"), pres.n),
                                   opt.piece_cap, opt.node_cap);
        emit(opt, json{{"equal", eq}}, std::string("equal: ") + (eq ? "true" : "false"));
    } else {
        throw io::schema_error("unknown command: " + name);
    }
    return 0;
}

int run_demo_irrational(std::size_t depth, const Options& opt) {
    auto convergents = lgroup::sqrt2_convergents(depth);
    auto rows = lgroup::irrational_demo(convergents, opt.completion_cap);

    json jrows = json::array();
    std::ostringstream table;
    table << "p/q -> sqrt(2): Hilbert basis of {q.x - p.y >= 0, x, y >= 0}\n";
    for (const auto& row : rows) {
        jrows.push_back(json{{"p", row.p},
                             {"q", row.q},
                             {"size", row.basis.count()},
                             {"basis", io::genset_to_json(row.basis)}});
        table << "  p=" << row.p << " q=" << row.q << " size=" << row.basis.count()
              << " basis=";
        for (std::size_t j = 0; j < row.basis.count(); ++j) {
            if (j) table << " ";
            table << "(" << row.basis.gens().at(0, j).get_str() << ","
                  << row.basis.gens().at(1, j).get_str() << ")";
        }
        table << "\n";
    }
    std::string t = table.str();
    t.pop_back(); // emit adds the final newline
    emit(opt, json{{"rows", std::move(jrows)}}, t);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact generating sets for solution semimodules of linear systems "
                 "over Z, localizations of Z, and Q"};
    app.require_subcommand(1);

    Options opt;
    std::size_t depth = 4;

    auto add_common = [&opt](CLI::App* cmd, bool with_input = true) {
        if (with_input)
            cmd->add_option("input", opt.input, "input JSON path (\"-\" or omitted: stdin)");
        cmd->add_option("--out", opt.out, "write the JSON result to this path");
        cmd->add_flag("--quiet", opt.quiet, "suppress the human-readable summary");
        cmd->add_option("--box", opt.box, "oracle cross-check box for hilbert (0 disables)");
        cmd->add_option("--piece-cap", opt.piece_cap,
                        "maximum number of convex pieces (default 10000)");
        cmd->add_option("--node-cap", opt.node_cap,
                        "maximum functionals during term normalization (default 100000)");
        cmd->add_option("--completion-cap", opt.completion_cap,
                        "maximum vectors explored by the completion (default 1000000)");
    };

    struct Sub {
        const char* name;
        const char* help;
    };
    const Sub subs[] = {
        {"solve", "generating set of a mixed system M.X >= 0 with chosen sign-constrained columns"},
        {"solve-eq", "generating set (and basis over Q) of U.X = 0"},
        {"hilbert", "minimal Hilbert basis of {X >= 0 : M.X >= 0} over Z"},
        {"dd", "double description: complete a cone to both representations"},
        {"intersect", "intersection of two finitely generated semimodules"},
        {"quotient", "solutions of U.X >= 0 modulo the convex submodule spanned by V"},
        {"matring", "componentwise-ordered matrix ring solve over flattened coordinates"},
        {"localize", "solve over a localization of Z by clearing denominators"},
        {"field-eq", "nonnegative solutions of rational linear equations (one or several rows)"},
        {"change-span", "transport a solution set to a new spanning row via [I-NM | NM-I | NS]"},
        {"lgroup-solve", "Hilbert basis of the term-positivity monoid on a presented group"},
        {"lgroup-eq", "equality of two terms in a finitely presented lattice-ordered group"},
    };
    for (const Sub& s : subs) add_common(app.add_subcommand(s.name, s.help));

    CLI::App* demo = app.add_subcommand(
        "demo-irrational", "Hilbert bases along sqrt(2) convergents: basis growth table");
    demo->add_option("--depth", depth, "number of convergents (1..8, default 4)");
    add_common(demo, false);

    CLI11_PARSE(app, argc, argv);

    try {
        CLI::App* sub = app.get_subcommands().front();
        if (sub->get_name() == "demo-irrational") return run_demo_irrational(depth, opt);
        return run_command(sub->get_name(), opt);
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: malformed JSON: " << e.what() << "\n";
        return 1;
    } catch (const ordcalc::io::schema_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const ordcalc::resource_limit_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const ordcalc::precondition_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
