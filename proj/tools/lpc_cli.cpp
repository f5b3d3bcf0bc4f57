#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lpc/check.hpp"
#include "lpc/cutelim.hpp"
#include "lpc/derivation.hpp"
#include "lpc/elaborate.hpp"
#include "lpc/errors.hpp"
#include "lpc/models/boolalg.hpp"
#include "lpc/models/finvect.hpp"
#include "lpc/models/rel.hpp"
#include "lpc/search.hpp"
#include "lpc/semantics/interp.hpp"
#include "lpc/semantics/laws.hpp"
#include "lpc/sequent.hpp"
#include "lpc/sexpr.hpp"

// Exit codes shared by every subcommand: 0 for a successful verdict, 1 for
// a negative one (check failure, exhausted search, derivation gap), 2 for
// usage or parse errors. Logical subcommands are deterministic; --seed only
// perturbs morphism sampling in verify-model.

namespace {

using namespace lpc;

std::string read_input(const std::string& path) {
    if (path.empty() || path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<Deriv> parse_derivs(const std::string& text) {
    std::vector<Deriv> out;
    for (const SExpr& e : parse_sexprs(text)) out.push_back(deriv_from_sexpr(e));
    return out;
}

Deriv parse_one_deriv(const std::string& text) {
    std::vector<Deriv> ds = parse_derivs(text);
    if (ds.size() != 1)
        throw parse_error("expected exactly one derivation, found " +
                              std::to_string(ds.size()),
                          1, 1);
    return ds[0];
}

// --- check -----------------------------------------------------------------

int cmd_check(const std::string& path, bool no_cut) {
    std::vector<Deriv> ds = parse_derivs(read_input(path));
    if (ds.empty()) throw parse_error("no derivation in input", 1, 1);
    CheckPolicy policy{/*allow_cut=*/!no_cut};
    bool all_ok = true;
    for (size_t i = 0; i < ds.size(); ++i) {
        CheckReport r = check(ds[i], policy);
        if (!r.ok) {
            all_ok = false;
            std::cout << "derivation " << i << ": " << r.message << " at "
                      << r.path_string() << " [" << cause_name(r.cause) << "]\n";
        }
    }
    if (all_ok) std::cout << "ok\n";
    return all_ok ? 0 : 1;
}

// --- elim --------------------------------------------------------------------

void print_gap(const cut_gap_error& e) {
    const GapDiagnosis& d = e.diagnosis();
    std::cerr << "gap: " << e.what() << "\n";
    std::cerr << "gap: blocked on " << print_prop(d.blocking) << ", missing "
              << print_sequent(d.goal) << "\n";
}

int cmd_elim(const std::string& path, bool trace, const std::string& emit) {
    Deriv d = parse_one_deriv(read_input(path));
    EliminationResult res;
    try {
        res = eliminate_all(d, trace);
    } catch (const cut_gap_error& e) {
        print_gap(e);
        return 1;
    }
    if (trace)
        for (const auto& s : res.trace.steps)
            std::cerr << "step " << s.label << " size=" << s.formula_size
                      << " depth=" << s.depth_sum << " parent=" << s.parent << "\n";
    std::string text = print_deriv(res.deriv);
    if (emit.empty()) {
        std::cout << text << "\n";
    } else {
        std::ofstream out(emit, std::ios::binary);
        if (!out) throw std::runtime_error("cannot write " + emit);
        out << text << "\n";
        std::cout << "ok\n";
    }
    return 0;
}

// --- dual --------------------------------------------------------------------

int cmd_dual(const std::string& path, const std::string& side_name, size_t pos) {
    Deriv d = parse_one_deriv(read_input(path));
    Side side = side_name == "left" ? Side::Left : Side::Right;
    const Context& ctx =
        side == Side::Left ? d->conclusion.left : d->conclusion.right;
    if (pos >= ctx.size()) {
        std::cerr << "error: --pos " << pos << " out of range; the "
                  << side_name << " context of " << print_sequent(d->conclusion)
                  << " has " << ctx.size() << " entries\n";
        return 2;
    }
    try {
        Deriv moved = elaborate_dual(d, side, ctx[pos]);
        std::cout << print_deriv(moved) << "\n";
        return 0;
    } catch (const cut_gap_error& e) {
        print_gap(e);
        return 1;
    }
}

// --- search --------------------------------------------------------------------

int cmd_search(const std::string& goal_text, size_t depth, size_t contractions,
               size_t nodes) {
    Sequent goal = parse_sequent(goal_text);
    SearchBudget budget{depth, contractions, nodes};
    SearchOutcome out = search(goal, budget);
    if (out) {
        std::cout << print_deriv(out.deriv) << "\n";
        return 0;
    }
    if (out.node_limit) {
        std::cout << "node limit (" << out.nodes << " nodes)\n";
        return 1;
    }
    std::cout << "exhausted\n";
    return 1;
}

// --- interp --------------------------------------------------------------------

void print_mor(const models::BRel& f) {
    for (uint32_t r = 0; r < f.rows; ++r) {
        for (uint32_t c = 0; c < f.cols; ++c) {
            if (c) std::cout << ',';
            std::cout << (f.get(r, c) ? 1 : 0);
        }
        std::cout << '\n';
    }
}

void print_mor(const models::Mat& f) {
    for (uint32_t r = 0; r < f.rows; ++r) {
        for (uint32_t c = 0; c < f.cols; ++c) {
            if (c) std::cout << ',';
            std::cout << unsigned(f.at(r, c));
        }
        std::cout << '\n';
    }
}

void print_fn(const models::Fn& f) {
    std::cout << "tab ";
    for (size_t i = 0; i < f.tab.size(); ++i) {
        if (i) std::cout << ',';
        std::cout << f.tab[i];
    }
    std::cout << '\n';
}

template <class M>
int run_interp(const M& m, const Deriv& d0) {
    Deriv d;
    try {
        d = eliminate(d0); // denotations are defined on cut-free derivations
    } catch (const cut_gap_error& e) {
        print_gap(e);
        return 1;
    }
    if (d->conclusion.kind == Judgment::Linear) {
        auto den = semantics::interp_linear(m, d);
        std::cout << "judgment linear\n";
        std::cout << "sequent " << print_sequent(d->conclusion) << "\n";
        std::cout << "dom " << den.dom << "\ncod " << den.cod << "\n";
        print_mor(den.mor);
    } else {
        auto den = semantics::interp_persistent(m, d);
        std::cout << "judgment persistent\n";
        std::cout << "sequent " << print_sequent(d->conclusion) << "\n";
        std::cout << "displaced "
                  << (den.displaced.side == Side::Left ? "left " : "right ")
                  << den.displaced.index << "\n";
        std::cout << "dom " << den.dom << " (producers " << den.dom_left
                  << " x consumers " << den.dom_right << ")\ncod " << den.cod
                  << "\n";
        print_fn(den.mor);
    }
    return 0;
}

// --- verify-model ---------------------------------------------------------------

int print_report(const semantics::LawReport& rep, const std::string& filter) {
    size_t shown = 0, bad = 0;
    for (const auto& r : rep.results) {
        if (!filter.empty() && r.family.find(filter) == std::string::npos) continue;
        ++shown;
        if (!r.ok()) ++bad;
        std::cout << (r.ok() ? "ok   " : "FAIL ") << r.family << " checked="
                  << r.checked << " failures=" << r.failures
                  << " skipped=" << r.skipped;
        if (!r.expected_ok) std::cout << " [documented defect]";
        if (!r.note.empty()) std::cout << "  # " << r.note;
        std::cout << "\n";
    }
    if (shown == 0) {
        std::cerr << "error: no law family matches --laws " << filter << "\n";
        return 2;
    }
    std::cout << rep.model << ": " << (shown - bad) << "/" << shown
              << " families ok\n";
    return bad == 0 ? 0 : 1;
}

template <class M>
int run_verify(const M& m, uint32_t max_size, const std::string& filter,
               uint64_t seed) {
    semantics::LawOptions opt;
    opt.max_size = max_size;
    opt.seed = seed;
    return print_report(semantics::check_laws(m, opt), filter);
}

// --- corpus ----------------------------------------------------------------------

int cmd_corpus(uint32_t size, size_t depth) {
    SearchBudget budget;
    budget.max_depth = depth;
    for (const auto& e : enumerate_provable(size, budget))
        std::cout << print_deriv(e.deriv) << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"workbench for the linear/producer/consumer sequent calculus"};
    app.require_subcommand(1);

    std::string path;      // input file, "-" for stdin
    bool no_cut = false;
    bool trace = false;
    std::string emit;
    std::string side = "left";
    size_t pos = 0;
    std::string goal_text;
    size_t depth = 8, contractions = 0, nodes = 200000;
    std::string model = "rel";
    uint32_t q = 2;
    uint32_t max_size = 2;
    std::string laws_filter;
    uint64_t seed = 0x5eedba5eULL;

    CLI::App* c_check = app.add_subcommand("check", "check a derivation script");
    c_check->add_option("file", path, "derivation file, - for stdin");
    c_check->add_flag("--no-cut", no_cut, "reject Cut rules");

    CLI::App* c_elim = app.add_subcommand("elim", "eliminate cuts from a derivation");
    c_elim->add_option("file", path, "derivation file, - for stdin");
    c_elim->add_flag("--trace", trace, "log each reduction step to stderr");
    c_elim->add_option("--emit", emit, "write the result to a file instead of stdout");

    CLI::App* c_dual = app.add_subcommand(
        "dual", "move a context entry across the turnstile, dualized");
    c_dual->add_option("file", path, "derivation file, - for stdin");
    c_dual->add_option("--side", side, "side of the occurrence to move")
        ->check(CLI::IsMember({"left", "right"}));
    c_dual->add_option("--pos", pos, "index into the printed context");

    CLI::App* c_search = app.add_subcommand("search", "bounded backward proof search");
    c_search->add_option("goal", goal_text, "goal sequent text")->required();
    c_search->add_option("--depth", depth, "maximum derivation depth");
    c_search->add_option("--contractions", contractions,
                         "contraction budget per branch");
    c_search->add_option("--nodes", nodes, "node expansion budget");

    CLI::App* c_interp = app.add_subcommand(
        "interp", "interpret a derivation in a finite model");
    c_interp->add_option("file", path, "derivation file, - for stdin");
    c_interp->add_option("--model", model, "rel or finvect")
        ->check(CLI::IsMember({"rel", "finvect"}));
    c_interp->add_option("--q", q, "field modulus for finvect");

    CLI::App* c_verify = app.add_subcommand("verify-model",
                                            "run the law suite against a model");
    c_verify->add_option("--model", model, "rel, finvect, or boolalg")
        ->required()
        ->check(CLI::IsMember({"rel", "finvect", "boolalg"}));
    c_verify->add_option("--max-size", max_size, "largest object enumerated");
    c_verify->add_option("--laws", laws_filter, "only families containing this text");
    c_verify->add_option("--seed", seed, "morphism sampling seed");
    c_verify->add_option("--q", q, "field modulus for finvect");

    CLI::App* c_corpus = app.add_subcommand(
        "corpus", "enumerate provable sequents with their derivations");
    c_corpus->add_option("--size", max_size, "largest proposition size");
    c_corpus->add_option("--depth", depth, "search depth per goal");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int r = app.exit(e);
        return r == 0 ? 0 : 2;
    }

    try {
        if (*c_check) return cmd_check(path, no_cut);
        if (*c_elim) return cmd_elim(path, trace, emit);
        if (*c_dual) return cmd_dual(path, side, pos);
        if (*c_search) return cmd_search(goal_text, depth, contractions, nodes);
        if (*c_interp) {
            Deriv d = parse_one_deriv(read_input(path));
            if (model == "rel") return run_interp(models::RelModel{}, d);
            return run_interp(models::FinVectModel{q}, d);
        }
        if (*c_verify) {
            if (model == "rel") return run_verify(models::RelModel{}, max_size,
                                                  laws_filter, seed);
            if (model == "finvect")
                return run_verify(models::FinVectModel{q}, max_size, laws_filter,
                                  seed);
            return run_verify(models::BoolAlgModel{}, max_size, laws_filter, seed);
        }
        if (*c_corpus) return cmd_corpus(max_size, depth);
    } catch (const parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const mode_error& e) {
        std::cerr << "mode error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
