#include "ilr/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "ilr/error.hpp"
#include "ilr/eval.hpp"
#include "ilr/learn.hpp"
#include "ilr/parse.hpp"
#include "ilr/print.hpp"
#include "ilr/proof.hpp"
#include "ilr/typecheck.hpp"

namespace ilr {

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot read file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

struct CommonOpts {
    bool no_prelude = false;
    std::string defs_path;

    DefEnv load_env() const {
        DefEnv env;
        if (!no_prelude) parse_defs(env, prelude_source());
        if (!defs_path.empty()) parse_defs(env, read_file(defs_path));
        return env;
    }
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_flag("--no-prelude", opts.no_prelude, "do not load the built-in definitions");
    cmd->add_option("--defs", opts.defs_path, "extra definitions file (.defs)");
}

Strategy strategy_from(const std::string& name) {
    if (name == "outermost") return Strategy::Outermost;
    if (name == "innermost") return Strategy::Innermost;
    throw Error("unknown strategy `" + name + "` (outermost|innermost)");
}

// Realizers fed to the learning commands: .proof files are checked and
// extracted, .term files are parsed directly.
Term load_realizer(const DefEnv& env, const std::string& path, const std::string& kind_override) {
    SourceKind kind;
    if (!kind_override.empty()) {
        if (kind_override == "proof") kind = SourceKind::Proof;
        else if (kind_override == "term") kind = SourceKind::Term;
        else throw Error("--kind must be proof or term");
    } else {
        auto k = kind_from_path(path);
        if (!k || (*k != SourceKind::Proof && *k != SourceKind::Term))
            throw Error("cannot infer input kind of " + path + " (use --kind proof|term)");
        kind = *k;
    }
    std::string text = read_file(path);
    if (kind == SourceKind::Proof) return extract(env, parse_proof(env, text));
    return parse_term(env, text);
}

int dispatch(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"interactive realizability toolkit"};
    app.require_subcommand(1);

    // check
    auto* c_check = app.add_subcommand("check", "check a natural-deduction proof");
    CommonOpts check_opts;
    std::string check_path;
    c_check->add_option("proof", check_path, "proof file")->required();
    add_common(c_check, check_opts);

    // extract
    auto* c_extract = app.add_subcommand("extract", "extract the realizer of a proof");
    CommonOpts extract_opts;
    std::string extract_path, extract_out;
    c_extract->add_option("proof", extract_path, "proof file")->required();
    c_extract->add_option("-o,--output", extract_out, "also write the term to this file");
    add_common(c_extract, extract_opts);

    // normalize
    auto* c_norm = app.add_subcommand("normalize", "normalize a term");
    CommonOpts norm_opts;
    std::string norm_path, norm_state, norm_strategy = "outermost";
    std::uint64_t norm_cap = kDefaultStepCap;
    c_norm->add_option("term", norm_path, "term file")->required();
    c_norm->add_option("--state", norm_state, "state file bound to the keyword `s`");
    c_norm->add_option("--strategy", norm_strategy, "outermost|innermost");
    c_norm->add_option("--step-cap", norm_cap, "reduction step budget");
    add_common(c_norm, norm_opts);

    // realizes
    auto* c_real = app.add_subcommand("realizes", "bounded realizability check");
    CommonOpts real_opts;
    std::string real_term, real_form, real_state;
    std::uint64_t real_depth = kDefaultDepth;
    c_real->add_option("term", real_term, "realizer term file")->required();
    c_real->add_option("formula", real_form, "formula file")->required();
    c_real->add_option("--state", real_state, "state file (default: empty)");
    c_real->add_option("--depth", real_depth, "instances checked per universal quantifier");
    add_common(c_real, real_opts);

    // witness
    auto* c_wit = app.add_subcommand("witness", "extract a witness from a realizer or proof");
    CommonOpts wit_opts;
    std::string wit_path, wit_pred, wit_trace, wit_kind, wit_warm;
    std::uint64_t wit_input = 0, wit_cap = kDefaultIterCap;
    c_wit->add_option("source", wit_path, "proof or term file")->required();
    c_wit->add_option("--pred", wit_pred, "predicate name")->required();
    c_wit->add_option("--input", wit_input, "argument value n")->required();
    c_wit->add_option("--trace", wit_trace, "write the learning trace (one JSON object per line)");
    c_wit->add_option("--iter-cap", wit_cap, "learning loop iteration budget");
    c_wit->add_option("--kind", wit_kind, "input kind override: proof|term");
    c_wit->add_option("--warm-start", wit_warm, "start the loop from this state file");
    add_common(c_wit, wit_opts);

    // converge
    auto* c_conv = app.add_subcommand("converge", "evaluate a term along a chain of states");
    CommonOpts conv_opts;
    std::string conv_path;
    std::vector<std::string> conv_chain;
    c_conv->add_option("term", conv_path, "term file")->required();
    c_conv->add_option("--chain", conv_chain, "state files, weakly increasing")
        ->required()
        ->expected(-1);
    add_common(c_conv, conv_opts);

    std::vector<const char*> cargv;
    cargv.push_back("ilr");
    for (const std::string& a : argv) cargv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(cargv.size()), cargv.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitParse;
    }

    if (c_check->parsed()) {
        DefEnv env = check_opts.load_env();
        Judgement j = check(env, parse_proof(env, read_file(check_path)));
        out << print(j) << "\n";
        return kExitOk;
    }

    if (c_extract->parsed()) {
        DefEnv env = extract_opts.load_env();
        Term t = extract(env, parse_proof(env, read_file(extract_path)));
        std::string text = print(t) + "\n";
        out << text;
        if (!extract_out.empty()) {
            std::ofstream f(extract_out, std::ios::binary);
            if (!f) throw Error("cannot write file: " + extract_out);
            f << text;
        }
        return kExitOk;
    }

    if (c_norm->parsed()) {
        DefEnv env = norm_opts.load_env();
        StateId s = norm_state.empty() ? kEmptyState : parse_state(env, read_file(norm_state));
        Term t = parse_term(env, read_file(norm_path), s);
        if (contains_oracle_family(t)) t = approximate(t, s);
        NormalForm nf = normalize(env, t, strategy_from(norm_strategy), norm_cap);
        out << print(nf.term) << "\n";
        return kExitOk;
    }

    if (c_real->parsed()) {
        DefEnv env = real_opts.load_env();
        StateId s = real_state.empty() ? kEmptyState : parse_state(env, read_file(real_state));
        Term t = parse_term(env, read_file(real_term), s);
        Formula a = parse_formula(env, read_file(real_form), s);
        Verdict v = realizes_at(env, t, a, s, real_depth);
        switch (v.kind) {
            case Verdict::Kind::Pass:
                out << "pass\n";
                return kExitOk;
            case Verdict::Kind::PassUnverifiedImp:
                out << "pass (" << v.unverified_imps
                    << " implication(s) accepted without candidates)\n";
                return kExitOk;
            case Verdict::Kind::Fail:
                out << "fail at " << (v.path.empty() ? "<root>" : v.path) << " in state "
                    << print_state(v.state) << ": " << v.detail << "\n";
                return kExitSemantic;
        }
        return kExitInternal;
    }

    if (c_wit->parsed()) {
        DefEnv env = wit_opts.load_env();
        Term t = load_realizer(env, wit_path, wit_kind);
        StateId start = wit_warm.empty() ? kEmptyState : parse_state(env, read_file(wit_warm));
        WitnessResult r = pi02_witness(env, t, wit_pred, wit_input, wit_cap, start);
        if (!wit_trace.empty()) {
            std::ofstream f(wit_trace, std::ios::binary);
            if (!f) throw Error("cannot write file: " + wit_trace);
            f << trace_to_json(r.trace);
        }
        out << r.witness << "\n";
        return kExitOk;
    }

    if (c_conv->parsed()) {
        DefEnv env = conv_opts.load_env();
        std::vector<StateId> states;
        for (const std::string& path : conv_chain)
            states.push_back(parse_state(env, read_file(path)));
        WiChain chain(std::move(states));
        Term t = parse_term(env, read_file(conv_path));
        ConvergenceReport rep = check_converges(env, t, chain);
        out << "last_change " << rep.last_change_index << "\n";
        out << "final " << to_string(rep.final_value) << "\n";
        return kExitOk;
    }

    err << "no subcommand given\n";
    return kExitParse;
}

}  // namespace

int run_command(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
    try {
        return dispatch(argv, out, err);
    } catch (const ParseError& e) {
        for (const Diagnostic& d : e.diagnostics) err << to_string(d) << "\n";
        return kExitParse;
    } catch (const InternalError& e) {
        err << "internal error: " << e.what() << "\n";
        return kExitInternal;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitSemantic;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
}

}  // namespace ilr
