#include "rtalt/cli/dispatch.hpp"

#include "rtalt/alt/afa.hpp"
#include "rtalt/core/error.hpp"
#include "rtalt/core/machine_file.hpp"
#include "rtalt/pafa/builders.hpp"
#include "rtalt/pafa/search.hpp"
#include "rtalt/qfa/builders.hpp"
#include "rtalt/qfa/equivalence.hpp"
#include "rtalt/tmc/compiler.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace rtalt::cli {

namespace {

using core::MachineDescription;
using core::Verdict;
using core::Word;

/// Bound on simulated steps when checking a TM before compiling it.
constexpr std::size_t kTmCheckSteps = 100000;

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error("cannot open " + path);
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text)) {
        throw Error("cannot write " + path);
    }
}

/// Verdict of any machine kind; QFAs use positive one-sided error.
Verdict accepts(const MachineDescription& m, const Word& w)
{
    return std::visit(
        [&](const auto& d) -> Verdict {
            using T = std::decay_t<decltype(d)>;
            if constexpr (std::is_same_v<T, alt::AfaDescription>) {
                return alt::afa_accepts(d, w);
            }
            else if constexpr (std::is_same_v<T, alt::A1caDescription>) {
                return alt::a1ca_accepts(d, w);
            }
            else if constexpr (std::is_same_v<T, pafa::PafaDescription>) {
                return pafa::pafa_accepts(d, w);
            }
            else if constexpr (std::is_same_v<T, pafa::Pa1caDescription>) {
                return pafa::pa1ca_accepts(d, w);
            }
            else if constexpr (std::is_same_v<T, qfa::QfaDescription>) {
                return qfa::nqfa_accepts(d, w);
            }
            else {
                return qfa::aqfa_accepts(d, w);
            }
        },
        m.payload);
}

core::ComputationTree tree_of(const MachineDescription& m, const Word& w)
{
    return std::visit(
        [&](const auto& d) -> core::ComputationTree {
            using T = std::decay_t<decltype(d)>;
            if constexpr (std::is_same_v<T, alt::AfaDescription> || std::is_same_v<T, alt::A1caDescription>) {
                return alt::alt_tree(d, w);
            }
            else if constexpr (std::is_same_v<T, pafa::PafaDescription> ||
                               std::is_same_v<T, pafa::Pa1caDescription>) {
                // Rejected inputs have no witness; the empty strategy shows
                // the part of the tree that no choice can avoid.
                pafa::Pa1caDescription lifted;
                if constexpr (std::is_same_v<T, pafa::PafaDescription>) {
                    lifted = pafa::lift_to_pa1ca(d);
                }
                else {
                    lifted = d;
                }
                auto f = pafa::accepting_strategy(lifted, w);
                return pafa::strategy_tree(lifted, w, f.value_or(pafa::Strategy{}));
            }
            else if constexpr (std::is_same_v<T, qfa::AqfaDescription>) {
                return qfa::aqfa_tree(d, w);
            }
            else {
                throw Error("--tree is not available for qfa machines (no computation tree)");
            }
        },
        m.payload);
}

int cmd_run(const std::string& path, const std::string& word, const std::string& tree_path, std::ostream& out)
{
    auto m = core::parse_machine(read_file(path));
    Word w = core::from_utf8(word);
    if (!m.alphabet().contains(w)) {
        throw SymbolError("word uses a symbol outside the alphabet");
    }
    if (!tree_path.empty()) {
        write_file(tree_path, core::export_tree_dot(tree_of(m, w)));
    }
    Verdict v = accepts(m, w);
    out << core::to_string(v) << '\n';
    if (const auto* q = std::get_if<qfa::QfaDescription>(&m.payload)) {
        out << "probability " << core::format_rational(qfa::qfa_accept_probability(*q, w)) << '\n';
    }
    return v == Verdict::accept ? kSuccess : kNegative;
}

int cmd_enumerate(const std::string& path, std::size_t max_len, std::ostream& out)
{
    auto m = core::parse_machine(read_file(path));
    for (const auto& w : core::enumerate_words(m.alphabet(), max_len)) {
        if (accepts(m, w) == Verdict::accept) {
            out << core::display(w) << '\n';
        }
    }
    return kSuccess;
}

int cmd_emptiness(const std::string& path, std::optional<std::size_t> bound, std::ostream& out, std::ostream& err)
{
    auto m = core::parse_machine(read_file(path));
    if (const auto* q = std::get_if<qfa::QfaDescription>(&m.payload)) {
        auto v = qfa::nqfa_emptiness(*q);
        if (v.is_empty()) {
            out << "EMPTY\n";
            return kSuccess;
        }
        out << "NONEMPTY " << core::display(*v.witness) << '\n';
        return kNegative;
    }
    if (!bound) {
        err << "emptiness is undecidable for " << core::kind_name(m.kind())
            << " machines; pass --bounded L for a non-conclusive sweep\n";
        return kFailure;
    }
    for (const auto& w : core::enumerate_words(m.alphabet(), *bound)) {
        if (accepts(m, w) == Verdict::accept) {
            out << "NONEMPTY " << core::display(w) << '\n';
            return kNegative;
        }
    }
    out << "NO WITNESS ≤ " << *bound << " (bounded sweep, not a proof of emptiness)\n";
    return kSuccess;
}

int cmd_compile(const std::string& path, const std::string& out_path, std::ostream& out, std::ostream& err)
{
    auto tm = core::parse_tm(read_file(path));
    auto issues = tmc::tm_check_assumptions(tm, kTmCheckSteps);
    if (!issues.empty()) {
        for (const auto& i : issues) {
            err << "assumption violated: " << i << '\n';
        }
        return kFailure;
    }
    auto a = tmc::compile_tm_to_a1ca(tm);
    write_file(out_path, core::serialize_machine({a}));
    out << "wrote " << out_path << " (" << a.states.size() << " states)\n";
    return kSuccess;
}

int cmd_build(const std::string& name, const std::string& out_path, std::ostream& out)
{
    MachineDescription m;
    if (name == "upower") {
        m = {pafa::build_upower()};
    }
    else if (name == "twin") {
        m = {pafa::build_twin()};
    }
    else if (name == "usquare-pa1ca") {
        m = {pafa::build_usquare_pa1ca()};
    }
    else {
        m = {qfa::build_usquare_aqfa()};
    }
    write_file(out_path, core::serialize_machine(m));
    out << "wrote " << out_path << '\n';
    return kSuccess;
}

int cmd_check(const std::string& path, std::ostream& out)
{
    auto m = core::parse_machine_unchecked(read_file(path));
    auto errs = core::validate(m);
    if (errs.empty()) {
        out << "OK\n";
        return kSuccess;
    }
    for (const auto& e : errs) {
        out << "violation: " << e << '\n';
    }
    return kFailure;
}

} // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Realtime alternating automata workbench", "rtalt"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all");

    std::string machine, word, tree, out_path, builder;
    std::size_t max_len = 0;
    std::size_t bound = 0;

    auto* run = app.add_subcommand("run", "Decide membership of a word");
    run->add_option("machine", machine, "Machine file")->required();
    run->add_option("word", word, "Input word (\"\" for the empty word)")->required();
    run->add_option("--tree", tree, "Write the evaluated tree as DOT");

    auto* en = app.add_subcommand("enumerate", "List accepted words up to a length");
    en->add_option("machine", machine, "Machine file")->required();
    en->add_option("--max-len", max_len, "Maximum word length")->required();

    auto* em = app.add_subcommand("emptiness", "Decide emptiness (qfa) or sweep words");
    em->add_option("machine", machine, "Machine file")->required();
    auto* bounded = em->add_option("--bounded", bound, "Sweep all words up to this length");

    auto* ct = app.add_subcommand("compile-tm", "Compile a Turing machine to a unary A1CA");
    ct->add_option("tm", machine, "Turing machine file")->required();
    ct->add_option("-o", out_path, "Output machine file")->required();

    auto* bu = app.add_subcommand("build", "Write a built-in machine");
    bu->add_option("name", builder, "Machine name")
        ->required()
        ->check(CLI::IsMember({"upower", "twin", "usquare-pa1ca", "usquare-aqfa"}));
    bu->add_option("-o", out_path, "Output machine file")->required();

    auto* ck = app.add_subcommand("check", "Validate a machine file");
    ck->add_option("machine", machine, "Machine file")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    }
    catch (const CLI::CallForHelp&) {
        out << app.help();
        return kSuccess;
    }
    catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kSuccess;
    }
    catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return kFailure;
    }

    try {
        if (run->parsed()) {
            return cmd_run(machine, word, tree, out);
        }
        if (en->parsed()) {
            return cmd_enumerate(machine, max_len, out);
        }
        if (em->parsed()) {
            return cmd_emptiness(machine, bounded->count() ? std::optional(bound) : std::nullopt, out, err);
        }
        if (ct->parsed()) {
            return cmd_compile(machine, out_path, out, err);
        }
        if (bu->parsed()) {
            return cmd_build(builder, out_path, out);
        }
        return cmd_check(machine, out);
    }
    catch (const ValidationError& e) {
        err << "validation failed:\n";
        for (const auto& v : e.violations()) {
            err << "  " << v << '\n';
        }
        return kFailure;
    }
    catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kFailure;
    }
}

} // namespace rtalt::cli
