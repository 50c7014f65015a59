#include "cli.hpp"

#include "lexirev/cnf.hpp"
#include "lexirev/dimacs.hpp"
#include "lexirev/encoder.hpp"
#include "lexirev/errors.hpp"
#include "lexirev/horn.hpp"
#include "lexirev/redundancy.hpp"
#include "lexirev/sequence_file.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <ostream>
#include <sstream>

namespace lexirev {

namespace {

using json = nlohmann::ordered_json;

struct Settings {
    bool json = false;
    bool chronological = false;
    std::string engine = "sat";
    std::string file_a, file_b, output;
    std::size_t position = 0;
};

std::string assignment_text(const Model& m)
{
    std::ostringstream os;
    for (std::size_t k = 0; k < m.size(); ++k)
        os << (k ? " " : "") << m.alphabet()[k].name() << ':' << (m.at(k) ? 1 : 0);
    return os.str();
}

json assignment_json(const Model& m)
{
    json obj = json::object();
    for (std::size_t k = 0; k < m.size(); ++k)
        obj[m.alphabet()[k].name()] = m.at(k);
    return obj;
}

class Command {
public:
    Command(const Settings& settings, std::ostream& out) : settings_(settings), out_(out) {}

    LineOrder order() const { return settings_.chronological ? LineOrder::Chronological : LineOrder::MostRecentFirst; }

    RevisionSequence read(const std::string& path) const
    {
        try {
            return read_sequence_file(path, order()).parsed;
        } catch (const ParseError& e) {
            throw Error(path + ":" + e.what());
        }
    }

    CheckOptions check_options() const
    {
        CheckOptions options;
        options.engine = parse_engine(settings_.engine);
        options.limits = Limits::from_environment();
        return options;
    }

    double elapsed() const
    {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - started_).count();
    }

    // Prints the verdict (plain or JSON) and returns the exit code.
    int report(const std::string& command, const std::string& verdict, bool affirmative,
               const EquivalenceResult* result, std::optional<Engine> engine, json extra = json::object(),
               const std::vector<std::string>& notes = {}) const
    {
        if (settings_.json) {
            json doc;
            doc["command"] = command;
            doc["verdict"] = verdict;
            if (result && !result->is_equivalent())
                doc["witness"] = {{"i", assignment_json(result->witness().i)},
                                  {"j", assignment_json(result->witness().j)}};
            else
                doc["witness"] = nullptr;
            if (engine) {
                std::ostringstream name;
                name << *engine;
                doc["engine"] = name.str();
            } else {
                doc["engine"] = nullptr;
            }
            doc["timing"] = {{"seconds", elapsed()}};
            for (auto& [key, value] : extra.items())
                doc[key] = value;
            out_ << doc.dump(2) << '\n';
        } else {
            out_ << verdict << '\n';
            if (result && !result->is_equivalent()) {
                out_ << "I: " << assignment_text(result->witness().i) << '\n';
                out_ << "J: " << assignment_text(result->witness().j) << '\n';
            }
            for (const auto& note : notes)
                out_ << note << '\n';
        }
        return affirmative ? ExitAffirmative : ExitNegative;
    }

private:
    const Settings& settings_;
    std::ostream& out_;
    std::chrono::steady_clock::time_point started_ = std::chrono::steady_clock::now();
};

int cmd_equiv(const Settings& st, std::ostream& out)
{
    Command cmd(st, out);
    const auto s = cmd.read(st.file_a);
    const auto r = cmd.read(st.file_b);
    const auto options = cmd.check_options();
    const Engine used = resolve_engine(s, r, options);
    const auto result = equivalent(s, r, options);
    const bool eq = result.is_equivalent();
    return cmd.report("equiv", eq ? "EQUIVALENT" : "NOT EQUIVALENT", eq, &result, used);
}

int cmd_redundant(const Settings& st, std::ostream& out)
{
    Command cmd(st, out);
    const auto s = cmd.read(st.file_a);
    if (s.empty())
        throw Error("'" + st.file_a + "' holds no formulas");
    const std::size_t k = st.position ? st.position : s.size();
    if (k > s.size())
        throw Error("position " + std::to_string(k) + " is outside 1.." + std::to_string(s.size()));
    const auto options = cmd.check_options();
    const Engine used = resolve_engine(s, s.without(k - 1), options);
    const auto result = is_redundant_at(s, k, options);
    const bool red = result.is_equivalent();
    return cmd.report("redundant", red ? "REDUNDANT" : "IRREDUNDANT", red, &result, used,
                      json{{"position", k}}, {"position: " + std::to_string(k)});
}

std::string join(const std::vector<std::size_t>& xs)
{
    std::string s;
    for (std::size_t k = 0; k < xs.size(); ++k)
        s += (k ? " " : "") + std::to_string(xs[k]);
    return s;
}

int cmd_minimize(const Settings& st, std::ostream& out)
{
    Command cmd(st, out);
    const auto s = cmd.read(st.file_a);
    const auto options = cmd.check_options();
    const auto report = minimize(s, options);
    write_text_file(st.output, format_sequence(report.minimized, cmd.order()));
    std::optional<Engine> used;
    if (options.engine != Engine::Auto)
        used = options.engine;
    return cmd.report("minimize", "MINIMIZED", true, nullptr, used,
                      json{{"removed_positions", report.removed_positions},
                           {"checks_performed", report.checks_performed},
                           {"original_length", report.original.size()},
                           {"minimized_length", report.minimized.size()},
                           {"output", st.output}},
                      {"removed positions: " + (report.removed_positions.empty() ? "none" : join(report.removed_positions)),
                       "kept " + std::to_string(report.minimized.size()) + " of " +
                           std::to_string(report.original.size()) + " formulas",
                       "checks performed: " + std::to_string(report.checks_performed),
                       "written to " + st.output});
}

int cmd_dimacs(const Settings& st, std::ostream& out)
{
    Command cmd(st, out);
    const auto s = cmd.read(st.file_a);
    const auto r = cmd.read(st.file_b);
    const auto cnf = to_cnf(build_diff(s, r).formula);
    write_text_file(st.output, export_dimacs(cnf, NameComments::Emit));
    const auto nvars = variables(cnf).size();
    return cmd.report("dimacs", "WRITTEN", true, nullptr, std::nullopt,
                      json{{"variables", nvars}, {"clauses", cnf.size()}, {"output", st.output}},
                      {"variables: " + std::to_string(nvars), "clauses: " + std::to_string(cnf.size()),
                       "written to " + st.output + " (unsatisfiable iff the sequences are equivalent)"});
}

// A DIMACS file, or formula lines whose conjunction is read as clauses.
Cnf read_cnf_input(const std::string& path)
{
    const auto text = read_text_file(path);
    if (looks_like_dimacs(text))
        return import_dimacs(text);
    const auto file = parse_sequence_text(text, LineOrder::MostRecentFirst, path);
    std::vector<Clause> clauses;
    for (const auto& f : file.parsed) {
        auto shape = cnf_shape(f);
        if (!shape)
            throw Error("'" + to_string(f) + "' in '" + path + "' is not in clausal form");
        clauses.insert(clauses.end(), shape->begin(), shape->end());
    }
    return Cnf(std::move(clauses));
}

int cmd_gen_hard(const Settings& st, std::ostream& out)
{
    Command cmd(st, out);
    const auto instance = build_hardness_instance(read_cnf_input(st.file_a));
    write_text_file(st.output, format_sequence(instance.sequence, cmd.order()));
    return cmd.report("gen-hard", "WRITTEN", true, nullptr, std::nullopt,
                      json{{"formulas", instance.sequence.size()}, {"output", st.output}},
                      {"formulas: " + std::to_string(instance.sequence.size()),
                       "written to " + st.output + " (last formula redundant iff the source is unsatisfiable)"});
}

int cmd_horn_check(const Settings& st, std::ostream& out)
{
    Command cmd(st, out);
    const auto s = cmd.read(st.file_a);
    if (s.size() != 2)
        throw Error("horn-check needs exactly two formulas, '" + st.file_a + "' holds " + std::to_string(s.size()));
    const auto s1 = HornFormula::from(s[0]);
    const auto s2 = HornFormula::from(s[1]);

    std::string reason;
    if (!horn_sat(s2))
        reason = "second formula is inconsistent";
    else if (horn_tautological(s2.cnf()))
        reason = "second formula is valid";
    else if (horn_equiv(s1, s2))
        reason = "second formula is equivalent to the first";
    else if (horn_neg_equiv(s2, s1))
        reason = "second formula is equivalent to the negation of the first";
    const bool red = !reason.empty();
    return cmd.report("horn-check", red ? "REDUNDANT" : "IRREDUNDANT", red, nullptr, std::nullopt,
                      json{{"reason", red ? json(reason) : json(nullptr)}},
                      red ? std::vector<std::string>{"reason: " + reason} : std::vector<std::string>{});
}

} // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    Settings st;
    CLI::App app{"Equivalence and redundancy of lexicographic revision sequences.\n"
                 "Sequence files hold one formula per line; the first line is the most recent revision."};
    app.name("lexirev");
    app.require_subcommand(1);
    app.add_flag("--json", st.json, "Emit a JSON report");
    app.add_flag("--chronological", st.chronological, "Sequence files list revisions oldest first");

    const std::vector<std::string> engines{"sat", "brute", "bruteforce", "auto"};
    auto add_engine = [&](CLI::App* sub) {
        sub->add_option("--engine", st.engine, "Decision engine")->check(CLI::IsMember(engines));
    };

    auto* equiv = app.add_subcommand("equiv", "Decide whether two sequences induce the same order");
    equiv->add_option("A", st.file_a)->required();
    equiv->add_option("B", st.file_b)->required();
    add_engine(equiv);

    auto* redundant = app.add_subcommand("redundant", "Decide whether one formula can be dropped");
    redundant->add_option("FILE", st.file_a)->required();
    redundant->add_option("--pos", st.position, "1-based position (default: last)")->check(CLI::PositiveNumber);
    add_engine(redundant);

    auto* minimize_cmd = app.add_subcommand("minimize", "Greedily drop redundant formulas, oldest first");
    minimize_cmd->add_option("FILE", st.file_a)->required();
    minimize_cmd->add_option("-o,--output", st.output)->required();
    add_engine(minimize_cmd);

    auto* dimacs = app.add_subcommand("dimacs", "Write the difference formula of two sequences as DIMACS");
    dimacs->add_option("A", st.file_a)->required();
    dimacs->add_option("B", st.file_b)->required();
    dimacs->add_option("-o,--output", st.output)->required();

    auto* gen_hard = app.add_subcommand("gen-hard", "Build a Horn sequence whose last formula is redundant "
                                                    "iff the input CNF is unsatisfiable");
    gen_hard->add_option("CNF", st.file_a, "DIMACS or clausal formula lines")->required();
    gen_hard->add_option("-o,--output", st.output)->required();

    auto* horn_check = app.add_subcommand("horn-check", "Redundancy of the second of two Horn formulas");
    horn_check->add_option("FILE", st.file_a)->required();

    for (auto* sub : {equiv, redundant, minimize_cmd, dimacs, gen_hard, horn_check})
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        app.exit(e, out, err);
        return ExitAffirmative;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return ExitError;
    }

    try {
        if (*equiv)
            return cmd_equiv(st, out);
        if (*redundant)
            return cmd_redundant(st, out);
        if (*minimize_cmd)
            return cmd_minimize(st, out);
        if (*dimacs)
            return cmd_dimacs(st, out);
        if (*gen_hard)
            return cmd_gen_hard(st, out);
        if (*horn_check)
            return cmd_horn_check(st, out);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return ExitError;
    }
    return ExitError;
}

} // namespace lexirev
