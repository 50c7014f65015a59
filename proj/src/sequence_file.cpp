#include "lexirev/sequence_file.hpp"

#include "lexirev/errors.hpp"
#include "lexirev/parser.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace lexirev {

namespace {

constexpr std::string_view vars_keyword = "vars:";

std::string_view trim(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos)
        return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

} // namespace

SequenceFile parse_sequence_text(std::string_view text, LineOrder order, std::string path)
{
    std::vector<Formula> formulas;
    std::optional<std::vector<Var>> declared;

    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start < text.size()) {
        const std::size_t end = std::min(text.find('\n', start), text.size());
        const auto raw = text.substr(start, end - start);
        const std::size_t line_offset = start;
        start = end + 1;
        ++line_no;

        const auto body = trim(raw.substr(0, std::min(raw.find('#'), raw.size())));
        if (body.empty())
            continue;
        const std::size_t column = static_cast<std::size_t>(body.data() - raw.data()) + 1;

        if (body.substr(0, vars_keyword.size()) == vars_keyword) {
            if (declared)
                throw ParseError("second 'vars:' line", line_offset + column - 1, line_no, column);
            std::vector<Var> vars;
            std::istringstream words{std::string(body.substr(vars_keyword.size()))};
            for (std::string w; words >> w;) {
                if (!is_identifier(w) || w.rfind("__", 0) == 0)
                    throw ParseError("bad variable name '" + w + "' in 'vars:' line", line_offset + column - 1,
                                     line_no, column);
                if (std::find(vars.begin(), vars.end(), Var(w)) != vars.end())
                    throw ParseError("variable '" + w + "' declared twice", line_offset + column - 1, line_no,
                                     column);
                vars.emplace_back(w);
            }
            declared = std::move(vars);
            continue;
        }

        try {
            formulas.push_back(parse_formula(body));
        } catch (const ParseError& e) {
            // Formulas are single-line, so the inner column shifts by the
            // position of the formula within its line.
            const std::size_t col = column + e.column() - 1;
            throw ParseError(e.detail(), line_offset + col - 1, line_no, col);
        }
    }

    if (order == LineOrder::Chronological)
        std::reverse(formulas.begin(), formulas.end());
    auto sequence = declared ? RevisionSequence(std::move(formulas), Alphabet(*declared))
                             : RevisionSequence(std::move(formulas));
    return SequenceFile{std::move(path), std::move(sequence), std::move(declared)};
}

std::string read_text_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error("cannot open '" + path + "' for reading");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_text_file(const std::string& path, std::string_view text)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw Error("cannot open '" + path + "' for writing");
    out << text;
    if (!out)
        throw Error("failed writing '" + path + "'");
}

SequenceFile read_sequence_file(const std::string& path, LineOrder order)
{
    return parse_sequence_text(read_text_file(path), order, path);
}

std::string format_sequence(const RevisionSequence& s, LineOrder order)
{
    std::ostringstream out;
    out << "# Lexicographic revision sequence, one formula per line.\n";
    if (order == LineOrder::MostRecentFirst)
        out << "# The first formula line is the most recent revision and has the highest priority.\n";
    else
        out << "# Lines are in chronological order: the last formula line is the most recent revision.\n";

    if (!(RevisionSequence(s.formulas()).alphabet() == s.alphabet())) {
        out << vars_keyword;
        for (const auto& v : s.alphabet())
            out << ' ' << v.name();
        out << '\n';
    }
    std::vector<Formula> lines = s.formulas();
    if (order == LineOrder::Chronological)
        std::reverse(lines.begin(), lines.end());
    for (const auto& f : lines)
        out << to_string(f) << '\n';
    return out.str();
}

} // namespace lexirev
