#include "lexirev/dimacs.hpp"

#include "lexirev/errors.hpp"

#include <algorithm>
#include <charconv>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace lexirev {

std::map<Var, int> index_variables(const Cnf& c)
{
    std::map<Var, int> index;
    int next = 0;
    for (const auto& v : variables(c))
        index.emplace(v, ++next);
    return index;
}

std::string export_dimacs(const Cnf& c, const std::map<Var, int>& index, NameComments comments)
{
    const int n = static_cast<int>(index.size());
    std::vector<const Var*> by_index(static_cast<std::size_t>(n) + 1, nullptr);
    for (const auto& [v, k] : index) {
        if (k < 1 || k > n || by_index[static_cast<std::size_t>(k)])
            throw std::invalid_argument("DIMACS index map is not a bijection onto 1.." + std::to_string(n));
        by_index[static_cast<std::size_t>(k)] = &v;
    }
    for (const auto& v : variables(c))
        if (!index.contains(v))
            throw std::invalid_argument("DIMACS index map lacks variable '" + v.name() + "'");

    std::ostringstream out;
    if (comments == NameComments::Emit)
        for (int k = 1; k <= n; ++k)
            out << "c var " << k << " = " << by_index[static_cast<std::size_t>(k)]->name() << '\n';
    out << "p cnf " << n << ' ' << c.size() << '\n';
    for (const auto& clause : c) {
        for (const auto& l : clause)
            out << (l.positive ? "" : "-") << index.at(l.var) << ' ';
        out << "0\n";
    }
    return out.str();
}

std::string export_dimacs(const Cnf& c, NameComments comments)
{
    return export_dimacs(c, index_variables(c), comments);
}

namespace {

std::vector<std::string_view> split_words(std::string_view line)
{
    std::vector<std::string_view> words;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r'))
            ++i;
        const std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r')
            ++i;
        if (i > start)
            words.push_back(line.substr(start, i - start));
    }
    return words;
}

std::optional<long> to_long(std::string_view word)
{
    long value = 0;
    const auto* end = word.data() + word.size();
    auto [ptr, ec] = std::from_chars(word.data(), end, value);
    if (ec != std::errc{} || ptr != end)
        return std::nullopt;
    return value;
}

} // namespace

bool looks_like_dimacs(std::string_view text)
{
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        auto words = split_words(line);
        if (words.size() >= 2 && words[0] == "p" && words[1] == "cnf")
            return true;
    }
    return false;
}

Cnf import_dimacs(std::string_view text)
{
    std::map<long, std::string> names;
    std::map<long, std::size_t> name_lines;
    std::optional<long> declared_vars;
    long declared_clauses = 0;
    std::size_t header_line = 0;
    std::vector<std::vector<long>> raw;
    std::vector<long> pending;
    std::size_t pending_line = 0;

    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t end = std::min(text.find('\n', start), text.size());
        const auto line = text.substr(start, end - start);
        start = end + 1;
        ++line_no;

        const auto words = split_words(line);
        if (words.empty())
            continue;
        if (words[0] == "c") {
            if (words.size() == 5 && words[1] == "var" && words[3] == "=") {
                const auto k = to_long(words[2]);
                if (!k || *k < 1)
                    throw DimacsError("bad variable number in name comment", line_no);
                if (!is_identifier(words[4]))
                    throw DimacsError("bad variable name '" + std::string(words[4]) + "'", line_no);
                if (names.contains(*k))
                    throw DimacsError("variable " + std::to_string(*k) + " named twice", line_no);
                names[*k] = std::string(words[4]);
                name_lines[*k] = line_no;
            }
            continue;
        }
        if (words[0] == "%")
            break;
        if (words[0] == "p") {
            if (declared_vars)
                throw DimacsError("duplicate problem line", line_no);
            if (words.size() != 4 || words[1] != "cnf")
                throw DimacsError("expected 'p cnf <vars> <clauses>'", line_no);
            const auto v = to_long(words[2]);
            const auto cl = to_long(words[3]);
            if (!v || !cl || *v < 0 || *cl < 0)
                throw DimacsError("bad counts in problem line", line_no);
            declared_vars = *v;
            declared_clauses = *cl;
            header_line = line_no;
            continue;
        }
        if (!declared_vars)
            throw DimacsError("clause before the problem line", line_no);
        for (const auto w : words) {
            const auto lit = to_long(w);
            if (!lit)
                throw DimacsError("expected an integer literal, got '" + std::string(w) + "'", line_no);
            if (*lit == 0) {
                raw.push_back(std::move(pending));
                pending.clear();
                continue;
            }
            if (*lit > *declared_vars || -*lit > *declared_vars)
                throw DimacsError("literal " + std::to_string(*lit) + " exceeds the declared " +
                                      std::to_string(*declared_vars) + " variables",
                                  line_no);
            if (pending.empty())
                pending_line = line_no;
            pending.push_back(*lit);
        }
    }

    if (!declared_vars)
        throw DimacsError("missing problem line", line_no);
    if (!pending.empty())
        throw DimacsError("clause not terminated by 0", pending_line);
    if (static_cast<long>(raw.size()) != declared_clauses)
        throw DimacsError("problem line declares " + std::to_string(declared_clauses) + " clauses, found " +
                              std::to_string(raw.size()),
                          header_line);

    std::set<std::string> taken;
    for (const auto& [k, name] : names) {
        if (k > *declared_vars)
            throw DimacsError("name comment for variable " + std::to_string(k) + " beyond the declared count",
                              name_lines[k]);
        if (!taken.insert(name).second)
            throw DimacsError("name '" + name + "' given to two variables", name_lines[k]);
    }
    auto name_of = [&](long k) {
        auto it = names.find(k);
        if (it != names.end())
            return it->second;
        std::string synth = "x" + std::to_string(k);
        while (taken.contains(synth))
            synth += '_';
        taken.insert(synth);
        names[k] = synth;
        return synth;
    };

    std::vector<Clause> clauses;
    for (const auto& lits : raw) {
        std::vector<Literal> out;
        for (long l : lits)
            out.push_back({Var(name_of(l < 0 ? -l : l)), l > 0});
        clauses.emplace_back(std::move(out));
    }
    return Cnf(std::move(clauses));
}

} // namespace lexirev
