#pragma once

#include "covering/bigint.hpp"
#include "covering/counting.hpp"
#include "covering/error.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace covering {

/// OEIS b-file: "index value" per line, single space, '\n' terminated.
inline void write_bfile(std::ostream& out, const SequenceTable& table)
{
    for (const auto& [index, value] : table.terms)
        out << index << ' ' << to_decimal(value) << '\n';
}

/// Reads a b-file. Blank lines and '#' comments are skipped, as in the
/// files OEIS serves.
inline std::vector<std::pair<std::size_t, BigInt>> read_bfile(std::istream& in)
{
    std::vector<std::pair<std::size_t, BigInt>> terms;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        const auto first = line.find_first_not_of(" \t");
        if (first == std::string::npos || line[first] == '#')
            continue;
        std::istringstream fields(line);
        std::string index_text, value_text, rest;
        fields >> index_text >> value_text;
        const auto index = parse_decimal(index_text);
        const auto value = parse_decimal(value_text);
        if (!index || !value || (fields >> rest) || *index < 0 || !to_u64(*index))
            throw Error(ErrorCode::InvalidArgument, "malformed b-file line " + std::to_string(line_no));
        terms.emplace_back(static_cast<std::size_t>(*to_u64(*index)), *value);
    }
    return terms;
}

struct BfileComparison {
    std::size_t compared = 0;
    std::vector<std::size_t> mismatched_indices;
};

/// Compares the generated table against reference terms on the indices both cover.
inline BfileComparison compare_bfile(const SequenceTable& table,
                                     const std::vector<std::pair<std::size_t, BigInt>>& reference)
{
    BfileComparison cmp;
    for (const auto& [index, value] : reference) {
        if (index < 1 || index > table.terms.size())
            continue;
        ++cmp.compared;
        if (table.terms[index - 1].second != value)
            cmp.mismatched_indices.push_back(index);
    }
    return cmp;
}

} // namespace covering
