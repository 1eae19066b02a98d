// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 The irssec authors

#include "irssec/csv.hpp"

#include <charconv>
#include <fstream>
#include <iomanip>
#include <locale>
#include <sstream>

#include "irssec/errors.hpp"

namespace irssec {

namespace {

std::string fmt9(double v)
{
    std::ostringstream os;
    os.imbue(std::locale::classic());
    os << std::setprecision(9) << v;
    return os.str();
}

double to_double(const std::string& s)
{
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size())
        throw Error("malformed CSV number '" + s + "'");
    return v;
}

} // namespace

std::string format_csv(const SweepResult& result)
{
    std::string out = kCsvHeader;
    out += '\n';
    const std::string param(to_string(result.param));
    for (const auto& row : result.rows) {
        out += param;
        out += ',' + fmt9(row.sweep_value);
        out += ',' + std::string(to_string(row.solver));
        out += ',' + fmt9(row.mean_rate);
        out += ',' + fmt9(row.stderr_rate);
        out += ',' + fmt9(row.mean_time_s);
        out += ',' + std::to_string(row.trials);
        out += '\n';
    }
    return out;
}

void emit_csv(const SweepResult& result, const std::string& path)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw Error("cannot open '" + path + "' for writing");
    const std::string text = format_csv(result);
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
    out.flush();
    if (!out)
        throw Error("failed writing CSV to '" + path + "'");
}

std::vector<CsvRow> parse_csv(const std::string& text)
{
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || line != kCsvHeader)
        throw Error("CSV header mismatch");
    std::vector<CsvRow> rows;
    while (std::getline(in, line)) {
        if (line.empty())
            continue;
        std::vector<std::string> f;
        std::stringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ','))
            f.push_back(cell);
        if (f.size() != 7)
            throw Error("CSV row has " + std::to_string(f.size()) + " fields, expected 7");
        CsvRow r;
        r.sweep_param = f[0];
        r.sweep_value = to_double(f[1]);
        r.solver = f[2];
        r.mean_rate = to_double(f[3]);
        r.stderr_rate = to_double(f[4]);
        r.mean_time_s = to_double(f[5]);
        r.trials = static_cast<std::size_t>(to_double(f[6]));
        rows.push_back(std::move(r));
    }
    return rows;
}

} // namespace irssec
