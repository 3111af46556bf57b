#include "volterra/csv.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "volterra/errors.hpp"

namespace volterra {

std::string format_double(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

namespace {

std::vector<std::string> split(const std::string& line)
{
    std::vector<std::string> out;
    std::string cell;
    std::istringstream ss(line);
    while (std::getline(ss, cell, ','))
        out.push_back(cell);
    if (!line.empty() && line.back() == ',')
        out.emplace_back();
    return out;
}

bool parse_number(const std::string& s, double& v)
{
    const char* begin = s.c_str();
    while (*begin == ' ' || *begin == '\t')
        ++begin;
    char* end = nullptr;
    v = std::strtod(begin, &end);
    if (end == begin)
        return false;
    while (*end == ' ' || *end == '\t' || *end == '\r')
        ++end;
    return *end == '\0';
}

} // namespace

SampledTable read_samples(std::istream& in)
{
    std::vector<double> x, re, im;
    std::size_t columns = 0;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.empty())
            continue;
        const auto cells = split(line);
        std::vector<double> v(cells.size());
        bool numeric = true;
        for (std::size_t i = 0; i < cells.size(); ++i)
            numeric = numeric && parse_number(cells[i], v[i]);
        if (!numeric) {
            if (x.empty() && columns == 0) {
                columns = cells.size(); // header
                continue;
            }
            throw UsageError("malformed CSV at line " + std::to_string(lineno));
        }
        if (columns == 0)
            columns = cells.size();
        if (cells.size() != columns || (columns != 2 && columns != 3))
            throw UsageError("CSV needs 2 (x,value) or 3 (x,re,im) columns; line " + std::to_string(lineno));
        x.push_back(v[0]);
        re.push_back(v[1]);
        if (columns == 3)
            im.push_back(v[2]);
    }
    if (x.size() < 2)
        throw UsageError("CSV needs at least two rows");
    const double T = x.back();
    const double n = static_cast<double>(x.size() - 1);
    for (std::size_t k = 0; k < x.size(); ++k)
        if (std::abs(x[k] - T * static_cast<double>(k) / n) > 1e-9 * std::abs(T))
            throw UsageError("CSV x column must be a uniform grid starting at 0");
    if (columns == 2)
        return RealSamples(T, std::move(re));
    std::vector<std::complex<double>> z(re.size());
    for (std::size_t k = 0; k < z.size(); ++k)
        z[k] = {re[k], im[k]};
    return ComplexSamples(T, std::move(z));
}

SampledTable read_samples_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw UsageError("cannot read '" + path + "'");
    return read_samples(in);
}

void write_samples(std::ostream& out, const RealSamples& g)
{
    out << "x,value\n";
    for (std::size_t k = 0; k <= g.cells(); ++k)
        out << format_double(g.node(k)) << ',' << format_double(g[k]) << '\n';
}

void write_samples(std::ostream& out, const ComplexSamples& g)
{
    out << "x,re,im\n";
    for (std::size_t k = 0; k <= g.cells(); ++k)
        out << format_double(g.node(k)) << ',' << format_double(g[k].real()) << ','
            << format_double(g[k].imag()) << '\n';
}

} // namespace volterra
