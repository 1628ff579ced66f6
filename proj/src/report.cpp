#include "ldg4/report.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <algorithm>
#include <map>
#include <tuple>
#include <sstream>

#include "ldg4/errors.hpp"

namespace ldg4 {

namespace {

constexpr const char* csv_columns = "problem,k,theta,lambda,level,N,T,variable,measure,value,order";

std::string shortest(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

std::string sci3(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2E", v);
    return buf;
}

std::string fixed2(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

double to_double(const std::string& s) {
    double v = 0.0;
    const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc() || res.ptr != s.data() + s.size()) {
        throw IoError("malformed number in CSV: '" + s + "'");
    }
    return v;
}

}  // namespace

void write_csv(const ResultTable& table, std::ostream& out) {
    for (const auto& [k, v] : table.header) {
        out << "# " << k << " = " << v << '\n';
    }
    out << csv_columns << '\n';
    for (const auto& r : table.rows) {
        out << r.problem << ',' << r.k << ',' << shortest(r.theta) << ',' << shortest(r.lambda) << ',' << r.level << ','
            << r.n << ',' << shortest(r.t) << ',' << r.variable << ',' << r.measure << ',' << shortest(r.value) << ','
            << (r.order ? shortest(*r.order) : std::string()) << '\n';
    }
}

void write_markdown(const ResultTable& table, std::ostream& out) {
    for (const auto& [k, v] : table.header) {
        out << "<!-- " << k << " = " << v << " -->\n";
    }
    struct Key {
        int k;
        double theta;
        double lambda;
        std::size_t rank;
        std::string variable;
        bool operator<(const Key& o) const {
            return std::tie(k, theta, lambda, rank, variable) < std::tie(o.k, o.theta, o.lambda, o.rank, o.variable);
        }
    };
    std::map<Key, std::map<std::pair<double, std::size_t>, std::map<std::string, const ResultRow*>>> groups;
    std::vector<std::string> measures;
    for (const auto& r : table.rows) {
        groups[{r.k, r.theta, r.lambda, std::string("upqr").find(r.variable), r.variable}][{r.t, r.n}][r.measure] = &r;
        if (std::find(measures.begin(), measures.end(), r.measure) == measures.end()) {
            measures.push_back(r.measure);
        }
    }
    for (const auto& [key, rows] : groups) {
        out << "\n### P" << key.k << ", variable " << key.variable << " (theta = " << shortest(key.theta)
            << ", lambda = " << shortest(key.lambda) << ")\n\n";
        out << "| N | T |";
        for (const auto& m : measures) {
            out << ' ' << m << " | Order |";
        }
        out << "\n|---|---|";
        for (std::size_t i = 0; i < measures.size(); ++i) {
            out << "---|---|";
        }
        out << '\n';
        for (const auto& [tn, cells] : rows) {
            out << "| " << tn.second << " | " << shortest(tn.first) << " |";
            for (const auto& m : measures) {
                auto it = cells.find(m);
                if (it == cells.end()) {
                    out << " | |";
                    continue;
                }
                const ResultRow& r = *it->second;
                out << ' ' << sci3(r.value) << " | " << (r.order ? fixed2(*r.order) : std::string("--")) << " |";
            }
            out << '\n';
        }
    }
}

void emit(const ResultTable& table, OutputFormat format, const std::string& path) {
    auto write = [&](std::ostream& os) {
        if (format == OutputFormat::csv) {
            write_csv(table, os);
        } else {
            write_markdown(table, os);
        }
    };
    if (path.empty() || path == "-") {
        write(std::cout);
        return;
    }
    std::ofstream f(path);
    if (!f) {
        throw IoError("cannot open '" + path + "' for writing");
    }
    write(f);
    f.flush();
    if (!f) {
        throw IoError("failed writing '" + path + "'");
    }
}

ResultTable read_csv(std::istream& in) {
    ResultTable table;
    std::string line;
    bool seen_columns = false;
    while (std::getline(in, line)) {
        if (line.empty()) {
            continue;
        }
        if (line.rfind("# ", 0) == 0) {
            const auto eq = line.find(" = ");
            if (eq != std::string::npos) {
                table.header.emplace_back(line.substr(2, eq - 2), line.substr(eq + 3));
            }
            continue;
        }
        if (!seen_columns) {
            if (line != csv_columns) {
                throw IoError("unexpected CSV header: '" + line + "'");
            }
            seen_columns = true;
            continue;
        }
        std::vector<std::string> f;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) {
            f.push_back(cell);
        }
        if (f.size() == 10) {
            f.emplace_back();
        }
        if (f.size() != 11) {
            throw IoError("CSV row with " + std::to_string(f.size()) + " fields");
        }
        ResultRow r;
        r.problem = f[0];
        r.k = static_cast<int>(to_double(f[1]));
        r.theta = to_double(f[2]);
        r.lambda = to_double(f[3]);
        r.level = static_cast<int>(to_double(f[4]));
        r.n = static_cast<std::size_t>(to_double(f[5]));
        r.t = to_double(f[6]);
        r.variable = f[7];
        r.measure = f[8];
        r.value = to_double(f[9]);
        if (!f[10].empty()) {
            r.order = to_double(f[10]);
        }
        table.rows.push_back(std::move(r));
    }
    return table;
}

}  // namespace ldg4
