#pragma once

#include <iosfwd>
#include <string>

#include "ldg4/experiment.hpp"

namespace ldg4 {

/// CSV with columns problem,k,theta,lambda,level,N,T,variable,measure,value,order,
/// preceded by "# key = value" lines echoing the configuration.
void write_csv(const ResultTable& table, std::ostream& out);
/// Markdown: one table per (k, variable) with N rows and value/order columns.
void write_markdown(const ResultTable& table, std::ostream& out);

/// Writes to a file, or to stdout when path is empty or "-". Throws IoError.
void emit(const ResultTable& table, OutputFormat format, const std::string& path);

/// Parses CSV produced by write_csv (header lines are kept).
ResultTable read_csv(std::istream& in);

}  // namespace ldg4
