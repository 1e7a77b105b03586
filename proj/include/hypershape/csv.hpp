#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "hypershape/errors.hpp"

namespace hypershape {

// Comma-separated values with a mandatory header row. The dialect is
// deliberately small: no quoting, '.' decimal point, '\n' line ends.
struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    std::size_t column_index(const std::string& name) const;  // throws CsvError
};

CsvTable read_csv(std::istream& in, const std::string& source_name = "<stream>");
CsvTable read_csv(const std::filesystem::path& path);

void write_csv(std::ostream& out, const CsvTable& table);
void write_csv(const std::filesystem::path& path, const CsvTable& table);

// Shortest decimal string that parses back to exactly the same double.
// Reserializing a parsed table therefore reproduces it byte for byte.
std::string format_double(double value);

// Strict double parse of a whole cell; row/column are 1-based and only
// used to build the error message.
double parse_double_cell(const std::string& cell, long row, long column,
                         const std::string& source_name);

}  // namespace hypershape
