#include <seqopt/table_io.hpp>

#include <sstream>

#include <seqopt/errors.hpp>

namespace seqopt {

std::string to_tsv(const SeqOptTable& table) {
  const unsigned n_max = table.max_size();
  std::string out;
  for (unsigned n = 0; n <= n_max; ++n) {
    for (unsigned m = 0; m <= n_max; ++m) {
      if (m > 0) out += '\t';
      out += table.at(n, m).str();
    }
    out += '\n';
  }
  return out;
}

std::string to_bfile(const SeqOptTable& table) {
  const unsigned n_max = table.max_size();
  std::string out;
  for (unsigned n = 0; n <= n_max; ++n) {
    for (unsigned m = 0; m <= n_max; ++m) {
      out += std::to_string(static_cast<unsigned long long>(n) * (n_max + 1) + m);
      out += ' ';
      out += table.at(n, m).str();
      out += '\n';
    }
  }
  return out;
}

SeqOptTable parse_tsv(const std::string& text, unsigned k) {
  std::istringstream in(text);
  std::vector<std::vector<BigCount>> grid;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::vector<BigCount> row;
    std::istringstream cells(line);
    std::string cell;
    while (std::getline(cells, cell, '\t')) {
      if (cell.empty() || cell.find_first_not_of("0123456789") != std::string::npos)
        throw ParseError("table entry is not a nonnegative integer: '" + cell + "'", line_no);
      row.emplace_back(cell);
    }
    grid.push_back(std::move(row));
  }
  if (grid.empty()) throw ParseError("empty table");
  const std::size_t width = grid.size();
  std::vector<std::vector<BigCount>> rows(width);
  for (std::size_t n = 0; n < width; ++n) {
    if (grid[n].size() != width)
      throw ParseError("table is not square: row has " + std::to_string(grid[n].size()) +
                           " entries, expected " + std::to_string(width),
                       static_cast<int>(n) + 1);
    for (std::size_t m = n + 1; m < width; ++m)
      if (grid[n][m] != 0)
        throw ParseError("entry above the diagonal must be zero", static_cast<int>(n) + 1);
    rows[n].assign(grid[n].begin(), grid[n].begin() + static_cast<std::ptrdiff_t>(n) + 1);
  }
  return SeqOptTable(k, static_cast<unsigned>(width) - 1, std::move(rows));
}

}  // namespace seqopt
