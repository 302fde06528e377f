#pragma once

#include <string>

#include <seqopt/numbers.hpp>

namespace seqopt {

/// Square tab-separated layout: n_max+1 rows of n_max+1 columns, entries with
/// m > n padded with zeros. Row n, column m is O_k(n, m).
std::string to_tsv(const SeqOptTable& table);

/// Flat b-file layout: one `index value` pair per line, reading the square
/// table row-major, index = n * (n_max + 1) + m.
std::string to_bfile(const SeqOptTable& table);

/// Parse the square layout back. Validates the shape (equal row lengths,
/// square, zero padding above the diagonal) and every entry as an integer.
/// The dimension k is metadata not present in the text, so the caller
/// supplies it. Throws ParseError with a 1-based line number.
SeqOptTable parse_tsv(const std::string& text, unsigned k);

}  // namespace seqopt
