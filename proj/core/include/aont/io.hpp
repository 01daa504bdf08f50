#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "aont/matrix.hpp"
#include "aont/transforms.hpp"

namespace aont::io {

/// Thrown for malformed input text.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Header `q=<q> p=<p> n=<n> poly=<code> s=<s>`, then s lines of s codes.
std::string format_matrix(const Matrix& m);
Matrix parse_matrix(std::string_view text);

/// Object with valid, t, s, q, witness_rows, witness_cols, mu, tau. Indices
/// are 1-based. witness is "matrix singular", "submatrix" or null; absent
/// values are null.
std::string format_verify_report(const VerifyReport& report);

/// Header `v=<v> s=<s>`, then one `x1 ... xs -> y1 ... ys` line per input
/// in rank order.
std::string format_transform(const GeneralTransform& phi);
GeneralTransform parse_transform(std::string_view text);

/// Header `N k v t lambda`, then N rows of k symbols. Plain arrays use
/// t = 0 and lambda = 0.
std::string format_array(const OrthogonalArray& oa);
OrthogonalArray parse_array(std::string_view text);

/// Header `n=<n> m=<m> t=<t> v=<v>` followed by either `linear <field>` and
/// m generator rows, or `table` and one `x -> y` line per input.
std::string format_resilient_function(const ResilientFunction& f);

std::string read_file(const std::filesystem::path& path);
/// Writes to a temporary sibling and renames it into place.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);

}  // namespace aont::io
