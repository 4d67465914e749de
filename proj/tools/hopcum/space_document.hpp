#ifndef HOPCUM_TOOLS_SPACE_DOCUMENT_HPP
#define HOPCUM_TOOLS_SPACE_DOCUMENT_HPP

#include <stdexcept>
#include <string>
#include <string_view>

#include <hopcum/spaces.hpp>

namespace hopcum::cli {

/// Malformed document. location() is either "line L, column C" for JSON
/// syntax errors or a JSON pointer such as "/product/0/1" for schema errors.
class DocumentError : public std::runtime_error {
public:
    DocumentError(std::string location, const std::string& message)
        : std::runtime_error(location + ": " + message), location_(std::move(location)) {}

    [[nodiscard]] const std::string& location() const { return location_; }

private:
    std::string location_;
};

/// Parses a space document:
///
///   {
///     "basis": ["x", "y"],
///     "degrees": [0, 0],                       // optional, default all 0
///     "product": [[["1","0"], ["0","0"]],      // product[i][j] = e_i * e_j
///                 [["0","0"], ["0","1"]]],
///     "expectation": ["1/2", "1/2"],
///     "differential": [["0","0"], ["0","0"]],  // optional, row i = d(e_i)
///     "variables": {"X": ["1", "0"]}           // optional
///   }
///
/// Coefficients are rational strings "p/q"; JSON integers are accepted as
/// shorthand. The result is shape-checked only; run validate_space for the
/// algebraic conditions.
NamedSpace parse_space_document(std::string_view text, std::string name);

NamedSpace load_space_document(const std::string& path);

/// Inverse of parse_space_document (canonical rationals, fixed key order).
std::string write_space_document(const NamedSpace& space);

}  // namespace hopcum::cli

#endif  // HOPCUM_TOOLS_SPACE_DOCUMENT_HPP
