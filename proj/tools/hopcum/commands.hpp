#ifndef HOPCUM_TOOLS_COMMANDS_HPP
#define HOPCUM_TOOLS_COMMANDS_HPP

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace hopcum::cli {

/// 0 = verified/valid, 1 = mathematical failure, 2 = usage or parse error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

enum class Format { text, json };

/// Exactly one of file / recipe must be set.
struct Input {
    std::string file;
    std::string recipe;
};

struct CumulantsOptions {
    Input input;
    std::size_t max_order = 4;
    std::string method = "all";  ///< recursive | inversion | ainfty | all
    std::vector<std::string> vars;
    Format format = Format::text;
};

int cmd_validate(const Input& input, Format format, std::ostream& out, std::ostream& err);
int cmd_cumulants(const CumulantsOptions& options, std::ostream& out, std::ostream& err);
int cmd_verify(const Input& input, std::size_t max_order, Format format, std::ostream& out, std::ostream& err);
int cmd_show_morphism(const Input& input, std::size_t max_order, Format format, std::ostream& out,
                      std::ostream& err);

/// Full command-line entry point (argument parsing and dispatch).
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hopcum::cli

#endif  // HOPCUM_TOOLS_COMMANDS_HPP
