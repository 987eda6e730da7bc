#ifndef MINORLIST_CLI_HPP
#define MINORLIST_CLI_HPP

#include <string>
#include <vector>

namespace minorlist {

// Exit codes: 0 property holds / object built, 1 property fails, 2 budget or
// cap exceeded (inconclusive), 3 invalid input.
namespace exit_code {
inline constexpr int kPass = 0;
inline constexpr int kFail = 1;
inline constexpr int kInconclusive = 2;
inline constexpr int kInvalid = 3;
}  // namespace exit_code

int run(const std::vector<std::string>& args);

}  // namespace minorlist

#endif
