#ifndef MNT_CLI_HPP
#define MNT_CLI_HPP

#include <iosfwd>

namespace mnt::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitAssertFailed = 1;
inline constexpr int kExitUsage = 2;

/// Entry point of the `mntool` front end. Reads graph6 from `in` when asked
/// to (--stdin), writes results to `out` and diagnostics to `err`.
/// Returns 0 on success, 1 when an --assert does not hold, 2 on usage,
/// input or I/O errors.
int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace mnt::cli

#endif  // MNT_CLI_HPP
