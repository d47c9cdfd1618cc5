#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace neutro::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 2;
inline constexpr int kExitUsage = 64;
inline constexpr int kExitUnknownFixture = 65;
inline constexpr int kExitNoFile = 66;

/// Runs one invocation. `args` excludes the program name. Exactly one JSON
/// document goes to `out` on success; failures write {"error", "detail"}
/// to `err`. `seed_override` plays the role of NEUTRO_SEED.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        std::optional<std::string> seed_override = std::nullopt);

}  // namespace neutro::cli
