#ifndef GOBS_REPORT_HPP
#define GOBS_REPORT_HPP

#include <json.hpp>

#include "gobs/degen.hpp"
#include "gobs/parse.hpp"
#include "gobs/sba.hpp"

namespace gobs {

struct CommandResult {
    nlohmann::json report;  // schema: 1
    std::string human;
};

struct SbaFlags {
    bool trace = false;
    bool betti = false;
};

struct AnalyzeFlags {
    bool gobs_module = false;
    bool is_gb = false;
    bool min_obstruction = false;
};

struct DegenFlags {
    std::optional<WeightVector> weight;
};

CommandResult cmd_sba(const SystemFile& input, const SbaFlags& flags);
CommandResult cmd_analyze(const SystemFile& input, const AnalyzeFlags& flags);
CommandResult cmd_degen(const SystemFile& input, const DegenFlags& flags);

// `R^3 <- R^6 <- R^3`; the zero module prints as `0`.
std::string betti_arrows(const std::vector<int>& ranks);

}  // namespace gobs

#endif
