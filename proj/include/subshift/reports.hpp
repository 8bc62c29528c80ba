#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "subshift/complexity.hpp"
#include "subshift/measure.hpp"
#include "subshift/periodicity.hpp"

namespace subshift {

// Report assembly lives behind the CLI so identical configurations yield
// byte-identical documents.  Every JSON report embeds the run configuration
// it came from.

std::string provenance_string(const ComplexityTable& t);

nlohmann::json table_json(const ComplexityTable& t);
std::string table_csv(const ComplexityTable& t);

nlohmann::json classification_json(const GapClassification& g);
nlohmann::json lattice_json(const PeriodLattice& lattice);
nlohmann::json entropy_json(const EntropyEstimate& e);
std::string entropy_csv(const EntropyEstimate& e);

nlohmann::json complexity_report(const ComplexityTable& t,
                                 const std::optional<MorseHedlundResult>& mh,
                                 const nlohmann::json& config,
                                 const std::vector<std::string>& warnings);

nlohmann::json periods_report(const Window& u, const PeriodLattice& lattice,
                              const nlohmann::json& config);

// p, q propagate the source maps so the estimate also reads in log base p
// and log base q.
nlohmann::json entropy_report(const EntropyEstimate& e,
                              const nlohmann::json& config,
                              std::optional<int> p, std::optional<int> q,
                              const std::vector<std::string>& warnings);

struct GapReportInputs {
    ComplexityTable table;
    GapClassification classification;
    PeriodLattice lattice;
    EntropyEstimate horizontal;
    EntropyEstimate vertical;
    bool atomic_style_source = false;  // finite-orbit source (rational point)
    std::vector<std::string> warnings;
};

nlohmann::json gap_report(const GapReportInputs& in,
                          const nlohmann::json& config);

// Canonical serialization used everywhere: sorted keys, two-space indent,
// trailing newline.
std::string dump_report(const nlohmann::json& report);

}  // namespace subshift
