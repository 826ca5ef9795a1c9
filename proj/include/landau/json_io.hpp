#ifndef LANDAU_JSON_IO_HPP
#define LANDAU_JSON_IO_HPP

#include <string>

#include <json.hpp>

#include "landau/dirichlet.hpp"
#include "landau/sequences.hpp"
#include "landau/volume.hpp"

namespace landau {

/// Shortest round-trip decimal form of a double ("inf"/"-inf"/"nan" for the
/// non-finite values). Used for all CSV output so bytes are reproducible.
std::string format_double(double x);

void to_json(nlohmann::json& j, const VolumeReport& r);
void from_json(const nlohmann::json& j, VolumeReport& r);

void to_json(nlohmann::json& j, const ValidationReport& r);
void from_json(const nlohmann::json& j, ValidationReport& r);

void to_json(nlohmann::json& j, const ProbeThresholds& t);
void from_json(const nlohmann::json& j, ProbeThresholds& t);

void to_json(nlohmann::json& j, const ProbeReport& r);
void from_json(const nlohmann::json& j, ProbeReport& r);

/// "sequence,epsilon,k,c_k_re,c_k_im" table of a Taylor expansion.
std::string taylor_csv(const std::string& sequence, const TaylorExpansion& exp);

/// "sequence,epsilon,N,tail" table of a Cauchy tail scan.
std::string tail_csv(const std::string& sequence, double epsilon, const TailScan& scan);

/// One-row "M,rho,..." table of a volume report.
std::string volume_csv(const VolumeReport& r);

}  // namespace landau

#endif  // LANDAU_JSON_IO_HPP
