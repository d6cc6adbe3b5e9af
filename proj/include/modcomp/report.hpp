#ifndef MODCOMP_REPORT_HPP
#define MODCOMP_REPORT_HPP

#include <string>
#include <vector>

#include "modcomp/braid.hpp"
#include "modcomp/cayley.hpp"
#include "modcomp/patch.hpp"

#include "json.hpp"

namespace modcomp {

inline constexpr const char* kToolVersion = "0.1.0";

/// Reproducibility header embedded in every report: tool version, element
/// ordering fingerprint, and the full config echo.
struct ReportMeta {
  std::string ordering;
  std::string config;
};

nlohmann::json meta_json(const ReportMeta& meta);
std::string meta_comment_block(const ReportMeta& meta,
                               const std::string& prefix = "# ");

nlohmann::json group_json(const GroupTable& G);
nlohmann::json vector_json(const GroupTable& G, const GeneratingVector& v);

nlohmann::json vectors_report(const GroupTable& G, const Signature& s,
                              const std::vector<GeneratingVector>& vectors,
                              const std::vector<VectorClass>& classes);

nlohmann::json strata_report(const GroupTable& G, const Signature& s,
                             const std::vector<VectorClass>& classes,
                             const StratumPartition& part);
/// Orbit sizes ascending, e.g. "(6, 6)".
std::string orbit_sizes_summary(const StratumPartition& part);

nlohmann::json tiling_report(const GroupTable& G, const CrossoverSequence& seq,
                             const DegeneracyReport& rep);
/// Annotated polygon boundary: slot labels, collapse and multi-edge colour
/// classes.
std::string polygon_dot(const GroupTable& G, const CrossoverSequence& seq,
                        const DegeneracyReport& rep);

std::string cayley_dot(const ModifiedCayleyGraph& g);
std::string cayley_adjacency_text(const ModifiedCayleyGraph& g);
nlohmann::json cayley_adjacency_json(const ModifiedCayleyGraph& g);

nlohmann::json matrix_report(const GroupTable& G, const Signature& s,
                             const IsometryMatrix& m,
                             const std::vector<VectorClass>& classes);
std::string matrix_csv(const IsometryMatrix& m,
                       const std::vector<VectorClass>& classes);

}  // namespace modcomp

#endif
