#pragma once

#include <json.hpp>

#include "blowup.hpp"
#include "calculus.hpp"
#include "invariants.hpp"
#include "search.hpp"
#include "structure.hpp"

namespace booktri {

void to_json(nlohmann::json& j, const PartVector& v);
void to_json(nlohmann::json& j, const InvariantReport& r);
void to_json(nlohmann::json& j, const BnCheck& c);
void to_json(nlohmann::json& j, const AdjustStep& s);
void to_json(nlohmann::json& j, const AdjustmentTrace& t);
void to_json(nlohmann::json& j, const IdentityCheck& c);
void to_json(nlohmann::json& j, const IdentitySuiteReport& r);
void to_json(nlohmann::json& j, const BlowupVerdict& v);
void to_json(nlohmann::json& j, const StabilityParams& p);
void from_json(const nlohmann::json& j, StabilityParams& p);
void to_json(nlohmann::json& j, const DecompositionResult& d);
void to_json(nlohmann::json& j, const ExceptionalSplit& s);
void to_json(nlohmann::json& j, const Certificate& c);
void to_json(nlohmann::json& j, const ScanConfig& c);
void from_json(const nlohmann::json& j, ScanConfig& c);
void to_json(nlohmann::json& j, const ScanViolation& v);
void to_json(nlohmann::json& j, const ScanReport& r);
void to_json(nlohmann::json& j, const AnnealConfig& c);
void from_json(const nlohmann::json& j, AnnealConfig& c);
void to_json(nlohmann::json& j, const RestartOutcome& o);
void to_json(nlohmann::json& j, const SearchReport& r);

}  // namespace booktri
