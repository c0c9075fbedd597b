#pragma once

#include <string>
#include <vector>

#include "packbound/prover.hpp"

namespace packbound {

std::string report_jsonl_line(const VerifyReport& r);
std::string report_csv(const std::vector<VerifyReport>& reports);
bool write_atomic(const std::string& path, const std::string& content);
std::string state_to_json(const ProverState& st);
ProverState state_from_json(const std::string& text);

}  // namespace packbound
