#pragma once

#include <json.hpp>

#include "factcheck/service/job.hpp"

namespace factcheck::service {

// Lossless storage form used by the job log.
nlohmann::json JobToRecord(const Job& job);
Job JobFromRecord(const nlohmann::json& record);

// Public API view of a job (GET /api/v1/factcheck/{id}). Claims without a
// finished report show their current status and a null label. Similarities
// are rounded to six decimals.
nlohmann::ordered_json JobToApiPayload(const Job& job);

}  // namespace factcheck::service
