#pragma once
#include <string>

namespace em {

// Execute one JSON job (see include/eqmirror.h for the command list);
// returns the response document and sets status to an EQM_ code.
std::string run_job(const std::string& request, int& status);

} // namespace em
