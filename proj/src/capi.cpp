#include "../include/eqmirror.h"

#include <string>

#include "jobs.hpp"

struct eqm_session {
    std::string response;
    std::string error;
};

extern "C" {

eqm_session* eqm_session_new(void) { return new (std::nothrow) eqm_session(); }

void eqm_session_free(eqm_session* s) { delete s; }

int eqm_run(eqm_session* s, const char* request_json, const char** response_json) {
    if (!s) return EQM_BADHANDLE;
    if (!request_json) {
        s->error = "null request";
        return EQM_USAGE;
    }
    int status = EQM_OK;
    try {
        s->response = em::run_job(request_json, status);
    } catch (const std::exception& e) {
        s->error = e.what();
        s->response.clear();
        if (response_json) *response_json = nullptr;
        return EQM_DOMAIN;
    }
    if (response_json) *response_json = s->response.c_str();
    if (status != EQM_OK) s->error = "job finished with status " + std::to_string(status);
    return status;
}

const char* eqm_last_error(const eqm_session* s) {
    return s ? s->error.c_str() : "bad handle";
}

const char* eqm_version(void) { return "1.0.0"; }

} // extern "C"
