#include <cstdio>

#include "acceptance.hpp"

int main() {
    bool ok = true;
    for (const auto& r : em::run_acceptance()) {
        std::printf("criterion %d: %s - %s\n", r.id, r.pass ? "PASS" : "FAIL",
                    r.detail.c_str());
        ok = ok && r.pass;
    }
    return ok ? 0 : 1;
}
