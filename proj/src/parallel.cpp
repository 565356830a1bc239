#include "isospec/parallel.hpp"

namespace isospec {

namespace {
std::atomic<unsigned> g_jobs{0};
}

void set_default_jobs(unsigned jobs) { g_jobs = jobs; }

unsigned default_jobs() {
    unsigned j = g_jobs.load();
    if (j != 0) return j;
    j = std::thread::hardware_concurrency();
    return j == 0 ? 1 : j;
}

}  // namespace isospec
